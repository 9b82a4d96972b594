#pragma once

#include <string>
#include <vector>

#include "cfem/field.hpp"
#include "cfem/mesh.hpp"

namespace cfem {

// Norm exponent for W^{1,p} error measurement.
enum class Lp { one, two, inf };

std::string to_string(Lp p);
Lp lp_from_string(const std::string& s);  // "1", "2", "inf"

// P1 interpolant: nodal values at mesh vertices, affine on each element.
class PiecewiseLinearField {
public:
    PiecewiseLinearField(const Mesh& mesh, std::vector<double> nodal);

    const Mesh& mesh() const { return *mesh_; }
    const std::vector<double>& nodal() const { return nodal_; }

    // Value at reference coordinates (l1, l2) of element e.
    double value(int e, double l1, double l2) const;
    // The (constant) gradient on element e.
    Grad gradient(int e) const;

private:
    const Mesh* mesh_;
    std::vector<double> nodal_;
};

PiecewiseLinearField interpolate(const ScalarField& v, const Mesh& m);

struct ElementError {
    int elem = 0;
    double err_w1p = 0.0;   // |v - I_K v|_{1,p,K}
    double r_circ = 0.0;    // R_K
    double c_k = 0.0;       // C(K)
    double semi2 = 0.0;     // |v|_{2,p,K}, 0 when no Hessian was given
};

struct InterpErrorReport {
    Lp p = Lp::two;
    double seminorm_w1p_error = 0.0;  // |v - I_tau v|_{1,p,Omega}
    double norm_w1p_error = 0.0;      // ||v - I_tau v||_{1,p,Omega}
    std::vector<ElementError> per_element;
};

// Seminorm convention (the multi-index weights, with |alpha|=2 mixed
// term counted twice):
//   p=2:  |v|_{2,2,K} = (int v_xx^2 + 2 v_xy^2 + v_yy^2)^{1/2}
//   p=1:  |v|_{2,1,K} =  int |v_xx| + 2|v_xy| + |v_yy|
//   p=inf: max over sample points of max(|v_xx|, |v_xy|, |v_yy|)
// First-order seminorms use the plain component sums/maxima. The
// p=inf case samples quadrature points, vertices and edge midpoints,
// so it is a lower bound on the true max.
InterpErrorReport interp_error(const ScalarField& v, const Mesh& m, Lp p,
                               int quad_degree = 4, bool with_bound_columns = false);

struct AuditRow {
    std::string mesh_id;
    double alpha = 0.0;
    int N = 0;
    int elem = 0;
    Lp p = Lp::two;
    double err_w1p = 0.0;
    double r_circ = 0.0;
    double c_k = 0.0;
    double semi2 = 0.0;
    double ratio_c = 0.0;  // err / (C(K) |v|_{2,p,K}), p = 2 only (else 0)
    double ratio_r = 0.0;  // err / (R_K  |v|_{2,p,K})
};

struct AuditResult {
    std::vector<AuditRow> rows;
    double max_ratio_c = 0.0;
    double max_ratio_r = 0.0;
};

struct MeshForAudit {
    const Mesh* mesh;
    std::string id;
    double alpha;
    int N;
};

// Per-element Kobayashi / circumradius bound ratios over a family of
// meshes. Requires a Hessian on v.
AuditResult bound_audit(const ScalarField& v, const std::vector<MeshForAudit>& meshes, Lp p,
                        int quad_degree = 4);

}  // namespace cfem
