#pragma once

#include <string>
#include <vector>

#include "cfem/interp.hpp"

namespace cfem {

// A_E(f_h) = sum over K of area(K) * sqrt(1 + |grad f_h|^2); exact,
// the gradient is constant per element.
double elementary_area(const PiecewiseLinearField& fh);

// A_L(f) = integral of sqrt(1 + |grad f|^2) by tensor Gauss-Legendre
// (n x n nodes). Throws NonFinite if the integrand is not finite.
double exact_graph_area(const ScalarField& f, const Rect& domain, int n_gauss = 64);

struct AreaStudy {
    ScalarField field;
    std::string field_name;
    double alpha = 1.5;
    std::vector<int> Ns;
    double exact_area = 0.0;
    std::string exact_provenance;  // "closed form ..." or "64x64 Gauss-Legendre"
};

struct AreaRecord {
    std::string field;
    double alpha = 0.0;
    int N = 0;
    double r_max = 0.0;
    double a_e = 0.0;
    double exact = 0.0;
    double gap = 0.0;  // |exact - a_e|
};

struct AreaStudyResult {
    std::vector<AreaRecord> records;
    bool gap_converging = false;
};

// Interpolate the field on gen_aniso(N, alpha) for each N and track the
// elementary-area gap; the verdict marks whether the gap is shrinking.
AreaStudyResult area_convergence_study(const AreaStudy& study);

// The cylinder slice sqrt(a^2-x^2) over (-1,1)^2 has closed-form graph
// area 4 a arcsin(1/a).
double cylinder_exact_area(double a = 1.1);

}  // namespace cfem
