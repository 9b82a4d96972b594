#pragma once

#include <optional>
#include <vector>

#include "cfem/field.hpp"
#include "cfem/mesh.hpp"

namespace cfem {

// -laplace(u) = f in Omega, u = g on the boundary. When u_exact is
// supplied it must satisfy both equations; check_consistency verifies
// that at random sample points.
struct PoissonProblem {
    ScalarField f;
    ScalarField g;
    std::optional<ScalarField> u_exact;
    Rect domain{-1.0, -1.0, 1.0, 1.0};
};

// The paper's test problem: f = a^2/(a^2-x^2)^{3/2}, g = u = sqrt(a^2-x^2).
PoissonProblem eq_cylinder_problem(double a = 1.1);

// Spot-check -laplace(u_exact) = f at interior points and u_exact = g at
// boundary points (50 of each, seeded); throws DomainError on mismatch.
void check_consistency(const PoissonProblem& p, unsigned seed = 0, double tol = 1e-8);

struct CsrMatrix {
    std::vector<int> row_ptr;
    std::vector<int> cols;
    std::vector<double> vals;

    int rows() const { return static_cast<int>(row_ptr.size()) - 1; }
    void multiply(const double* x, double* y) const;  // y = A x
};

// Reduced SPD system after Dirichlet elimination. dof_to_vertex maps
// unknown index -> mesh vertex; boundary_values holds g at boundary
// vertices (and 0 elsewhere).
struct SparseSystem {
    CsrMatrix A;
    std::vector<double> rhs;
    std::vector<int> dof_to_vertex;
    std::vector<double> boundary_values;
    int num_vertices = 0;

    int ndof() const { return A.rows(); }
};

// Stiffness of the full vertex set, no boundary treatment. Entries are
// the exact integrals of the constant P1 gradients.
CsrMatrix assemble_stiffness(const Mesh& m);

// Stiffness + load (quadrature of given degree) + Dirichlet elimination.
SparseSystem assemble(const PoissonProblem& p, const Mesh& m, int quad_degree = 4);

struct SolveOptions {
    double rel_tol = 1e-12;  // on ||b - A x|| / ||b||
    int max_iterations = 0;  // 0 = 50 sqrt(ndof) + 1000
};

struct FemSolution {
    std::vector<double> nodal;  // over all mesh vertices
    int iterations = 0;
    double final_residual = 0.0;  // relative
};

// Jacobi-preconditioned conjugate gradients. Throws MaxIterations if the
// tolerance is not reached.
FemSolution solve(const SparseSystem& s, const SolveOptions& opts = {});

// Dense Cholesky reference for small systems (tests and oracles).
FemSolution solve_dense(const SparseSystem& s);

struct FemErrorNorms {
    double h1_seminorm = 0.0;
    double h1_norm = 0.0;
    double l2_norm = 0.0;
};

// Error norms against problem.u_exact (gradient required).
FemErrorNorms fem_error(const FemSolution& sol, const PoissonProblem& p, const Mesh& m,
                        int quad_degree = 4);

struct ConvergenceRecord {
    double alpha = 0.0;
    int N = 0;
    double h_max = 0.0;
    double r_max = 0.0;
    int ndof = 0;
    double h1_seminorm = 0.0;
    double h1_norm = 0.0;
    double l2_norm = 0.0;
    int cg_iterations = 0;
};

struct SweepOptions {
    int quad_degree = 4;
    SolveOptions solve;
    GenAnisoOptions gen;
};

// One record per (alpha, N) on the cylinder problem.
std::vector<ConvergenceRecord> experiment_sweep(const std::vector<double>& alphas,
                                                const std::vector<int>& Ns,
                                                const SweepOptions& opts = {});

}  // namespace cfem
