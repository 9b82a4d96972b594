#include "cfem/fem.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cfem/interp.hpp"
#include "cfem/quadrature.hpp"

namespace cfem {

PoissonProblem eq_cylinder_problem(double a) {
    PoissonProblem p;
    p.f = fields::cylinder_source(a);
    p.g = fields::cylinder(a);
    p.u_exact = fields::cylinder(a);
    p.domain = {-1.0, -1.0, 1.0, 1.0};
    return p;
}

void check_consistency(const PoissonProblem& p, unsigned seed, double tol) {
    if (!p.u_exact) throw MissingExact("check_consistency: no u_exact");
    const ScalarField& u = *p.u_exact;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux01(0.0, 1.0);
    auto sx = [&] { return p.domain.xmin + ux01(rng) * p.domain.width(); };
    auto sy = [&] { return p.domain.ymin + ux01(rng) * p.domain.height(); };
    for (int i = 0; i < 50; ++i) {
        const double x = sx(), y = sy();
        const Hess h = u.hessian(x, y);
        const double lap = h.xx + h.yy;
        const double fv = p.f.value(x, y);
        if (std::abs(-lap - fv) > tol * std::max(1.0, std::abs(fv))) {
            throw DomainError("-laplace(u_exact) != f at (" + std::to_string(x) + "," +
                              std::to_string(y) + ")");
        }
    }
    for (int i = 0; i < 50; ++i) {
        // walk the boundary: pick a side, then a coordinate along it
        const int side = static_cast<int>(ux01(rng) * 4.0) % 4;
        double x = sx(), y = sy();
        if (side == 0) x = p.domain.xmin;
        if (side == 1) x = p.domain.xmax;
        if (side == 2) y = p.domain.ymin;
        if (side == 3) y = p.domain.ymax;
        const double du = std::abs(u.value(x, y) - p.g.value(x, y));
        if (du > tol) throw DomainError("u_exact != g on the boundary");
    }
}

void CsrMatrix::multiply(const double* x, double* y) const {
    const int n = rows();
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
            acc += vals[k] * x[cols[k]];
        }
        y[i] = acc;
    }
}

namespace {

// Element stiffness from the constant P1 gradients:
//   K_ij = area * grad(phi_i) . grad(phi_j)
// with grad(phi_i) the rotated opposite-edge vector over 2*area.
void element_stiffness(const Triangle& t, double ke[3][3]) {
    const double sa = signed_area(t);
    if (std::abs(sa) <= kDegenerateEps) {
        throw DegenerateTriangle("element with vanishing area in assembly");
    }
    const Point e0 = t.p3 - t.p2;  // opposite vertex 0
    const Point e1 = t.p1 - t.p3;
    const Point e2 = t.p2 - t.p1;
    const Point g[3] = {{-e0.y, e0.x}, {-e1.y, e1.x}, {-e2.y, e2.x}};
    const double c = 1.0 / (4.0 * sa);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            ke[i][j] = c * dot(g[i], g[j]);
        }
    }
}

// Gather-then-merge CSR assembly: collect (row, col, value) triples,
// sort, and accumulate duplicates in index order. The merge order is a
// fixed function of the mesh, so the result does not depend on the
// order element contributions were produced in.
CsrMatrix csr_from_triples(int n, std::vector<std::pair<std::int64_t, double>>& triples) {
    std::stable_sort(triples.begin(), triples.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    CsrMatrix A;
    A.row_ptr.assign(n + 1, 0);
    size_t unique = 0;
    for (size_t i = 0; i < triples.size();) {
        size_t j = i;
        double acc = 0.0;
        while (j < triples.size() && triples[j].first == triples[i].first) {
            acc += triples[j].second;
            ++j;
        }
        triples[unique++] = {triples[i].first, acc};
        i = j;
    }
    triples.resize(unique);
    A.cols.resize(unique);
    A.vals.resize(unique);
    for (size_t k = 0; k < unique; ++k) {
        const int r = static_cast<int>(triples[k].first >> 32);
        A.row_ptr[r + 1]++;
        A.cols[k] = static_cast<int>(triples[k].first & 0xffffffff);
        A.vals[k] = triples[k].second;
    }
    for (int i = 0; i < n; ++i) A.row_ptr[i + 1] += A.row_ptr[i];
    return A;
}

inline std::int64_t rc_key(int r, int c) {
    return (static_cast<std::int64_t>(r) << 32) | static_cast<std::int64_t>(c);
}

}  // namespace

CsrMatrix assemble_stiffness(const Mesh& m) {
    std::vector<std::pair<std::int64_t, double>> triples;
    triples.reserve(static_cast<size_t>(m.num_triangles()) * 9);
    for (int e = 0; e < m.num_triangles(); ++e) {
        double ke[3][3];
        element_stiffness(m.triangle(e), ke);
        const auto& t = m.triangles[e];
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                triples.emplace_back(rc_key(t[i], t[j]), ke[i][j]);
            }
        }
    }
    return csr_from_triples(m.num_vertices(), triples);
}

SparseSystem assemble(const PoissonProblem& p, const Mesh& m, int quad_degree) {
    const int nv = m.num_vertices();
    const TriQuadRule& rule = triangle_rule(quad_degree);

    SparseSystem s;
    s.num_vertices = nv;
    s.boundary_values.assign(nv, 0.0);
    std::vector<int> vertex_to_dof(nv, -1);
    for (int i = 0; i < nv; ++i) {
        if (m.boundary_vertex[i]) {
            s.boundary_values[i] = p.g.value(m.vertices[i].x, m.vertices[i].y);
        } else {
            vertex_to_dof[i] = static_cast<int>(s.dof_to_vertex.size());
            s.dof_to_vertex.push_back(i);
        }
    }
    const int ndof = static_cast<int>(s.dof_to_vertex.size());
    s.rhs.assign(ndof, 0.0);

    std::vector<std::pair<std::int64_t, double>> triples;
    triples.reserve(static_cast<size_t>(m.num_triangles()) * 9);
    for (int e = 0; e < m.num_triangles(); ++e) {
        const Triangle tri = m.triangle(e);
        double ke[3][3];
        element_stiffness(tri, ke);
        const auto& t = m.triangles[e];

        double fe[3] = {0.0, 0.0, 0.0};
        const double area = std::abs(signed_area(tri));
        for (const TriQuadPoint& q : rule.points) {
            const Point x = map_to_triangle(tri, q);
            const double fw = p.f.value(x.x, x.y) * q.w * area;
            fe[0] += fw * (1.0 - q.l1 - q.l2);
            fe[1] += fw * q.l1;
            fe[2] += fw * q.l2;
        }

        for (int i = 0; i < 3; ++i) {
            const int di = vertex_to_dof[t[i]];
            if (di < 0) continue;
            s.rhs[di] += fe[i];
            for (int j = 0; j < 3; ++j) {
                const int dj = vertex_to_dof[t[j]];
                if (dj >= 0) {
                    triples.emplace_back(rc_key(di, dj), ke[i][j]);
                } else {
                    // Dirichlet elimination: move the g-interpolant term
                    s.rhs[di] -= ke[i][j] * s.boundary_values[t[j]];
                }
            }
        }
    }
    s.A = csr_from_triples(ndof, triples);
    return s;
}

FemSolution solve(const SparseSystem& s, const SolveOptions& opts) {
    const int n = s.ndof();
    FemSolution sol;
    sol.nodal = s.boundary_values;

    double bnorm = 0.0;
    for (double v : s.rhs) bnorm += v * v;
    bnorm = std::sqrt(bnorm);
    if (n == 0 || bnorm == 0.0) {
        // nothing to solve (all-boundary mesh or zero data)
        std::vector<double> x(n, 0.0);
        for (int i = 0; i < n; ++i) sol.nodal[s.dof_to_vertex[i]] = 0.0;
        return sol;
    }

    const int max_it = opts.max_iterations > 0
                           ? opts.max_iterations
                           : static_cast<int>(50.0 * std::sqrt(double(n))) + 1000;

    std::vector<double> dinv(n);
    for (int i = 0; i < n; ++i) {
        double d = 0.0;
        for (int k = s.A.row_ptr[i]; k < s.A.row_ptr[i + 1]; ++k) {
            if (s.A.cols[k] == i) d = s.A.vals[k];
        }
        if (!(d > 0.0)) throw DomainError("system diagonal not positive at dof " + std::to_string(i));
        dinv[i] = 1.0 / d;
    }

    std::vector<double> x(n, 0.0), r(s.rhs), z(n), q(n), d(n);
    for (int i = 0; i < n; ++i) z[i] = dinv[i] * r[i];
    d = z;
    double rz = 0.0;
    for (int i = 0; i < n; ++i) rz += r[i] * z[i];

    double rel = 1.0;
    int it = 0;
    for (; it < max_it; ++it) {
        double rnorm = 0.0;
        for (int i = 0; i < n; ++i) rnorm += r[i] * r[i];
        rel = std::sqrt(rnorm) / bnorm;
        if (rel <= opts.rel_tol) break;

        s.A.multiply(d.data(), q.data());
        double dq = 0.0;
        for (int i = 0; i < n; ++i) dq += d[i] * q[i];
        if (!(dq > 0.0)) throw DomainError("system is not positive definite (d.Ad <= 0)");
        const double alpha = rz / dq;
        for (int i = 0; i < n; ++i) {
            x[i] += alpha * d[i];
            r[i] -= alpha * q[i];
        }
        for (int i = 0; i < n; ++i) z[i] = dinv[i] * r[i];
        double rz_next = 0.0;
        for (int i = 0; i < n; ++i) rz_next += r[i] * z[i];
        const double beta = rz_next / rz;
        rz = rz_next;
        for (int i = 0; i < n; ++i) d[i] = z[i] + beta * d[i];
    }
    if (rel > opts.rel_tol) {
        throw MaxIterations("CG did not reach " + std::to_string(opts.rel_tol) + " in " +
                                std::to_string(max_it) + " iterations (residual " +
                                std::to_string(rel) + ")",
                            it, rel);
    }

    sol.iterations = it;
    sol.final_residual = rel;
    for (int i = 0; i < n; ++i) sol.nodal[s.dof_to_vertex[i]] = x[i];
    return sol;
}

FemSolution solve_dense(const SparseSystem& s) {
    const int n = s.ndof();
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int k = s.A.row_ptr[i]; k < s.A.row_ptr[i + 1]; ++k) {
            a[static_cast<size_t>(i) * n + s.A.cols[k]] = s.A.vals[k];
        }
    }
    // in-place Cholesky, lower triangle
    for (int j = 0; j < n; ++j) {
        double diag = a[static_cast<size_t>(j) * n + j];
        for (int k = 0; k < j; ++k) diag -= a[static_cast<size_t>(j) * n + k] * a[static_cast<size_t>(j) * n + k];
        if (!(diag > 0.0)) throw DomainError("dense Cholesky: matrix not SPD");
        diag = std::sqrt(diag);
        a[static_cast<size_t>(j) * n + j] = diag;
        for (int i = j + 1; i < n; ++i) {
            double v = a[static_cast<size_t>(i) * n + j];
            for (int k = 0; k < j; ++k) {
                v -= a[static_cast<size_t>(i) * n + k] * a[static_cast<size_t>(j) * n + k];
            }
            a[static_cast<size_t>(i) * n + j] = v / diag;
        }
    }
    std::vector<double> y(s.rhs);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < i; ++k) y[i] -= a[static_cast<size_t>(i) * n + k] * y[k];
        y[i] /= a[static_cast<size_t>(i) * n + i];
    }
    for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) y[i] -= a[static_cast<size_t>(k) * n + i] * y[k];
        y[i] /= a[static_cast<size_t>(i) * n + i];
    }

    FemSolution sol;
    sol.nodal = s.boundary_values;
    for (int i = 0; i < n; ++i) sol.nodal[s.dof_to_vertex[i]] = y[i];
    return sol;
}

FemErrorNorms fem_error(const FemSolution& sol, const PoissonProblem& p, const Mesh& m,
                        int quad_degree) {
    if (!p.u_exact || !p.u_exact->has_gradient()) {
        throw MissingExact("fem_error: u_exact with gradient required");
    }
    const ScalarField& u = *p.u_exact;
    const PiecewiseLinearField uh(m, sol.nodal);
    const TriQuadRule& rule = triangle_rule(quad_degree);

    double semi2 = 0.0, l22 = 0.0;
    for (int e = 0; e < m.num_triangles(); ++e) {
        const Triangle tri = m.triangle(e);
        const double area = std::abs(signed_area(tri));
        const Grad gh = uh.gradient(e);
        for (const TriQuadPoint& q : rule.points) {
            const Point x = map_to_triangle(tri, q);
            const Grad gu = u.gradient(x.x, x.y);
            const double ex = gu.x - gh.x;
            const double ey = gu.y - gh.y;
            const double ev = u.value(x.x, x.y) - uh.value(e, q.l1, q.l2);
            semi2 += q.w * area * (ex * ex + ey * ey);
            l22 += q.w * area * ev * ev;
        }
    }
    FemErrorNorms out;
    out.h1_seminorm = std::sqrt(semi2);
    out.l2_norm = std::sqrt(l22);
    out.h1_norm = std::sqrt(semi2 + l22);
    return out;
}

std::vector<ConvergenceRecord> experiment_sweep(const std::vector<double>& alphas,
                                                const std::vector<int>& Ns,
                                                const SweepOptions& opts) {
    const PoissonProblem prob = eq_cylinder_problem();
    std::vector<ConvergenceRecord> records;
    records.reserve(alphas.size() * Ns.size());
    for (double alpha : alphas) {
        for (int N : Ns) {
            const Mesh m = gen_aniso(N, alpha, opts.gen);
            const MeshQuality q = mesh_quality(m);
            const SparseSystem sys = assemble(prob, m, opts.quad_degree);
            const FemSolution sol = solve(sys, opts.solve);
            const FemErrorNorms err = fem_error(sol, prob, m, opts.quad_degree);
            ConvergenceRecord rec;
            rec.alpha = alpha;
            rec.N = N;
            rec.h_max = q.h_max;
            rec.r_max = q.r_max;
            rec.ndof = sys.ndof();
            rec.h1_seminorm = err.h1_seminorm;
            rec.h1_norm = err.h1_norm;
            rec.l2_norm = err.l2_norm;
            rec.cg_iterations = sol.iterations;
            records.push_back(rec);
        }
    }
    return records;
}

}  // namespace cfem
