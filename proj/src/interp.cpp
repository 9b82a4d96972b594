#include "cfem/interp.hpp"

#include <algorithm>
#include <cmath>

#include "cfem/quadrature.hpp"

namespace cfem {

std::string to_string(Lp p) {
    switch (p) {
        case Lp::one: return "1";
        case Lp::two: return "2";
        case Lp::inf: return "inf";
    }
    return "?";
}

Lp lp_from_string(const std::string& s) {
    if (s == "1") return Lp::one;
    if (s == "2") return Lp::two;
    if (s == "inf" || s == "Inf" || s == "INF") return Lp::inf;
    throw DomainError("p must be 1, 2 or inf, got '" + s + "'");
}

PiecewiseLinearField::PiecewiseLinearField(const Mesh& mesh, std::vector<double> nodal)
    : mesh_(&mesh), nodal_(std::move(nodal)) {
    if (static_cast<int>(nodal_.size()) != mesh.num_vertices()) {
        throw DomainError("nodal value count does not match vertex count");
    }
}

double PiecewiseLinearField::value(int e, double l1, double l2) const {
    const auto& t = mesh_->triangles[e];
    return (1.0 - l1 - l2) * nodal_[t[0]] + l1 * nodal_[t[1]] + l2 * nodal_[t[2]];
}

Grad PiecewiseLinearField::gradient(int e) const {
    const auto& t = mesh_->triangles[e];
    const Point p1 = mesh_->vertices[t[0]];
    const Point d1 = mesh_->vertices[t[1]] - p1;
    const Point d2 = mesh_->vertices[t[2]] - p1;
    const double det = cross(d1, d2);
    const double dz1 = nodal_[t[1]] - nodal_[t[0]];
    const double dz2 = nodal_[t[2]] - nodal_[t[0]];
    return {(dz1 * d2.y - dz2 * d1.y) / det, (-dz1 * d2.x + dz2 * d1.x) / det};
}

PiecewiseLinearField interpolate(const ScalarField& v, const Mesh& m) {
    std::vector<double> nodal(m.vertices.size());
    for (size_t i = 0; i < m.vertices.size(); ++i) {
        nodal[i] = v.value(m.vertices[i].x, m.vertices[i].y);
    }
    return {m, std::move(nodal)};
}

namespace {

// Sample points for the p = inf estimate: barycentric lattice of the
// given order (order 2 = vertices plus edge midpoints).
std::vector<TriQuadPoint> inf_lattice(int order) {
    std::vector<TriQuadPoint> pts;
    for (int i = 0; i <= order; ++i) {
        for (int j = 0; i + j <= order; ++j) {
            pts.push_back({double(i) / order, double(j) / order, 0.0});
        }
    }
    return pts;
}

}  // namespace

InterpErrorReport interp_error(const ScalarField& v, const Mesh& m, Lp p, int quad_degree,
                               bool with_bound_columns) {
    if (!v.has_gradient()) throw DomainError("interp_error: field has no gradient");
    if (with_bound_columns && !v.has_hessian()) {
        throw MissingHessian("interp_error: bound columns need a Hessian");
    }
    const TriQuadRule& rule = triangle_rule(quad_degree);
    const std::vector<TriQuadPoint> extra = (p == Lp::inf) ? inf_lattice(2) : std::vector<TriQuadPoint>{};
    const PiecewiseLinearField ih = interpolate(v, m);

    InterpErrorReport rep;
    rep.p = p;
    rep.per_element.reserve(m.num_triangles());

    double acc_semi = 0.0;  // p-th power sum, or running max for p = inf
    double acc_val = 0.0;   // same for the L^p part of the norm
    for (int e = 0; e < m.num_triangles(); ++e) {
        const Triangle tri = m.triangle(e);
        const double area = std::abs(signed_area(tri));
        const Grad g = ih.gradient(e);

        double elem_semi = 0.0;
        double elem_semi2 = 0.0;
        auto visit = [&](const TriQuadPoint& q, bool weighted) {
            const Point x = map_to_triangle(tri, q);
            const Grad dv = v.gradient(x.x, x.y);
            const double ex = dv.x - g.x;
            const double ey = dv.y - g.y;
            const double ev = v.value(x.x, x.y) - ih.value(e, q.l1, q.l2);
            switch (p) {
                case Lp::two:
                    if (weighted) {
                        elem_semi += q.w * area * (ex * ex + ey * ey);
                        acc_val += q.w * area * ev * ev;
                    }
                    break;
                case Lp::one:
                    if (weighted) {
                        elem_semi += q.w * area * (std::abs(ex) + std::abs(ey));
                        acc_val += q.w * area * std::abs(ev);
                    }
                    break;
                case Lp::inf:
                    elem_semi = std::max({elem_semi, std::abs(ex), std::abs(ey)});
                    acc_val = std::max(acc_val, std::abs(ev));
                    break;
            }
            if (with_bound_columns) {
                const Hess hv = v.hessian(x.x, x.y);
                switch (p) {
                    case Lp::two:
                        if (weighted) {
                            elem_semi2 += q.w * area *
                                          (hv.xx * hv.xx + 2.0 * hv.xy * hv.xy + hv.yy * hv.yy);
                        }
                        break;
                    case Lp::one:
                        if (weighted) {
                            elem_semi2 += q.w * area *
                                          (std::abs(hv.xx) + 2.0 * std::abs(hv.xy) + std::abs(hv.yy));
                        }
                        break;
                    case Lp::inf:
                        elem_semi2 = std::max({elem_semi2, std::abs(hv.xx), std::abs(hv.xy),
                                               std::abs(hv.yy)});
                        break;
                }
            }
        };
        for (const TriQuadPoint& q : rule.points) visit(q, true);
        for (const TriQuadPoint& q : extra) visit(q, false);

        ElementError ee;
        ee.elem = e;
        switch (p) {
            case Lp::two:
                ee.err_w1p = std::sqrt(elem_semi);
                ee.semi2 = std::sqrt(elem_semi2);
                acc_semi += elem_semi;
                break;
            case Lp::one:
                ee.err_w1p = elem_semi;
                ee.semi2 = elem_semi2;
                acc_semi += elem_semi;
                break;
            case Lp::inf:
                ee.err_w1p = elem_semi;
                ee.semi2 = elem_semi2;
                acc_semi = std::max(acc_semi, elem_semi);
                break;
        }
        if (with_bound_columns) {
            const TriangleMetrics tm = metrics(tri);
            ee.r_circ = tm.r_circ;
            ee.c_k = tm.c_kobayashi;
        }
        rep.per_element.push_back(ee);
    }

    switch (p) {
        case Lp::two:
            rep.seminorm_w1p_error = std::sqrt(acc_semi);
            rep.norm_w1p_error = std::sqrt(acc_semi + acc_val);
            break;
        case Lp::one:
            rep.seminorm_w1p_error = acc_semi;
            rep.norm_w1p_error = acc_semi + acc_val;
            break;
        case Lp::inf:
            rep.seminorm_w1p_error = acc_semi;
            rep.norm_w1p_error = std::max(acc_semi, acc_val);
            break;
    }
    return rep;
}

AuditResult bound_audit(const ScalarField& v, const std::vector<MeshForAudit>& meshes, Lp p,
                        int quad_degree) {
    AuditResult out;
    for (const MeshForAudit& mi : meshes) {
        const InterpErrorReport rep = interp_error(v, *mi.mesh, p, quad_degree, true);
        for (const ElementError& ee : rep.per_element) {
            AuditRow row;
            row.mesh_id = mi.id;
            row.alpha = mi.alpha;
            row.N = mi.N;
            row.elem = ee.elem;
            row.p = p;
            row.err_w1p = ee.err_w1p;
            row.r_circ = ee.r_circ;
            row.c_k = ee.c_k;
            row.semi2 = ee.semi2;
            const double denom_c = ee.c_k * ee.semi2;
            const double denom_r = ee.r_circ * ee.semi2;
            row.ratio_c = (p == Lp::two && denom_c > 0.0) ? ee.err_w1p / denom_c : 0.0;
            row.ratio_r = denom_r > 0.0 ? ee.err_w1p / denom_r : 0.0;
            out.max_ratio_c = std::max(out.max_ratio_c, row.ratio_c);
            out.max_ratio_r = std::max(out.max_ratio_r, row.ratio_r);
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

}  // namespace cfem
