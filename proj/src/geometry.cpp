#include "cfem/geometry.hpp"

#include <algorithm>

namespace cfem {

namespace {

double angle_at(Point apex, Point u, Point v) {
    const Point du = u - apex;
    const Point dv = v - apex;
    double c = dot(du, dv) / (norm(du) * norm(dv));
    c = std::clamp(c, -1.0, 1.0);  // rounding can push |c| past 1
    return std::acos(c);
}

}  // namespace

TriangleMetrics metrics(const Triangle& t) {
    TriangleMetrics m;
    m.edge_a = norm(t.p2 - t.p3);
    m.edge_b = norm(t.p3 - t.p1);
    m.edge_c = norm(t.p1 - t.p2);
    m.h_diam = std::max({m.edge_a, m.edge_b, m.edge_c});

    const double two_s = 2.0 * signed_area(t);
    if (std::abs(two_s) <= kDegenerateEps * m.h_diam * m.h_diam) {
        throw DegenerateTriangle("collinear apices: |2S| = " + std::to_string(std::abs(two_s)));
    }
    m.area_s = 0.5 * std::abs(two_s);

    const double abc = m.edge_a * m.edge_b * m.edge_c;
    m.r_circ = abc / (4.0 * m.area_s);
    m.rho_in = 2.0 * m.area_s / (m.edge_a + m.edge_b + m.edge_c);

    const double t1 = angle_at(t.p1, t.p2, t.p3);
    const double t2 = angle_at(t.p2, t.p3, t.p1);
    const double t3 = angle_at(t.p3, t.p1, t.p2);
    m.theta_min = std::min({t1, t2, t3});
    m.theta_max = std::max({t1, t2, t3});

    const double a2 = m.edge_a * m.edge_a;
    const double b2 = m.edge_b * m.edge_b;
    const double c2 = m.edge_c * m.edge_c;
    const double s2 = m.area_s * m.area_s;
    // radicand = R^2 - (A^2+B^2+C^2)/30 - (S^2/5)(1/A^2 + 1/B^2 + 1/C^2)
    const double radicand = (a2 * b2 * c2) / (16.0 * s2) - (a2 + b2 + c2) / 30.0
                          - (s2 / 5.0) * (1.0 / a2 + 1.0 / b2 + 1.0 / c2);
    if (radicand < 0.0) {
        const double tol = 1e-12 * std::max(1.0, m.r_circ * m.r_circ);
        if (radicand < -tol) {
            throw NegativeRadicand("C(K) radicand " + std::to_string(radicand));
        }
        m.c_kobayashi = 0.0;
    } else {
        m.c_kobayashi = std::sqrt(radicand);
    }
    return m;
}

double aniso_circumradius(double h, double alpha) {
    if (!(h > 0.0 && h < 1.0)) {
        throw DomainError("aniso_circumradius: h must lie in (0,1), got " + std::to_string(h));
    }
    if (!(alpha >= 1.0)) {
        throw DomainError("aniso_circumradius: alpha must be >= 1, got " + std::to_string(alpha));
    }
    return 0.5 * std::pow(h, alpha) + 0.125 * std::pow(h, 2.0 - alpha);
}

}  // namespace cfem
