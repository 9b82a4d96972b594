#pragma once

#include <vector>

#include "cfem/geometry.hpp"

namespace cfem {

// One quadrature node in barycentric-style reference coordinates
// (l1, l2) on the triangle (0,0)-(1,0)-(0,1); weights sum to 1, so
//   integral over K of f  ~=  area(K) * sum_i w_i f(x_i).
struct TriQuadPoint {
    double l1;
    double l2;
    double w;
};

struct TriQuadRule {
    int degree;  // all bivariate polynomials up to this degree are exact
    std::vector<TriQuadPoint> points;
};

// Symmetric rules of degree 1..5. Requests between supported degrees
// round up; degree > 5 is rejected.
const TriQuadRule& triangle_rule(int degree);

// Map a reference node to the physical triangle (p1, p2, p3).
inline Point map_to_triangle(const Triangle& t, const TriQuadPoint& q) {
    const double l0 = 1.0 - q.l1 - q.l2;
    return {l0 * t.p1.x + q.l1 * t.p2.x + q.l2 * t.p3.x,
            l0 * t.p1.y + q.l1 * t.p2.y + q.l2 * t.p3.y};
}

// n-point Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace cfem
