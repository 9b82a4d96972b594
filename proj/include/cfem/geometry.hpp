#pragma once

#include <array>
#include <cmath>

#include "cfem/errors.hpp"

namespace cfem {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }

struct Triangle {
    Point p1, p2, p3;
};

// Everything we ever ask about a single triangle, computed once.
// Angles are in radians; c_kobayashi is the explicit constant of the
// sharp H1 interpolation bound and satisfies c_kobayashi < r_circ.
struct TriangleMetrics {
    double edge_a = 0.0;   // |p2 p3|
    double edge_b = 0.0;   // |p3 p1|
    double edge_c = 0.0;   // |p1 p2|
    double area_s = 0.0;   // unsigned area
    double h_diam = 0.0;   // diameter = longest edge
    double rho_in = 0.0;   // inradius
    double r_circ = 0.0;   // circumradius
    double theta_min = 0.0;
    double theta_max = 0.0;
    double c_kobayashi = 0.0;
};

// Signed area via the shoelace formula (positive = counterclockwise).
inline double signed_area(const Triangle& t) {
    return 0.5 * cross(t.p2 - t.p1, t.p3 - t.p1);
}

// Collinearity threshold, relative to h_K^2.
inline constexpr double kDegenerateEps = 1e-14;

TriangleMetrics metrics(const Triangle& t);

// Circumradius h^alpha/2 + h^(2-alpha)/8 of the isosceles triangle with
// base h and height h^alpha. Requires 0 < h < 1 and alpha >= 1.
double aniso_circumradius(double h, double alpha);

}  // namespace cfem
