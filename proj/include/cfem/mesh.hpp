#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cfem/geometry.hpp"

namespace cfem {

struct Rect {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 1.0;
    double ymax = 1.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }
    double diameter() const { return std::hypot(width(), height()); }
};

// Conforming triangulation of an axis-aligned rectangle. Immutable by
// convention after construction; all triangles are counterclockwise.
struct Mesh {
    std::vector<Point> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::uint8_t> boundary_vertex;
    Rect domain;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_triangles() const { return static_cast<int>(triangles.size()); }

    Triangle triangle(int e) const {
        const auto& t = triangles[e];
        return {vertices[t[0]], vertices[t[1]], vertices[t[2]]};
    }
};

struct MeshQuality {
    double h_max = 0.0;             // max element diameter
    double r_max = 0.0;             // max element circumradius
    double theta_max_global = 0.0;  // largest angle anywhere
    double theta_min_global = 0.0;  // smallest angle anywhere
    double rho_ratio_max = 0.0;     // max h_K / rho_K
};

struct MetricPercentiles {
    double p50 = 0.0;
    double p90 = 0.0;
    double max = 0.0;
};

struct QualityReport {
    MeshQuality quality;
    MetricPercentiles circumradius;
    MetricPercentiles diameter;
    MetricPercentiles max_angle;
    MetricPercentiles regularity;  // h_K / rho_K
    int num_vertices = 0;
    int num_triangles = 0;
};

struct GenAnisoOptions {
    long long max_triangles = 10'000'000;  // guardrail against runaway alpha/N
};

// Strip triangulation of (-1,1)^2 from the anisotropic experiment:
// M = floor(2/k_target) horizontal strips (k_target = h^alpha for
// alpha > 1, h/2 for alpha = 1, h = 2/N), rows alternating between
// aligned and half-base-offset vertices, strips tiled with isosceles
// triangles of base h plus half-base right triangles closing the
// left/right edges of offset rows.
Mesh gen_aniso(int N, double alpha, const GenAnisoOptions& opts = {});

// Element metric extremes only (no conformity checking).
MeshQuality mesh_quality(const Mesh& m);

// Full invariant check: positive areas, edge conformity, coverage,
// boundary flags. Throws ConformityError on the first violation.
QualityReport validate(const Mesh& m);

// Text format:
//   CFEM-MESH 1
//   <nv> <nt>
//   x y b          (nv lines, b = 1 for boundary vertices)
//   i j k          (nt lines, 0-based, counterclockwise)
void write_mesh(const Mesh& m, std::ostream& os);
void write_mesh(const Mesh& m, const std::string& path);
Mesh read_mesh(std::istream& is);
Mesh read_mesh(const std::string& path);

}  // namespace cfem
