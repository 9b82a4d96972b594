#include "cfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "cfem/errors.hpp"

namespace cfem {

Mesh gen_aniso(int N, double alpha, const GenAnisoOptions& opts) {
    if (N < 2) throw DomainError("gen_aniso: N must be >= 2, got " + std::to_string(N));
    if (!(alpha >= 1.0)) throw DomainError("gen_aniso: alpha must be >= 1, got " + std::to_string(alpha));

    const double h = 2.0 / N;
    long long M;
    if (alpha == 1.0) {
        M = 2LL * N;  // k_target = h/2, and floor(4/h) = 2N exactly
    } else {
        M = static_cast<long long>(std::floor(2.0 / std::pow(h, alpha)));
    }
    if (M < 1) M = 1;
    const long long n_tris = M * (2LL * N + 1);
    if (n_tris > opts.max_triangles || M > opts.max_triangles) {
        throw TooFine("gen_aniso: N=" + std::to_string(N) + " alpha=" + std::to_string(alpha) +
                      " needs " + std::to_string(n_tris) + " triangles (cap " +
                      std::to_string(opts.max_triangles) + ")");
    }

    Mesh m;
    m.domain = {-1.0, -1.0, 1.0, 1.0};
    m.vertices.reserve(static_cast<size_t>((M + 1) * (N + 2)));
    m.triangles.reserve(static_cast<size_t>(n_tris));

    // Row j sits at y_j = 2j/M - 1. Even rows have N+1 aligned vertices,
    // odd rows are offset by h/2 and carry two extra corner vertices on
    // x = +-1. Coordinates are built so the domain edges land exactly
    // on +-1.0.
    std::vector<std::vector<int>> rows(static_cast<size_t>(M) + 1);
    for (long long j = 0; j <= M; ++j) {
        const double y = (2.0 * j) / M - 1.0;
        auto& row = rows[static_cast<size_t>(j)];
        if (j % 2 == 0) {
            row.reserve(N + 1);
            for (int i = 0; i <= N; ++i) {
                row.push_back(m.num_vertices());
                m.vertices.push_back({(2.0 * i) / N - 1.0, y});
            }
        } else {
            row.reserve(N + 2);
            row.push_back(m.num_vertices());
            m.vertices.push_back({-1.0, y});
            for (int i = 0; i < N; ++i) {
                row.push_back(m.num_vertices());
                m.vertices.push_back({(2.0 * i + 1.0) / N - 1.0, y});
            }
            row.push_back(m.num_vertices());
            m.vertices.push_back({1.0, y});
        }
    }

    for (long long j = 0; j < M; ++j) {
        const bool apex_up = (j % 2 == 0);  // offset row is the upper one
        const auto& straight = apex_up ? rows[j] : rows[j + 1];
        const auto& offset = apex_up ? rows[j + 1] : rows[j];
        // Full isosceles triangles with base on the straight row.
        for (int i = 0; i < N; ++i) {
            const int b0 = straight[i], b1 = straight[i + 1], ap = offset[i + 1];
            if (apex_up)
                m.triangles.push_back({b0, b1, ap});
            else
                m.triangles.push_back({b0, ap, b1});
        }
        // Full isosceles triangles with base on the offset row.
        for (int i = 0; i + 1 < N; ++i) {
            const int b0 = offset[i + 1], b1 = offset[i + 2], ap = straight[i + 1];
            if (apex_up)
                m.triangles.push_back({b0, ap, b1});
            else
                m.triangles.push_back({b0, b1, ap});
        }
        // Half-base right triangles closing the domain edges.
        const int l0 = straight[0], l1 = offset[0], l2 = offset[1];
        const int r0 = straight[N], r1 = offset[N], r2 = offset[N + 1];
        if (apex_up) {
            m.triangles.push_back({l0, l2, l1});
            m.triangles.push_back({r0, r2, r1});
        } else {
            m.triangles.push_back({l0, l1, l2});
            m.triangles.push_back({r0, r1, r2});
        }
    }

    m.boundary_vertex.resize(m.vertices.size());
    for (size_t i = 0; i < m.vertices.size(); ++i) {
        const Point p = m.vertices[i];
        m.boundary_vertex[i] =
            (p.x == -1.0 || p.x == 1.0 || p.y == -1.0 || p.y == 1.0) ? 1 : 0;
    }
    return m;
}

namespace {

MetricPercentiles percentiles(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    auto rank = [&](double q) {
        const size_t i = static_cast<size_t>(std::ceil(q * v.size()));
        return v[std::min(v.size() - 1, i == 0 ? 0 : i - 1)];
    };
    return {rank(0.50), rank(0.90), v.back()};
}

// Key for an undirected edge; vertex count fits in 32 bits.
inline std::uint64_t edge_key(int a, int b) {
    const std::uint32_t lo = static_cast<std::uint32_t>(std::min(a, b));
    const std::uint32_t hi = static_cast<std::uint32_t>(std::max(a, b));
    return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

struct EdgeUse {
    int count = 0;
    int elem = -1;       // first triangle using it
    bool fwd = false;    // seen with a < b orientation
    bool bwd = false;
};

}  // namespace

MeshQuality mesh_quality(const Mesh& m) {
    MeshQuality q;
    q.theta_min_global = std::numeric_limits<double>::infinity();
    for (int e = 0; e < m.num_triangles(); ++e) {
        const TriangleMetrics tm = metrics(m.triangle(e));
        q.h_max = std::max(q.h_max, tm.h_diam);
        q.r_max = std::max(q.r_max, tm.r_circ);
        q.theta_max_global = std::max(q.theta_max_global, tm.theta_max);
        q.theta_min_global = std::min(q.theta_min_global, tm.theta_min);
        q.rho_ratio_max = std::max(q.rho_ratio_max, tm.h_diam / tm.rho_in);
    }
    return q;
}

QualityReport validate(const Mesh& m) {
    const int nv = m.num_vertices();
    const int nt = m.num_triangles();
    if (nv < 3 || nt < 1) throw ConformityError("empty mesh", -1);

    QualityReport rep;
    rep.num_vertices = nv;
    rep.num_triangles = nt;
    rep.quality.theta_min_global = std::numeric_limits<double>::infinity();

    std::vector<double> all_r(nt), all_h(nt), all_th(nt), all_reg(nt);
    std::unordered_map<std::uint64_t, EdgeUse> edges;
    edges.reserve(static_cast<size_t>(nt) * 2);

    double total_area = 0.0;
    for (int e = 0; e < nt; ++e) {
        const auto& t = m.triangles[e];
        for (int v : t) {
            if (v < 0 || v >= nv) throw ConformityError("vertex index out of range", e);
        }
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            throw ConformityError("repeated vertex in triangle", e);
        }
        const Triangle tri = m.triangle(e);
        const double sa = signed_area(tri);
        if (sa <= 0.0) throw ConformityError("non-positive signed area (clockwise triangle)", e);
        total_area += sa;

        TriangleMetrics tm;
        try {
            tm = metrics(tri);
        } catch (const DegenerateTriangle&) {
            throw ConformityError("degenerate triangle", e);
        }
        all_r[e] = tm.r_circ;
        all_h[e] = tm.h_diam;
        all_th[e] = tm.theta_max;
        all_reg[e] = tm.h_diam / tm.rho_in;
        rep.quality.h_max = std::max(rep.quality.h_max, tm.h_diam);
        rep.quality.r_max = std::max(rep.quality.r_max, tm.r_circ);
        rep.quality.theta_max_global = std::max(rep.quality.theta_max_global, tm.theta_max);
        rep.quality.theta_min_global = std::min(rep.quality.theta_min_global, tm.theta_min);
        rep.quality.rho_ratio_max = std::max(rep.quality.rho_ratio_max, tm.h_diam / tm.rho_in);

        for (int k = 0; k < 3; ++k) {
            const int a = t[k];
            const int b = t[(k + 1) % 3];
            EdgeUse& use = edges[edge_key(a, b)];
            use.count++;
            if (use.count > 2) {
                throw ConformityError("edge shared by more than two triangles", use.elem, e);
            }
            const bool fwd = a < b;
            if ((fwd && use.fwd) || (!fwd && use.bwd)) {
                throw ConformityError("edge traversed twice in the same direction", use.elem, e);
            }
            (fwd ? use.fwd : use.bwd) = true;
            if (use.elem < 0) use.elem = e;
        }
    }

    // Edges used once must lie on the domain boundary; anything else is
    // a crack or hanging node.
    const double btol = 1e-12 * m.domain.diameter();
    auto on_boundary = [&](const Point& p) {
        return std::abs(p.x - m.domain.xmin) < btol || std::abs(p.x - m.domain.xmax) < btol ||
               std::abs(p.y - m.domain.ymin) < btol || std::abs(p.y - m.domain.ymax) < btol;
    };
    auto on_same_side = [&](const Point& p, const Point& q) {
        return (std::abs(p.x - m.domain.xmin) < btol && std::abs(q.x - m.domain.xmin) < btol) ||
               (std::abs(p.x - m.domain.xmax) < btol && std::abs(q.x - m.domain.xmax) < btol) ||
               (std::abs(p.y - m.domain.ymin) < btol && std::abs(q.y - m.domain.ymin) < btol) ||
               (std::abs(p.y - m.domain.ymax) < btol && std::abs(q.y - m.domain.ymax) < btol);
    };
    for (const auto& [key, use] : edges) {
        if (use.count != 1) continue;
        const int a = static_cast<int>(key & 0xffffffffu);
        const int b = static_cast<int>(key >> 32);
        if (!on_same_side(m.vertices[a], m.vertices[b])) {
            throw ConformityError("interior edge belongs to only one triangle", use.elem);
        }
    }

    const double cover_err = std::abs(total_area - m.domain.area()) / m.domain.area();
    if (cover_err > 1e-10) {
        throw ConformityError("triangle areas do not cover the domain (rel err " +
                                  std::to_string(cover_err) + ")",
                              -1);
    }

    for (int i = 0; i < nv; ++i) {
        const bool flag = m.boundary_vertex[i] != 0;
        if (flag != on_boundary(m.vertices[i])) {
            throw ConformityError("boundary flag mismatch at vertex " + std::to_string(i), -1);
        }
    }

    rep.circumradius = percentiles(all_r);
    rep.diameter = percentiles(all_h);
    rep.max_angle = percentiles(all_th);
    rep.regularity = percentiles(all_reg);
    return rep;
}

}  // namespace cfem
