#include "cfem/lantern.hpp"

#include <cmath>
#include <numbers>

#include "cfem/errors.hpp"

namespace cfem {

namespace {

constexpr double kPi = std::numbers::pi;

void check_params(const LanternParams& p) {
    if (p.m < 1 || p.n < 1) throw DomainError("lantern: m and n must be positive");
    if (!(p.r > 0.0) || !(p.H > 0.0)) throw DomainError("lantern: r and H must be positive");
}

}  // namespace

double lantern_area(const LanternParams& p) {
    check_params(p);
    const double strip = p.H / double(p.m);
    const double sag = p.r * (1.0 - std::cos(kPi / double(p.n)));
    return 2.0 * double(p.m) * double(p.n) * p.r * std::sin(kPi / double(p.n)) *
           std::sqrt(strip * strip + sag * sag);
}

double lantern_circumradius(const LanternParams& p) {
    check_params(p);
    const double q = double(p.m) / (double(p.n) * double(p.n));
    const double half = kPi / (2.0 * double(p.n));
    const double s = std::sin(half) / half;
    const double s2 = s * s;
    const double num = p.H * p.H / double(p.m) + kPi * kPi * p.r * p.r * q * s2;
    const double den =
        2.0 * std::sqrt(p.H * p.H + (std::pow(kPi, 4) * p.r * p.r / 4.0) * q * q * s2 * s2);
    return num / den;
}

LanternSample lantern_oracle(const LanternParams& p) {
    check_params(p);
    if (p.n < 2) throw DomainError("lantern_oracle: n >= 2 required (n = 1 gives zero-area triangles)");
    if (p.m * p.n > 1'000'000) {
        throw SizeCap("lantern_oracle: m*n = " + std::to_string(p.m * p.n) + " exceeds 10^6");
    }

    struct V3 {
        double x, y, z;
    };
    auto vertex = [&](long long row, long long i) {
        const double offset = (row % 2 != 0) ? kPi / double(p.n) : 0.0;
        const double theta = 2.0 * kPi * double(i) / double(p.n) + offset;
        return V3{p.r * std::cos(theta), p.r * std::sin(theta), p.H * double(row) / double(p.m)};
    };
    auto measure = [](const V3& a, const V3& b, const V3& c, double& area, double& circ) {
        const V3 u{b.x - a.x, b.y - a.y, b.z - a.z};
        const V3 v{c.x - a.x, c.y - a.y, c.z - a.z};
        const V3 w{u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
        area = 0.5 * std::sqrt(w.x * w.x + w.y * w.y + w.z * w.z);
        auto dist = [](const V3& s, const V3& t) {
            return std::sqrt((s.x - t.x) * (s.x - t.x) + (s.y - t.y) * (s.y - t.y) +
                             (s.z - t.z) * (s.z - t.z));
        };
        const double ea = dist(b, c), eb = dist(c, a), ec = dist(a, b);
        circ = ea * eb * ec / (4.0 * area);
    };

    LanternSample out;
    for (long long j = 0; j < p.m; ++j) {
        for (long long i = 0; i < p.n; ++i) {
            double area, circ;
            // apex above the lower edge (i, i+1) of row j
            const long long apex_i = (j % 2 == 0) ? i : i + 1;
            measure(vertex(j, i), vertex(j, i + 1), vertex(j + 1, apex_i), area, circ);
            out.area += area;
            out.max_circumradius = std::max(out.max_circumradius, circ);
            // apex below the upper edge (i, i+1) of row j+1
            const long long apex_j = (j % 2 == 0) ? i + 1 : i;
            measure(vertex(j + 1, i), vertex(j + 1, i + 1), vertex(j, apex_j), area, circ);
            out.area += area;
            out.max_circumradius = std::max(out.max_circumradius, circ);
        }
    }
    return out;
}

SequenceRule power_rule(double beta) {
    if (!(beta > 0.0)) throw DomainError("power_rule: beta must be positive");
    SequenceRule rule;
    rule.m_of_n = [beta](long long n) {
        const double v = std::floor(std::pow(double(n), beta));
        return std::max(1LL, static_cast<long long>(v));
    };
    rule.name = "n^" + std::to_string(beta);
    return rule;
}

std::string to_string(LanternVerdict v) {
    switch (v) {
        case LanternVerdict::ConvergesToCylinder: return "converges-to-cylinder";
        case LanternVerdict::ConvergesElsewhere: return "converges-elsewhere";
        case LanternVerdict::Diverges: return "diverges";
        case LanternVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

enum class Trend { ToZero, Finite, Divergent, Unclear };

// Successive-ratio test at the geometric tail: sequences sampled at
// doubling n decay geometrically toward 0, settle (Cauchy within 5%),
// or grow. Anything in between stays Unclear.
Trend classify_trend(const std::vector<double>& xs) {
    const size_t k = xs.size();
    if (k < 2) return Trend::Unclear;
    const double last = xs[k - 1];
    const double prev = xs[k - 2];
    if (prev == 0.0) return last == 0.0 ? Trend::ToZero : Trend::Unclear;
    const double ratio = last / prev;
    if (ratio <= 0.9 && last < xs[0]) return Trend::ToZero;
    if (std::abs(ratio - 1.0) <= 0.05) return Trend::Finite;
    if (ratio >= 1.4 && last > xs[0]) return Trend::Divergent;
    return Trend::Unclear;
}

}  // namespace

SequenceClassification classify_sequence(const SequenceRule& rule, long long n_max, double r,
                                         double H) {
    if (n_max < 2) throw DomainError("classify_sequence: n_max must be >= 2");
    std::vector<long long> ns;
    for (long long n = 16; n <= n_max; n *= 2) ns.push_back(n);
    if (ns.empty() || ns.back() != n_max) ns.push_back(n_max);

    SequenceClassification out;
    const double cylinder = 2.0 * std::numbers::pi * r * H;
    std::vector<double> qs, rs, gaps, areas;
    long long prev_m = 0;
    for (long long n : ns) {
        const long long m = rule.m_of_n(n);
        if (m < 1) throw DomainError("sequence rule produced m < 1");
        if (m < prev_m) throw DomainError("sequence rule must be nondecreasing in n");
        prev_m = m;
        const LanternParams p{m, n, r, H};
        SequencePoint pt;
        pt.n = n;
        pt.m = m;
        pt.m_over_n2 = double(m) / (double(n) * double(n));
        pt.area = lantern_area(p);
        pt.circumradius = lantern_circumradius(p);
        pt.area_gap_to_cylinder = std::abs(pt.area - cylinder);
        qs.push_back(pt.m_over_n2);
        rs.push_back(pt.circumradius);
        gaps.push_back(pt.area_gap_to_cylinder);
        areas.push_back(pt.area);
        out.points.push_back(pt);
    }

    const Trend tq = classify_trend(qs);
    const Trend tr = classify_trend(rs);
    const Trend tgap = classify_trend(gaps);
    const Trend tarea = classify_trend(areas);

    out.ratio_to_zero = tq == Trend::ToZero;
    out.radius_to_zero = tr == Trend::ToZero;
    out.area_to_cylinder = tgap == Trend::ToZero;

    switch (tq) {
        case Trend::ToZero: out.verdict_from_ratio = LanternVerdict::ConvergesToCylinder; break;
        case Trend::Finite: out.verdict_from_ratio = LanternVerdict::ConvergesElsewhere; break;
        case Trend::Divergent: out.verdict_from_ratio = LanternVerdict::Diverges; break;
        case Trend::Unclear: out.verdict_from_ratio = LanternVerdict::Inconclusive; break;
    }

    if (tgap == Trend::ToZero) {
        out.verdict = LanternVerdict::ConvergesToCylinder;
    } else if (tarea == Trend::Divergent) {
        out.verdict = LanternVerdict::Diverges;
    } else if (tarea == Trend::Finite) {
        out.verdict = LanternVerdict::ConvergesElsewhere;
    } else {
        out.verdict = LanternVerdict::Inconclusive;
    }

    out.equivalence_holds = (out.ratio_to_zero == out.radius_to_zero) &&
                            (out.ratio_to_zero == out.area_to_cylinder);
    return out;
}

}  // namespace cfem
