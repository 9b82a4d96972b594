#include "cfem/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "cfem/errors.hpp"

namespace cfem {

namespace {

TriQuadRule make_rule(int degree) {
    TriQuadRule r;
    r.degree = degree;
    switch (degree) {
        case 1:
            r.points = {{1.0 / 3.0, 1.0 / 3.0, 1.0}};
            break;
        case 2:
            r.points = {{1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0},
                        {2.0 / 3.0, 1.0 / 6.0, 1.0 / 3.0},
                        {1.0 / 6.0, 2.0 / 3.0, 1.0 / 3.0}};
            break;
        case 3:
            // 4-point rule with a negative centroid weight
            r.points = {{1.0 / 3.0, 1.0 / 3.0, -27.0 / 48.0},
                        {1.0 / 5.0, 1.0 / 5.0, 25.0 / 48.0},
                        {3.0 / 5.0, 1.0 / 5.0, 25.0 / 48.0},
                        {1.0 / 5.0, 3.0 / 5.0, 25.0 / 48.0}};
            break;
        case 4: {
            const double a1 = 0.44594849091596488631832925388305199;
            const double w1 = 0.22338158967801146569500700843312280;
            const double a2 = 0.09157621350977074345957146340220151;
            const double w2 = 0.10995174365532186763832632490021053;
            r.points = {{a1, a1, w1}, {1.0 - 2.0 * a1, a1, w1}, {a1, 1.0 - 2.0 * a1, w1},
                        {a2, a2, w2}, {1.0 - 2.0 * a2, a2, w2}, {a2, 1.0 - 2.0 * a2, w2}};
            break;
        }
        case 5: {
            const double s15 = std::sqrt(15.0);
            const double a1 = (6.0 + s15) / 21.0;
            const double w1 = (155.0 + s15) / 1200.0;
            const double a2 = (6.0 - s15) / 21.0;
            const double w2 = (155.0 - s15) / 1200.0;
            r.points = {{1.0 / 3.0, 1.0 / 3.0, 9.0 / 40.0},
                        {a1, a1, w1}, {1.0 - 2.0 * a1, a1, w1}, {a1, 1.0 - 2.0 * a1, w1},
                        {a2, a2, w2}, {1.0 - 2.0 * a2, a2, w2}, {a2, 1.0 - 2.0 * a2, w2}};
            break;
        }
        default:
            throw DomainError("triangle_rule: unsupported degree " + std::to_string(degree));
    }
    return r;
}

}  // namespace

const TriQuadRule& triangle_rule(int degree) {
    if (degree < 1 || degree > 5) {
        throw DomainError("triangle_rule: degree must be in [1,5], got " + std::to_string(degree));
    }
    static const TriQuadRule rules[5] = {make_rule(1), make_rule(2), make_rule(3),
                                         make_rule(4), make_rule(5)};
    return rules[degree - 1];
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw DomainError("gauss_legendre: n must be positive");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int k = 0; k < half; ++k) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[k] = -x;
        nodes[n - 1 - k] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[k] = w;
        weights[n - 1 - k] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
}

}  // namespace cfem
