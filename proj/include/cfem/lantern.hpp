#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cfem {

// Schwarz lantern: cylinder of radius r and height H, m strips of
// 2n inscribed isosceles triangles each.
struct LanternParams {
    long long m = 1;
    long long n = 2;
    double r = 1.0;
    double H = 1.0;
};

// Closed form: A_E = 2 m n r sin(pi/n) sqrt((H/m)^2 + r^2 (1-cos(pi/n))^2).
double lantern_area(const LanternParams& p);

// Circumradius of the lantern triangle, the displayed two-parameter form.
double lantern_circumradius(const LanternParams& p);

struct LanternSample {
    double area = 0.0;
    double max_circumradius = 0.0;
};

// Builds all 2mn triangles on the cylinder and measures them directly
// (3D cross products, R = abc/4S). Requires m*n <= 10^6 and n >= 2.
LanternSample lantern_oracle(const LanternParams& p);

// n -> m(n) schedule, e.g. m = floor(n^beta).
struct SequenceRule {
    std::function<long long(long long)> m_of_n;
    std::string name;
};

SequenceRule power_rule(double beta);  // m = floor(n^beta), at least 1

enum class LanternVerdict {
    ConvergesToCylinder,
    ConvergesElsewhere,
    Diverges,
    Inconclusive,
};

std::string to_string(LanternVerdict v);

struct SequencePoint {
    long long n = 0;
    long long m = 0;
    double m_over_n2 = 0.0;
    double area = 0.0;
    double circumradius = 0.0;
    double area_gap_to_cylinder = 0.0;  // |A_E - 2 pi r H|
};

struct SequenceClassification {
    std::vector<SequencePoint> points;   // n = 16, 32, ... up to n_max
    LanternVerdict verdict = LanternVerdict::Inconclusive;
    LanternVerdict verdict_from_ratio = LanternVerdict::Inconclusive;  // from m/n^2
    bool ratio_to_zero = false;  // m/n^2 -> 0
    bool radius_to_zero = false; // R -> 0
    bool area_to_cylinder = false;
    bool equivalence_holds = false;  // the three binary statements agree
};

// Samples the rule at geometrically spaced n and classifies the limit
// behavior of A_E. Verdicts from A_E and from m/n^2 must agree; the
// three-way equivalence (A_E -> 2 pi r H) <=> (m/n^2 -> 0) <=> (R -> 0)
// is evaluated and reported.
SequenceClassification classify_sequence(const SequenceRule& rule, long long n_max,
                                         double r = 1.0, double H = 1.0);

}  // namespace cfem
