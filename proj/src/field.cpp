#include "cfem/field.hpp"

#include <cmath>

namespace cfem::fields {

ScalarField affine(double a, double b, double c) {
    return ScalarField(
        [=](double x, double y) { return a * x + b * y + c; },
        [=](double, double) { return Grad{a, b}; },
        [](double, double) { return Hess{0.0, 0.0, 0.0}; });
}

ScalarField quadratic_half() {
    return ScalarField(
        [](double x, double y) { return 0.5 * (x * x + y * y); },
        [](double x, double y) { return Grad{x, y}; },
        [](double, double) { return Hess{1.0, 0.0, 1.0}; });
}

namespace {

double cyl_guard(double a, double x) {
    const double d = a * a - x * x;
    if (!(d > 0.0)) {
        throw NonFinite("cylinder field evaluated at |x| >= " + std::to_string(a));
    }
    return d;
}

}  // namespace

ScalarField cylinder(double a) {
    return ScalarField(
        [a](double x, double) { return std::sqrt(cyl_guard(a, x)); },
        [a](double x, double) {
            return Grad{-x / std::sqrt(cyl_guard(a, x)), 0.0};
        },
        [a](double x, double) {
            const double d = cyl_guard(a, x);
            return Hess{-a * a / (d * std::sqrt(d)), 0.0, 0.0};
        });
}

ScalarField cylinder_source(double a) {
    return ScalarField([a](double x, double) {
        const double d = cyl_guard(a, x);
        return a * a / (d * std::sqrt(d));
    });
}

ScalarField by_name(const std::string& name) {
    if (name == "cylinder") return cylinder();
    if (name == "quadratic") return quadratic_half();
    throw DomainError("unknown field '" + name + "' (expected cylinder or quadratic)");
}

}  // namespace cfem::fields
