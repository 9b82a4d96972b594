#pragma once

#include <functional>
#include <string>

#include "cfem/errors.hpp"

namespace cfem {

struct Grad {
    double x = 0.0;
    double y = 0.0;
};

// Symmetric 2x2 Hessian.
struct Hess {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;
};

// An analytic function on (a subset of) the plane. The gradient and
// Hessian callbacks are optional; operations that need them throw
// MissingHessian / DomainError when absent. Callbacks must be
// re-entrant: they are evaluated element by element with no shared state.
class ScalarField {
public:
    using ValueFn = std::function<double(double, double)>;
    using GradFn = std::function<Grad(double, double)>;
    using HessFn = std::function<Hess(double, double)>;

    ScalarField() = default;
    explicit ScalarField(ValueFn v, GradFn g = {}, HessFn h = {})
        : value_(std::move(v)), grad_(std::move(g)), hess_(std::move(h)) {}

    double value(double x, double y) const { return value_(x, y); }
    Grad gradient(double x, double y) const {
        if (!grad_) throw DomainError("ScalarField: gradient not available");
        return grad_(x, y);
    }
    Hess hessian(double x, double y) const {
        if (!hess_) throw MissingHessian("ScalarField: Hessian not available");
        return hess_(x, y);
    }

    bool has_gradient() const { return static_cast<bool>(grad_); }
    bool has_hessian() const { return static_cast<bool>(hess_); }

private:
    ValueFn value_;
    GradFn grad_;
    HessFn hess_;
};

namespace fields {

// a*x + b*y + c
ScalarField affine(double a, double b, double c);

// (x^2 + y^2) / 2 -- the unit-Hessian test field
ScalarField quadratic_half();

// sqrt(a^2 - x^2): a slice of the cylinder of radius a around the y-axis.
// Only defined for |x| < a; evaluation outside throws NonFinite.
ScalarField cylinder(double a = 1.1);

// a^2 / (a^2 - x^2)^{3/2} = -laplacian(cylinder(a)); value only.
ScalarField cylinder_source(double a = 1.1);

// Lookup by CLI name ("cylinder", "quadratic"). Throws DomainError.
ScalarField by_name(const std::string& name);

}  // namespace fields

}  // namespace cfem
