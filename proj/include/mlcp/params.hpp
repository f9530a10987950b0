#pragma once

#include <cmath>
#include <string>

#include "mlcp/errors.hpp"

namespace mlcp {

/// Model parameters (b, alpha, r, u, a). Validated at construction; a Params
/// value is always admissible.
class Params {
public:
    Params(double b, double alpha, double r, double u, int a) : b_(b), alpha_(alpha), r_(r), u_(u), a_(a) {
        if (!(std::isfinite(b) && b > 0.0)) throw DomainError("b", "b must be positive and finite");
        if (!(std::isfinite(alpha) && alpha > -1.0)) throw DomainError("alpha", "alpha must exceed -1");
        if (!std::isfinite(u)) throw DomainError("u", "u must be finite");
        if (a < 0) throw DomainError("a", "a must be a nonnegative integer");
        if (!(std::isfinite(r) && r > 0.0 && r < edge()))
            throw DomainError("r", "r must lie strictly inside (0, b^(-1/(2b)))");
    }

    double b() const { return b_; }
    double alpha() const { return alpha_; }
    double r() const { return r_; }
    double u() const { return u_; }
    int a() const { return a_; }

    /// Right end of the support of the radial law, b^(-1/(2b)).
    double edge() const { return std::pow(b_, -1.0 / (2.0 * b_)); }

    /// Mass of the radial law inside the circle of radius r, b r^(2b).
    double inner_mass() const { return b_ * std::pow(r_, 2.0 * b_); }

    /// (-1)^a
    double sign_a() const { return (a_ % 2 == 0) ? 1.0 : -1.0; }

private:
    double b_;
    double alpha_;
    double r_;
    double u_;
    int a_;
};

}  // namespace mlcp
