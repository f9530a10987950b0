#pragma once

#include <cmath>
#include <functional>

namespace mlcp::quad {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
    bool converged = true;

    QuadResult& operator+=(const QuadResult& o) {
        value += o.value;
        error += o.error;
        evaluations += o.evaluations;
        converged = converged && o.converged;
        return *this;
    }
};

using Integrand = std::function<double(double)>;

/// Single 21-point Gauss-Kronrod panel with the QUADPACK error heuristic.
QuadResult gk21(const Integrand& f, double a, double b);

/// Globally adaptive Gauss-Kronrod: bisects the panel with the largest error
/// estimate until the total estimate is below max(abs_tol, rel_tol*|I|) or
/// `max_panels` is reached (then `converged` is false).
QuadResult adaptive(const Integrand& f, double a, double b, double abs_tol, double rel_tol = 0.0,
                    int max_panels = 4000);

/// Which endpoint of [a, b] carries an integrable singularity.
enum class Singular { Left, Right };

/// Geometric grading toward a singular endpoint: panels of width
/// (b-a) 2^{-k-1}, each integrated adaptively, until the panel contributions
/// become negligible. The dropped remainder next to the endpoint is
/// estimated from the last two panels (geometric tail) and folded into the
/// error estimate.
QuadResult graded(const Integrand& f, double a, double b, Singular where, double abs_tol);

}  // namespace mlcp::quad
