#pragma once

#include <span>
#include <vector>

#include "mlcp/params.hpp"

namespace mlcp::asymp {

struct GPair {
    double g0;
    double g1;
};

/// Floating-point view of G0 and G1 for one parameter set. The polynomial
/// coefficients are produced once in exact arithmetic and then rounded.
class GEvaluator {
public:
    explicit GEvaluator(const Params& params);

    GPair operator()(double y) const;

    /// ln G0(y) - a ln(sqrt2 |y|) - u [y < 0], written so that the large-|y|
    /// cancellation of the two logs never happens in floating point.
    double log_part(double y) const;

    const Params& params() const { return params_; }

private:
    // G01(|y|) = p0(-s) erfc(|y|) + 2 q0(-s) phi(|y|), s = sqrt2 |y|; positive
    double g01(double t) const;
    double g0(double y) const;

    Params params_;
    double sign_;  // (-1)^a
    double eu_;
    std::vector<double> p0_, q0_, p1_, q1_;
};

/// Convenience wrapper; builds a GEvaluator per call.
GPair eval_G(double y, const Params& params);

/// r^{a-ab} (2b)^{-a} G0(-r^b x / sqrt2; u, a): the local profile of the
/// j-th summand, ln_term(j) + (a/2) ln n -> ln H0(sqrt(n)(lambda_j - 1)).
double local_H0(double x, const Params& params);

struct PositivityScan {
    bool all_positive = true;
    double min_g0 = 0.0;
    double argmin = 0.0;
    long points = 0;
};

/// g0 on the grid y_lo, y_lo + step, ..., up to y_hi (inclusive up to rounding).
PositivityScan positivity_scan(const Params& params, double y_lo, double y_hi, double step);

struct Estimate {
    double value;
    double error;
};

/// C1 by graded Gauss-Kronrod at the logarithmic point y = r (and at 0 when
/// the density y^{2b-1} is singular). Throws AccuracyError above `tol`.
Estimate coeff_C1(const Params& params, double tol = 1e-9);

/// `refine` splits every base interval into that many equal parts; the
/// result must not depend on it beyond the error estimate.
Estimate coeff_C2(const Params& params, double tol = 1e-9, int refine = 1);

/// sqrt2 b r^b times the integral over one half-line only (y < 0 when
/// `negative` is set), tail included.
Estimate coeff_C2_half(const Params& params, bool negative, double tol = 1e-9);

Estimate coeff_C3(const Params& params, double tol = 1e-9, int refine = 1);

/// The non-integral part of C3.
double C3_closed_part(const Params& params);

/// Integrals of the C2 integrand over the octaves [2^k, 2^{k+1}] (both
/// signs of y combined), k = 0..count-1.
std::vector<double> c2_octaves(const Params& params, int count = 5);

struct AsymptoticCoeffs {
    double C1 = 0.0;
    double C2 = 0.0;
    double C3 = 0.0;
    double err1 = 0.0;
    double err2 = 0.0;
    double err3 = 0.0;
};

AsymptoticCoeffs coefficients(const Params& params, double tol = 1e-9);

double predict(long n, const AsymptoticCoeffs& coeffs);

/// ln_mgf_exact(n) - predict(n).
double residual(const Params& params, long n, const AsymptoticCoeffs& coeffs);

/// Least-squares slope of ln|res| against ln n over the rows with
/// |res| >= 1e-13; NaN when fewer than two rows remain.
double convergence_slope(std::span<const long> ns, std::span<const double> residuals);

}  // namespace mlcp::asymp
