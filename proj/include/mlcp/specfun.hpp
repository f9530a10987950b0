#pragma once

#include <cstdint>
#include <string_view>

namespace mlcp::specfun {

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double ln_gamma(double x);

/// ln Gamma(x + delta) - ln Gamma(x), accurate for large x where the two
/// log-gammas are huge and nearly equal. Requires x > 0 and x + delta > 0.
double ln_gamma_ratio(double x, double delta);

/// Binet remainder ln Gamma(x) - [(x - 1/2) ln x - x + ln(2 pi)/2], x >= 10.
double binet(double x);

double erfc(double x);

/// Imaginary error function erfi(x) = -i erf(ix).
double erfi(double x);

/// lambda - 1 - ln(lambda) as a function of h = lambda - 1, without the
/// cancellation of the direct form near h = 0.
double lambda_minus_one_minus_log(double h);

/// Signed eta with eta^2 / 2 = lambda - 1 - ln(lambda).
double temme_eta(double lambda);

/// Coefficient c_j(eta(lambda)) of the uniform expansion, j = 0..3.
double temme_c(int j, double lambda);

/// Below this distance |lambda - 1| the Taylor tables are used for eta and c_j.
inline constexpr double k_temme_taylor_radius = 0.6;

struct TemmePoint {
    double a_tilde;
    double lambda;
    double eta;
};

TemmePoint make_temme_point(double a_tilde, double z);

enum class GammaRegime : std::uint8_t {
    LowerSeries,
    UpperContinuedFraction,
    TemmeUniform,
    SaturatedZero,
    SaturatedOne,
};

std::string_view to_string(GammaRegime regime);

/// Parameter at and above which the uniform expansion is used.
inline constexpr double k_temme_threshold = 1e3;

/// a * eta^2 / 2 beyond which P (or Q) is clamped to exactly 0.
inline constexpr double k_saturation_exponent = 745.0;

GammaRegime select_regime(double a_tilde, double z);

/// Regularized incomplete gamma pair. Whichever of p, q is below 1/2 is
/// computed directly; the other one is its complement.
struct GammaPQ {
    double p;
    double q;
    GammaRegime regime;
};

GammaPQ reg_gamma(double a_tilde, double z);

/// P(a, z) = gamma(a, z) / Gamma(a).
double reg_lower_gamma(double a_tilde, double z);

/// Q(a, z) = 1 - P(a, z).
double reg_upper_gamma(double a_tilde, double z);

/// Individual evaluation routes, exposed so the routes can be compared
/// against each other where their domains overlap.
namespace route {
GammaPQ lower_series(double a_tilde, double z);
GammaPQ upper_continued_fraction(double a_tilde, double z);
GammaPQ temme_uniform(double a_tilde, double z);
}  // namespace route

}  // namespace mlcp::specfun
