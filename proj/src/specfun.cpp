#include "mlcp/specfun.hpp"

#include <math.h>  // lgamma_r

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mlcp/errors.hpp"
#include "temme_taylor.hpp"

namespace mlcp::specfun {

namespace {

constexpr double k_eps = std::numeric_limits<double>::epsilon();

template <std::size_t N>
double horner(const std::array<double, N>& c, double x) {
    double acc = 0.0;
    for (std::size_t i = N; i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// Binet remainder ln Gamma(x) - [(x - 1/2) ln x - x + ln(2 pi)/2], x >= 10.
double binet_mu(double x) {
    const double r = 1.0 / x;
    const double r2 = r * r;
    return r * (1.0 / 12.0 +
                r2 * (-1.0 / 360.0 +
                      r2 * (1.0 / 1260.0 +
                            r2 * (-1.0 / 1680.0 +
                                  r2 * (1.0 / 1188.0 +
                                        r2 * (-691.0 / 360360.0 +
                                              r2 * (1.0 / 156.0 + r2 * (-3617.0 / 122400.0))))))));
}
// lambda - 1 - ln(lambda) from h = lambda - 1; callers that know h to full
// relative precision keep it.
double lm1ml(double h) {
    if (std::abs(h) < 0.1) {
        // sum_{k>=2} (-1)^k h^k / k
        double acc = 0.0;
        for (int k = 40; k >= 2; --k) acc = acc * (-h) + 1.0 / k;
        return acc * h * h;
    }
    return h - std::log1p(h);
}

double eta_from(double h) {
    if (std::abs(h) < k_temme_taylor_radius) return horner(detail::k_eta_taylor, h);
    const double e = std::sqrt(2.0 * lm1ml(h));
    return h < 0.0 ? -e : e;
}

double c_from(int j, double h) {
    if (std::abs(h) < k_temme_taylor_radius) {
        switch (j) {
            case 0: return horner(detail::k_c0_taylor, h);
            case 1: return horner(detail::k_c1_taylor, h);
            case 2: return horner(detail::k_c2_taylor, h);
            default: return horner(detail::k_c3_taylor, h);
        }
    }
    const double eta = eta_from(h);
    const double ie = 1.0 / eta;
    const double il = 1.0 / h;
    const double ie2 = ie * ie;
    const double il2 = il * il;
    switch (j) {
        case 0: return il - ie;
        case 1: return ie * ie2 - il * il2 - il2 - il / 12.0;
        case 2:
            return -3.0 * ie * ie2 * ie2 + 3.0 * il * il2 * il2 + 5.0 * il2 * il2 +
                   25.0 / 12.0 * il * il2 + il2 / 12.0 + il / 288.0;
        default:
            return 15.0 * ie * ie2 * ie2 * ie2 - 15.0 * il * il2 * il2 * il2 -
                   35.0 * il2 * il2 * il2 - 105.0 / 4.0 * il * il2 * il2 -
                   77.0 / 12.0 * il2 * il2 - 49.0 / 288.0 * il * il2 - il2 / 288.0 +
                   139.0 / 51840.0 * il;
    }
}

// ln( z^a e^{-z} / Gamma(a) )
double ln_prefactor(double a, double z) {
    if (a >= 10.0) {
        const double h = (z - a) / a;
        return -a * lm1ml(h) + 0.5 * std::log(a / (2.0 * std::numbers::pi)) - binet_mu(a);
    }
    return a * std::log(z) - z - ln_gamma(a);
}

void check_gamma_args(double a, double z) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("a_tilde", "incomplete gamma requires a_tilde > 0");
    if (!(z >= 0.0) || std::isnan(z))
        throw DomainError("z", "incomplete gamma requires z >= 0");
}

GammaPQ from_p(double p, GammaRegime regime) { return {p, 1.0 - p, regime}; }
GammaPQ from_q(double q, GammaRegime regime) { return {1.0 - q, q, regime}; }

}  // namespace

double binet(double x) {
    if (!(x >= 10.0)) throw DomainError("x", "the Binet series needs x >= 10");
    return binet_mu(x);
}

double ln_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("x", "ln_gamma requires x > 0");
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

double ln_gamma_ratio(double x, double delta) {
    if (!(x > 0.0) || !(x + delta > 0.0))
        throw DomainError("x", "ln_gamma_ratio requires x > 0 and x + delta > 0");
    if (delta == 0.0) return 0.0;
    if (x >= 10.0 && x + delta >= 10.0) {
        const double y = x + delta;
        return (x - 0.5) * std::log1p(delta / x) + delta * std::log(y) - delta + binet_mu(y) -
               binet_mu(x);
    }
    return ln_gamma(x + delta) - ln_gamma(x);
}

double erfc(double x) { return std::erfc(x); }

double erfi(double x) {
    const double ax = std::abs(x);
    double result;
    if (ax <= 7.0) {
        // (2/sqrt(pi)) sum x^{2k+1} / (k! (2k+1)); all terms share the sign of x
        const double x2 = x * x;
        double t = x;
        double sum = x;
        for (int k = 1; k < 500; ++k) {
            t *= x2 / k;
            const double term = t / (2 * k + 1);
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        result = 2.0 / std::sqrt(std::numbers::pi) * sum;
    } else {
        // e^{x^2}/(x sqrt(pi)) sum (2k-1)!! / (2x^2)^k
        const double inv = 1.0 / (2.0 * x * x);
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 200; ++k) {
            const double next = term * (2 * k - 1) * inv;
            if (next > term) break;
            term = next;
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        result = std::exp(x * x) / (ax * std::sqrt(std::numbers::pi)) * sum;
        if (x < 0.0) result = -result;
    }
    return result;
}

double lambda_minus_one_minus_log(double h) {
    if (!(h > -1.0)) throw DomainError("lambda", "lambda = 1 + h must be positive");
    return lm1ml(h);
}

double temme_eta(double lambda) {
    if (!(lambda > 0.0)) throw DomainError("lambda", "temme_eta requires lambda > 0");
    return eta_from(lambda - 1.0);
}

double temme_c(int j, double lambda) {
    if (j < 0 || j > 3)
        throw DomainError("j", "temme_c: only c_0..c_3 are available, got j = " + std::to_string(j));
    if (!(lambda > 0.0)) throw DomainError("lambda", "temme_c requires lambda > 0");
    return c_from(j, lambda - 1.0);
}

TemmePoint make_temme_point(double a_tilde, double z) {
    check_gamma_args(a_tilde, z);
    if (z == 0.0) throw DomainError("z", "the eta map is undefined at z = 0");
    const double lambda = z / a_tilde;
    return {a_tilde, lambda, eta_from((z - a_tilde) / a_tilde)};
}

std::string_view to_string(GammaRegime regime) {
    switch (regime) {
        case GammaRegime::LowerSeries: return "LowerSeries";
        case GammaRegime::UpperContinuedFraction: return "UpperContinuedFraction";
        case GammaRegime::TemmeUniform: return "TemmeUniform";
        case GammaRegime::SaturatedZero: return "SaturatedZero";
        case GammaRegime::SaturatedOne: return "SaturatedOne";
    }
    return "?";
}

GammaRegime select_regime(double a_tilde, double z) {
    check_gamma_args(a_tilde, z);
    if (z == 0.0) return GammaRegime::SaturatedZero;
    if (std::isinf(z)) return GammaRegime::SaturatedOne;
    const double h = (z - a_tilde) / a_tilde;
    if (a_tilde * lm1ml(h) > k_saturation_exponent)
        return h < 0.0 ? GammaRegime::SaturatedZero : GammaRegime::SaturatedOne;
    if (a_tilde >= k_temme_threshold) return GammaRegime::TemmeUniform;
    return z < a_tilde + 1.0 ? GammaRegime::LowerSeries : GammaRegime::UpperContinuedFraction;
}

namespace route {

GammaPQ lower_series(double a, double z) {
    check_gamma_args(a, z);
    if (z == 0.0) return {0.0, 1.0, GammaRegime::LowerSeries};
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 100000; ++k) {
        term *= z / (a + k);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    const double p = std::exp(ln_prefactor(a, z) - std::log(a)) * sum;
    return from_p(p, GammaRegime::LowerSeries);
}

GammaPQ upper_continued_fraction(double a, double z) {
    check_gamma_args(a, z);
    if (z == 0.0) return {0.0, 1.0, GammaRegime::UpperContinuedFraction};
    // modified Lentz on Q = pref / (z+1-a - 1(1-a)/(z+3-a - 2(2-a)/(z+5-a - ...)))
    constexpr double tiny = 1e-300;
    double b = z + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double f = d;
    bool converged = false;
    for (int i = 1; i < 100000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        f *= delta;
        if (std::abs(delta - 1.0) < k_eps) {
            converged = true;
            break;
        }
    }
    if (!converged) throw AccuracyError("incomplete gamma continued fraction did not converge");
    const double q = std::exp(ln_prefactor(a, z)) * f;
    return from_q(q, GammaRegime::UpperContinuedFraction);
}

GammaPQ temme_uniform(double a, double z) {
    check_gamma_args(a, z);
    if (z == 0.0) return {0.0, 1.0, GammaRegime::TemmeUniform};
    const double h = (z - a) / a;
    const double x = a * lm1ml(h);  // a eta^2 / 2
    const double eta = eta_from(h);
    double series = 0.0;
    for (int j = 3; j >= 0; --j) series = series / a + c_from(j, h);
    const double r = std::exp(-x) / std::sqrt(2.0 * std::numbers::pi * a) * series;
    const double s = std::sqrt(x);
    if (eta < 0.0) return from_p(0.5 * std::erfc(s) - r, GammaRegime::TemmeUniform);
    return from_q(0.5 * std::erfc(s) + r, GammaRegime::TemmeUniform);
}

}  // namespace route

GammaPQ reg_gamma(double a_tilde, double z) {
    const GammaRegime regime = select_regime(a_tilde, z);
    switch (regime) {
        case GammaRegime::SaturatedZero: return {0.0, 1.0, regime};
        case GammaRegime::SaturatedOne: return {1.0, 0.0, regime};
        case GammaRegime::TemmeUniform: return route::temme_uniform(a_tilde, z);
        case GammaRegime::LowerSeries: return route::lower_series(a_tilde, z);
        case GammaRegime::UpperContinuedFraction: return route::upper_continued_fraction(a_tilde, z);
    }
    return {0.0, 1.0, regime};
}

double reg_lower_gamma(double a_tilde, double z) { return reg_gamma(a_tilde, z).p; }

double reg_upper_gamma(double a_tilde, double z) { return reg_gamma(a_tilde, z).q; }

}  // namespace mlcp::specfun
