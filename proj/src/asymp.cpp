#include "mlcp/asymp.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mlcp/combo_poly.hpp"
#include "mlcp/errors.hpp"
#include "mlcp/exact_mgf.hpp"
#include "mlcp/quadrature.hpp"
#include "mlcp/specfun.hpp"

namespace mlcp::asymp {

namespace {

constexpr double k_sqrt2 = std::numbers::sqrt2;
const double k_inv_sqrt2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

// Beyond this |y| every erfc and Gaussian factor is below 1e-390 relative to
// the polynomial part, so G0 and G1 are pure polynomials in double precision.
constexpr double k_cut = 30.0;

double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// p0(s)/s^a - 1 = sum_{m=1}^{a} c_{a-m} s^{-m}, for s >= 1
double p0_over_power_minus_one(const std::vector<double>& p0, double s) {
    const double z = 1.0 / s;
    const std::size_t a = p0.size() - 1;
    double acc = 0.0;
    for (std::size_t m = a; m >= 1; --m) acc = acc * z + p0[a - m];
    return acc * z;
}

void require(const quad::QuadResult& r, double tol, const char* what) {
    if (!r.converged || !(r.error <= tol) || !std::isfinite(r.value))
        throw AccuracyError(std::string(what) + ": quadrature error estimate " + std::to_string(r.error) +
                            " exceeds tolerance " + std::to_string(tol));
}

// Integrates f over [lo, hi] split into `refine` equal parts. Parts that touch
// a point listed in `singular` are graded toward it.
quad::QuadResult piece(const quad::Integrand& f, double lo, double hi, int refine, double tol, bool sing_lo,
                       bool sing_hi) {
    quad::QuadResult total;
    const double w = (hi - lo) / refine;
    const double part_tol = tol / refine;
    for (int i = 0; i < refine; ++i) {
        const double a = lo + i * w;
        const double b = (i + 1 == refine) ? hi : lo + (i + 1) * w;
        if (i == 0 && sing_lo)
            total += quad::graded(f, a, b, quad::Singular::Left, part_tol);
        else if (i + 1 == refine && sing_hi)
            total += quad::graded(f, a, b, quad::Singular::Right, part_tol);
        else
            total += quad::adaptive(f, a, b, part_tol, 1e-14);
    }
    return total;
}

// [-cut, -1], [-1, 0], [0, 1], [1, cut], graded toward 0
quad::QuadResult over_line(const quad::Integrand& f, bool negative, bool positive, int refine, double tol) {
    quad::QuadResult total;
    const double t = tol / 4.0;
    if (negative) {
        total += piece(f, -k_cut, -1.0, refine, t, false, false);
        total += piece(f, -1.0, 0.0, refine, t, false, true);
    }
    if (positive) {
        total += piece(f, 0.0, 1.0, refine, t, true, false);
        total += piece(f, 1.0, k_cut, refine, t, false, false);
    }
    return total;
}

// int_cut^inf ln(p0(sqrt2 y)/(sqrt2 y)^a) dy through y = 1/s
quad::QuadResult c2_tail(const std::vector<double>& p0, double tol) {
    if (p0.size() <= 2) return {};  // a <= 1: p0(s) = s^a exactly
    auto g = [&](double s) {
        if (s <= 0.0) return 0.0;
        return std::log1p(p0_over_power_minus_one(p0, k_sqrt2 / s)) / (s * s);
    };
    return quad::adaptive(g, 0.0, 1.0 / k_cut, tol, 1e-14);
}

double c2_prefactor(const Params& p) { return k_sqrt2 * p.b() * std::pow(p.r(), p.b()); }

void check_tol(double tol) {
    if (!(tol > 0.0)) throw DomainError("tol", "tolerance must be positive");
}

}  // namespace

GEvaluator::GEvaluator(const Params& params)
    : params_(params),
      sign_(params.sign_a()),
      eu_(std::exp(params.u())),
      p0_(combo::to_double(combo::p0(params.a()))),
      q0_(combo::to_double(combo::q0(params.a()))),
      p1_(combo::p1_parts(params.a()).at(params.b())),
      q1_(combo::q1_parts(params.a()).at(params.b())) {}

double GEvaluator::g01(double t) const {
    const double s = k_sqrt2 * t;
    const double v = horner(p0_, -s) * specfun::erfc(t) + 2.0 * horner(q0_, -s) * std::exp(-t * t) * k_inv_sqrt2pi;
    // positive in exact arithmetic; far out the two terms cancel to rounding noise
    return std::max(v, 0.0);
}

// y >= 0: p0(s) + (e^u - (-1)^a) G01(y)/2
// y <  0: e^u p0(s) + (1 - (-1)^a e^u) G01(|y|)/2
// Both corrections are bounded so that G0 >= min(1, e^u) p0(s)/2 whenever p0(s) > 0.
double GEvaluator::g0(double y) const {
    const double t = std::abs(y);
    const double p = horner(p0_, k_sqrt2 * t);
    if (y >= 0.0) return p + (eu_ - sign_) * g01(t) / 2.0;
    return eu_ * p + (1.0 - sign_ * eu_) * g01(t) / 2.0;
}

GPair GEvaluator::operator()(double y) const {
    const double x = -k_sqrt2 * y;
    const double bracket = sign_ + (eu_ - sign_) * specfun::erfc(y) / 2.0;
    const double gauss = (eu_ - sign_) * std::exp(-y * y) * k_inv_sqrt2pi;
    return {g0(y), horner(p1_, x) * bracket + horner(q1_, x) * gauss};
}

double GEvaluator::log_part(double y) const {
    const double t = std::abs(y);
    const double s = k_sqrt2 * t;
    if (s >= 1.0) {
        const double tail = std::log1p(p0_over_power_minus_one(p0_, s));
        const double p = horner(p0_, s);
        const double corr = y >= 0.0 ? (eu_ - sign_) * g01(t) / (2.0 * p)
                                     : (1.0 - sign_ * eu_) * g01(t) / (2.0 * eu_ * p);
        return tail + std::log1p(corr);
    }
    const double g = g0(y);
    if (!(g > 0.0)) throw AccuracyError("G0 is not positive at y = " + std::to_string(y));
    return std::log(g) - params_.a() * std::log(s) - (y < 0.0 ? params_.u() : 0.0);
}

GPair eval_G(double y, const Params& params) { return GEvaluator(params)(y); }

double local_H0(double x, const Params& p) {
    const double a = p.a();
    const double b = p.b();
    return std::pow(p.r(), a - a * b) * std::pow(2.0 * b, -a) * eval_G(-std::pow(p.r(), b) * x / k_sqrt2, p).g0;
}

PositivityScan positivity_scan(const Params& params, double y_lo, double y_hi, double step) {
    if (!(step > 0.0) || !(y_hi >= y_lo)) throw DomainError("step", "the grid needs step > 0 and y_hi >= y_lo");
    const GEvaluator g(params);
    PositivityScan scan;
    scan.min_g0 = std::numeric_limits<double>::infinity();
    const long count = static_cast<long>(std::floor((y_hi - y_lo) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) {
        const double y = y_lo + static_cast<double>(i) * step;
        const double v = g(y).g0;
        if (!(v > 0.0)) scan.all_positive = false;
        if (v < scan.min_g0) {
            scan.min_g0 = v;
            scan.argmin = y;
        }
    }
    scan.points = count;
    return scan;
}

Estimate coeff_C1(const Params& p, double tol) {
    check_tol(tol);
    const double b = p.b();
    const double r = p.r();
    const double e = p.edge();
    const double inner = p.u() * p.inner_mass();
    if (p.a() == 0) return {inner, 0.0};
    auto density = [b](double y) { return 2.0 * b * b * std::pow(y, 2.0 * b - 1.0); };
    auto f = [&](double y) {
        if (y <= 0.0 || y == r) return 0.0;
        return std::log(std::abs(y - r)) * density(y);
    };
    const double t = tol / (4.0 * p.a());
    quad::QuadResult total;
    total += b < 0.5 ? quad::graded(f, 0.0, r / 2.0, quad::Singular::Left, t) : quad::adaptive(f, 0.0, r / 2.0, t, 1e-14);
    total += quad::graded(f, r / 2.0, r, quad::Singular::Right, t);
    total += quad::graded(f, r, (r + e) / 2.0, quad::Singular::Left, t);
    total += quad::adaptive(f, (r + e) / 2.0, e, t, 1e-14);
    require(total, tol / p.a(), "C1");
    return {inner + p.a() * total.value, p.a() * total.error};
}

std::vector<double> c2_octaves(const Params& params, int count) {
    const GEvaluator g(params);
    auto f = [&](double y) { return g.log_part(y) + g.log_part(-y); };
    std::vector<double> out;
    for (int k = 0; k < count; ++k) out.push_back(quad::adaptive(f, std::ldexp(1.0, k), std::ldexp(1.0, k + 1), 1e-14, 1e-13).value);
    return out;
}

namespace {

Estimate c2_impl(const Params& p, double tol, int refine, bool negative, bool positive) {
    check_tol(tol);
    if (refine < 1) throw DomainError("refine", "refine must be at least 1");
    const GEvaluator g(p);
    const double pre = c2_prefactor(p);
    const double t = tol / pre;
    auto f = [&](double y) { return g.log_part(y); };
    quad::QuadResult total = over_line(f, negative, positive, refine, t / 2.0);
    const quad::QuadResult tail = c2_tail(combo::to_double(combo::p0(p.a())), t / 4.0);
    const int sides = static_cast<int>(negative) + static_cast<int>(positive);
    total.value += sides * tail.value;
    total.error += sides * tail.error;
    total.evaluations += tail.evaluations;
    total.converged = total.converged && tail.converged;
    require(total, t, "C2");
    return {pre * total.value, pre * total.error};
}

}  // namespace

Estimate coeff_C2(const Params& p, double tol, int refine) {
    // The truncation at |y| = 30 relies on the integrand settling into its
    // algebraic tail; octave integrals that fail to shrink mean it has not.
    const std::vector<double> oct = c2_octaves(p);
    for (std::size_t k = 1; k + 1 < oct.size(); ++k)
        if (std::abs(oct[k + 1]) > std::max(std::abs(oct[k]), tol))
            throw AccuracyError("C2 octave contributions do not decrease (octave " + std::to_string(k + 1) + ")");
    return c2_impl(p, tol, refine, true, true);
}

Estimate coeff_C2_half(const Params& p, bool negative, double tol) { return c2_impl(p, tol, 1, negative, !negative); }

double C3_closed_part(const Params& p) {
    const double a = p.a();
    const double b = p.b();
    const double q = p.r() / p.edge();  // (b r^{2b})^{1/(2b)}
    return -(0.5 + p.alpha()) * p.u() + a * (1.0 - a) / (4.0 * (1.0 - q)) +
           (a / 4.0) * (2.0 + a - 2.0 * b + 4.0 * p.alpha()) * std::log(1.0 / q - 1.0);
}

Estimate coeff_C3(const Params& p, double tol, int refine) {
    check_tol(tol);
    if (refine < 1) throw DomainError("refine", "refine must be at least 1");
    const GEvaluator g(p);
    const double a = p.a();
    const double b = p.b();
    // Past |y| = 30 the integrand is exactly odd in double precision (see
    // k_cut), so the symmetric truncation drops nothing.
    auto f = [&](double y) {
        const GPair v = g(y);
        if (!(v.g0 > 0.0)) throw AccuracyError("G0 is not positive at y = " + std::to_string(y));
        return v.g1 / (k_sqrt2 * v.g0) + 4.0 * b * y * g.log_part(y) - 0.5 * a * (1.0 + 2.0 * b) * y +
               (2.0 * a * b - a * a) * y / (4.0 * (1.0 + y * y));
    };
    const quad::QuadResult total = over_line(f, true, true, refine, tol / 2.0);
    require(total, tol, "C3");
    return {C3_closed_part(p) + total.value, total.error};
}

AsymptoticCoeffs coefficients(const Params& params, double tol) {
    const Estimate c1 = coeff_C1(params, tol);
    const Estimate c2 = coeff_C2(params, tol);
    const Estimate c3 = coeff_C3(params, tol);
    return {c1.value, c2.value, c3.value, c1.error, c2.error, c3.error};
}

double predict(long n, const AsymptoticCoeffs& c) {
    if (n < 1) throw DomainError("n", "n must be at least 1");
    const double nd = static_cast<double>(n);
    return c.C1 * nd + c.C2 * std::sqrt(nd) + c.C3;
}

double residual(const Params& params, long n, const AsymptoticCoeffs& c) {
    return exact::ln_mgf_exact(params, n).ln_mgf - predict(n, c);
}

double convergence_slope(std::span<const long> ns, std::span<const double> residuals) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int m = 0;
    for (std::size_t i = 0; i < ns.size() && i < residuals.size(); ++i) {
        if (!(std::abs(residuals[i]) >= 1e-13)) continue;
        const double x = std::log(static_cast<double>(ns[i]));
        const double y = std::log(std::abs(residuals[i]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 2) return std::numeric_limits<double>::quiet_NaN();
    const double den = m * sxx - sx * sx;
    if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (m * sxy - sx * sy) / den;
}

}  // namespace mlcp::asymp
