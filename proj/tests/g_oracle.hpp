#pragma once

// G0 and G1 straight from their defining formula, in 320-bit arithmetic, with
// the polynomial tables for a = 0..4 typed in by hand (coefficients listed
// from the constant term up).

#include <mpfr.h>

#include <cmath>
#include <vector>

#include "mpfr_oracle.hpp"

namespace goracle {

inline const std::vector<std::vector<double>> k_p0 = {
    {1}, {0, 1}, {1, 0, 1}, {0, 3, 0, 1}, {3, 0, 6, 0, 1}};
inline const std::vector<std::vector<double>> k_q0 = {
    {0}, {1}, {0, 1}, {2, 0, 1}, {0, 5, 0, 1}};
// b-parts of p1 and q1
inline const std::vector<std::vector<double>> k_p1b = {
    {0}, {1, 0, -1}, {0, 4, 0, -2}, {5, 0, 6, 0, -3}, {0, 32, 0, 4, 0, -4}};
inline const std::vector<std::vector<double>> k_q1b = {
    {2.0 / 3.0, 0, -5.0 / 3.0}, {0, 2.0 / 3.0}, {8.0 / 3.0, 0, -2}, {0, 9, 0, -3}, {16, 0, 8, 0, -4}};

inline std::vector<double> p1(int a, double b) {
    // -(a/2) p0_{a+1} + b {...}; p0_5 = x^5 + 10x^3 + 15x
    static const std::vector<double> p0_5 = {0, 15, 0, 10, 0, 1};
    const std::vector<double>& next = a + 1 <= 4 ? k_p0[a + 1] : p0_5;
    std::vector<double> out(std::max(next.size(), k_p1b[a].size()), 0.0);
    for (std::size_t i = 0; i < next.size(); ++i) out[i] -= 0.5 * a * next[i];
    for (std::size_t i = 0; i < k_p1b[a].size(); ++i) out[i] += b * k_p1b[a][i];
    return out;
}

inline std::vector<double> q1(int a, double b) {
    // q0_5 = x^4 + 9x^2 + 8
    static const std::vector<double> q0_5 = {8, 0, 9, 0, 1};
    const std::vector<double>& next = a + 1 <= 4 ? k_q0[a + 1] : q0_5;
    std::vector<double> out(std::max(next.size(), k_q1b[a].size()), 0.0);
    for (std::size_t i = 0; i < next.size(); ++i) out[i] -= 0.5 * a * next[i];
    for (std::size_t i = 0; i < k_q1b[a].size(); ++i) out[i] += b * k_q1b[a][i];
    return out;
}

inline void poly_mp(mpfr_t out, const std::vector<double>& c, const mpfr_t x) {
    mpfr_set_ui(out, 0, MPFR_RNDN);
    for (std::size_t i = c.size(); i-- > 0;) {
        mpfr_mul(out, out, x, MPFR_RNDN);
        mpfr_add_d(out, out, c[i], MPFR_RNDN);
    }
}

struct G {
    double g0;
    double g1;
};

/// p(-sqrt2 y)((-1)^a + (e^u - (-1)^a) erfc(y)/2) + q(-sqrt2 y)(e^u - (-1)^a) e^{-y^2}/sqrt(2 pi)
inline G eval(double y, double u, int a, double b) {
    using oracle::Mp;
    Mp Y, x, s, c, bracket, gauss, t, pv, qv, g0, g1;
    mpfr_set_d(Y.v, y, MPFR_RNDN);
    mpfr_set_d(x.v, 2.0, MPFR_RNDN);
    mpfr_sqrt(x.v, x.v, MPFR_RNDN);
    mpfr_mul(x.v, x.v, Y.v, MPFR_RNDN);
    mpfr_neg(x.v, x.v, MPFR_RNDN);
    mpfr_set_si(s.v, a % 2 == 0 ? 1 : -1, MPFR_RNDN);
    mpfr_set_d(c.v, u, MPFR_RNDN);
    mpfr_exp(c.v, c.v, MPFR_RNDN);
    mpfr_sub(c.v, c.v, s.v, MPFR_RNDN);
    mpfr_erfc(bracket.v, Y.v, MPFR_RNDN);
    mpfr_mul(bracket.v, bracket.v, c.v, MPFR_RNDN);
    mpfr_div_ui(bracket.v, bracket.v, 2, MPFR_RNDN);
    mpfr_add(bracket.v, bracket.v, s.v, MPFR_RNDN);
    mpfr_sqr(gauss.v, Y.v, MPFR_RNDN);
    mpfr_neg(gauss.v, gauss.v, MPFR_RNDN);
    mpfr_exp(gauss.v, gauss.v, MPFR_RNDN);
    mpfr_const_pi(t.v, MPFR_RNDN);
    mpfr_mul_ui(t.v, t.v, 2, MPFR_RNDN);
    mpfr_sqrt(t.v, t.v, MPFR_RNDN);
    mpfr_div(gauss.v, gauss.v, t.v, MPFR_RNDN);
    mpfr_mul(gauss.v, gauss.v, c.v, MPFR_RNDN);

    poly_mp(pv.v, k_p0[a], x.v);
    poly_mp(qv.v, k_q0[a], x.v);
    mpfr_mul(g0.v, pv.v, bracket.v, MPFR_RNDN);
    mpfr_fma(g0.v, qv.v, gauss.v, g0.v, MPFR_RNDN);
    poly_mp(pv.v, p1(a, b), x.v);
    poly_mp(qv.v, q1(a, b), x.v);
    mpfr_mul(g1.v, pv.v, bracket.v, MPFR_RNDN);
    mpfr_fma(g1.v, qv.v, gauss.v, g1.v, MPFR_RNDN);
    return {mpfr_get_d(g0.v, MPFR_RNDN), mpfr_get_d(g1.v, MPFR_RNDN)};
}

/// ln G0 - a ln(sqrt2 |y|) - u [y < 0], the logs combined at 320 bits.
inline double c2_integrand(double y, double u, int a, double b) {
    using oracle::Mp;
    const G g = eval(y, u, a, b);
    (void)b;
    Mp v, t;
    mpfr_set_d(v.v, g.g0, MPFR_RNDN);
    mpfr_log(v.v, v.v, MPFR_RNDN);
    mpfr_set_d(t.v, std::sqrt(2.0), MPFR_RNDN);
    mpfr_mul_d(t.v, t.v, std::abs(y), MPFR_RNDN);
    mpfr_log(t.v, t.v, MPFR_RNDN);
    mpfr_mul_si(t.v, t.v, a, MPFR_RNDN);
    mpfr_sub(v.v, v.v, t.v, MPFR_RNDN);
    if (y < 0.0) mpfr_sub_d(v.v, v.v, u, MPFR_RNDN);
    return mpfr_get_d(v.v, MPFR_RNDN);
}

}  // namespace goracle
