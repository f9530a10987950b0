#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "g_oracle.hpp"
#include "mlcp/asymp.hpp"
#include "mlcp/errors.hpp"
#include "mlcp/exact_mgf.hpp"

using namespace mlcp;
using namespace mlcp::asymp;

namespace {

const double sqrt2 = std::numbers::sqrt2;

boost::math::quadrature::tanh_sinh<double>& ts() {
    static boost::math::quadrature::tanh_sinh<double> q;
    return q;
}

double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// int_30^inf ln(p0(sqrt2 y) / (sqrt2 y)^a) dy from the hand-typed table
double c2_tail_oracle(int a) {
    const std::vector<double>& p = goracle::k_p0[a];
    auto f = [&](double y) {
        const double s = sqrt2 * y;
        double excess = 0.0;
        for (int k = 0; k < a; ++k) excess += p[k] * std::pow(s, k - a);
        return std::log1p(excess);
    };
    static boost::math::quadrature::exp_sinh<double> es;
    return es.integrate([&](double t) { return f(30.0 + t); }, 1e-14);
}

// sqrt2 b r^b int ln G0 - a ln(sqrt2|y|) - u[y<0] over the line
double c2_oracle(double b, double r, double u, int a) {
    auto f = [&](double y) { return goracle::c2_integrand(y, u, a, b); };
    double total = 0.0;
    for (double s : {-1.0, 1.0}) {
        auto g = [&](double t) { return f(s * t); };
        total += ts().integrate(g, 0.0, 1.0, 1e-13) + ts().integrate(g, 1.0, 30.0, 1e-13);
    }
    total += 2.0 * c2_tail_oracle(a);
    return sqrt2 * b * std::pow(r, b) * total;
}

double c3_closed(double b, double alpha, double r, double u, int a) {
    const double q = std::pow(b * std::pow(r, 2.0 * b), 1.0 / (2.0 * b));
    return -(0.5 + alpha) * u + a * (1.0 - a) / (4.0 * (1.0 - q)) +
           (a / 4.0) * (2.0 + a - 2.0 * b + 4.0 * alpha) * std::log(1.0 / q - 1.0);
}

// the odd polynomial pieces of the integrand cancel between y and -y
double c3_oracle(double b, double alpha, double r, double u, int a) {
    auto even = [&](double y) {
        const goracle::G gp = goracle::eval(y, u, a, b);
        const goracle::G gm = goracle::eval(-y, u, a, b);
        return (gp.g1 / gp.g0 + gm.g1 / gm.g0) / sqrt2 +
               4.0 * b * y * (goracle::c2_integrand(y, u, a, b) - goracle::c2_integrand(-y, u, a, b));
    };
    // past |y| = 12 the even part is below e^{-144}
    const double integral = ts().integrate(even, 0.0, 1.0, 1e-11) + ts().integrate(even, 1.0, 12.0, 1e-11);
    return c3_closed(b, alpha, r, u, a) + integral;
}

std::vector<double> residuals(const Params& p, const std::vector<long>& ns) {
    const AsymptoticCoeffs c = coefficients(p);
    std::vector<double> out;
    for (long n : ns) out.push_back(residual(p, n, c));
    return out;
}

}  // namespace

TEST_CASE("G0 special cases") {
    const double e = std::numbers::e;
    for (double y : {-3.0, -0.4, 0.0, 0.7, 2.5}) {
        CHECK(eval_G(y, Params(1.0, 0.0, 0.5, 1.0, 0)).g0 == doctest::Approx(1.0 + (e - 1.0) * std::erfc(y) / 2.0).epsilon(1e-14));
        const double x = -sqrt2 * y;
        CHECK(eval_G(y, Params(1.0, 0.0, 0.5, 0.0, 2)).g0 == doctest::Approx(x * x + 1.0).epsilon(1e-14));
        CHECK(eval_G(y, Params(0.7, 0.2, 0.5, 0.0, 4)).g0 ==
              doctest::Approx(horner(goracle::k_p0[4], x)).epsilon(1e-13));
    }
    for (double u : {-2.0, 0.0, 1.5})
        CHECK(eval_G(0.0, Params(1.0, 0.0, 0.5, u, 1)).g0 ==
              doctest::Approx((std::exp(u) + 1.0) / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("G0 and G1 against 320-bit evaluation of the tabulated polynomials") {
    for (int a = 0; a <= 4; ++a) {
        for (double b : {0.5, 1.0, 2.3}) {
            for (double u : {-3.0, 0.0, 0.8, 4.0}) {
                const Params p(b, 0.0, 0.5 * std::pow(b, -1.0 / (2.0 * b)), u, a);
                for (double y = -8.0; y <= 8.0; y += 0.37) {
                    const GPair g = eval_G(y, p);
                    const goracle::G want = goracle::eval(y, u, a, b);
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(u);
                    CAPTURE(y);
                    CHECK(std::abs(g.g0 - want.g0) <= 1e-12 * std::max(1.0, std::abs(want.g0)));
                    CHECK(std::abs(g.g1 - want.g1) <= 1e-12 * std::max(1.0, std::abs(want.g1)));
                }
            }
        }
    }
}

TEST_CASE("positivity scans") {
    const PositivityScan null = positivity_scan(Params(1.0, 0.0, 0.5, 0.0, 0), -10.0, 10.0, 1e-3);
    CHECK(null.all_positive);
    CHECK(null.min_g0 == 1.0);
    CHECK(null.points == 20001);
    CHECK(positivity_scan(Params(1.0, 0.0, 0.5, -10.0, 3), -10.0, 10.0, 1e-3).all_positive);
    CHECK(positivity_scan(Params(1.0, 0.0, 0.5, 5.0, 4), -10.0, 10.0, 1e-3).all_positive);
    CHECK_THROWS_AS(positivity_scan(Params(1.0, 0.0, 0.5, 0.0, 0), -1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("C1") {
    for (double u : {-1.0, 0.0, 2.0}) {
        const Params p(0.8, 0.3, 0.6, u, 0);
        CHECK(std::abs(coeff_C1(p).value - u * 0.8 * std::pow(0.6, 1.6)) < 1e-10);
    }

    // b = 1: density 2y on [0, 1]; 2y = 2(y - r) + 2r, the log part done by hand
    const double r = 0.5;
    const long panels = 1000000;
    auto smooth = [&](double y) {
        const double d = y - r;
        return d == 0.0 ? 0.0 : 2.0 * d * std::log(std::abs(d));
    };
    double trap = 0.5 * (smooth(0.0) + smooth(1.0));
    for (long i = 1; i < panels; ++i) trap += smooth(static_cast<double>(i) / panels);
    trap /= panels;
    const double logs = (r * std::log(r) - r) + ((1.0 - r) * std::log(1.0 - r) - (1.0 - r));
    const double want = 1.0 * r * r + trap + 2.0 * r * logs;
    CHECK(std::abs(coeff_C1(Params(1.0, 0.0, 0.5, 1.0, 1)).value - want) < 1e-8);

    // singular density at 0 when b < 1/2
    const double b = 0.3;
    const Params q(b, 0.0, 0.7, -0.5, 3);
    auto f = [&](double y) { return std::log(std::abs(y - 0.7)) * 2.0 * b * b * std::pow(y, 2.0 * b - 1.0); };
    const double w = -0.5 * q.inner_mass() + 3.0 * (ts().integrate(f, 0.0, 0.7, 1e-14) + ts().integrate(f, 0.7, q.edge(), 1e-14));
    CHECK(std::abs(coeff_C1(q).value - w) < 1e-9);
}

TEST_CASE("C2") {
    CHECK(coeff_C2(Params(1.0, 0.0, 0.5, 0.0, 0)).value == 0.0);

    const double e = std::numbers::e;
    auto f = [&](double y) { return std::log(1.0 + (e - 1.0) * std::erfc(y) / 2.0) - (y < 0.0 ? 1.0 : 0.0); };
    const double brute = sqrt2 * 0.5 * (ts().integrate(f, -40.0, 0.0, 1e-14) + ts().integrate(f, 0.0, 40.0, 1e-14));
    CHECK(std::abs(coeff_C2(Params(1.0, 0.0, 0.5, 1.0, 0)).value - brute) < 1e-8);

    struct Case {
        double b, r, u;
        int a;
    };
    for (const Case c : {Case{1.0, 0.5, 1.0, 1}, Case{1.0, 0.5, 0.0, 2}, Case{0.7, 0.6, -1.5, 3}, Case{2.0, 0.5, 2.0, 4}}) {
        CAPTURE(c.a);
        CHECK(std::abs(coeff_C2(Params(c.b, 0.0, c.r, c.u, c.a)).value - c2_oracle(c.b, c.r, c.u, c.a)) < 1e-8);
    }
}

TEST_CASE("C2 half-lines agree under parity") {
    const Params p(1.0, 0.0, 0.5, 0.0, 2);
    CHECK(std::abs(coeff_C2_half(p, true).value - coeff_C2_half(p, false).value) < 1e-10);
}

TEST_CASE("C2 octave contributions decrease") {
    for (int a : {1, 2, 3, 6}) {
        const std::vector<double> o = c2_octaves(Params(1.0, 0.0, 0.5, 1.0, a));
        for (std::size_t k = 1; k + 1 < o.size(); ++k) CHECK(std::abs(o[k + 1]) <= std::abs(o[k]));
    }
}

TEST_CASE("halving the base step stays inside the error estimate") {
    for (int a : {0, 1, 3}) {
        const Params p(1.0, 0.2, 0.55, 0.7, a);
        const Estimate c2 = coeff_C2(p, 1e-9, 1);
        const Estimate c2f = coeff_C2(p, 1e-9, 2);
        const Estimate c3 = coeff_C3(p, 1e-9, 1);
        const Estimate c3f = coeff_C3(p, 1e-9, 2);
        CAPTURE(a);
        CHECK(std::abs(c2.value - c2f.value) <= c2.error + c2f.error);
        CHECK(std::abs(c3.value - c3f.value) <= c3.error + c3f.error);
    }
}

TEST_CASE("C3") {
    CHECK(coeff_C3(Params(1.0, 0.0, 0.5, 0.0, 0)).value == 0.0);

    struct Case {
        double b, alpha, r, u;
        int a;
    };
    for (const Case c : {Case{1.0, 0.0, 0.5, 1.0, 0}, Case{1.0, 0.0, 0.5, 1.0, 1}, Case{1.0, 0.0, 0.5, 0.0, 2},
                         Case{0.7, 0.3, 0.6, 0.5, 3}, Case{2.0, -0.5, 0.5, -1.0, 4}}) {
        CAPTURE(c.a);
        CHECK(std::abs(coeff_C3(Params(c.b, c.alpha, c.r, c.u, c.a)).value - c3_oracle(c.b, c.alpha, c.r, c.u, c.a)) < 1e-8);
    }

    for (int a : {0, 1, 2, 5}) {
        const double b = 1.4, r = 0.6, u = 0.9;
        const double shift = coeff_C3(Params(b, 1.3, r, u, a)).value - coeff_C3(Params(b, 0.3, r, u, a)).value;
        const double want = -u + a * std::log(std::pow(b * std::pow(r, 2.0 * b), -1.0 / (2.0 * b)) - 1.0);
        CAPTURE(a);
        CHECK(std::abs(shift - want) < 1e-10);
    }
}

TEST_CASE("residuals shrink") {
    const Params p(1.0, 0.0, 0.5, 0.0, 2);
    CHECK(std::abs(residual(p, 4096, coefficients(p))) < 0.05);

    const Params q(1.0, 0.0, 0.5, 1.0, 0);
    const std::vector<double> res = residuals(q, {256, 4096});
    CHECK(std::abs(res[1]) < std::abs(res[0]));

    const std::vector<long> ns = {256, 512, 1024, 2048, 4096, 8192};
    const Params s(1.0, 0.0, 0.5, 1.0, 1);
    const std::vector<double> rs = residuals(s, ns);
    for (std::size_t i = 1; i < rs.size(); ++i) CHECK(std::abs(rs[i]) < std::abs(rs[i - 1]));
    CHECK(convergence_slope(ns, rs) <= -0.3);
}

TEST_CASE("convergence slope") {
    const std::vector<long> ns = {100, 400, 1600};
    const std::vector<double> rs = {1.0, 0.5, 0.25};
    CHECK(convergence_slope(ns, rs) == doctest::Approx(-0.5).epsilon(1e-12));
    const std::vector<double> tiny = {1e-14, 0.0, 1e-15};
    CHECK(std::isnan(convergence_slope(ns, tiny)));
}

TEST_CASE("local profile is the rescaled G0") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xs(-4.0, 4.0);
    for (int a : {0, 1, 3}) {
        const double b = 1.2, r = 0.6, u = -0.7;
        const Params p(b, 0.0, r, u, a);
        for (int i = 0; i < 20; ++i) {
            const double x = xs(rng);
            const double want = std::pow(r, a - a * b) * std::pow(2.0 * b, -a) *
                                goracle::eval(-std::pow(r, b) * x / sqrt2, u, a, b).g0;
            CHECK(local_H0(x, p) == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("summands near the junction follow the local profile") {
    // ln_term(j) + (a/2) ln n - ln H0(sqrt(n)(lambda_j - 1)) is O(n^{-1/2})
    struct Case {
        double b, alpha, r, u;
        int a;
    };
    for (const Case c : {Case{1.0, 0.0, 0.5, 1.0, 1}, Case{0.7, 0.3, 0.6, -0.5, 3}, Case{2.0, 0.0, 0.5, 2.0, 2},
                         Case{1.0, 0.5, 0.7, 0.0, 0}}) {
        const Params p(c.b, c.alpha, c.r, c.u, c.a);
        double worst[2] = {0.0, 0.0};
        const long ns[2] = {65536, 1L << 20};
        for (int k = 0; k < 2; ++k) {
            const long n = ns[k];
            const double sn = std::sqrt(static_cast<double>(n));
            const double z = p.inner_mass() * n;
            for (double x = -3.0; x <= 3.0; x += 0.5) {
                const long j = std::lround(z / (1.0 + x / sn) - c.alpha);
                const double m = sn * (z / (j + c.alpha) - 1.0);
                const double lhs = exact::ln_term(p, n, j).value + 0.5 * c.a * std::log(static_cast<double>(n));
                worst[k] = std::max(worst[k], std::abs(lhs - std::log(local_H0(m, p))));
            }
        }
        CAPTURE(c.a);
        CHECK(worst[0] * std::sqrt(65536.0) < 10.0);
        CHECK(worst[1] * std::sqrt(static_cast<double>(1L << 20)) < 10.0);
        if (c.a > 0) CHECK(worst[1] < worst[0] / 2.0);
    }
}

TEST_CASE("nonpositive tolerance is rejected") {
    const Params p(1.0, 0.0, 0.5, 1.0, 1);
    CHECK_THROWS_AS(coeff_C1(p, 0.0), DomainError);
    CHECK_THROWS_AS(coeff_C2(p, -1.0), DomainError);
    CHECK_THROWS_AS(coeff_C3(p, 0.0), DomainError);
    CHECK_THROWS_AS(coeff_C2(p, 1e-9, 0), DomainError);
}
