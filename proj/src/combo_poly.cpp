#include "mlcp/combo_poly.hpp"

#include <cmath>
#include <stdexcept>

#include "mlcp/errors.hpp"

namespace mlcp::combo {

namespace {

constexpr int k_bernoulli_order_cap = 32;

Poly scaled(const Poly& p, const Rational& s) { return s * p; }

}  // namespace

Gaussian i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {Rational(1), Rational(0)};
        case 1: return {Rational(0), Rational(1)};
        case 2: return {Rational(-1), Rational(0)};
        default: return {Rational(0), Rational(-1)};
    }
}

GPoly to_gaussian(const Poly& p) {
    std::vector<Gaussian> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return GPoly(std::move(c));
}

GPoly substitute_ix(const Poly& p) {
    std::vector<Gaussian> c;
    c.reserve(p.coeffs().size());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) c.push_back(i_pow(static_cast<int>(k)) * Gaussian(p.coeffs()[k]));
    return GPoly(std::move(c));
}

Poly real_part_checked(const GPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        if (v.im != 0) throw std::logic_error("polynomial over Q[i] has a nonzero imaginary part");
        c.push_back(v.re);
    }
    return Poly(std::move(c));
}

double evaluate(const Poly& p, double x) {
    double acc = 0.0;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + static_cast<double>(c[k]);
    return acc;
}

std::vector<double> to_double(const Poly& p) {
    std::vector<double> out;
    out.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) out.push_back(static_cast<double>(v));
    return out;
}

std::string to_string(const Rational& q) {
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (negative)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (k == 0 || mag != 1) out += to_string(mag);
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

BigInt factorial(int n) {
    if (n < 0) throw DomainError("n", "factorial of a negative integer");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw DomainError("x", "zero to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational r = 1;
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

BigInt stirling2(int ell, int j) {
    if (ell < 0 || j < 0) return 0;
    // row-by-row S(n, k) = k S(n-1, k) + S(n-1, k-1)
    std::vector<BigInt> row(static_cast<std::size_t>(j) + 1, 0);
    row[0] = 1;
    for (int n = 1; n <= ell; ++n) {
        for (int k = std::min(n, j); k >= 1; --k) row[k] = BigInt(k) * row[k] + row[k - 1];
        row[0] = 0;
    }
    return row[j];
}

Rational gen_bernoulli(int ell, const Rational& k, const Rational& x) {
    if (ell < 0 || ell > k_bernoulli_order_cap)
        throw DomainError("ell", "gen_bernoulli supports 0 <= ell <= 32");
    const auto n = static_cast<std::size_t>(ell) + 1;
    // f(t) = (e^t - 1)/t = sum t^m/(m+1)!
    std::vector<Rational> f(n);
    for (std::size_t m = 0; m < n; ++m) f[m] = Rational(1) / Rational(factorial(static_cast<int>(m) + 1));
    // g = f^{-k} by the power recurrence for series with unit constant term
    const Rational p = -k;
    std::vector<Rational> g(n);
    g[0] = 1;
    for (std::size_t m = 1; m < n; ++m) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= m; ++i)
            acc += (p * Rational(static_cast<int>(i)) - Rational(static_cast<int>(m - i))) * f[i] * g[m - i];
        g[m] = acc / Rational(static_cast<int>(m));
    }
    // coefficient of t^ell in g(t) e^{xt}
    Rational h = 0;
    for (int i = 0; i <= ell; ++i) h += g[i] * pow(x, ell - i) / Rational(factorial(ell - i));
    return h * Rational(factorial(ell));
}

Poly assoc_hermite(int nu, int k) {
    if (nu == 0) {
        if (k == -1) return {};
        if (k == -2) return Poly::constant(1);
        if (k == -3) return Poly::monomial(Rational(-1, 2), 1);
    } else if (nu == 1) {
        if (k == -1) return {};
    } else {
        throw DomainError("nu", "only nu = 0 and nu = 1 are supported");
    }
    if (k < 0) throw DomainError("k", "unsupported negative index for this nu");
    Poly prev;                      // He_{-1}
    Poly cur = Poly::constant(1);  // He_0
    for (int m = 0; m < k; ++m) {
        Poly next = Poly::x() * cur - Rational(m + nu) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly p0(int a) {
    if (a < 0) throw DomainError("a", "p0 requires a >= 0");
    return real_part_checked(i_pow(-a) * substitute_ix(assoc_hermite(0, a)));
}

Poly q0(int a) {
    if (a < 0) throw DomainError("a", "q0 requires a >= 0");
    return real_part_checked(i_pow(-(a - 1)) * substitute_ix(assoc_hermite(1, a - 1)));
}

BracketedQ bracket_a_q0(int a) {
    if (a < 0) throw DomainError("a", "bracket requires a >= 0");
    if (a == 0) return {Poly::constant(1), BracketCase::A0};
    return {Rational(a) * q0(a - 1), BracketCase::Generic};
}

BracketedQ bracket_a3_q0(int a) {
    switch (a) {
        case 0: return {Poly(std::vector<Rational>{-1, 0, 1}), BracketCase::A0};
        case 1: return {Poly::monomial(Rational(-1), 1), BracketCase::A1};
        case 2: return {Poly::constant(2), BracketCase::A2};
        default:
            if (a < 0) throw DomainError("a", "bracket requires a >= 0");
            return {Rational(a * (a - 1) * (a - 2)) * q0(a - 3), BracketCase::Generic};
    }
}

std::vector<double> AffineInB::at(double b) const {
    const std::vector<double> c0 = to_double(constant);
    const std::vector<double> c1 = to_double(linear);
    std::vector<double> out(std::max(c0.size(), c1.size()), 0.0);
    for (std::size_t k = 0; k < c0.size(); ++k) out[k] += c0[k];
    for (std::size_t k = 0; k < c1.size(); ++k) out[k] += b * c1[k];
    return out;
}

AffineInB p1_parts(int a) {
    if (a < 0) throw DomainError("a", "p1 requires a >= 0");
    AffineInB out;
    out.constant = scaled(p0(a + 1), Rational(-a, 2));
    // -a ( p0(a+1) - (3a-1) p0(a-1) + 5/3 (a-1)(a-2) p0(a-3) ); vanishing
    // coefficients skip the out-of-range indices
    Poly inner = p0(a + 1);
    if (a >= 1) inner = inner - scaled(p0(a - 1), Rational(3 * a - 1));
    if (a >= 3) inner = inner + scaled(p0(a - 3), Rational(5 * (a - 1) * (a - 2), 3));
    out.linear = scaled(inner, Rational(-a));
    return out;
}

AffineInB q1_parts(int a) {
    if (a < 0) throw DomainError("a", "q1 requires a >= 0");
    AffineInB out;
    out.constant = scaled(q0(a + 1), Rational(-a, 2));
    Poly inner = scaled(q0(a + 1), Rational(a)) - scaled(bracket_a_q0(a).value, Rational(3 * a - 1)) +
                 scaled(bracket_a3_q0(a).value, Rational(5, 3));
    out.linear = -inner;
    return out;
}

Poly p1(int a, const Rational& b) { return p1_parts(a).at(b); }
Poly q1(int a, const Rational& b) { return q1_parts(a).at(b); }

Rational gfrak(int ell, int a, const Rational& x) {
    if (ell < 0 || a < 0) throw DomainError("ell", "gfrak requires ell, a >= 0");
    Rational sum = 0;
    for (int k = 0; k <= a; ++k) {
        const Rational kpow = (k == 0 && ell == 0) ? Rational(1) : pow(Rational(k), ell);
        sum += Rational(binomial(a, k)) * pow(x, k) * kpow;
    }
    return sum;
}

Rational gfrak_stirling(int ell, int a, const Rational& x) {
    if (ell < 1) throw DomainError("ell", "the Stirling representation needs ell >= 1");
    if (a < 0) throw DomainError("a", "gfrak requires a >= 0");
    const int m = std::min(ell, a);
    Rational sum = 0;
    for (int j = 1; j <= m; ++j)
        sum += Rational(stirling2(ell, j)) * Rational(factorial(a) / factorial(a - j)) * pow(x, j - 1) *
               pow(x + 1, m - j);
    return x * pow(x + 1, a - m) * sum;
}

Rational pfrak(int ell, int k, const Rational& b, const Rational& alpha) {
    if (ell < 0 || k < 0) throw DomainError("ell", "pfrak requires ell, k >= 0");
    if (b <= 0) throw DomainError("b", "pfrak requires b > 0");
    const Rational s = Rational(k) / (2 * b);
    Rational binom = 1;
    for (int i = 0; i < ell; ++i) binom *= (s - i);
    binom /= Rational(factorial(ell));
    return pow(b, ell) * binom * gen_bernoulli(ell, 1 + s, (2 * alpha + k) / (2 * b));
}

Rational pfrak4_closed_form(int k, const Rational& b, const Rational& alpha) {
    const Rational kk(k);
    const Rational t = kk + 4 * alpha;
    return kk * (kk - 2 * b) * (8 * b * b + 3 * t * t - 2 * b * (7 * kk + 24 * alpha)) / (384 * b * b);
}

namespace {

void check_gamma_ell_args(int ell, double x, const Params& params) {
    if (ell < 0) throw DomainError("ell", "gamma_ell requires ell >= 0");
    if (!(x > 0.0)) throw DomainError("x", "gamma_ell requires x > 0");
    (void)params;
}

// value at the junction x = b r^{2b}, where the two branches agree only when
// they both vanish
double gamma_ell_at_junction(int ell, int a) {
    if (a == 0) return ell == 0 ? 1.0 : 0.0;
    if (ell < a) return 0.0;
    throw DomainError("x", "gamma_ell is singular at x = b r^(2b) for ell >= a");
}

}  // namespace

double gamma_ell(int ell, double x, const Params& params) {
    check_gamma_ell_args(ell, x, params);
    const int a = params.a();
    const double b = params.b();
    const double r = params.r();
    const double mass = params.inner_mass();
    if (x == mass) return gamma_ell_at_junction(ell, a);
    const double s = std::pow(x / b, 1.0 / (2.0 * b));
    double sum = 0.0;
    for (int k = 0; k <= a; ++k) {
        const double kpow = (k == 0 && ell == 0) ? 1.0 : std::pow(static_cast<double>(k), ell);
        const double c = static_cast<double>(binomial(a, k));
        const double sign = (x > mass) ? (((a - k) % 2 == 0) ? 1.0 : -1.0) : ((k % 2 == 0) ? 1.0 : -1.0);
        sum += c * sign * std::pow(r, a - k) * std::pow(s, k) * kpow;
    }
    return sum;
}

double gamma_ell_stirling(int ell, double x, const Params& params) {
    check_gamma_ell_args(ell, x, params);
    const int a = params.a();
    const double b = params.b();
    const double r = params.r();
    if (x == params.inner_mass()) return gamma_ell_at_junction(ell, a);
    const double s = std::pow(x / b, 1.0 / (2.0 * b));
    const double dist = std::pow(std::abs(r - s), a);
    if (ell == 0) return dist;
    double sum = 0.0;
    for (int j = 1; j <= std::min(ell, a); ++j) {
        const double coeff = static_cast<double>(factorial(a) / factorial(a - j)) * static_cast<double>(stirling2(ell, j));
        sum += coeff * std::pow(s, j - 1) * std::pow(s - r, -j);
    }
    return s * dist * sum;
}

}  // namespace mlcp::combo
