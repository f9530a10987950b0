#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

#include "mlcp/params.hpp"

namespace mlcp::combo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of Q[i].
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    Gaussian(int r) : re(r) {}                  // NOLINT(google-explicit-constructor)
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

/// i^k for any integer k.
Gaussian i_pow(int k);

inline bool is_zero(const Rational& c) { return c == 0; }
inline bool is_zero(const Gaussian& c) { return c.is_zero(); }

/// Univariate polynomial with exact coefficients; coeffs()[k] multiplies x^k.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
template <typename C>
class PolyT {
public:
    PolyT() = default;
    explicit PolyT(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static PolyT constant(C value) { return PolyT(std::vector<C>{std::move(value)}); }
    static PolyT monomial(C value, int degree) {
        std::vector<C> c(static_cast<std::size_t>(degree) + 1);
        c.back() = std::move(value);
        return PolyT(std::move(c));
    }
    static PolyT x() { return monomial(C(1), 1); }

    const std::vector<C>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    C coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : C(0); }

    PolyT derivative() const {
        std::vector<C> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * C(static_cast<int>(k)));
        return PolyT(std::move(d));
    }

    friend PolyT operator+(const PolyT& a, const PolyT& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
        return PolyT(std::move(r));
    }
    friend PolyT operator-(const PolyT& a) {
        std::vector<C> r = a.c_;
        for (auto& v : r) v = -v;
        return PolyT(std::move(r));
    }
    friend PolyT operator-(const PolyT& a, const PolyT& b) { return a + (-b); }
    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return PolyT(std::move(r));
    }
    friend PolyT operator*(const C& s, const PolyT& p) {
        std::vector<C> r = p.c_;
        for (auto& v : r) v = s * v;
        return PolyT(std::move(r));
    }
    PolyT& operator+=(const PolyT& o) { return *this = *this + o; }
    friend bool operator==(const PolyT& a, const PolyT& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && mlcp::combo::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<C> c_;
};

using Poly = PolyT<Rational>;
using GPoly = PolyT<Gaussian>;

GPoly to_gaussian(const Poly& p);

/// q(x) = p(i x) as a polynomial over Q[i].
GPoly substitute_ix(const Poly& p);

/// Real part of a Q[i] polynomial; throws std::logic_error if any imaginary
/// part is nonzero.
Poly real_part_checked(const GPoly& p);

/// Horner evaluation in double precision from the exact coefficients.
double evaluate(const Poly& p, double x);
std::vector<double> to_double(const Poly& p);

/// "3/4", "-2", ...
std::string to_string(const Rational& q);

/// Human-readable form in descending powers, e.g. "x^4+6x^2+3" or
/// "-5/3x^2+2/3". The zero polynomial prints as "0".
std::string to_string(const Poly& p);

BigInt factorial(int n);
BigInt binomial(int n, int k);
Rational pow(const Rational& base, int exponent);

/// Stirling number of the second kind S(ell, j).
BigInt stirling2(int ell, int j);

/// Generalized Bernoulli value B_ell^{(k)}(x), the ell! multiple of the t^ell
/// coefficient of (t/(e^t-1))^k e^{xt}. Requires 0 <= ell <= 32.
Rational gen_bernoulli(int ell, const Rational& k, const Rational& x);

/// Associated Hermite He_k^{(nu)}. nu = 0 accepts k >= -3 (with the negative
/// index conventions He_{-1}=0, He_{-2}=1, He_{-3}=-x/2); nu = 1 accepts k >= -1.
Poly assoc_hermite(int nu, int k);

Poly p0(int a);
Poly q0(int a);

enum class BracketCase { Generic, A0, A1, A2 };

struct BracketedQ {
    Poly value;
    BracketCase convention_case;
};

/// [a q_{0,a-1}(x)] with the a = 0 convention.
BracketedQ bracket_a_q0(int a);
/// [a(a-1)(a-2) q_{0,a-3}(x)] with the a = 0, 1, 2 conventions.
BracketedQ bracket_a3_q0(int a);

/// Polynomial affine in the parameter b: constant + b * linear.
struct AffineInB {
    Poly constant;
    Poly linear;

    Poly at(const Rational& b) const { return constant + b * linear; }
    /// Coefficients at a real b, for floating-point evaluation.
    std::vector<double> at(double b) const;
};

AffineInB p1_parts(int a);
AffineInB q1_parts(int a);
Poly p1(int a, const Rational& b);
Poly q1(int a, const Rational& b);

/// sum_k C(a,k) x^k k^ell (with 0^0 = 1).
Rational gfrak(int ell, int a, const Rational& x);
/// Stirling-number representation of gfrak, valid for ell >= 1.
Rational gfrak_stirling(int ell, int a, const Rational& x);

/// b^ell binom(k/2b, ell) B_ell^{(1+k/2b)}((2 alpha + k)/2b).
Rational pfrak(int ell, int k, const Rational& b, const Rational& alpha);
/// Closed form of pfrak(2, k, b, alpha).
Rational pfrak4_closed_form(int k, const Rational& b, const Rational& alpha);

/// gamma_ell(x) as the k-sum on each side of x = b r^{2b}.
double gamma_ell(int ell, double x, const Params& params);
/// The same function through the Stirling-number closed form.
double gamma_ell_stirling(int ell, double x, const Params& params);

}  // namespace mlcp::combo
