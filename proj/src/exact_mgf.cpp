#include "mlcp/exact_mgf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>

#include "mlcp/errors.hpp"
#include "mlcp/parallel.hpp"
#include "mlcp/quadrature.hpp"
#include "mlcp/specfun.hpp"
#include "mlcp/summation.hpp"

namespace mlcp::exact {

namespace {

constexpr long k_block = 2048;

void check_n(long n) {
    if (n < 1) throw DomainError("n", "n must be at least 1");
    if (n > k_max_n) throw DomainError("n", "n above 2^20 is outside the certified range");
}

double binom(int a, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (a - k + i) / i;
    return std::round(r);
}

// Per-evaluation constants shared by every j.
struct Setup {
    int a;
    double b;
    double alpha;
    double r;
    double log_n;
    double z;       // n r^{2b}
    double s_eu;    // (-1)^a e^u
    double c;       // (-1)^a e^u - 1
    std::vector<double> coef;  // C(a,k) (-r)^{a-k}

    Setup(const Params& p, long n)
        : a(p.a()), b(p.b()), alpha(p.alpha()), r(p.r()), log_n(std::log(static_cast<double>(n))) {
        z = static_cast<double>(n) * std::pow(r, 2.0 * b);
        s_eu = p.sign_a() * std::exp(p.u());
        c = s_eu - 1.0;
        coef.resize(a + 1);
        for (int k = 0; k <= a; ++k) {
            const double sign = ((a - k) % 2 == 0) ? 1.0 : -1.0;
            coef[k] = sign * binom(a, k) * std::pow(r, a - k);
        }
    }

    double a0(long j) const { return (static_cast<double>(j) + alpha) / b; }
    double a_tilde(long j, int k) const { return (2.0 * static_cast<double>(j) + 2.0 * alpha + k) / (2.0 * b); }
};

// bracket 1 + c P, written as (1 + c) - c Q when P is the larger half
double bracket(const Setup& s, const specfun::GammaPQ& pq) {
    if (pq.p <= 0.5) return 1.0 + s.c * pq.p;
    return s.s_eu - s.c * pq.q;
}

DoubleDouble bracket_dd(const Setup& s, const specfun::GammaPQ& pq) {
    const DoubleDouble c = DoubleDouble(s.s_eu) + DoubleDouble(-1.0);
    if (pq.p <= 0.5) return DoubleDouble(1.0) + c * DoubleDouble(pq.p);
    return DoubleDouble(s.s_eu) + -(c * DoubleDouble(pq.q));
}

// ln of the Gamma(a0) density at t. For large a0 the direct form loses
// about log10(a0) digits to cancellation, so it is rebuilt around lambda = t/a0.
double ln_gamma_density(double a0, double lg, double t) {
    const double h = (t - a0) / a0;
    if (a0 < 10.0 || h < -0.5) return (a0 - 1.0) * std::log(t) - t - lg;
    return -a0 * specfun::lambda_minus_one_minus_log(h) - std::log1p(h) - 0.5 * std::log(2.0 * std::numbers::pi * a0) -
           specfun::binet(a0);
}

double ln_term_quadrature_impl(const Setup& s, long n, long j, double u) {
    const double a0 = s.a0(j);
    const double lg = specfun::ln_gamma(a0);
    const double inv2b = 1.0 / (2.0 * s.b);
    const double nd = static_cast<double>(n);
    const double eu = std::exp(u);
    auto f = [&](double t) {
        if (!(t > 0.0)) return 0.0;
        const double v = std::pow(t / nd, inv2b);
        const double w = std::pow(std::abs(v - s.r), s.a);
        return std::exp(ln_gamma_density(a0, lg, t)) * w * (t < s.z ? eu : 1.0);
    };
    const double spread = 40.0 * std::sqrt(a0) + 60.0;
    const double lo = std::max(0.0, a0 - spread);
    const double hi = a0 + spread;
    std::vector<double> cuts = {lo};
    if (s.z > lo && s.z < hi) cuts.push_back(s.z);
    cuts.push_back(hi);

    auto integrate = [&](double abs_tol, double rel_tol) {
        quad::QuadResult total;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (i == 0 && lo == 0.0 && a0 < 1.0 && abs_tol > 0.0)
                total += quad::graded(f, cuts[i], cuts[i + 1], quad::Singular::Left, abs_tol);
            else
                total += quad::adaptive(f, cuts[i], cuts[i + 1], abs_tol, rel_tol, 2000);
        }
        return total;
    };
    const quad::QuadResult rough = integrate(0.0, 1e-6);
    const quad::QuadResult fine = integrate(1e-13 * std::abs(rough.value), 1e-13);
    if (!(fine.value > 0.0))
        throw CancellationError(j, "summand " + std::to_string(j) + " is not positive even by quadrature");
    return std::log(fine.value);
}

// Per-term relative accuracy demanded of the k-sum before the quadrature
// representation takes over.
constexpr double k_term_rel_tol = 1e-10;

Term ln_term_impl(const Setup& s, long n, long j, double u) {
    const double a0 = s.a0(j);
    std::vector<double> base(s.a + 1);
    std::vector<specfun::GammaPQ> pq(s.a + 1);
    CompensatedSum sum;
    double mass = 0.0;
    for (int k = 0; k <= s.a; ++k) {
        const double lr = specfun::ln_gamma_ratio(a0, k / (2.0 * s.b)) - (k / (2.0 * s.b)) * s.log_n;
        base[k] = s.coef[k] * std::exp(lr);
        pq[k] = specfun::reg_gamma(s.a_tilde(j, k), s.z);
        const double term = base[k] * bracket(s, pq[k]);
        sum += term;
        mass += std::abs(term);
    }
    // Every term carries a few ulps from exp, the gamma ratio and the
    // bracket. Those errors survive any summation, so the k-sum is only
    // as good as eps * sum|term| relative to its value.
    const double eps = std::numeric_limits<double>::epsilon();
    const double v = sum.value();
    if (v > 0.0 && 32.0 * eps * mass <= k_term_rel_tol * v) return {std::log(v), TermRoute::Double};

    DoubleDouble dd;
    for (int k = 0; k <= s.a; ++k) dd += DoubleDouble(base[k]) * bracket_dd(s, pq[k]);
    const double w = dd.value();
    if (w > 0.0 && 16.0 * eps * mass <= k_term_rel_tol * w) return {std::log(w), TermRoute::DoubleDouble};

    return {ln_term_quadrature_impl(s, n, j, u), TermRoute::Quadrature};
}

std::vector<double> all_terms(const Params& params, long n, unsigned threads) {
    const Setup s(params, n);
    std::vector<double> terms(static_cast<std::size_t>(n));
    const auto blocks = static_cast<std::size_t>((n + k_block - 1) / k_block);
    parallel_blocks(blocks, threads, [&](std::size_t blk) {
        const long first = static_cast<long>(blk) * k_block + 1;
        const long last = std::min(n, first + k_block - 1);
        for (long j = first; j <= last; ++j) terms[j - 1] = ln_term_impl(s, n, j, params.u()).value;
    });
    return terms;
}

double range_sum(const std::vector<double>& terms, long first, long last) {
    if (last < first) return 0.0;
    return pairwise_sum(std::span<const double>(terms).subspan(first - 1, last - first + 1));
}

}  // namespace

Term ln_term(const Params& params, long n, long j) {
    check_n(n);
    if (j < 1 || j > n) throw DomainError("j", "j must lie in 1..n");
    return ln_term_impl(Setup(params, n), n, j, params.u());
}

double ln_term_quadrature(const Params& params, long n, long j) {
    check_n(n);
    if (j < 1 || j > n) throw DomainError("j", "j must lie in 1..n");
    return ln_term_quadrature_impl(Setup(params, n), n, j, params.u());
}

ExactResult ln_mgf_exact(const Params& params, long n, const ExactOptions& options) {
    check_n(n);
    std::vector<double> terms = all_terms(params, n, options.threads);
    ExactResult result;
    result.ln_mgf = pairwise_sum(terms);
    if (options.keep_per_term) result.per_term = std::move(terms);
    return result;
}

double default_M(long n) {
    if (n < 2) throw DomainError("n", "the default M needs n >= 2");
    const double ln = std::log(static_cast<double>(n));
    return std::pow(static_cast<double>(n), 0.125) * std::pow(ln, -0.125);
}

SplitInfo split_sums(const Params& params, long n, double eps, long m_prime, std::optional<double> M,
                     unsigned threads) {
    check_n(n);
    const double mass = params.inner_mass();
    if (!(eps > 0.0 && eps < 1.0) || !(mass / (1.0 - eps) < 1.0 / (1.0 + eps)))
        throw DomainError("eps", "eps must satisfy b r^(2b)/(1-eps) < 1/(1+eps)");
    if (m_prime < 1) throw DomainError("m_prime", "m_prime must be positive");

    SplitInfo info;
    info.eps = eps;
    info.M_prime = m_prime;
    const double center = mass * static_cast<double>(n);
    const double xm = center / (1.0 + eps) - params.alpha();
    const double xp = center / (1.0 - eps) - params.alpha();
    info.j_minus = static_cast<long>(std::ceil(xm));
    info.j_plus = static_cast<long>(std::floor(xp));
    info.theta_minus_eps = std::ceil(xm) - xm;
    info.theta_plus_eps = xp - std::floor(xp);
    if (m_prime >= info.j_minus)
        throw DomainError("m_prime", "m_prime must be below j_minus = " + std::to_string(info.j_minus));
    if (info.j_minus > info.j_plus)
        throw RangeError("the middle range [j_minus, j_plus] is empty for this n and eps");

    info.M = M.has_value() ? *M : default_M(n);
    const double step = info.M / std::sqrt(static_cast<double>(n));
    if (!(info.M > 0.0) || !(step < 1.0)) throw DomainError("M", "M must satisfy 0 < M < sqrt(n)");
    const double gm = center / (1.0 + step) - params.alpha();
    const double gp = center / (1.0 - step) - params.alpha();
    info.g_minus = static_cast<long>(std::ceil(gm));
    info.g_plus = static_cast<long>(std::floor(gp));
    info.theta_minus_M = std::ceil(gm) - gm;
    info.theta_plus_M = gp - std::floor(gp);

    const std::vector<double> terms = all_terms(params, n, threads);
    info.S0 = range_sum(terms, 1, m_prime);
    info.S1 = range_sum(terms, m_prime + 1, info.j_minus - 1);
    info.S2 = range_sum(terms, info.j_minus, info.j_plus);
    info.S3 = range_sum(terms, info.j_plus + 1, n);
    return info;
}

PartitionLogs ln_partition(const Params& params, long n) {
    check_n(n);
    const Setup s(params, n);
    const double nd = static_cast<double>(n);
    const double pre = -(nd * nd / (2.0 * s.b)) * s.log_n - ((1.0 + 2.0 * s.alpha) / (2.0 * s.b)) * nd * s.log_n +
                       nd * std::log(std::numbers::pi / s.b);
    std::vector<double> lz(static_cast<std::size_t>(n));
    std::vector<double> ld(static_cast<std::size_t>(n));
    std::vector<double> logs(s.a + 1);
    std::vector<double> signs(s.a + 1);
    for (long j = 1; j <= n; ++j) {
        lz[j - 1] = specfun::ln_gamma(s.a0(j));
        // signed log-sum-exp of C(a,k)(-r)^{a-k} n^{-k/2b} Gamma(a_k)/Gamma(a0) [1 + c P(a_k, z)]
        double top = -std::numeric_limits<double>::infinity();
        for (int k = 0; k <= s.a; ++k) {
            const double at = s.a_tilde(j, k);
            const double br = bracket(s, specfun::reg_gamma(at, s.z));
            signs[k] = (s.coef[k] < 0.0) != (br < 0.0) ? -1.0 : 1.0;
            logs[k] = (br == 0.0) ? -std::numeric_limits<double>::infinity()
                                  : std::log(std::abs(s.coef[k])) - (k / (2.0 * s.b)) * s.log_n +
                                        specfun::ln_gamma_ratio(s.a0(j), at - s.a0(j)) + std::log(std::abs(br));
            top = std::max(top, logs[k]);
        }
        CompensatedSum acc;
        for (int k = 0; k <= s.a; ++k)
            if (std::isfinite(logs[k])) acc += signs[k] * std::exp(logs[k] - top);
        const double v = acc.value();
        // relative to Gamma(a0) so that the separately rounded ln Gamma values do not enter the cancellation
        ld[j - 1] = lz[j - 1] + ((v > 1e-3) ? top + std::log(v) : ln_term_impl(s, n, j, params.u()).value);
    }
    return {pre + pairwise_sum(lz), pre + pairwise_sum(ld)};
}

}  // namespace mlcp::exact
