// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "mlcp/asymp.hpp"
#include "mlcp/errors.hpp"
#include "mlcp/exact_mgf.hpp"
#include "mlcp/identities.hpp"
#include "mlcp/sampler.hpp"
#include "mlcp/specfun.hpp"
#include "mpfr_oracle.hpp"

using namespace mlcp;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... xs) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, xs...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict null_case() {
    const auto t0 = std::chrono::steady_clock::now();
    const Params configs[] = {Params(1.0, 0.0, 0.5, 0.0, 0), Params(0.6, -0.4, 0.8, 0.0, 0), Params(2.5, 1.7, 0.3, 0.0, 0)};
    double worst_mgf = 0.0, worst_c = 0.0;
    for (const Params& p : configs) {
        for (long n : {1L, 10L, 100L, 1000L}) worst_mgf = std::max(worst_mgf, std::abs(exact::ln_mgf_exact(p, n).ln_mgf));
        const asymp::AsymptoticCoeffs c = asymp::coefficients(p);
        worst_c = std::max({worst_c, std::abs(c.C1), std::abs(c.C2), std::abs(c.C3)});
    }
    const double secs = seconds_since(t0);
    return {worst_mgf <= 1e-12 && worst_c <= 1e-10 && secs < 1.0,
            fmt("max|ln E_n| = %.1e, max|C_i| = %.1e, %.3f s", worst_mgf, worst_c, secs)};
}

Verdict monte_carlo() {
    const Params p(1.0, 0.0, 0.6, 0.5, 2);
    const auto t0 = std::chrono::steady_clock::now();
    const sampler::MCResult mc = sampler::mc_ln_mgf(p, 30, 1000000, 1, 1);
    const double secs = seconds_since(t0);
    const double exact = exact::ln_mgf_exact(p, 30).ln_mgf;
    const double z = (mc.ln_estimate - exact) / mc.ln_stderr;
    return {std::abs(z) <= 4.0 && secs < 120.0,
            fmt("MC %.6f +- %.4f vs exact %.6f (%.2f sigma), seed 1, %.1f s on one thread", mc.ln_estimate, mc.ln_stderr,
                exact, z, secs)};
}

Verdict brute_force() {
    const brute::Config configs[] = {
        {0.5, 0.0, 0.5, 1.0, 0}, {1.0, 0.0, 0.5, 1.0, 1},  {2.0, 0.3, 0.6, -0.5, 2},
        {1.0, -0.4, 0.7, 0.8, 3}, {0.5, 1.0, 0.9, 2.0, 2}, {2.0, 0.0, 0.4, -1.0, 1},
    };
    double worst = 0.0;
    for (const auto& c : configs) {
        const Params p(c.b, c.alpha, c.r, c.u, c.a);
        worst = std::max(worst, std::abs(exact::ln_mgf_exact(p, 1).ln_mgf - brute::ln_mgf_n1(c)));
        worst = std::max(worst, std::abs(exact::ln_mgf_exact(p, 2).ln_mgf - brute::ln_mgf_n2(c)));
    }
    return {worst <= 1e-8, fmt("6 configurations, n = 1 and 2, worst deviation %.1e", worst)};
}

struct Convergence {
    std::vector<double> residuals;
    double slope;
    bool decreasing;
};

Convergence convergence(const Params& p) {
    const std::vector<long> ns = {256, 512, 1024, 2048, 4096, 8192};
    const asymp::AsymptoticCoeffs c = asymp::coefficients(p);
    Convergence out;
    for (long n : ns) out.residuals.push_back(asymp::residual(p, n, c));
    out.decreasing = true;
    for (std::size_t i = 1; i < ns.size(); ++i)
        out.decreasing = out.decreasing && std::abs(out.residuals[i]) < std::abs(out.residuals[i - 1]);
    out.slope = asymp::convergence_slope(ns, out.residuals);
    return out;
}

Verdict asymptotic_convergence() {
    const auto t0 = std::chrono::steady_clock::now();
    const Convergence c = convergence(Params(1.0, 0.0, 0.5, 1.0, 1));
    const double secs = seconds_since(t0);
    return {c.decreasing && c.slope <= -0.3 && secs < 60.0,
            fmt("|res| %.2e -> %.2e over n = 256..8192, slope %.3f, %.2f s", std::abs(c.residuals.front()),
                std::abs(c.residuals.back()), c.slope, secs)};
}

Verdict disk_counting() {
    double worst = 0.0;
    const Params ps[] = {Params(1.0, 0.0, 0.5, 1.0, 0), Params(0.7, 0.4, 0.8, -2.0, 0), Params(2.0, -0.3, 0.6, 0.3, 0)};
    for (const Params& p : ps) worst = std::max(worst, std::abs(asymp::coeff_C1(p).value - p.u() * p.inner_mass()));
    const Convergence c = convergence(Params(1.0, 0.0, 0.5, 1.0, 0));
    return {worst <= 1e-10 && c.decreasing && c.slope <= -0.4,
            fmt("C1 deviation %.1e; |res| %.2e -> %.2e, slope %.3f", worst, std::abs(c.residuals.front()),
                std::abs(c.residuals.back()), c.slope)};
}

Verdict exact_identities() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto checks = identities::exact_suite(10);
    const double secs = seconds_since(t0);
    bool ok = secs < 10.0;
    std::string failed;
    for (const auto& c : checks) {
        if (!c.passed || c.worst_deviation != 0.0) {
            ok = false;
            failed += " [" + c.name + ": " + c.detail + "]";
        }
    }
    return {ok, fmt("%zu suites, indices <= 10, %.2f s", checks.size(), secs) + failed};
}

Verdict orthogonality() {
    const auto c = identities::orthogonality_check(6);
    return {c.passed, fmt("nu in {0,1}, k,l <= 6, worst scaled deviation %.1e", c.worst_deviation)};
}

Verdict temme_accuracy() {
    double worst = 0.0;
    int points = 0;
    for (double a : {1e3, 1e4, 1e5}) {
        for (double lambda : {0.9, 0.99, 1.0, 1.01, 1.1}) {
            const double want = oracle::lower_gamma_p(a, a * lambda);
            if (!(want >= 1e-250)) continue;
            const double got = specfun::route::temme_uniform(a, a * lambda).p;
            worst = std::max(worst, std::abs(got - want) / want);
            ++points;
        }
    }
    return {worst <= 1e-10, fmt("%d points with P >= 1e-250, worst relative error %.1e", points, worst)};
}

Verdict partition_identities() {
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_split = 0.0;
    int done = 0;
    while (done < 10) {
        const double b = 0.5 + 1.5 * unit(rng);
        const double alpha = -0.5 + 1.5 * unit(rng);
        const double edge = std::pow(b, -1.0 / (2.0 * b));
        const Params p(b, alpha, (0.2 + 0.7 * unit(rng)) * edge, -2.0 + 4.0 * unit(rng), static_cast<int>(unit(rng) * 5));
        const long n = 50 + static_cast<long>(unit(rng) * 1950);
        const double eps = 0.02 + 0.28 * unit(rng);
        const long m_prime = 1 + static_cast<long>(unit(rng) * 10);
        exact::SplitInfo s;
        try {
            s = exact::split_sums(p, n, eps, m_prime);
        } catch (const DomainError&) {
            continue;
        } catch (const RangeError&) {
            continue;
        }
        worst_split = std::max(worst_split, std::abs(s.S0 + s.S1 + s.S2 + s.S3 - exact::ln_mgf_exact(p, n).ln_mgf));
        ++done;
    }
    const Params pz[] = {Params(1.0, 0.0, 0.5, 0.7, 1), Params(1.0, 0.0, 0.6, 0.5, 2), Params(0.7, 0.3, 0.6, -0.8, 3),
                         Params(2.0, -0.5, 0.5, 1.5, 0), Params(0.5, 1.2, 0.9, 0.2, 4)};
    const long nz[] = {50, 300, 200, 400, 150};
    double worst_z = 0.0;
    for (int i = 0; i < 5; ++i) {
        const exact::PartitionLogs z = exact::ln_partition(pz[i], nz[i]);
        worst_z = std::max(worst_z, std::abs(z.ln_D - z.ln_Z - exact::ln_mgf_exact(pz[i], nz[i]).ln_mgf));
    }
    return {worst_split <= 1e-10 && worst_z <= 1e-9,
            fmt("split: 10 random configurations, worst %.1e; ln D - ln Z: 5 configurations, worst %.1e", worst_split,
                worst_z)};
}

Verdict g0_positivity() {
    long points = 0;
    double lowest = INFINITY;
    bool ok = true;
    for (double u : {-10.0, -1.0, 0.0, 1.0, 10.0}) {
        for (int a = 0; a <= 6; ++a) {
            const auto s = asymp::positivity_scan(Params(1.0, 0.0, 0.5, u, a), -12.0, 12.0, 1e-3);
            ok = ok && s.all_positive;
            lowest = std::min(lowest, s.min_g0);
            points += s.points;
        }
    }
    return {ok, fmt("%ld grid points, smallest G0 %.3e", points, lowest)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"null case", null_case},
        {"exact vs Monte Carlo", monte_carlo},
        {"exact vs brute force at n = 1, 2", brute_force},
        {"asymptotic convergence", asymptotic_convergence},
        {"a = 0 specialization", disk_counting},
        {"exact identity suite", exact_identities},
        {"orthogonality quadrature", orthogonality},
        {"incomplete gamma accuracy", temme_accuracy},
        {"partition identities", partition_identities},
        {"G0 positivity", g0_positivity},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        if (!v.pass) ++failures;
        std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
