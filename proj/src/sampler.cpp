#include "mlcp/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "mlcp/errors.hpp"
#include "mlcp/parallel.hpp"
#include "mlcp/summation.hpp"

namespace mlcp::sampler {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double uniform_open(std::mt19937_64& rng) {
    // (0, 1): 53 random bits, offset by half an ulp
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double marsaglia_tsang(double shape, std::mt19937_64& rng) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    std::normal_distribution<double> normal;
    for (;;) {
        const double x = normal(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        const double u = uniform_open(rng);
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

// ln of one weight; -inf when some R_j lands exactly on r with a > 0
double log_weight(const Params& p, long n, std::mt19937_64& rng) {
    const double inv_b = 1.0 / p.b();
    const double inv_2b = 0.5 * inv_b;
    const double nd = static_cast<double>(n);
    const double r = p.r();
    const int a = p.a();
    long inside = 0;
    double logs = 0.0;
    for (long j = 1; j <= n; ++j) {
        const double rad = std::pow(gamma_variate((j + p.alpha()) * inv_b, rng) / nd, inv_2b);
        if (rad < r) ++inside;
        if (a > 0) logs += std::log(std::abs(rad - r));
    }
    return p.u() * static_cast<double>(inside) + a * logs;
}

constexpr std::size_t k_block = 1024;

}  // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(splitmix64(seed) + index); }

double gamma_variate(double shape, std::mt19937_64& rng) {
    if (!(shape > 0.0)) throw DomainError("shape", "gamma shape must be positive");
    if (shape >= 1.0) return marsaglia_tsang(shape, rng);
    const double g = marsaglia_tsang(shape + 1.0, rng);
    return g * std::pow(uniform_open(rng), 1.0 / shape);
}

std::vector<double> sample_moduli(const Params& p, long n, std::uint64_t seed, std::uint64_t stream) {
    if (n < 1) throw DomainError("n", "n must be at least 1");
    std::mt19937_64 rng(substream_seed(seed, stream));
    std::vector<double> out(static_cast<std::size_t>(n));
    const double nd = static_cast<double>(n);
    for (long j = 1; j <= n; ++j)
        out[j - 1] = std::pow(gamma_variate((j + p.alpha()) / p.b(), rng) / nd, 0.5 / p.b());
    return out;
}

MCResult mc_ln_mgf(const Params& p, long n, long samples, std::uint64_t seed, unsigned threads) {
    if (n < 1) throw DomainError("n", "n must be at least 1");
    if (samples < 100) throw DomainError("samples", "at least 100 samples are required");

    const std::size_t count = static_cast<std::size_t>(samples);
    std::vector<double> lw(count);
    const std::size_t blocks = (count + k_block - 1) / k_block;
    parallel_blocks(blocks, threads, [&](std::size_t blk) {
        const std::size_t end = std::min(count, (blk + 1) * k_block);
        for (std::size_t i = blk * k_block; i < end; ++i) {
            std::mt19937_64 rng(substream_seed(seed, i));
            lw[i] = log_weight(p, n, rng);
        }
    });

    const double shift = *std::max_element(lw.begin(), lw.end());
    if (!std::isfinite(shift)) throw DegenerateEstimateError("every Monte Carlo sample carried zero weight");

    std::vector<double> w(count);
    for (std::size_t i = 0; i < count; ++i) w[i] = std::exp(lw[i] - shift);
    const double nd = static_cast<double>(count);
    const double mean = pairwise_sum(w) / nd;
    for (std::size_t i = 0; i < count; ++i) w[i] = (w[i] - mean) * (w[i] - mean);
    const double var = pairwise_sum(w) / (nd - 1.0);
    const double se = std::sqrt(var / nd);

    MCResult out;
    out.ln_estimate = shift + std::log(mean);
    out.estimate_E = std::exp(out.ln_estimate);
    out.ln_stderr = se / mean;
    out.stderr_E = out.estimate_E * out.ln_stderr;
    out.samples = samples;
    out.seed = seed;
    return out;
}

}  // namespace mlcp::sampler
