#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mlcp/params.hpp"

namespace mlcp::sampler {

struct MCResult {
    double estimate_E = 0.0;
    double stderr_E = 0.0;
    double ln_estimate = 0.0;
    double ln_stderr = 0.0;  // stderr_E / estimate_E
    long samples = 0;
    std::uint64_t seed = 0;
};

/// Seed of the generator for substream `index` under a run seed.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Gamma(shape, 1). Marsaglia-Tsang squeeze for shape >= 1; below that
/// G_s = G_{s+1} U^{1/s}.
double gamma_variate(double shape, std::mt19937_64& rng);

/// The n moduli R_j = (G_j/n)^{1/(2b)}, G_j ~ Gamma((j + alpha)/b), j = 1..n,
/// drawn from substream `stream` (sample i of mc_ln_mgf uses stream i).
std::vector<double> sample_moduli(const Params& params, long n, std::uint64_t seed, std::uint64_t stream = 0);

/// Mean of e^{u #{R_j < r}} prod |R_j - r|^a over `samples` independent draws.
/// Weights are kept as logs and shifted by their maximum before
/// exponentiating. The result does not depend on `threads` (0 = default).
MCResult mc_ln_mgf(const Params& params, long n, long samples, std::uint64_t seed, unsigned threads = 0);

}  // namespace mlcp::sampler
