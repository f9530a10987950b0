#pragma once

#include <optional>
#include <vector>

#include "mlcp/params.hpp"

namespace mlcp::exact {

/// Largest n accepted by the exact evaluator.
inline constexpr long k_max_n = 1L << 20;

/// Bookkeeping of the four-way split of the j-sum.
struct SplitInfo {
    double S0 = 0.0;
    double S1 = 0.0;
    double S2 = 0.0;
    double S3 = 0.0;
    double eps = 0.0;
    long M_prime = 0;
    double M = 0.0;
    long j_minus = 0;
    long j_plus = 0;
    long g_minus = 0;
    long g_plus = 0;
    double theta_minus_eps = 0.0;
    double theta_plus_eps = 0.0;
    double theta_minus_M = 0.0;
    double theta_plus_M = 0.0;
};

struct ExactResult {
    double ln_mgf = 0.0;
    std::optional<std::vector<double>> per_term;  // entry j-1 holds the j-th summand
    std::optional<SplitInfo> split;
};

struct ExactOptions {
    bool keep_per_term = false;
    unsigned threads = 0;  // 0: default worker count
};

/// How the j-th summand was obtained.
enum class TermRoute { Double, DoubleDouble, Quadrature };

struct Term {
    double value;
    TermRoute route;
};

/// The j-th summand ln( sum_k ... ) of the exact formula, 1 <= j <= n.
Term ln_term(const Params& params, long n, long j);

/// The same summand from the positive-integrand representation
/// (1/Gamma(a0)) int t^{a0-1} e^{-t} |(t/n)^{1/2b} - r|^a e^{u 1[t < n r^{2b}]} dt.
/// Used as the last resort when the k-sum cancels; exposed for testing.
double ln_term_quadrature(const Params& params, long n, long j);

ExactResult ln_mgf_exact(const Params& params, long n, const ExactOptions& options = {});

/// Default M = n^{1/8} (ln n)^{-1/8}; requires n >= 2.
double default_M(long n);

/// S0..S3 over the j-ranges [1, M'], [M'+1, j_- - 1], [j_-, j_+], [j_+ + 1, n].
/// `M` defaults to default_M(n).
SplitInfo split_sums(const Params& params, long n, double eps, long m_prime, std::optional<double> M = std::nullopt,
                     unsigned threads = 0);

struct PartitionLogs {
    double ln_Z;
    double ln_D;
};

/// ln Z_n from the product formula and ln D_n from the product of k-sums of
/// Gamma and lower incomplete gamma values, each k-sum combined in log space.
PartitionLogs ln_partition(const Params& params, long n);

}  // namespace mlcp::exact
