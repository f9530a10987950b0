#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mlcp/combo_poly.hpp"
#include "mlcp/params.hpp"

namespace mlcp::cli {

enum class Format { Csv, Json };

struct Diagnostic {
    double eps = 0.0;
    long m_prime = 0;
};

struct RunConfig {
    Params params{1.0, 0.0, 0.5, 0.0, 0};
    std::vector<long> n_list;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    long samples = 100000;
    Format output = Format::Csv;
    std::optional<Diagnostic> diagnostic;
};

/// Exit codes.
inline constexpr int k_exit_ok = 0;
inline constexpr int k_exit_config = 2;
inline constexpr int k_exit_accuracy = 3;
inline constexpr int k_exit_identity = 4;

/// Exact value of a decimal ("0.25", "-1.5e-3") or fraction ("3/7") string.
/// Throws DomainError("b") on anything else.
combo::Rational rational_from_text(const std::string& text);

/// Entry point of the `mlcp` executable. Results go to `out` (or the --out
/// file), error records to `err`; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mlcp::cli
