#pragma once

#include <stdexcept>
#include <string>

namespace mlcp {

/// Invalid argument or parameter outside its admissible range. `constraint`
/// names the offending parameter (e.g. "r", "n", "eps").
class DomainError : public std::domain_error {
public:
    DomainError(std::string constraint, const std::string& what)
        : std::domain_error(what), constraint_(std::move(constraint)) {}

    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

/// A requested index range is empty (e.g. the middle j-range of the split).
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

/// A numerical procedure could not reach its requested accuracy.
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The inner k-sum of the exact formula stayed nonpositive after every
/// precision escalation.
class CancellationError : public std::runtime_error {
public:
    CancellationError(long long j, const std::string& what)
        : std::runtime_error(what), j_(j) {}

    long long j() const noexcept { return j_; }

private:
    long long j_;
};

/// Monte Carlo run in which every sample carried zero weight.
class DegenerateEstimateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mlcp
