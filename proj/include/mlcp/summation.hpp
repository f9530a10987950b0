#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace mlcp {

/// Error-free transformations.
struct TwoSum {
    double sum;
    double err;
};

inline TwoSum two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline TwoSum two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    CompensatedSum& operator+=(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        return *this;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2; roughly 106 bits.
class DoubleDouble {
public:
    DoubleDouble() = default;
    DoubleDouble(double hi) : hi_(hi) {}  // NOLINT(google-explicit-constructor)
    DoubleDouble(double hi, double lo) {
        const TwoSum s = two_sum(hi, lo);
        hi_ = s.sum;
        lo_ = s.err;
    }

    double hi() const { return hi_; }
    double lo() const { return lo_; }
    double value() const { return hi_ + lo_; }

    DoubleDouble& operator+=(const DoubleDouble& o) {
        TwoSum s = two_sum(hi_, o.hi_);
        const TwoSum t = two_sum(lo_, o.lo_);
        s.err += t.sum;
        TwoSum u = two_sum(s.sum, s.err);
        u.err += t.err;
        const TwoSum v = two_sum(u.sum, u.err);
        hi_ = v.sum;
        lo_ = v.err;
        return *this;
    }

    DoubleDouble& operator*=(const DoubleDouble& o) {
        TwoSum p = two_prod(hi_, o.hi_);
        p.err += hi_ * o.lo_ + lo_ * o.hi_;
        const TwoSum s = two_sum(p.sum, p.err);
        hi_ = s.sum;
        lo_ = s.err;
        return *this;
    }

    friend DoubleDouble operator+(DoubleDouble a, const DoubleDouble& b) { return a += b; }
    friend DoubleDouble operator*(DoubleDouble a, const DoubleDouble& b) { return a *= b; }
    friend DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi_, -a.lo_}; }

private:
    double hi_ = 0.0;
    double lo_ = 0.0;
};

/// Pairwise reduction over a fixed binary tree: the tree shape depends only
/// on the length of `xs`, so the result does not depend on how the leaves
/// were produced.
template <typename T, typename Combine>
T tree_reduce(std::span<const T> xs, T zero, Combine combine) {
    if (xs.empty()) return zero;
    if (xs.size() == 1) return xs[0];
    const std::size_t mid = xs.size() / 2;
    return combine(tree_reduce(xs.first(mid), zero, combine),
                   tree_reduce(xs.subspan(mid), zero, combine));
}

inline double pairwise_sum(std::span<const double> xs) {
    return tree_reduce<double>(xs, 0.0, [](double a, double b) { return a + b; });
}

}  // namespace mlcp
