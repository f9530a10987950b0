#pragma once

#include <string>
#include <vector>

namespace mlcp::identities {

struct IdentityCheck {
    std::string name;
    bool passed = true;
    double worst_deviation = 0.0;
    std::string detail;
};

/// Exact-arithmetic identities among the polynomial families, each checked
/// for all indices up to `max_index`; a pass means zero deviation.
std::vector<IdentityCheck> exact_suite(int max_index = 10);

/// Numerical pairing  int He_k^{(nu)} He_l^{(nu)} / |D_{-nu}(ix)|^2 dx  for
/// nu in {0, 1}. The nu = 1 weight is integrated on |x| <= 12.
double orthogonality_pairing(int nu, int k, int l);

/// weight 1/|D_{-nu}(ix)|^2 for nu in {0, 1}
double orthogonality_weight(int nu, double x);

/// Diagonal entries against sqrt(2 pi)(k+nu)! to relative 1e-8 and
/// off-diagonal entries below 1e-8 sqrt(2 pi) max(k,l)!.
IdentityCheck orthogonality_check(int max_k = 6);

/// Numerical invariants: incomplete gamma range, monotonicity and route
/// overlap, the eta identity, the partition and split identities of the
/// exact evaluator, monotonicity/convexity in u, and positivity of G0.
std::vector<IdentityCheck> numeric_suite();

/// Every suite: the exact ones, orthogonality, and the numerical invariants
/// of the incomplete gamma, the exact evaluator and G0.
std::vector<IdentityCheck> run_all();

}  // namespace mlcp::identities
