#pragma once

#include <span>
#include <string_view>

#include "parcomp/error.hpp"

namespace parcomp {

enum class CompositionKind {
  kEpsSum,             // comp(Q) = sum of weights (pure-DP style accounting)
  kGdpRootSumSquares,  // comp(Q) = sqrt(sum of squared weights) (Gaussian DP)
};

// How the budgets of jointly-run queries combine into one budget. Both
// instances satisfy: combine({w}) == w, and combine is monotone under
// multiset inclusion — adding a query never shrinks the budget.
//
// Internally both rules are power sums (p=1 and p=2), so searches track the
// raw accumulator (sum of w^p), where contributions add and the order is the
// same as the combined value's.
class CompositionRule {
 public:
  static const CompositionRule& eps_sum();
  static const CompositionRule& gdp_root_sum_squares();

  // Accepts "eps" or "gdp"; InvalidArgumentError otherwise.
  static const CompositionRule& from_name(std::string_view name);

  CompositionKind kind() const { return kind_; }
  std::string_view name() const;

  // Combined budget of a set of per-query weights (all must be > 0).
  double combine(std::span<const double> weights) const;

  // Sequential combination of two already-combined budgets.
  double combine_two(double a, double b) const;

  double to_accumulator(double w) const;
  double from_accumulator(double acc) const;

 private:
  explicit CompositionRule(CompositionKind kind) : kind_(kind) {}
  CompositionKind kind_;
};

// Parallel composition of Gaussian-DP budgets over disjoint inputs: the
// composite is max(mus)-GDP.
double gdp_parallel(std::span<const double> mus);

// Sequential composition: sqrt(sum of mu_i^2)-GDP.
double gdp_sequential(std::span<const double> mus);

// Sequential composition of pure-DP budgets: sum of eps_i.
double eps_sequential(std::span<const double> epss);

// Central-limit-theorem style approximation of the sequential composition of
// (eps_i, delta_i)-DP mechanisms by a single Gaussian-DP budget:
// mu = sqrt(sum eps_i^2), delta = 1 - exp(-sum delta_i). APPROXIMATE: the
// error vanishes as the number of mechanisms grows (O(1/n) for pure DP);
// callers must surface the approximate nature to users.
struct CltGdpApprox {
  double mu;
  double delta;
};
CltGdpApprox clt_gdp_approx(std::span<const double> epss, std::span<const double> deltas);

// Fraction of budget saved by accounting with `bound_value` instead of the
// full query count, for homogeneous unit-weight workloads: 1 - bound/t.
// `bound_value` may be 0 only in the degenerate case where every query is a
// contradiction. Requires 0 <= bound_value <= t, t >= 1.
double utility_gain(int t, double bound_value);

// General form: 1 - (noise mass over the witness) / (noise mass over all
// queries), where noise mass is the expected absolute error E|Y_i| of each
// query's mechanism. `witness_indices` must be distinct, in range.
double utility_gain(std::span<const double> expected_abs_noise,
                    std::span<const int> witness_indices);

}  // namespace parcomp
