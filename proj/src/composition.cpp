#include "parcomp/composition.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace parcomp {

const CompositionRule& CompositionRule::eps_sum() {
  static const CompositionRule rule(CompositionKind::kEpsSum);
  return rule;
}

const CompositionRule& CompositionRule::gdp_root_sum_squares() {
  static const CompositionRule rule(CompositionKind::kGdpRootSumSquares);
  return rule;
}

const CompositionRule& CompositionRule::from_name(std::string_view name) {
  if (name == "eps") return eps_sum();
  if (name == "gdp") return gdp_root_sum_squares();
  throw InvalidArgumentError("unknown composition rule '" + std::string(name) +
                             "' (expected \"eps\" or \"gdp\")");
}

std::string_view CompositionRule::name() const {
  return kind_ == CompositionKind::kEpsSum ? "eps" : "gdp";
}

double CompositionRule::to_accumulator(double w) const {
  return kind_ == CompositionKind::kEpsSum ? w : w * w;
}

double CompositionRule::from_accumulator(double acc) const {
  return kind_ == CompositionKind::kEpsSum ? acc : std::sqrt(acc);
}

double CompositionRule::combine(std::span<const double> weights) const {
  double acc = 0.0;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw InvalidArgumentError("composition weights must be finite and > 0");
    }
    acc += to_accumulator(w);
  }
  return from_accumulator(acc);
}

double CompositionRule::combine_two(double a, double b) const {
  return from_accumulator(to_accumulator(a) + to_accumulator(b));
}

namespace {

void check_non_negative(std::span<const double> xs, const char* what) {
  for (double x : xs) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw InvalidArgumentError(std::string(what) + " must be finite and >= 0");
    }
  }
}

}  // namespace

double gdp_parallel(std::span<const double> mus) {
  if (mus.empty()) throw InvalidArgumentError("gdp_parallel requires at least one budget");
  check_non_negative(mus, "GDP budgets");
  double best = 0.0;
  for (double mu : mus) best = std::max(best, mu);
  return best;
}

double gdp_sequential(std::span<const double> mus) {
  if (mus.empty()) throw InvalidArgumentError("gdp_sequential requires at least one budget");
  check_non_negative(mus, "GDP budgets");
  double acc = 0.0;
  for (double mu : mus) acc += mu * mu;
  return std::sqrt(acc);
}

double eps_sequential(std::span<const double> epss) {
  if (epss.empty()) throw InvalidArgumentError("eps_sequential requires at least one budget");
  check_non_negative(epss, "epsilon budgets");
  double acc = 0.0;
  for (double e : epss) acc += e;
  return acc;
}

CltGdpApprox clt_gdp_approx(std::span<const double> epss, std::span<const double> deltas) {
  if (epss.empty() || epss.size() != deltas.size()) {
    throw InvalidArgumentError(
        "clt_gdp_approx requires equally long, non-empty eps and delta lists");
  }
  check_non_negative(epss, "epsilon budgets");
  double eps_sq = 0.0;
  double delta_sum = 0.0;
  for (std::size_t i = 0; i < epss.size(); ++i) {
    if (!(deltas[i] >= 0.0 && deltas[i] <= 1.0)) {
      throw InvalidArgumentError("deltas must lie in [0, 1]");
    }
    eps_sq += epss[i] * epss[i];
    delta_sum += deltas[i];
  }
  return CltGdpApprox{std::sqrt(eps_sq), 1.0 - std::exp(-delta_sum)};
}

double utility_gain(int t, double bound_value) {
  if (t < 1) throw InvalidArgumentError("utility_gain requires t >= 1");
  if (!(bound_value >= 0.0 && bound_value <= static_cast<double>(t))) {
    throw InvalidArgumentError("utility_gain requires 0 <= bound <= t");
  }
  return 1.0 - bound_value / static_cast<double>(t);
}

double utility_gain(std::span<const double> expected_abs_noise,
                    std::span<const int> witness_indices) {
  double total = 0.0;
  for (double e : expected_abs_noise) {
    if (!(e >= 0.0) || !std::isfinite(e)) {
      throw InvalidArgumentError("noise expectations must be finite and >= 0");
    }
    total += e;
  }
  if (!(total > 0.0)) {
    throw InvalidArgumentError("utility_gain requires positive total noise mass");
  }
  std::vector<bool> seen(expected_abs_noise.size(), false);
  double witness = 0.0;
  for (int i : witness_indices) {
    if (i < 0 || i >= static_cast<int>(expected_abs_noise.size())) {
      throw InvalidArgumentError("witness index out of range");
    }
    if (seen[i]) throw InvalidArgumentError("witness indices must be distinct");
    seen[i] = true;
    witness += expected_abs_noise[i];
  }
  return 1.0 - witness / total;
}

}  // namespace parcomp
