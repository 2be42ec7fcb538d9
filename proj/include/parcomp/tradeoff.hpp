#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "parcomp/error.hpp"

namespace parcomp {

// A trade-off function f(alpha) sampled on a uniform grid over [0, 1]:
// the power bound beta = f(alpha) any distinguishing attack must respect.
// Valid curves take values in [0, 1], are non-increasing, convex (within a
// small grid tolerance), and never exceed 1 - alpha. The constructor
// enforces all four, so a TradeoffCurve in hand is always a genuine
// trade-off function up to grid resolution.
class TradeoffCurve {
 public:
  static constexpr int kDefaultGridPoints = 10001;
  // Convexity slack for second differences on the grid; everything else is
  // checked to 1e-12.
  static constexpr double kConvexityTolerance = 1e-9;

  TradeoffCurve(std::vector<double> values, std::string label);

  int grid_points() const { return static_cast<int>(values_.size()); }
  double alpha_at(int i) const {
    return static_cast<double>(i) / static_cast<double>(grid_points() - 1);
  }
  double value_at(int i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  const std::string& label() const { return label_; }

  // Piecewise-linear evaluation at any alpha in [0, 1].
  double evaluate(double alpha) const;

  // Two-column CSV (alpha,beta), one row per grid point.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<double> values_;
  std::string label_;
};

// Gaussian trade-off curve G_mu(alpha) = Phi(Phi^{-1}(1 - alpha) - mu).
// mu = 0 yields exactly 1 - alpha (no privacy loss measurable).
TradeoffCurve g_mu(double mu, int grid_points = TradeoffCurve::kDefaultGridPoints);

// Piecewise-linear trade-off curve of (eps, delta)-DP:
// f(alpha) = max{0, 1 - delta - e^eps * alpha, e^{-eps} * (1 - delta - alpha)}.
TradeoffCurve f_eps_delta(double eps, double delta,
                          int grid_points = TradeoffCurve::kDefaultGridPoints);

// Lower convex envelope: the greatest convex curve lying below every input
// (pointwise minimum followed by a discrete lower convex hull over the
// grid). All curves must share one grid resolution.
TradeoffCurve lce(std::span<const TradeoffCurve> curves);

}  // namespace parcomp
