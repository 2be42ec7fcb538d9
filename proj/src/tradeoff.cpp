#include "parcomp/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "parcomp/normal.hpp"

namespace parcomp {

TradeoffCurve::TradeoffCurve(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  const int n = grid_points();
  if (n < 2) throw InvalidArgumentError("trade-off curve needs at least 2 grid points");
  for (int i = 0; i < n; ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v < -1e-12 || v > 1.0 + 1e-12) {
      throw InvalidArgumentError("trade-off curve '" + label_ +
                                 "': values must lie in [0, 1]");
    }
    if (v > 1.0 - alpha_at(i) + 1e-12) {
      throw InvalidArgumentError("trade-off curve '" + label_ +
                                 "': f(alpha) must not exceed 1 - alpha");
    }
    if (i > 0 && values_[i] > values_[i - 1] + 1e-12) {
      throw InvalidArgumentError("trade-off curve '" + label_ +
                                 "': values must be non-increasing");
    }
    if (i >= 2 &&
        values_[i] - 2.0 * values_[i - 1] + values_[i - 2] < -kConvexityTolerance) {
      throw InvalidArgumentError("trade-off curve '" + label_ +
                                 "': values must be convex on the grid");
    }
  }
  for (auto& v : values_) v = std::clamp(v, 0.0, 1.0);
}

double TradeoffCurve::evaluate(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgumentError("trade-off curves are defined on [0, 1]");
  }
  const int n = grid_points();
  const double pos = alpha * static_cast<double>(n - 1);
  const int lo = std::min(static_cast<int>(pos), n - 2);
  const double frac = pos - static_cast<double>(lo);
  return values_[lo] + frac * (values_[lo + 1] - values_[lo]);
}

void TradeoffCurve::write_csv(std::ostream& out) const {
  out << "alpha,beta\n";
  char buf[64];
  for (int i = 0; i < grid_points(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", alpha_at(i), values_[i]);
    out << buf;
  }
}

TradeoffCurve g_mu(double mu, int grid_points) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw InvalidArgumentError("g_mu requires mu >= 0");
  }
  if (grid_points < 2) throw InvalidArgumentError("g_mu: grid needs >= 2 points");
  std::vector<double> values(grid_points);
  // Grid alphas are computed exactly as TradeoffCurve::alpha_at does, so
  // identities like G_0(alpha) == 1 - alpha hold bitwise on the grid.
  const auto alpha_of = [&](int i) {
    return static_cast<double>(i) / static_cast<double>(grid_points - 1);
  };
  if (mu == 0.0) {
    // Identity trade-off: report 1 - alpha exactly, with no CDF round trip.
    for (int i = 0; i < grid_points; ++i) {
      values[i] = 1.0 - alpha_of(i);
    }
  } else {
    values[0] = 1.0;                // alpha -> 0 limit
    values[grid_points - 1] = 0.0;  // Phi(-inf) = 0
    for (int i = 1; i + 1 < grid_points; ++i) {
      values[i] = normal_cdf(normal_quantile(1.0 - alpha_of(i)) - mu);
    }
  }
  char label[48];
  std::snprintf(label, sizeof label, "G_%.6g", mu);
  return TradeoffCurve(std::move(values), label);
}

TradeoffCurve f_eps_delta(double eps, double delta, int grid_points) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw InvalidArgumentError("f_eps_delta requires eps >= 0");
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw InvalidArgumentError("f_eps_delta requires delta in [0, 1]");
  }
  if (grid_points < 2) throw InvalidArgumentError("f_eps_delta: grid needs >= 2 points");
  std::vector<double> values(grid_points);
  const double e_pos = std::exp(eps);   // may overflow to +inf; handled below
  const double e_neg = std::exp(-eps);
  for (int i = 0; i < grid_points; ++i) {
    const double alpha =
        static_cast<double>(i) / static_cast<double>(grid_points - 1);
    // At alpha == 0 the steep branch is exactly 1 - delta (avoids inf * 0).
    const double steep = (alpha == 0.0) ? 1.0 - delta : 1.0 - delta - e_pos * alpha;
    const double shallow = e_neg * (1.0 - delta - alpha);
    values[i] = std::max({0.0, steep, shallow});
  }
  char label[64];
  std::snprintf(label, sizeof label, "f_{%.6g,%.6g}", eps, delta);
  return TradeoffCurve(std::move(values), label);
}

TradeoffCurve lce(std::span<const TradeoffCurve> curves) {
  if (curves.empty()) throw InvalidArgumentError("lce requires at least one curve");
  const int n = curves.front().grid_points();
  for (const auto& c : curves) {
    if (c.grid_points() != n) {
      throw InvalidArgumentError("lce requires curves on a common grid");
    }
  }

  std::vector<double> mins(n);
  for (int i = 0; i < n; ++i) {
    double v = curves.front().value_at(i);
    for (std::size_t k = 1; k < curves.size(); ++k) {
      v = std::min(v, curves[k].value_at(i));
    }
    mins[i] = v;
  }

  // Discrete lower convex hull (monotone chain over the grid points). Grid
  // indices stand in for alpha; the uniform spacing cancels out of the sign.
  std::vector<int> hull;
  hull.reserve(static_cast<std::size_t>(n));
  auto cross = [&](int o, int a, int b) {
    return static_cast<double>(a - o) * (mins[b] - mins[o]) -
           (mins[a] - mins[o]) * static_cast<double>(b - o);
  };
  for (int i = 0; i < n; ++i) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull[hull.size() - 1], i) < 0.0) {
      hull.pop_back();
    }
    hull.push_back(i);
  }

  std::vector<double> values(n);
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const int a = hull[s];
    const int b = hull[s + 1];
    const double slope = (mins[b] - mins[a]) / static_cast<double>(b - a);
    for (int i = a; i <= b; ++i) {
      values[i] = mins[a] + slope * static_cast<double>(i - a);
    }
  }
  if (hull.size() == 1) values[hull[0]] = mins[hull[0]];

  std::string label = "lce(";
  for (std::size_t k = 0; k < curves.size(); ++k) {
    if (k) label += ",";
    label += curves[k].label();
  }
  label += ")";
  return TradeoffCurve(std::move(values), std::move(label));
}

}  // namespace parcomp
