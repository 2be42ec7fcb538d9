#include "support.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parcomp/error.hpp"

namespace testsupport {

using parcomp::Attribute;
using parcomp::CompositionRule;
using parcomp::Domain;
using parcomp::Predicate;
using parcomp::PredicateQuery;
using parcomp::QueryGraph;
using parcomp::SplitMix64;
using parcomp::ValueSet;
using parcomp::Workload;

namespace {

double normal_pdf_local(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = normal_pdf_local(lm);
  const double frm = normal_pdf_local(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson(a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double integral_zero_to(double x) {
  if (x == 0.0) return 0.0;
  const double fa = normal_pdf_local(0.0);
  const double fb = normal_pdf_local(x);
  const double fm = normal_pdf_local(0.5 * x);
  const double whole = simpson(0.0, x, fa, fm, fb);
  return adaptive_simpson(0.0, x, fa, fm, fb, whole, 1e-14, 40);
}

}  // namespace

double quad_normal_cdf(double x) {
  if (x > 12.0) return 1.0;
  if (x < -12.0) return 0.0;
  return 0.5 + integral_zero_to(x);
}

double bisect_normal_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::invalid_argument("bisect_normal_quantile: p must be in (0,1)");
  }
  double lo = -12.0, hi = 12.0;
  for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (quad_normal_cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double brute_force_clique_value(const QueryGraph& g, const CompositionRule& rule) {
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("brute_force_clique_value: too large");
  double best = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool clique = true;
    for (int i = 0; i < n && clique; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int j = i + 1; j < n && clique; ++j) {
        if (!(mask & (1u << j))) continue;
        if (!g.adjacent(i, j)) clique = false;
      }
    }
    if (!clique) continue;
    std::vector<double> weights;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) weights.push_back(g.weight(i));
    }
    best = std::max(best, rule.combine(weights));
  }
  return best;
}

double brute_force_overlap_value(const Workload& w, const CompositionRule& rule) {
  const int t = w.query_count();
  if (t > 20) throw std::invalid_argument("brute_force_overlap_value: too large");
  double best = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
    std::vector<int> indices;
    for (int i = 0; i < t; ++i) {
      if (mask & (1u << i)) indices.push_back(i);
    }
    if (!parcomp::subset_coverage_nonempty(w, indices)) continue;
    std::vector<double> weights;
    for (const int i : indices) weights.push_back(w.query(i).weight());
    best = std::max(best, rule.combine(weights));
  }
  return best;
}

namespace {

bool colorable_with(const QueryGraph& g, int k, std::vector<int>& color, int v) {
  const int n = g.vertex_count();
  if (v == n) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      if (color[u] == c && g.adjacent(u, v)) ok = false;
    }
    if (!ok) continue;
    color[v] = c;
    if (colorable_with(g, k, color, v + 1)) return true;
    color[v] = -1;
    // Trying later colors than the first fresh one only permutes classes.
    bool fresh = true;
    for (int u = 0; u < v; ++u) {
      if (color[u] == c) fresh = false;
    }
    if (fresh) break;
  }
  return false;
}

}  // namespace

int exact_chromatic_number(const QueryGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (n > 16) throw std::invalid_argument("exact_chromatic_number: too large");
  for (int k = 1; k <= n; ++k) {
    std::vector<int> color(n, -1);
    if (colorable_with(g, k, color, 0)) return k;
  }
  return n;
}

Workload random_small_workload(SplitMix64& rng, const SmallWorkloadParams& p) {
  const int m = 1 + static_cast<int>(rng.next_below(
                        static_cast<std::uint64_t>(p.max_attributes)));
  std::vector<Attribute> attrs;
  for (int i = 0; i < m; ++i) {
    const std::uint32_t card =
        2 + static_cast<std::uint32_t>(
                rng.next_below(static_cast<std::uint64_t>(p.max_cardinality - 1)));
    attrs.emplace_back("a" + std::to_string(i), card);
  }
  Domain domain(std::move(attrs));

  const int t = 1 + static_cast<int>(rng.next_below(
                        static_cast<std::uint64_t>(p.max_queries)));
  std::vector<PredicateQuery> queries;
  for (int qi = 0; qi < t; ++qi) {
    std::vector<Predicate> preds;
    for (int ai = 0; ai < m; ++ai) {
      if (rng.next_below(2) == 0) continue;  // attribute left unconstrained
      const std::uint32_t card = domain.attribute(ai).cardinality();
      std::vector<std::uint32_t> values;
      for (std::uint32_t v = 0; v < card; ++v) {
        if (rng.next_below(2) == 0) values.push_back(v);
      }
      // Empty draws stay empty: contradictions are part of the test space.
      preds.push_back(Predicate{ai, ValueSet(card, std::move(values))});
    }
    const double weight =
        p.unit_weights ? 1.0 : 2.0 - 2.0 * rng.next_double();  // (0, 2]
    queries.emplace_back("q" + std::to_string(qi), weight, std::move(preds));
  }
  return Workload(std::move(domain), std::move(queries));
}

namespace {

Domain postcode_native(std::vector<std::string> postcodes) {
  std::vector<Attribute> attrs;
  attrs.emplace_back("Postcode", static_cast<std::uint32_t>(postcodes.size()),
                     std::move(postcodes));
  attrs.emplace_back("Native", 2, std::vector<std::string>{"Y", "N"});
  return Domain(std::move(attrs));
}

Predicate pred(int attr, std::uint32_t universe, std::vector<std::uint32_t> vals) {
  return Predicate{attr, ValueSet(universe, std::move(vals))};
}

}  // namespace

Workload path_example_workload() {
  Domain d = postcode_native({"A", "B"});
  std::vector<PredicateQuery> qs;
  qs.emplace_back("q1", 1.0,
                  std::vector<Predicate>{pred(0, 2, {0}), pred(1, 2, {0})});
  qs.emplace_back("q2", 1.0, std::vector<Predicate>{pred(0, 2, {0, 1})});
  qs.emplace_back("q3", 1.0,
                  std::vector<Predicate>{pred(0, 2, {1}), pred(1, 2, {1})});
  return Workload(std::move(d), std::move(qs));
}

Workload hand_example_workload() {
  Domain d = postcode_native({"A", "B", "C"});
  std::vector<PredicateQuery> qs;
  qs.emplace_back("q1", 1.0,
                  std::vector<Predicate>{pred(0, 3, {0}), pred(1, 2, {0})});
  qs.emplace_back("q2", 1.0, std::vector<Predicate>{pred(0, 3, {0, 1})});
  qs.emplace_back("q3", 1.0,
                  std::vector<Predicate>{pred(0, 3, {0, 2}), pred(1, 2, {1})});
  qs.emplace_back("q4", 1.0, std::vector<Predicate>{pred(1, 2, {0})});
  qs.emplace_back("q5", 1.0, std::vector<Predicate>{pred(0, 3, {2})});
  qs.emplace_back("q6", 1.0,
                  std::vector<Predicate>{pred(0, 3, {1}), pred(1, 2, {1})});
  return Workload(std::move(d), std::move(qs));
}

Workload one_attribute_three_values() {
  Domain d(std::vector<Attribute>{Attribute("x", 3)});
  std::vector<PredicateQuery> qs;
  qs.emplace_back("q1", 1.0, std::vector<Predicate>{pred(0, 3, {1, 2})});
  qs.emplace_back("q2", 1.0, std::vector<Predicate>{pred(0, 3, {0, 2})});
  qs.emplace_back("q3", 1.0, std::vector<Predicate>{pred(0, 3, {0, 1})});
  return Workload(std::move(d), std::move(qs));
}

Workload all_contradictions_workload() {
  Domain d(std::vector<Attribute>{Attribute("x", 2)});
  std::vector<PredicateQuery> qs;
  qs.emplace_back("q1", 1.0, std::vector<Predicate>{pred(0, 2, {})});
  qs.emplace_back("q2", 0.5, std::vector<Predicate>{pred(0, 2, {})});
  return Workload(std::move(d), std::move(qs));
}

Workload disjoint_workload(int t) {
  Domain d(std::vector<Attribute>{
      Attribute("x", static_cast<std::uint32_t>(t))});
  std::vector<PredicateQuery> qs;
  for (int i = 0; i < t; ++i) {
    qs.emplace_back("q" + std::to_string(i), 1.0,
                    std::vector<Predicate>{pred(
                        0, static_cast<std::uint32_t>(t),
                        {static_cast<std::uint32_t>(i)})});
  }
  return Workload(std::move(d), std::move(qs));
}

}  // namespace testsupport
