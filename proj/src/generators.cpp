#include "parcomp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "parcomp/normal.hpp"
#include "parcomp/rng.hpp"

namespace parcomp {

// ---------------------------------------------------------------------------
// DistSpec

DistSpec DistSpec::parse(std::string_view text) {
  if (text == "uniform") return DistSpec{DistKind::kUniform, 0.0};
  auto parse_param = [&](std::string_view rest, DistKind kind) {
    try {
      std::size_t used = 0;
      const double p = std::stod(std::string(rest), &used);
      if (used != rest.size() || !(p > 0.0) || !std::isfinite(p)) {
        throw std::invalid_argument("range");
      }
      return DistSpec{kind, p};
    } catch (const std::exception&) {
      throw InvalidArgumentError("invalid distribution parameter '" +
                                 std::string(rest) + "' (need a positive real)");
    }
  };
  if (text.starts_with("exp:")) return parse_param(text.substr(4), DistKind::kExponential);
  if (text.starts_with("normal:")) {
    return parse_param(text.substr(7), DistKind::kNormal);
  }
  throw InvalidArgumentError("unknown distribution '" + std::string(text) +
                             "' (expected uniform, exp:<scale> or normal:<sd>)");
}

std::string DistSpec::to_string() const {
  switch (kind) {
    case DistKind::kUniform:
      return "uniform";
    case DistKind::kExponential:
      return "exp:" + std::to_string(param);
    case DistKind::kNormal:
      return "normal:" + std::to_string(param);
  }
  return "uniform";
}

namespace {

void validate_dist(const DistSpec& d, const char* what) {
  if (d.kind != DistKind::kUniform && (!(d.param > 0.0) || !std::isfinite(d.param))) {
    throw InvalidArgumentError(std::string(what) +
                               ": distribution parameter must be finite and > 0");
  }
}

// One draw from `dist` over the integer range [lo, hi].
std::int64_t draw_in_range(SplitMix64& rng, std::int64_t lo, std::int64_t hi,
                           const DistSpec& dist) {
  const double width = static_cast<double>(hi - lo + 1);
  switch (dist.kind) {
    case DistKind::kUniform:
      return lo + static_cast<std::int64_t>(
                      rng.next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    case DistKind::kExponential: {
      const double mean = dist.param * width;
      const double x = -mean * std::log(1.0 - rng.next_double());
      const double v = static_cast<double>(lo) + std::round(x);
      return std::clamp(static_cast<std::int64_t>(v), lo, hi);
    }
    case DistKind::kNormal: {
      const double sd = dist.param * width;
      const double mid = 0.5 * static_cast<double>(lo + hi);
      const double x = mid + sd * normal_quantile(rng.next_open_double());
      const double v = std::round(x);
      if (v <= static_cast<double>(lo)) return lo;
      if (v >= static_cast<double>(hi)) return hi;
      return static_cast<std::int64_t>(v);
    }
  }
  throw InvalidArgumentError("unknown distribution kind");
}

// k distinct indices from [0, n). Uniform uses Floyd's subset-sampling
// algorithm; the other distributions draw with rejection and, if an unused
// index is not hit after a bounded number of attempts (possible when the
// distribution concentrates), deterministically take the nearest unused
// index to the last draw.
std::vector<std::uint32_t> draw_distinct(SplitMix64& rng, std::int64_t n, std::int64_t k,
                                         const DistSpec& dist) {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(k));
  if (k == n) {
    for (std::int64_t v = 0; v < n; ++v) out.push_back(static_cast<std::uint32_t>(v));
    return out;
  }
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(k) * 2);
  if (dist.kind == DistKind::kUniform) {
    for (std::int64_t j = n - k; j < n; ++j) {
      const auto r = static_cast<std::int64_t>(
          rng.next_below(static_cast<std::uint64_t>(j + 1)));
      const std::int64_t v = chosen.count(r) ? j : r;
      chosen.insert(v);
      out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
  }
  constexpr int kMaxAttempts = 256;
  for (std::int64_t picked = 0; picked < k; ++picked) {
    std::int64_t v = -1;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      const std::int64_t cand = draw_in_range(rng, 0, n - 1, dist);
      if (!chosen.count(cand)) {
        v = cand;
        break;
      }
      v = cand;  // remember the last draw for the fallback below
    }
    if (chosen.count(v)) {
      for (std::int64_t off = 1;; ++off) {
        if (v + off < n && !chosen.count(v + off)) {
          v += off;
          break;
        }
        if (v - off >= 0 && !chosen.count(v - off)) {
          v -= off;
          break;
        }
      }
    }
    chosen.insert(v);
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Random workload generators

Workload gen_distribution_workload(const DistributionWorkloadParams& p,
                                   std::uint64_t seed) {
  if (p.num_attributes < 1) throw InvalidArgumentError("need at least one attribute");
  if (p.num_queries < 1) throw InvalidArgumentError("need at least one query");
  if (p.min_exponent < 1 || p.max_exponent < p.min_exponent) {
    throw InvalidArgumentError("attribute size exponents need 1 <= min <= max");
  }
  if (p.max_exponent > 9) {
    throw InvalidArgumentError("attribute size exponent above 9 is not supported");
  }
  validate_dist(p.predicate_count, "predicate count");
  validate_dist(p.attribute_choice, "attribute choice");
  validate_dist(p.value_count, "value count");
  validate_dist(p.value_choice, "value choice");

  SplitMix64 rng(seed);
  const int m = p.num_attributes;

  std::vector<Attribute> attrs;
  attrs.reserve(m);
  double log10_size = 0.0;
  for (int i = 0; i < m; ++i) {
    const auto k = draw_in_range(rng, p.min_exponent, p.max_exponent,
                                 DistSpec{DistKind::kUniform, 0.0});
    log10_size += static_cast<double>(k);
    std::uint32_t card = 1;
    for (int j = 0; j < k; ++j) card *= 10;
    attrs.emplace_back("a" + std::to_string(i), card);
  }
  if (log10_size > p.max_log10_domain) {
    throw CapacityError("generated domain has log10 size " +
                        std::to_string(log10_size) + ", above the configured cap of " +
                        std::to_string(p.max_log10_domain));
  }
  Domain domain(std::move(attrs));

  std::vector<PredicateQuery> queries;
  queries.reserve(p.num_queries);
  for (int qi = 0; qi < p.num_queries; ++qi) {
    const auto num_preds = draw_in_range(rng, 1, m, p.predicate_count);
    auto attr_indices = draw_distinct(rng, m, num_preds, p.attribute_choice);
    std::sort(attr_indices.begin(), attr_indices.end());
    std::vector<Predicate> preds;
    preds.reserve(attr_indices.size());
    for (auto ai : attr_indices) {
      const auto card = domain.attribute(static_cast<int>(ai)).cardinality();
      const auto num_values = draw_in_range(rng, 1, card, p.value_count);
      auto values = draw_distinct(rng, card, num_values, p.value_choice);
      preds.push_back(
          Predicate{static_cast<int>(ai), ValueSet(card, std::move(values))});
    }
    queries.emplace_back("q" + std::to_string(qi), p.weight, std::move(preds));
  }
  return Workload(std::move(domain), std::move(queries));
}

Workload gen_uniform_workload(const UniformWorkloadParams& p, std::uint64_t seed) {
  DistributionWorkloadParams dp;
  dp.num_attributes = p.num_attributes;
  dp.min_exponent = p.min_exponent;
  dp.max_exponent = p.max_exponent;
  dp.num_queries = p.num_queries;
  dp.weight = p.weight;
  dp.max_log10_domain = p.max_log10_domain;
  return gen_distribution_workload(dp, seed);
}

std::vector<DistSpec> default_exponential_specs() {
  return {DistSpec{DistKind::kExponential, 0.5}, DistSpec{DistKind::kExponential, 1.0},
          DistSpec{DistKind::kExponential, 2.0}};
}

std::vector<DistSpec> default_normal_specs() {
  return {DistSpec{DistKind::kNormal, 0.1}, DistSpec{DistKind::kNormal, 0.2},
          DistSpec{DistKind::kNormal, 0.3}};
}

// ---------------------------------------------------------------------------
// Census-style workload

Domain census_domain() {
  return Domain({Attribute("Income", 5000), Attribute("Age", 5),
                 Attribute("Marital", 4), Attribute("Race", 7),
                 Attribute("Gender", 2)});
}

namespace {

std::vector<Predicate> census_query_predicates(const Domain& d, std::uint32_t income_hi,
                                               std::uint32_t age, std::uint32_t marital,
                                               std::uint32_t race, std::uint32_t gender) {
  std::vector<Predicate> preds;
  std::vector<std::uint32_t> prefix(income_hi);
  for (std::uint32_t v = 0; v < income_hi; ++v) prefix[v] = v;
  preds.push_back(Predicate{0, ValueSet(d.attribute(0).cardinality(), std::move(prefix))});
  const std::uint32_t picks[4] = {age, marital, race, gender};
  for (int a = 1; a <= 4; ++a) {
    const auto card = d.attribute(a).cardinality();
    if (picks[a - 1] < card) {  // == card means unconstrained
      preds.push_back(Predicate{a, ValueSet(card, {picks[a - 1]})});
    }
  }
  return preds;
}

}  // namespace

Workload gen_census_workload(int t, std::uint64_t seed) {
  if (t < 1) throw InvalidArgumentError("need at least one query");
  Domain d = census_domain();
  SplitMix64 rng(seed);
  std::vector<PredicateQuery> queries;
  queries.reserve(t);
  for (int i = 0; i < t; ++i) {
    const auto income_hi = static_cast<std::uint32_t>(1 + rng.next_below(5000));
    const auto age = static_cast<std::uint32_t>(rng.next_below(6));
    const auto marital = static_cast<std::uint32_t>(rng.next_below(5));
    const auto race = static_cast<std::uint32_t>(rng.next_below(8));
    const auto gender = static_cast<std::uint32_t>(rng.next_below(3));
    queries.emplace_back("q" + std::to_string(i), 1.0,
                         census_query_predicates(d, income_hi, age, marital, race, gender));
  }
  return Workload(std::move(d), std::move(queries));
}

Workload census_enumeration_slice(std::uint64_t begin, std::uint64_t count,
                                  std::uint64_t max_queries) {
  if (count == 0) throw InvalidArgumentError("slice must contain at least one query");
  if (begin > kCensusFullWorkloadSize || count > kCensusFullWorkloadSize - begin) {
    throw InvalidArgumentError("slice exceeds the " +
                               std::to_string(kCensusFullWorkloadSize) +
                               "-query enumeration");
  }
  if (count > max_queries) {
    throw CapacityError("slice of " + std::to_string(count) +
                        " queries exceeds the cap of " + std::to_string(max_queries) +
                        "; raise the cap to materialize more");
  }
  Domain d = census_domain();
  std::vector<PredicateQuery> queries;
  queries.reserve(count);
  for (std::uint64_t e = begin; e < begin + count; ++e) {
    std::uint64_t r = e;
    const auto income_hi = static_cast<std::uint32_t>(r % 5000 + 1);
    r /= 5000;
    const auto age = static_cast<std::uint32_t>(r % 6);
    r /= 6;
    const auto marital = static_cast<std::uint32_t>(r % 5);
    r /= 5;
    const auto race = static_cast<std::uint32_t>(r % 8);
    r /= 8;
    const auto gender = static_cast<std::uint32_t>(r);  // < 3 by construction
    queries.emplace_back("c" + std::to_string(e), 1.0,
                         census_query_predicates(d, income_hi, age, marital, race, gender));
  }
  return Workload(std::move(d), std::move(queries));
}

// ---------------------------------------------------------------------------
// Max-cut reduction

EdgeListGraph EdgeListGraph::parse(std::istream& in, std::string_view source_name) {
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(std::string(source_name) + ": " + msg);
  };
  EdgeListGraph g;
  std::int64_t edge_count = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (edge_count < 0) {
      if (!(ls >> g.vertex_count >> edge_count) || g.vertex_count < 1 || edge_count < 0) {
        fail("line " + std::to_string(line_no) +
             ": header must be '<vertex-count> <edge-count>'");
      }
      continue;
    }
    int u = 0;
    int v = 0;
    if (!(ls >> u >> v)) {
      fail("line " + std::to_string(line_no) + ": expected 'u v' edge");
    }
    g.edges.emplace_back(u, v);
  }
  if (edge_count < 0) fail("missing header line");
  if (static_cast<std::int64_t>(g.edges.size()) != edge_count) {
    fail("header announced " + std::to_string(edge_count) + " edges, found " +
         std::to_string(g.edges.size()));
  }
  return g;
}

EdgeListGraph EdgeListGraph::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file for reading");
  return parse(in, path);
}

void EdgeListGraph::write(std::ostream& out) const {
  out << vertex_count << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

Workload maxcut_to_overlap(const EdgeListGraph& g) {
  if (g.vertex_count < 1) throw InvalidArgumentError("graph needs at least one vertex");
  if (g.edges.empty()) {
    throw InvalidArgumentError(
        "max-cut reduction needs at least one edge (an edgeless instance has "
        "no queries)");
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count) {
      throw InvalidArgumentError("edge endpoint out of range");
    }
    if (u == v) throw InvalidArgumentError("self-loops are not allowed");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw InvalidArgumentError("duplicate edge in graph");
    }
  }

  std::vector<Attribute> attrs;
  attrs.reserve(g.vertex_count);
  for (int i = 0; i < g.vertex_count; ++i) {
    attrs.emplace_back("x" + std::to_string(i), 2);
  }
  Domain d(std::move(attrs));

  std::vector<PredicateQuery> queries;
  queries.reserve(2 * g.edges.size());
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto [u, v] = g.edges[k];
    queries.emplace_back(
        "e" + std::to_string(k) + "a", 1.0,
        std::vector<Predicate>{Predicate{u, ValueSet(2, {0})},
                               Predicate{v, ValueSet(2, {1})}});
    queries.emplace_back(
        "e" + std::to_string(k) + "b", 1.0,
        std::vector<Predicate>{Predicate{u, ValueSet(2, {1})},
                               Predicate{v, ValueSet(2, {0})}});
  }
  return Workload(std::move(d), std::move(queries));
}

EdgeListGraph random_graph(int n, double edge_prob, std::uint64_t seed) {
  if (n < 1) throw InvalidArgumentError("graph needs at least one vertex");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw InvalidArgumentError("edge probability must lie in [0, 1]");
  }
  SplitMix64 rng(seed);
  EdgeListGraph g;
  g.vertex_count = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.next_double() < edge_prob) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

std::uint64_t brute_force_maxcut(const EdgeListGraph& g) {
  if (g.vertex_count > 24) {
    throw CapacityError("brute-force max cut supports at most 24 vertices");
  }
  std::uint64_t best = 0;
  const std::uint64_t masks = std::uint64_t{1} << (g.vertex_count - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::uint64_t cut = 0;
    for (const auto& [u, v] : g.edges) {
      const bool su = u == g.vertex_count - 1 ? false : ((mask >> u) & 1);
      const bool sv = v == g.vertex_count - 1 ? false : ((mask >> v) & 1);
      if (su != sv) ++cut;
    }
    best = std::max(best, cut);
  }
  return best;
}

}  // namespace parcomp
