#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parcomp/domain.hpp"

namespace parcomp {

// Guard against accidentally generating astronomically large domains; the
// value bounds log10(|domain|), which generators track without ever
// materializing the size.
inline constexpr double kDefaultMaxLog10Domain = 10000.0;

enum class DistKind { kUniform, kExponential, kNormal };

// Distribution of one generator quantity over a discrete range. `param`
// scales with the range width: the exponential's mean and the normal's
// standard deviation are param * (range width); the normal is centered on
// the range midpoint. Draws are rounded to the nearest integer and clamped
// into range, which shifts some probability mass to the endpoints.
struct DistSpec {
  DistKind kind = DistKind::kUniform;
  double param = 0.0;  // unused for uniform

  // "uniform", "exp:<scale>", or "normal:<sd>" (e.g. "exp:0.5").
  static DistSpec parse(std::string_view text);
  std::string to_string() const;
};

struct UniformWorkloadParams {
  int num_attributes = 10;  // m
  int min_exponent = 1;     // attribute cardinalities are 10^k,
  int max_exponent = 6;     //   k uniform on {min_exponent..max_exponent}
  int num_queries = 100;    // t
  double weight = 1.0;      // weight given to every query
  double max_log10_domain = kDefaultMaxLog10Domain;
};

// Random predicate workload: every query constrains m' ~ U{1..m} distinct
// attributes, each to a uniformly chosen value subset of size a' ~ U{1..|A|}.
Workload gen_uniform_workload(const UniformWorkloadParams& p, std::uint64_t seed);

struct DistributionWorkloadParams {
  int num_attributes = 10;
  int min_exponent = 1;
  int max_exponent = 6;
  int num_queries = 100;
  double weight = 1.0;
  double max_log10_domain = kDefaultMaxLog10Domain;
  DistSpec predicate_count;   // how many attributes a query constrains
  DistSpec attribute_choice;  // which attribute indices it constrains
  DistSpec value_count;       // how many values each predicate keeps
  DistSpec value_choice;      // which value indices it keeps
};

// Like gen_uniform_workload but each of the four sampled quantities draws
// from its own configured distribution; all-uniform reproduces the uniform
// generator draw for draw.
Workload gen_distribution_workload(const DistributionWorkloadParams& p,
                                   std::uint64_t seed);

// Suggested non-uniform settings to sweep when no better prior exists:
// exponential scales {0.5, 1, 2} and normal sds {0.1, 0.2, 0.3} of the
// range width. These defaults are this library's choice, not sourced.
std::vector<DistSpec> default_exponential_specs();
std::vector<DistSpec> default_normal_specs();

// Census-style domain: Income(5000 range buckets) x Age(5) x Marital(4) x
// Race(7) x Gender(2); 1.4 million rows.
Domain census_domain();

// t census-style queries: Income in a uniformly drawn prefix range of the
// 5000 buckets, and each other attribute independently either one uniform
// value or unconstrained.
Workload gen_census_workload(int t, std::uint64_t seed);

// Every distinct census-style query, in a fixed mixed-radix order.
inline constexpr std::uint64_t kCensusFullWorkloadSize = 3'600'000;

// Queries [begin, begin + count) of that enumeration. `max_queries` gates
// accidental full materialization; raise it deliberately to enumerate more.
Workload census_enumeration_slice(std::uint64_t begin, std::uint64_t count,
                                  std::uint64_t max_queries = 100'000);

// Undirected simple graph as an edge list over vertices 0..n-1.
struct EdgeListGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  // Text form: header "<vertex-count> <edge-count>", then one "u v" line
  // per edge. ParseError on malformed input.
  static EdgeListGraph parse(std::istream& in, std::string_view source_name = "<stream>");
  static EdgeListGraph load_file(const std::string& path);
  void write(std::ostream& out) const;
};

// Encodes max-cut as a maximum-overlap instance: one binary attribute per
// vertex and, per edge uv, the two queries (x_u=0 and x_v=1) and (x_u=1 and
// x_v=0). A row is a cut; a query covers it exactly when its edge crosses
// the cut in the matching direction, so the exact maximum overlap of the
// workload equals the graph's maximum cut. Requires a nonempty, loop-free,
// duplicate-free edge list.
Workload maxcut_to_overlap(const EdgeListGraph& g);

// Erdos-Renyi G(n, p) with the library's seeded generator.
EdgeListGraph random_graph(int n, double edge_prob, std::uint64_t seed);

// Exhaustive max cut over all 2^(n-1) vertex bipartitions; n <= 24.
std::uint64_t brute_force_maxcut(const EdgeListGraph& g);

}  // namespace parcomp
