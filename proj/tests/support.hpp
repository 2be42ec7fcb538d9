#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parcomp/composition.hpp"
#include "parcomp/domain.hpp"
#include "parcomp/query_graph.hpp"
#include "parcomp/rng.hpp"

// Independent re-implementations and hand-built instances used to check the
// library. Everything here deliberately avoids the library's own algorithms:
// quadrature instead of erfc, exhaustive enumeration instead of searches.
namespace testsupport {

// Normal CDF by adaptive Simpson quadrature of the density (no erf/erfc).
double quad_normal_cdf(double x);

// Normal quantile by bisection over quad_normal_cdf.
double bisect_normal_quantile(double p);

// Maximum weighted clique value over all 2^n vertex subsets (n <= 20).
double brute_force_clique_value(const parcomp::QueryGraph& g,
                                const parcomp::CompositionRule& rule);

// Maximum combined weight over all query subsets with nonempty joint
// coverage, by explicit 2^t enumeration (t <= 20). 0 when none is feasible.
double brute_force_overlap_value(const parcomp::Workload& w,
                                 const parcomp::CompositionRule& rule);

// Exact chromatic number by iterative-deepening backtracking (small graphs).
int exact_chromatic_number(const parcomp::QueryGraph& g);

struct SmallWorkloadParams {
  int max_attributes = 5;
  int max_cardinality = 4;
  int max_queries = 10;
  bool unit_weights = true;  // false: weights uniform in (0, 2]
};

// Random small workload built directly from the domain-model types, not via
// the library's generators, so generator bugs cannot mask search bugs.
parcomp::Workload random_small_workload(parcomp::SplitMix64& rng,
                                        const SmallWorkloadParams& p);

// Two-attribute example with three queries forming a path: the middle query
// overlaps both ends, the ends are disjoint. Overlap 2 under unit weights.
parcomp::Workload path_example_workload();

// Six queries over Postcode{A,B,C} x Native{Y,N} whose graph has exactly the
// edges q1q2, q1q4, q2q3, q2q4, q2q6, q4q5, q3q5. Overlap 3 via {q1,q2,q4};
// clique and chromatic numbers both 3.
parcomp::Workload hand_example_workload();

// One attribute with three values; queries keep {1,2}, {0,2}, {0,1}. All
// pairs overlap but no row satisfies all three: overlap 2, clique number 3.
parcomp::Workload one_attribute_three_values();

// Every query carries an empty-value predicate; joint coverage is empty for
// every subset, so the overlap is 0 by convention.
parcomp::Workload all_contradictions_workload();

// t queries on t disjoint singleton values of one attribute (no edges).
parcomp::Workload disjoint_workload(int t);

}  // namespace testsupport
