#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "parcomp/composition.hpp"
#include "parcomp/domain.hpp"
#include "parcomp/query_graph.hpp"

namespace parcomp {

// Wall-clock budget for exact searches. The deadline is polled every
// `check_interval` search-tree nodes; hitting it aborts the search with a
// TimeoutError rather than returning a silently-degraded value.
struct SearchBudget {
  std::chrono::duration<double> deadline = std::chrono::seconds(60);
  std::uint64_t check_interval = 1024;
};

enum class BoundKind {
  kExactOverlap,     // largest combined weight over subsets with joint coverage
  kExactClique,      // largest combined weight over pairwise-overlapping subsets
  kApproxChromatic,  // combined class maxima of a greedy proper coloring
};

// A privacy-budget bound for answering a whole workload, together with the
// structure that certifies it. Exact kinds carry the maximizing query
// subset in `witness`; the chromatic kind carries the coloring partition in
// `color_classes`. The three kinds form a safety chain: overlap <= clique
// <= chromatic <= combining every query sequentially, so clique and
// chromatic values may overestimate but never underestimate the budget.
struct OverlapBound {
  double value = 0.0;
  BoundKind kind = BoundKind::kExactOverlap;
  std::vector<std::string> witness;
  std::vector<std::vector<std::string>> color_classes;
  bool timed_out = false;
};

const char* bound_kind_name(BoundKind kind);

// An exact search hit its deadline. Carries the best clique found so far,
// which is a lower bound on the true value: using it as a privacy budget
// would be UNSAFE (it can under-account), so it is exposed only through
// this error, never as a regular result.
class TimeoutError : public Error {
 public:
  TimeoutError(const std::string& message, OverlapBound best_so_far)
      : Error(message), best_(std::move(best_so_far)) {}
  const OverlapBound& best_so_far() const { return best_; }

 private:
  OverlapBound best_;
};

// Exact maximum-weight clique via branch and bound: branch on a max-degree
// vertex of the residual graph, prune with a greedy-coloring upper bound
// recomputed at every node. Returns kind exact_clique; throws TimeoutError
// on deadline, InvalidArgumentError on an empty graph.
OverlapBound max_weight_clique(const QueryGraph& g, const CompositionRule& comp,
                               const SearchBudget& budget = {});

// Exact maximum overlap: the clique search with the extra constraint that
// the growing subset keeps nonempty joint coverage (checked incrementally;
// supersets of an infeasible subset are never visited). Returns kind
// exact_overlap whose witness re-validates against the workload. The value
// is 0 with an empty witness only when every query is a contradiction.
OverlapBound max_overlap(const Workload& w, const QueryGraph& g,
                         const CompositionRule& comp, const SearchBudget& budget = {});

// Greedy proper coloring by descending saturation degree. Each color class
// is pairwise non-overlapping, so parallel composition prices it at its
// heaviest member; classes then compose sequentially under `comp`. Always
// a safe (over-)estimate of the exact overlap; never times out; O(t^2).
OverlapBound dsatur_coloring(const QueryGraph& g, const CompositionRule& comp);

}  // namespace parcomp
