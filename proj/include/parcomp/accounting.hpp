#pragma once

#include <optional>
#include <string>

#include "parcomp/composition.hpp"
#include "parcomp/domain.hpp"
#include "parcomp/overlap.hpp"
#include "parcomp/tradeoff.hpp"

namespace parcomp {

// A privacy budget for answering the whole workload, derived from an
// overlap bound, with the trade-off curve that certifies it.
struct BudgetReport {
  double budget;          // combined budget under the rule
  TradeoffCurve curve;    // G_budget (gdp rule) or f_{budget, 0} (eps rule)
  bool may_overestimate;  // true unless the bound is the exact overlap
  std::string note;       // human-readable qualifier, may be empty
};

// Turns an overlap bound into the workload's privacy budget under `rule`.
// Accepts exact_overlap and approx_chromatic bounds; accepts exact_clique
// with a note that it may overestimate the exact overlap (still safe).
// Refuses timed-out bounds by rethrowing them as TimeoutError: a truncated
// search's best-so-far can under-account and must never become a budget.
BudgetReport max_overlap_budget(const Workload& w, const OverlapBound& bound,
                                const CompositionRule& rule);

// The workload's common query weight, or nullopt when weights differ.
std::optional<double> homogeneous_weight(const Workload& w);

// How many weight-`weight` queries' worth of budget `bound` represents:
// inverts the rule's combination for a homogeneous workload (e.g. a GDP
// bound of w*sqrt(k) maps back to k). Used for utility-gain reporting.
double effective_overlap_count(const OverlapBound& bound, const CompositionRule& rule,
                               double weight);

}  // namespace parcomp
