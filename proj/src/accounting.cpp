#include "parcomp/accounting.hpp"

namespace parcomp {

namespace {

void check_ids_known(const Workload& w, const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    if (!w.query_index(id)) {
      throw InvalidArgumentError("bound witness names unknown query '" + id + "'");
    }
  }
}

}  // namespace

BudgetReport max_overlap_budget(const Workload& w, const OverlapBound& bound,
                                const CompositionRule& rule) {
  if (bound.timed_out) {
    throw TimeoutError(
        "refusing to account with a timed-out bound: its value is only a "
        "lower bound on the exact overlap and is UNSAFE as a privacy budget",
        bound);
  }
  check_ids_known(w, bound.witness);
  for (const auto& cls : bound.color_classes) check_ids_known(w, cls);

  std::string note;
  if (bound.kind == BoundKind::kExactClique) {
    note = "clique bound: may overestimate the exact overlap, still safe";
  } else if (bound.kind == BoundKind::kApproxChromatic) {
    note = "coloring bound: may overestimate the exact overlap, still safe";
  } else if (bound.witness.empty()) {
    note = "every query is a contradiction; nothing consumes budget";
  }

  TradeoffCurve curve = rule.kind() == CompositionKind::kGdpRootSumSquares
                            ? g_mu(bound.value)
                            : f_eps_delta(bound.value, 0.0);
  return BudgetReport{bound.value, std::move(curve),
                      bound.kind != BoundKind::kExactOverlap, std::move(note)};
}

std::optional<double> homogeneous_weight(const Workload& w) {
  if (w.query_count() == 0) return std::nullopt;
  const double first = w.query(0).weight();
  for (int i = 1; i < w.query_count(); ++i) {
    if (w.query(i).weight() != first) return std::nullopt;
  }
  return first;
}

double effective_overlap_count(const OverlapBound& bound, const CompositionRule& rule,
                               double weight) {
  if (!(weight > 0.0)) {
    throw InvalidArgumentError("effective_overlap_count requires weight > 0");
  }
  return rule.to_accumulator(bound.value) / rule.to_accumulator(weight);
}

}  // namespace parcomp
