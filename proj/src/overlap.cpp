#include "parcomp/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <utility>

namespace parcomp {

namespace {

// Tolerance for pruning decisions and witness re-validation. Unit-weight
// accounting is exact in doubles; this only absorbs rounding of arbitrary
// real weights.
constexpr double kPruneEps = 1e-12;
constexpr double kVerifyEps = 1e-9;

// Running joint-coverage intersection, one stack of value sets per
// constrained attribute. try_push either extends every stack or leaves the
// state untouched and reports failure, so the stacks always describe a
// subset with nonempty coverage.
class CoverageStack {
 public:
  bool try_push(const PredicateQuery& q) {
    if (q.is_contradiction()) return false;
    std::size_t pushed = 0;
    for (const Predicate& p : q.predicates()) {
      auto& stack = stacks_[p.attribute_index];
      ValueSet next = stack.empty() ? p.values : stack.back().intersect(p.values);
      if (next.empty()) {
        undo(q, pushed);
        return false;
      }
      stack.push_back(std::move(next));
      ++pushed;
    }
    return true;
  }

  void pop(const PredicateQuery& q) { undo(q, q.predicates().size()); }

 private:
  void undo(const PredicateQuery& q, std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      stacks_[q.predicates()[k].attribute_index].pop_back();
    }
  }

  std::unordered_map<int, std::vector<ValueSet>> stacks_;
};

// Reusable DSatur working storage, sized once per graph.
struct ColoringScratch {
  std::vector<int> order;         // alive vertices, ascending
  std::vector<int> color;         // per vertex; -1 = uncolored
  std::vector<int> sat;           // saturation degree
  std::vector<Bitset> seen;       // per vertex: colors among its neighbors
  std::vector<double> class_max;  // heaviest weight per color class

  void ensure(int t) {
    if (static_cast<int>(color.size()) == t) return;
    color.assign(t, -1);
    sat.assign(t, 0);
    seen.assign(t, Bitset(t));
    class_max.assign(t, 0.0);
  }
};

// Greedy DSatur coloring of the subgraph induced by `alive`: repeatedly
// color the vertex adjacent to the most distinct colors (ties: larger
// weight, then lower index) with the smallest feasible color. Returns the
// number of colors; per-vertex colors and per-class maxima stay in `s`.
int dsatur_color(const QueryGraph& g, const Bitset& alive, ColoringScratch& s) {
  s.ensure(g.vertex_count());
  s.order.clear();
  alive.for_each([&](int v) {
    s.order.push_back(v);
    s.color[v] = -1;
    s.sat[v] = 0;
    s.seen[v].clear();
  });

  int colors = 0;
  for (std::size_t step = 0; step < s.order.size(); ++step) {
    int pick = -1;
    for (int v : s.order) {
      if (s.color[v] != -1) continue;
      if (pick == -1 || s.sat[v] > s.sat[pick] ||
          (s.sat[v] == s.sat[pick] &&
           (g.weight(v) > g.weight(pick) ||
            (g.weight(v) == g.weight(pick) && v < pick)))) {
        pick = v;
      }
    }
    const int c = s.seen[pick].first_unset(colors + 1);
    if (c == colors) {
      s.class_max[c] = g.weight(pick);
      ++colors;
    } else {
      s.class_max[c] = std::max(s.class_max[c], g.weight(pick));
    }
    s.color[pick] = c;
    g.neighbors(pick).for_each([&](int u) {
      if (alive.test(u) && s.color[u] == -1 && !s.seen[u].test(c)) {
        s.seen[u].set(c);
        ++s.sat[u];
      }
    });
  }
  return colors;
}

// Shared branch-and-bound core for the clique and max-overlap searches.
// Works in the rule's accumulator space (sum of w, or sum of w^2), where
// contributions add and ordering matches the combined budget's.
class Searcher {
 public:
  Searcher(const QueryGraph& g, const Workload* w, const CompositionRule& rule,
           const SearchBudget& budget)
      : g_(g),
        workload_(w),
        rule_(rule),
        interval_(budget.check_interval),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      budget.deadline)) {
    if (!(budget.deadline.count() > 0.0)) {
      throw InvalidArgumentError("search deadline must be positive");
    }
    if (interval_ == 0) {
      throw InvalidArgumentError("deadline check interval must be >= 1");
    }
  }

  OverlapBound run() {
    const int t = g_.vertex_count();
    Bitset alive = Bitset::all(t);
    double root_ub = 0.0;
    for (int v = 0; v < t; ++v) root_ub += rule_.to_accumulator(g_.weight(v));
    search(std::move(alive), 0.0, root_ub);
    return make_bound(false);
  }

 private:
  BoundKind kind() const {
    return workload_ ? BoundKind::kExactOverlap : BoundKind::kExactClique;
  }

  OverlapBound make_bound(bool timed_out) const {
    OverlapBound b;
    b.value = rule_.from_accumulator(best_acc_);
    b.kind = kind();
    b.timed_out = timed_out;
    for (int v : best_) b.witness.push_back(g_.vertex_id(v));
    return b;
  }

  void poll_deadline() {
    if (++nodes_ % interval_ != 0) return;
    if (std::chrono::steady_clock::now() < deadline_) return;
    throw TimeoutError(
        std::string(workload_ ? "max_overlap" : "max_weight_clique") +
            ": deadline exceeded after " + std::to_string(nodes_) +
            " nodes; best clique so far is only a lower bound and is UNSAFE "
            "as a privacy budget",
        make_bound(true));
  }

  // Max-degree vertex of the residual graph; ties broken by larger weight,
  // then lower index.
  int pick_branch_vertex(const Bitset& alive) const {
    int pick = -1;
    int pick_deg = -1;
    alive.for_each([&](int v) {
      const int deg = g_.neighbors(v).count_and(alive);
      if (deg > pick_deg ||
          (deg == pick_deg && g_.weight(v) > g_.weight(pick))) {
        pick = v;
        pick_deg = deg;
      }
    });
    return pick;
  }

  double coloring_bound_acc(const Bitset& alive) {
    const int colors = dsatur_color(g_, alive, scratch_);
    double acc = 0.0;
    for (int c = 0; c < colors; ++c) acc += rule_.to_accumulator(scratch_.class_max[c]);
    return acc;
  }

  void search(Bitset alive, double x_acc, double ub_acc) {
    while (true) {
      poll_deadline();
      if (!alive.any()) {
        if (x_acc > best_acc_) {
          best_acc_ = x_acc;
          best_ = x_;
        }
        return;
      }
      ub_acc = std::min(ub_acc, x_acc + coloring_bound_acc(alive));
      if (ub_acc <= best_acc_ + kPruneEps) return;

      const int q = pick_branch_vertex(alive);

      // Include branch. In overlap mode a subset whose joint coverage is
      // empty is skipped outright: coverage is monotone under inclusion,
      // so no superset can become feasible again.
      const bool feasible =
          workload_ == nullptr || coverage_.try_push(workload_->query(q));
      if (feasible) {
        Bitset child = alive;
        child.intersect_with(g_.neighbors(q));
        x_.push_back(q);
        search(std::move(child), x_acc + rule_.to_accumulator(g_.weight(q)), ub_acc);
        x_.pop_back();
        if (workload_) coverage_.pop(workload_->query(q));
      }

      // The include branch may have raised the incumbent up to this node's
      // upper bound; the exclude branch is then dominated.
      if (ub_acc <= best_acc_ + kPruneEps) return;

      alive.reset(q);  // exclude branch, handled iteratively
    }
  }

  const QueryGraph& g_;
  const Workload* workload_;
  const CompositionRule& rule_;
  const std::uint64_t interval_;
  const std::chrono::steady_clock::time_point deadline_;

  std::uint64_t nodes_ = 0;
  double best_acc_ = 0.0;
  std::vector<int> best_;
  std::vector<int> x_;
  CoverageStack coverage_;
  ColoringScratch scratch_;
};

std::vector<int> witness_indices(const QueryGraph& g, const OverlapBound& b) {
  std::unordered_map<std::string_view, int> index_of;
  for (int i = 0; i < g.vertex_count(); ++i) index_of.emplace(g.vertex_id(i), i);
  std::vector<int> idx;
  for (const auto& id : b.witness) idx.push_back(index_of.at(id));
  return idx;
}

void verify_pairwise_adjacent(const QueryGraph& g, const std::vector<int>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (!g.adjacent(vs[a], vs[b])) {
        throw Error("internal error: returned witness is not a clique");
      }
    }
  }
}

void verify_combined_value(const QueryGraph& g, const CompositionRule& rule,
                           const std::vector<int>& vs, double value) {
  double acc = 0.0;
  for (int v : vs) acc += rule.to_accumulator(g.weight(v));
  if (std::fabs(rule.from_accumulator(acc) - value) > kVerifyEps) {
    throw Error("internal error: witness weight does not match reported value");
  }
}

}  // namespace

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::kExactOverlap:
      return "exact_overlap";
    case BoundKind::kExactClique:
      return "exact_clique";
    case BoundKind::kApproxChromatic:
      return "approx_chromatic";
  }
  return "unknown";
}

OverlapBound max_weight_clique(const QueryGraph& g, const CompositionRule& comp,
                               const SearchBudget& budget) {
  if (g.vertex_count() == 0) {
    throw InvalidArgumentError("max_weight_clique requires a nonempty graph");
  }
  Searcher searcher(g, nullptr, comp, budget);
  OverlapBound bound = searcher.run();
  const auto idx = witness_indices(g, bound);
  verify_pairwise_adjacent(g, idx);
  verify_combined_value(g, comp, idx, bound.value);
  return bound;
}

OverlapBound max_overlap(const Workload& w, const QueryGraph& g,
                         const CompositionRule& comp, const SearchBudget& budget) {
  if (w.query_count() == 0) {
    throw InvalidArgumentError("max_overlap requires a nonempty workload");
  }
  if (g.vertex_count() != w.query_count()) {
    throw InvalidArgumentError("max_overlap: graph was not built from this workload");
  }
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (g.vertex_id(i) != w.query(i).id()) {
      throw InvalidArgumentError("max_overlap: graph was not built from this workload");
    }
  }
  Searcher searcher(g, &w, comp, budget);
  OverlapBound bound = searcher.run();
  const auto idx = witness_indices(g, bound);
  verify_pairwise_adjacent(g, idx);
  verify_combined_value(g, comp, idx, bound.value);
  if (!idx.empty() && !subset_coverage_nonempty(w, idx)) {
    throw Error("internal error: returned witness has empty joint coverage");
  }
  return bound;
}

OverlapBound dsatur_coloring(const QueryGraph& g, const CompositionRule& comp) {
  OverlapBound b;
  b.kind = BoundKind::kApproxChromatic;
  const int t = g.vertex_count();
  if (t == 0) return b;

  ColoringScratch scratch;
  const Bitset alive = Bitset::all(t);
  const int colors = dsatur_color(g, alive, scratch);

  double acc = 0.0;
  for (int c = 0; c < colors; ++c) acc += comp.to_accumulator(scratch.class_max[c]);
  b.value = comp.from_accumulator(acc);
  b.color_classes.assign(colors, {});
  for (int v = 0; v < t; ++v) {
    b.color_classes[scratch.color[v]].push_back(g.vertex_id(v));
  }
  // A proper coloring never puts two overlapping queries in one class.
  for (int v = 0; v < t; ++v) {
    g.neighbors(v).for_each([&](int u) {
      if (scratch.color[u] == scratch.color[v]) {
        throw Error("internal error: coloring is not proper");
      }
    });
  }
  return b;
}

}  // namespace parcomp
