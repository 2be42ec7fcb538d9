#include "parcomp/query_graph.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>
#include <utility>

namespace parcomp {

QueryGraph::QueryGraph(std::vector<std::string> vertex_ids, std::vector<double> weights,
                       std::vector<Bitset> adjacency)
    : vertex_ids_(std::move(vertex_ids)),
      weights_(std::move(weights)),
      adjacency_(std::move(adjacency)) {
  const int t = vertex_count();
  if (static_cast<int>(weights_.size()) != t ||
      static_cast<int>(adjacency_.size()) != t) {
    throw InvalidArgumentError("query graph: ids, weights and adjacency sizes differ");
  }
  std::uint64_t twice_edges = 0;
  for (int i = 0; i < t; ++i) {
    if (adjacency_[i].size_bits() != t) {
      throw InvalidArgumentError("query graph: adjacency row has wrong width");
    }
    if (adjacency_[i].test(i)) {
      throw InvalidArgumentError("query graph: self-loops are not allowed");
    }
    twice_edges += static_cast<std::uint64_t>(adjacency_[i].count());
  }
  for (int i = 0; i < t; ++i) {
    for (int j = adjacency_[i].next_set_bit(i + 1); j != -1;
         j = adjacency_[i].next_set_bit(j + 1)) {
      if (!adjacency_[j].test(i)) {
        throw InvalidArgumentError("query graph: adjacency must be symmetric");
      }
    }
  }
  edge_count_ = twice_edges / 2;
}

QueryGraph build_query_graph(const Workload& w) {
  const int t = w.query_count();
  std::vector<std::string> ids;
  std::vector<double> weights;
  ids.reserve(t);
  weights.reserve(t);
  for (int i = 0; i < t; ++i) {
    ids.push_back(w.query(i).id());
    weights.push_back(w.query(i).weight());
  }

  // Per query: predicates reordered by ascending attribute cardinality.
  std::vector<std::vector<const Predicate*>> by_card(t);
  for (int i = 0; i < t; ++i) {
    auto& list = by_card[i];
    for (const Predicate& p : w.query(i).predicates()) list.push_back(&p);
    std::sort(list.begin(), list.end(), [&](const Predicate* a, const Predicate* b) {
      const auto ca = w.domain().attribute(a->attribute_index).cardinality();
      const auto cb = w.domain().attribute(b->attribute_index).cardinality();
      return ca != cb ? ca < cb : a->attribute_index < b->attribute_index;
    });
  }

  std::vector<Bitset> adj(t, Bitset(t));
  for (int i = 0; i < t; ++i) {
    if (w.query(i).is_contradiction()) continue;
    for (int j = i + 1; j < t; ++j) {
      if (w.query(j).is_contradiction()) continue;
      // Walk the shorter predicate list; either side's missing predicate is
      // a tautology and can never witness disjointness.
      const auto& probe =
          by_card[i].size() <= by_card[j].size() ? by_card[i] : by_card[j];
      const PredicateQuery& other =
          by_card[i].size() <= by_card[j].size() ? w.query(j) : w.query(i);
      bool overlap = true;
      for (const Predicate* p : probe) {
        if (const Predicate* q = other.predicate_for(p->attribute_index)) {
          if (!p->values.intersects(q->values)) {
            overlap = false;
            break;
          }
        }
      }
      if (overlap) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }
  return QueryGraph(std::move(ids), std::move(weights), std::move(adj));
}

QueryGraph induced_subgraph(const QueryGraph& g, std::span<const std::string> keep) {
  std::unordered_map<std::string_view, int> index_of;
  for (int i = 0; i < g.vertex_count(); ++i) index_of.emplace(g.vertex_id(i), i);

  std::vector<int> original;
  original.reserve(keep.size());
  std::vector<bool> taken(g.vertex_count(), false);
  for (const std::string& id : keep) {
    auto it = index_of.find(id);
    if (it == index_of.end()) {
      throw InvalidArgumentError("induced_subgraph: unknown vertex id '" + id + "'");
    }
    if (taken[it->second]) {
      throw InvalidArgumentError("induced_subgraph: vertex id '" + id + "' repeated");
    }
    taken[it->second] = true;
    original.push_back(it->second);
  }

  const int n = static_cast<int>(original.size());
  std::vector<std::string> ids(keep.begin(), keep.end());
  std::vector<double> weights(n);
  std::vector<Bitset> adj(n, Bitset(n));
  for (int a = 0; a < n; ++a) {
    weights[a] = g.weight(original[a]);
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent(original[a], original[b])) {
        adj[a].set(b);
        adj[b].set(a);
      }
    }
  }
  return QueryGraph(std::move(ids), std::move(weights), std::move(adj));
}

void write_edge_list(const QueryGraph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int i = 0; i < g.vertex_count(); ++i) {
    for (int j = g.neighbors(i).next_set_bit(i + 1); j != -1;
         j = g.neighbors(i).next_set_bit(j + 1)) {
      out << g.vertex_id(i) << ' ' << g.vertex_id(j) << '\n';
    }
  }
}

}  // namespace parcomp
