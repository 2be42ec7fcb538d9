#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "parcomp/bitset.hpp"
#include "parcomp/domain.hpp"

namespace parcomp {

// Pairwise-overlap graph of a workload: one vertex per query (workload
// order), an edge wherever two queries can be satisfied by a common row.
// Adjacency is kept as per-vertex bitsets so searches can intersect
// neighborhoods in O(t/64) words. Immutable once built.
class QueryGraph {
 public:
  QueryGraph(std::vector<std::string> vertex_ids, std::vector<double> weights,
             std::vector<Bitset> adjacency);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::string& vertex_id(int i) const { return vertex_ids_[i]; }
  double weight(int i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }

  const Bitset& neighbors(int i) const { return adjacency_[i]; }
  bool adjacent(int i, int j) const { return adjacency_[i].test(j); }
  int degree(int i) const { return adjacency_[i].count(); }
  std::uint64_t edge_count() const { return edge_count_; }

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<double> weights_;
  std::vector<Bitset> adjacency_;
  std::uint64_t edge_count_ = 0;
};

// Builds the overlap graph with one pair test per query pair. Each test
// walks the pair's common attributes in increasing cardinality order and
// stops at the first disjoint value-set pair, so cheap attributes get the
// chance to prove disjointness before large ones are touched.
QueryGraph build_query_graph(const Workload& w);

// Subgraph on the listed vertex ids (kept in the given order), inheriting
// weights and edges. Unknown or repeated ids raise InvalidArgumentError.
QueryGraph induced_subgraph(const QueryGraph& g, std::span<const std::string> keep);

// Plain-text edge list: a header line "<vertex-count> <edge-count>",
// then one "id_i id_j" line per edge with i < j in vertex order.
void write_edge_list(const QueryGraph& g, std::ostream& out);

}  // namespace parcomp
