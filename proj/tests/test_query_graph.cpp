#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "parcomp/error.hpp"
#include "parcomp/query_graph.hpp"
#include "parcomp/rng.hpp"
#include "support.hpp"

using namespace parcomp;

namespace {

std::set<std::pair<std::string, std::string>> edge_id_set(const QueryGraph& g) {
  std::set<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < g.vertex_count(); ++i) {
    for (int j = i + 1; j < g.vertex_count(); ++j) {
      if (g.adjacent(i, j)) {
        auto a = g.vertex_id(i);
        auto b = g.vertex_id(j);
        if (b < a) std::swap(a, b);
        edges.emplace(a, b);
      }
    }
  }
  return edges;
}

}  // namespace

TEST_CASE("three-query example builds a path") {
  const QueryGraph g = build_query_graph(testsupport::path_example_workload());
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  const auto edges = edge_id_set(g);
  CHECK(edges.count({"q1", "q2"}) == 1);
  CHECK(edges.count({"q2", "q3"}) == 1);
}

TEST_CASE("six-query example has exactly the expected seven edges") {
  const QueryGraph g = build_query_graph(testsupport::hand_example_workload());
  const std::set<std::pair<std::string, std::string>> expected{
      {"q1", "q2"}, {"q1", "q4"}, {"q2", "q3"}, {"q2", "q4"},
      {"q2", "q6"}, {"q4", "q5"}, {"q3", "q5"}};
  std::set<std::pair<std::string, std::string>> want;
  for (auto [a, b] : expected) {
    if (b < a) std::swap(a, b);
    want.emplace(a, b);
  }
  CHECK(edge_id_set(g) == want);
  CHECK(g.edge_count() == 7);
}

TEST_CASE("pairwise-disjoint queries yield an edgeless graph") {
  const QueryGraph g = build_query_graph(testsupport::disjoint_workload(6));
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("tautology degree equals t - 1 minus contradiction count") {
  SplitMix64 rng(91);
  testsupport::SmallWorkloadParams params;
  for (int iter = 0; iter < 30; ++iter) {
    const Workload w = testsupport::random_small_workload(rng, params);
    const QueryGraph g = build_query_graph(w);
    int contradictions = 0;
    for (const auto& q : w.queries()) {
      if (q.is_contradiction()) ++contradictions;
    }
    for (int i = 0; i < w.query_count(); ++i) {
      if (w.query(i).predicates().empty()) {
        CHECK(g.degree(i) == w.query_count() - 1 - contradictions);
      }
    }
  }
}

TEST_CASE("graph construction is order-stable") {
  SplitMix64 rng(12);
  testsupport::SmallWorkloadParams params;
  params.unit_weights = false;
  for (int iter = 0; iter < 20; ++iter) {
    const Workload w = testsupport::random_small_workload(rng, params);
    std::vector<PredicateQuery> reversed(w.queries().rbegin(),
                                         w.queries().rend());
    const Workload wrev(w.domain(), std::move(reversed));
    CHECK(edge_id_set(build_query_graph(w)) ==
          edge_id_set(build_query_graph(wrev)));
  }
}

TEST_CASE("induced subgraphs") {
  const QueryGraph g = build_query_graph(testsupport::hand_example_workload());

  std::vector<std::string> all = g.vertex_ids();
  const QueryGraph same = induced_subgraph(g, all);
  CHECK(edge_id_set(same) == edge_id_set(g));

  const QueryGraph empty = induced_subgraph(g, std::vector<std::string>{});
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.edge_count() == 0);

  // Neighborhood of q2: the only edge inside it is q1--q4.
  const std::vector<std::string> n2{"q1", "q3", "q4", "q6"};
  const QueryGraph sub = induced_subgraph(g, n2);
  CHECK(sub.vertex_count() == 4);
  CHECK(sub.edge_count() == 1);
  CHECK(edge_id_set(sub).count({"q1", "q4"}) == 1);

  CHECK_THROWS_AS(induced_subgraph(g, std::vector<std::string>{"zzz"}),
                  InvalidArgumentError);
  CHECK_THROWS_AS(
      (induced_subgraph(g, std::vector<std::string>{"q1", "q1"})),
      InvalidArgumentError);
}

TEST_CASE("edge list export format") {
  const QueryGraph g = build_query_graph(testsupport::path_example_workload());
  std::ostringstream out;
  write_edge_list(g, out);
  CHECK(out.str() == "3 2\nq1 q2\nq2 q3\n");
}

TEST_CASE("graph constructor validates shape") {
  std::vector<std::string> ids{"a", "b"};
  std::vector<double> weights{1.0, 1.0};

  std::vector<Bitset> self_loop(2, Bitset(2));
  self_loop[0].set(0);
  CHECK_THROWS_AS(QueryGraph(ids, weights, self_loop), InvalidArgumentError);

  std::vector<Bitset> asym(2, Bitset(2));
  asym[0].set(1);  // a->b without b->a
  CHECK_THROWS_AS(QueryGraph(ids, weights, asym), InvalidArgumentError);

  std::vector<Bitset> ok(2, Bitset(2));
  ok[0].set(1);
  ok[1].set(0);
  const QueryGraph g(ids, weights, ok);
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(0) == 1);
  CHECK(g.adjacent(0, 1));
}
