#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "parcomp/domain.hpp"
#include "parcomp/error.hpp"
#include "support.hpp"

using namespace parcomp;

namespace {

Predicate pred(int attr, std::uint32_t universe, std::vector<std::uint32_t> vals) {
  return Predicate{attr, ValueSet(universe, std::move(vals))};
}

}  // namespace

TEST_CASE("attribute validation") {
  CHECK_THROWS_AS(Attribute("", 3), InvalidArgumentError);
  CHECK_THROWS_AS(Attribute("a", 0), InvalidArgumentError);
  CHECK_THROWS_AS(Attribute("a", 2, {"x"}), InvalidArgumentError);
  CHECK_THROWS_AS((Attribute("a", 2, {"x", "x"})), InvalidArgumentError);
  const Attribute ok("Postcode", 2, {"A", "B"});
  CHECK(ok.label_index("B") == 1);
  CHECK_FALSE(ok.label_index("C").has_value());
}

TEST_CASE("domain validation and size tracking") {
  CHECK_THROWS_AS(Domain(std::vector<Attribute>{}), InvalidArgumentError);
  CHECK_THROWS_AS((Domain({Attribute("a", 2), Attribute("a", 3)})),
                  InvalidArgumentError);

  const Domain d({Attribute("a", 10), Attribute("b", 5)});
  CHECK(d.log10_size() == doctest::Approx(std::log10(50.0)));
  CHECK(d.exact_size() == 50);
  CHECK(d.attribute_index("b") == 1);
  CHECK_FALSE(d.attribute_index("zzz").has_value());

  // 10^40 rows: representable only in logs.
  std::vector<Attribute> big;
  for (int i = 0; i < 40; ++i) big.emplace_back("a" + std::to_string(i), 10);
  const Domain huge(std::move(big));
  CHECK(huge.log10_size() == doctest::Approx(40.0));
  CHECK_FALSE(huge.exact_size().has_value());
}

TEST_CASE("value set canonicalization, dense and sparse") {
  const ValueSet dense(4, {2, 0, 2});
  CHECK(dense.is_dense());
  CHECK(dense.size() == 2);
  CHECK(dense.contains(0));
  CHECK(dense.contains(2));
  CHECK_FALSE(dense.contains(1));
  CHECK(dense.indices() == std::vector<std::uint32_t>{0, 2});

  const ValueSet sparse(1'000'000, {999'999, 5, 5});
  CHECK_FALSE(sparse.is_dense());
  CHECK(sparse.size() == 2);
  CHECK(sparse.contains(999'999));
  CHECK_FALSE(sparse.contains(6));

  CHECK_THROWS_AS(ValueSet(4, {4}), InvalidArgumentError);
  CHECK(ValueSet::all(7).full());
  CHECK(ValueSet::none(7).empty());
}

TEST_CASE("value set intersection") {
  const ValueSet a(10, {1, 3, 5});
  const ValueSet b(10, {5, 7});
  CHECK(a.intersects(b));
  CHECK(a.intersect(b).indices() == std::vector<std::uint32_t>{5});
  const ValueSet c(10, {0, 2});
  CHECK_FALSE(a.intersects(c));
  CHECK(a.intersect(c).empty());

  const ValueSet big1(100'000, {10, 50'000, 99'999});
  const ValueSet big2(100'000, {50'000});
  CHECK(big1.intersects(big2));
  CHECK(big1.intersect(big2).size() == 1);

  CHECK_THROWS_AS(a.intersects(ValueSet(11, {1})), InvalidArgumentError);
}

TEST_CASE("predicate query validation and shape") {
  CHECK_THROWS_AS(PredicateQuery("q", 0.0, {}), InvalidArgumentError);
  CHECK_THROWS_AS(PredicateQuery("q", -1.0, {}), InvalidArgumentError);
  CHECK_THROWS_AS(
      (PredicateQuery("q", 1.0, {pred(0, 2, {0}), pred(0, 2, {1})})),
      InvalidArgumentError);

  const PredicateQuery q("q", 1.0, {pred(2, 4, {1}), pred(0, 2, {0})});
  CHECK(q.predicates()[0].attribute_index == 0);
  CHECK(q.predicates()[1].attribute_index == 2);
  CHECK(q.predicate_for(2) != nullptr);
  CHECK(q.predicate_for(1) == nullptr);
  CHECK_FALSE(q.is_contradiction());
  CHECK(PredicateQuery("c", 1.0, {pred(0, 2, {})}).is_contradiction());
}

TEST_CASE("workload validation") {
  Domain d({Attribute("a", 2)});
  std::vector<PredicateQuery> dup;
  dup.emplace_back("q", 1.0, std::vector<Predicate>{});
  dup.emplace_back("q", 1.0, std::vector<Predicate>{});
  CHECK_THROWS_AS(Workload(d, std::move(dup)), InvalidArgumentError);

  std::vector<PredicateQuery> bad_attr;
  bad_attr.emplace_back("q", 1.0, std::vector<Predicate>{pred(1, 2, {0})});
  CHECK_THROWS_AS(Workload(d, std::move(bad_attr)), InvalidArgumentError);

  std::vector<PredicateQuery> bad_universe;
  bad_universe.emplace_back("q", 1.0, std::vector<Predicate>{pred(0, 3, {0})});
  CHECK_THROWS_AS(Workload(d, std::move(bad_universe)), InvalidArgumentError);

  const Workload w = testsupport::path_example_workload();
  CHECK(w.query_count() == 3);
  CHECK(w.query_index("q2") == 1);
  CHECK_FALSE(w.query_index("nope").has_value());
}

TEST_CASE("predicate disjointness on one attribute") {
  // Same attribute, complementary singletons: disjoint.
  CHECK(predicates_disjoint(pred(1, 2, {0}), pred(1, 2, {1})));
  // A tautology overlaps every non-empty predicate.
  CHECK_FALSE(predicates_disjoint(pred(1, 2, {0, 1}), pred(1, 2, {1})));
  // A contradiction is disjoint from everything, tautologies included.
  CHECK(predicates_disjoint(pred(1, 2, {}), pred(1, 2, {0, 1})));
  // Mismatched attributes are a caller bug.
  CHECK_THROWS_AS(predicates_disjoint(pred(0, 2, {0}), pred(1, 2, {0})),
                  InvalidArgumentError);
}

TEST_CASE("query overlap on the two-attribute example") {
  const Workload w = testsupport::path_example_workload();
  const auto& q1 = w.query(0);
  const auto& q2 = w.query(1);
  const auto& q3 = w.query(2);
  CHECK(queries_overlap(q1, q2));
  CHECK(queries_overlap(q2, q3));
  CHECK_FALSE(queries_overlap(q1, q3));
  CHECK(queries_overlap(q1, q1));  // non-contradiction overlaps itself

  const PredicateQuery contra("c", 1.0, {pred(0, 2, {})});
  CHECK_FALSE(queries_overlap(contra, q2));
  CHECK_FALSE(queries_overlap(contra, contra));
}

TEST_CASE("joint coverage of subsets") {
  const Workload w = testsupport::path_example_workload();
  const std::vector<int> q12{0, 1};
  const std::vector<int> q13{0, 2};
  CHECK(subset_coverage_nonempty(w, q12));
  CHECK_FALSE(subset_coverage_nonempty(w, q13));

  // Pairwise-overlapping triple with empty joint coverage.
  const Workload tri = testsupport::one_attribute_three_values();
  CHECK(subset_coverage_nonempty(tri, std::vector<int>{0, 1}));
  CHECK(subset_coverage_nonempty(tri, std::vector<int>{0, 2}));
  CHECK(subset_coverage_nonempty(tri, std::vector<int>{1, 2}));
  CHECK_FALSE(subset_coverage_nonempty(tri, std::vector<int>{0, 1, 2}));

  CHECK_THROWS_AS(subset_coverage_nonempty(w, std::vector<int>{}),
                  InvalidArgumentError);
}

TEST_CASE("query covers row") {
  const Workload w = testsupport::path_example_workload();
  const PredicateQuery taut("t", 1.0, {});
  const std::vector<std::uint32_t> row_ay{0, 0};
  const std::vector<std::uint32_t> row_by{1, 0};
  CHECK(query_covers_row(taut, row_ay, w.domain()));
  CHECK(query_covers_row(w.query(0), row_ay, w.domain()));
  CHECK_FALSE(query_covers_row(w.query(0), row_by, w.domain()));
  CHECK_THROWS_AS(
      query_covers_row(taut, std::vector<std::uint32_t>{0}, w.domain()),
      InvalidArgumentError);
  CHECK_THROWS_AS(
      (query_covers_row(taut, std::vector<std::uint32_t>{0, 2}, w.domain())),
      InvalidArgumentError);
}

TEST_CASE("overlap is symmetric and matches pair coverage on random instances") {
  SplitMix64 rng(2024);
  testsupport::SmallWorkloadParams params;
  for (int iter = 0; iter < 40; ++iter) {
    const Workload w = testsupport::random_small_workload(rng, params);
    for (int i = 0; i < w.query_count(); ++i) {
      for (int j = 0; j < w.query_count(); ++j) {
        const bool ab = queries_overlap(w.query(i), w.query(j));
        CHECK(ab == queries_overlap(w.query(j), w.query(i)));
        if (i != j) {
          CHECK(ab == subset_coverage_nonempty(w, std::vector<int>{i, j}));
        }
      }
    }
  }
}

TEST_CASE("joint coverage is down-closed and matches row enumeration") {
  SplitMix64 rng(77);
  testsupport::SmallWorkloadParams params;
  params.max_queries = 6;
  for (int iter = 0; iter < 25; ++iter) {
    const Workload w = testsupport::random_small_workload(rng, params);
    const int t = w.query_count();
    const auto rows = w.domain().exact_size();
    REQUIRE(rows.has_value());

    for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < t; ++i) {
        if (mask & (1u << i)) subset.push_back(i);
      }
      const bool feasible = subset_coverage_nonempty(w, subset);

      // Independent answer: walk every row of the (small) domain.
      bool found = false;
      std::vector<std::uint32_t> row(w.domain().attribute_count(), 0);
      for (std::uint64_t r = 0; r < *rows && !found; ++r) {
        std::uint64_t rem = r;
        for (int a = 0; a < w.domain().attribute_count(); ++a) {
          row[a] = static_cast<std::uint32_t>(
              rem % w.domain().attribute(a).cardinality());
          rem /= w.domain().attribute(a).cardinality();
        }
        bool all = true;
        for (const int qi : subset) {
          if (!query_covers_row(w.query(qi), row, w.domain())) {
            all = false;
            break;
          }
        }
        found = all;
      }
      CHECK(feasible == found);

      // Down-closure: any feasible set keeps feasibility when shrunk.
      if (feasible && subset.size() > 1) {
        for (std::size_t drop = 0; drop < subset.size(); ++drop) {
          std::vector<int> smaller;
          for (std::size_t k = 0; k < subset.size(); ++k) {
            if (k != drop) smaller.push_back(subset[k]);
          }
          CHECK(subset_coverage_nonempty(w, smaller));
        }
      }
    }
  }
}
