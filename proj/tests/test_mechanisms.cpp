#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "parcomp/error.hpp"
#include "parcomp/mechanisms.hpp"
#include "parcomp/rng.hpp"
#include "support.hpp"

using namespace parcomp;

namespace {

Domain postcode_native() {
  return Domain({Attribute("Postcode", 2, {"A", "B"}),
                 Attribute("Native", 2, {"Y", "N"})});
}

DataSet example_data() {
  // Rows: (A,Y) x 3, (A,N) x 1, (B,N) x 2.
  return DataSet(postcode_native(),
                 {{{0, 0}, 3}, {{0, 1}, 1}, {{1, 1}, 2}});
}

}  // namespace

TEST_CASE("dataset aggregates duplicates and validates rows") {
  const DataSet d(postcode_native(), {{{0, 0}, 2}, {{0, 0}, 3}, {{1, 0}, 0}});
  CHECK(d.distinct_rows() == 1);  // zero-count row dropped, duplicates merged
  CHECK(d.total_count() == 5);

  CHECK_THROWS_AS((DataSet(postcode_native(), {{{0}, 1}})),
                  InvalidArgumentError);
  CHECK_THROWS_AS((DataSet(postcode_native(), {{{0, 2}, 1}})),
                  InvalidArgumentError);
}

TEST_CASE("query evaluation sums covered counts") {
  const DataSet data = example_data();
  const Workload w = testsupport::path_example_workload();
  CHECK(data.evaluate(w.query(0)) == 3);  // Postcode=A and Native=Y
  CHECK(data.evaluate(w.query(1)) == 6);  // any Postcode
  CHECK(data.evaluate(w.query(2)) == 2);  // Postcode=B and Native=N
  const PredicateQuery contra("c", 1.0,
                              {Predicate{0, ValueSet(2, {})}});
  CHECK(data.evaluate(contra) == 0);
}

TEST_CASE("dataset csv round trip with labels") {
  const DataSet data = example_data();
  std::ostringstream out;
  data.write_csv(out);
  CHECK(out.str() == "Postcode,Native,count\nA,Y,3\nA,N,1\nB,N,2\n");

  std::istringstream in(out.str());
  const DataSet back = DataSet::from_csv(in, postcode_native(), "round");
  CHECK(back.rows() == data.rows());
}

TEST_CASE("dataset csv accepts indices, blank lines and CRLF") {
  std::istringstream in("Postcode,Native,count\r\nA,1,2\n\n1,N,4\n");
  const DataSet d = DataSet::from_csv(in, postcode_native(), "mixed");
  CHECK(d.total_count() == 6);
  CHECK(d.distinct_rows() == 2);
}

TEST_CASE("dataset csv rejects malformed input with source and line") {
  const auto expect_error = [](const std::string& text) {
    std::istringstream in(text);
    try {
      DataSet::from_csv(in, postcode_native(), "bad.csv");
      FAIL("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("bad.csv") != std::string::npos);
    }
  };
  expect_error("wrong,header,count\nA,Y,1\n");
  expect_error("Postcode,Native\nA,Y\n");
  expect_error("Postcode,Native,count\nA,Y\n");
  expect_error("Postcode,Native,count\nA,Y,-3\n");
  expect_error("Postcode,Native,count\nA,Y,x\n");
  expect_error("Postcode,Native,count\nC,Y,1\n");
  expect_error("Postcode,Native,count\nA,Y,1,extra\n");
  expect_error("");
}

TEST_CASE("laplace answers are reproducible and calibrated") {
  const DataSet data = example_data();
  const Workload w = testsupport::path_example_workload();
  const NoisyAnswer a = laplace_answer(w.query(0), data, 0.5, 1.0, 42);
  const NoisyAnswer b = laplace_answer(w.query(0), data, 0.5, 1.0, 42);
  CHECK(a.noisy_value == b.noisy_value);  // bit-identical
  CHECK(a.true_count == 3);
  CHECK(a.scale == 2.0);  // sensitivity / eps
  CHECK(a.mechanism == MechanismKind::kLaplace);

  const NoisyAnswer c = laplace_answer(w.query(0), data, 0.5, 1.0, 43);
  CHECK(c.noisy_value != a.noisy_value);

  // Near-infinite budget: noise vanishes.
  const NoisyAnswer tight = laplace_answer(w.query(0), data, 1e12, 1.0, 7);
  CHECK(std::abs(tight.noisy_value - 3.0) < 1e-9);

  CHECK_THROWS_AS(laplace_answer(w.query(0), data, 0.0, 1.0, 1),
                  InvalidArgumentError);
  CHECK_THROWS_AS(laplace_answer(w.query(0), data, 1.0, -1.0, 1),
                  InvalidArgumentError);
}

TEST_CASE("gaussian answers are reproducible and calibrated") {
  const DataSet data = example_data();
  const Workload w = testsupport::path_example_workload();
  const NoisyAnswer a = gaussian_answer(w.query(1), data, 1.0, 1.0, 11);
  CHECK(a.scale == 1.0);  // sigma = sensitivity / mu
  CHECK(a.true_count == 6);
  CHECK(a.mechanism == MechanismKind::kGaussian);
  CHECK(gaussian_answer(w.query(1), data, 1.0, 1.0, 11).noisy_value ==
        a.noisy_value);
}

TEST_CASE("empty dataset answers are pure noise around zero") {
  const DataSet data = DataSet::empty(postcode_native());
  const Workload w = testsupport::path_example_workload();
  const NoisyAnswer a = laplace_answer(w.query(0), data, 1.0, 1.0, 3);
  CHECK(a.true_count == 0);
  CHECK(a.noisy_value != 0.0);
}

TEST_CASE("sample means match analytic expectations (smoke scale)") {
  SplitMix64 rng(1001);
  const int n = 200'000;
  double lap_abs = 0.0, gau_abs = 0.0;
  for (int i = 0; i < n; ++i) {
    lap_abs += std::abs(sample_laplace(rng, 2.0));
    gau_abs += std::abs(sample_gaussian(rng, 1.5));
  }
  lap_abs /= n;
  gau_abs /= n;
  // E|Laplace(b)| = b; E|N(0, sigma^2)| = sigma*sqrt(2/pi). 1% tolerance at
  // this sample size (the acceptance suite tightens this at 10^6 draws).
  CHECK(lap_abs == doctest::Approx(2.0).epsilon(0.01));
  CHECK(gau_abs ==
        doctest::Approx(1.5 * std::sqrt(2.0 / std::numbers::pi)).epsilon(0.01));
}

TEST_CASE("average l1 error") {
  std::vector<NoisyAnswer> answers(3);
  answers[0].true_count = 10;
  answers[0].noisy_value = 12.0;
  answers[1].true_count = 5;
  answers[1].noisy_value = 4.0;
  answers[2].true_count = 0;
  answers[2].noisy_value = 0.0;
  CHECK(average_l1_error(answers) == doctest::Approx(1.0).epsilon(1e-15));
  const std::vector<NoisyAnswer> none;
  CHECK_THROWS_AS(average_l1_error(none), InvalidArgumentError);
}

TEST_CASE("sequential versus overlap-aware scale ratio") {
  // Homogeneous GDP split: budget 1 over t queries sequentially vs over the
  // overlap count: per-query sigma ratio is sqrt(t/count).
  const double t = 9, count = 6;
  const double seq_sigma = 1.0 / (1.0 / std::sqrt(t));
  const double opt_sigma = 1.0 / (1.0 / std::sqrt(count));
  CHECK(seq_sigma / opt_sigma == doctest::Approx(std::sqrt(t / count)));
}
