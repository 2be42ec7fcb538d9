#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parcomp/domain.hpp"
#include "parcomp/rng.hpp"

namespace parcomp {

enum class MechanismKind { kLaplace, kGaussian };

const char* mechanism_name(MechanismKind kind);

// One noisy query answer. `scale` is the Laplace scale b or the Gaussian
// standard deviation, always > 0.
struct NoisyAnswer {
  std::string query_id;
  std::int64_t true_count = 0;
  double noisy_value = 0.0;
  double scale = 0.0;
  MechanismKind mechanism = MechanismKind::kLaplace;
};

// Sparse histogram over a domain: distinct rows with positive counts.
// Queries are evaluated by summing the counts of covered rows, so cost
// scales with the data, never with the domain.
class DataSet {
 public:
  using Row = std::vector<std::uint32_t>;

  // Validates rows against `d` and aggregates duplicate rows by summing.
  DataSet(const Domain& d, std::vector<std::pair<Row, std::uint64_t>> rows);

  static DataSet empty(const Domain& d) { return DataSet(d, {}); }

  // CSV with a header of all attribute names in domain order plus "count".
  // Cells hold value labels (where the attribute defines labels) or plain
  // value indices; the count column holds non-negative integers. No
  // quoting; cells must not contain commas. Duplicate rows aggregate.
  static DataSet from_csv(std::istream& in, const Domain& d,
                          std::string_view source_name = "<stream>");
  static DataSet load_csv_file(const std::string& path, const Domain& d);

  // Same schema as from_csv, rows in lexicographic order.
  void write_csv(std::ostream& out) const;

  std::size_t distinct_rows() const { return rows_.size(); }
  std::uint64_t total_count() const { return total_; }
  const std::vector<std::pair<Row, std::uint64_t>>& rows() const { return rows_; }

  // Number of data rows the query covers.
  std::int64_t evaluate(const PredicateQuery& q) const;

 private:
  std::vector<std::pair<Row, std::uint64_t>> rows_;  // sorted by row
  std::vector<std::string> attribute_names_;
  std::vector<std::vector<std::string>> attribute_labels_;
  std::uint64_t total_ = 0;
};

// Draws one Laplace(0, scale) or Normal(0, sigma) variate. Exposed so the
// calibration of the answer functions can be tested against raw samples.
double sample_laplace(SplitMix64& rng, double scale);
double sample_gaussian(SplitMix64& rng, double sigma);

// q(D) plus Laplace noise of scale sensitivity/eps. Fixed seeds give
// bit-identical answers on every platform.
NoisyAnswer laplace_answer(const PredicateQuery& q, const DataSet& data, double eps,
                           double sensitivity, std::uint64_t rng_seed);

// q(D) plus Gaussian noise of standard deviation sensitivity/mu.
NoisyAnswer gaussian_answer(const PredicateQuery& q, const DataSet& data, double mu,
                            double sensitivity, std::uint64_t rng_seed);

// (1/t) * sum |noisy - true| over the answers; requires at least one.
double average_l1_error(std::span<const NoisyAnswer> answers);

}  // namespace parcomp
