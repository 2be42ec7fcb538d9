#include "parcomp/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "parcomp/normal.hpp"

namespace parcomp {

const char* mechanism_name(MechanismKind kind) {
  return kind == MechanismKind::kLaplace ? "laplace" : "gaussian";
}

// ---------------------------------------------------------------------------
// DataSet

DataSet::DataSet(const Domain& d, std::vector<std::pair<Row, std::uint64_t>> rows) {
  for (const auto& a : d.attributes()) {
    attribute_names_.push_back(a.name());
    attribute_labels_.push_back(a.labels());
  }
  std::map<Row, std::uint64_t> agg;
  const int m = d.attribute_count();
  for (auto& [row, count] : rows) {
    if (static_cast<int>(row.size()) != m) {
      throw InvalidArgumentError("dataset row has " + std::to_string(row.size()) +
                                 " values, domain has " + std::to_string(m) +
                                 " attributes");
    }
    for (int i = 0; i < m; ++i) {
      if (row[i] >= d.attribute(i).cardinality()) {
        throw InvalidArgumentError("dataset row value " + std::to_string(row[i]) +
                                   " out of range for attribute '" +
                                   d.attribute(i).name() + "'");
      }
    }
    if (count == 0) continue;
    agg[std::move(row)] += count;
    total_ += count;
  }
  rows_.assign(agg.begin(), agg.end());
}

DataSet DataSet::from_csv(std::istream& in, const Domain& d,
                          std::string_view source_name) {
  auto fail = [&](int line, const std::string& msg) -> void {
    throw ParseError(std::string(source_name) + ":" + std::to_string(line) + ": " + msg);
  };
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = s.find(',', start);
      cells.push_back(s.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return cells;
  };

  const int m = d.attribute_count();
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) fail(1, "missing header line");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split(line);
  if (static_cast<int>(header.size()) != m + 1) {
    fail(line_no, "header must list all " + std::to_string(m) +
                      " attribute names plus a count column");
  }
  for (int i = 0; i < m; ++i) {
    if (header[i] != d.attribute(i).name()) {
      fail(line_no, "header column " + std::to_string(i + 1) + " is '" + header[i] +
                        "', expected attribute '" + d.attribute(i).name() + "'");
    }
  }
  if (header[m] != "count") fail(line_no, "last header column must be 'count'");

  std::vector<std::pair<Row, std::uint64_t>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (static_cast<int>(cells.size()) != m + 1) {
      fail(line_no, "expected " + std::to_string(m + 1) + " columns, found " +
                        std::to_string(cells.size()));
    }
    Row row(m);
    for (int i = 0; i < m; ++i) {
      const Attribute& attr = d.attribute(i);
      if (auto idx = attr.label_index(cells[i])) {
        row[i] = *idx;
        continue;
      }
      try {
        std::size_t used = 0;
        const long long v = std::stoll(cells[i], &used);
        if (used != cells[i].size() || v < 0 ||
            v >= static_cast<long long>(attr.cardinality())) {
          throw std::invalid_argument("range");
        }
        row[i] = static_cast<std::uint32_t>(v);
      } catch (const std::exception&) {
        fail(line_no, "cell '" + cells[i] + "' is neither a label nor a valid index "
                          "for attribute '" + attr.name() + "'");
      }
    }
    std::uint64_t count = 0;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(cells[m], &used);
      if (used != cells[m].size() || v < 0) throw std::invalid_argument("range");
      count = static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      fail(line_no, "count '" + cells[m] + "' is not a non-negative integer");
    }
    rows.emplace_back(std::move(row), count);
  }
  try {
    return DataSet(d, std::move(rows));
  } catch (const InvalidArgumentError& e) {
    throw ParseError(std::string(source_name) + ": " + e.what());
  }
}

DataSet DataSet::load_csv_file(const std::string& path, const Domain& d) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file for reading");
  return from_csv(in, d, path);
}

void DataSet::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < attribute_names_.size(); ++i) {
    out << attribute_names_[i] << ',';
  }
  out << "count\n";
  for (const auto& [row, count] : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!attribute_labels_[i].empty()) {
        out << attribute_labels_[i][row[i]];
      } else {
        out << row[i];
      }
      out << ',';
    }
    out << count << '\n';
  }
}

std::int64_t DataSet::evaluate(const PredicateQuery& q) const {
  std::uint64_t sum = 0;
  for (const auto& [row, count] : rows_) {
    bool covers = true;
    for (const Predicate& p : q.predicates()) {
      if (!p.values.contains(row[p.attribute_index])) {
        covers = false;
        break;
      }
    }
    if (covers) sum += count;
  }
  return static_cast<std::int64_t>(sum);
}

// ---------------------------------------------------------------------------
// Noise

double sample_laplace(SplitMix64& rng, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidArgumentError("Laplace scale must be finite and > 0");
  }
  const double u = rng.next_open_double() - 0.5;  // (-0.5, 0.5)
  const double mag = -std::log(1.0 - 2.0 * std::fabs(u));
  return (u < 0.0 ? -scale : scale) * mag;
}

double sample_gaussian(SplitMix64& rng, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgumentError("Gaussian sigma must be finite and > 0");
  }
  return sigma * normal_quantile(rng.next_open_double());
}

namespace {

void check_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw InvalidArgumentError(std::string(what) + " must be finite and > 0");
  }
}

}  // namespace

NoisyAnswer laplace_answer(const PredicateQuery& q, const DataSet& data, double eps,
                           double sensitivity, std::uint64_t rng_seed) {
  check_positive(eps, "eps");
  check_positive(sensitivity, "sensitivity");
  const double scale = sensitivity / eps;
  SplitMix64 rng(rng_seed);
  NoisyAnswer a;
  a.query_id = q.id();
  a.true_count = data.evaluate(q);
  a.scale = scale;
  a.mechanism = MechanismKind::kLaplace;
  a.noisy_value = static_cast<double>(a.true_count) + sample_laplace(rng, scale);
  return a;
}

NoisyAnswer gaussian_answer(const PredicateQuery& q, const DataSet& data, double mu,
                            double sensitivity, std::uint64_t rng_seed) {
  check_positive(mu, "mu");
  check_positive(sensitivity, "sensitivity");
  const double sigma = sensitivity / mu;
  SplitMix64 rng(rng_seed);
  NoisyAnswer a;
  a.query_id = q.id();
  a.true_count = data.evaluate(q);
  a.scale = sigma;
  a.mechanism = MechanismKind::kGaussian;
  a.noisy_value = static_cast<double>(a.true_count) + sample_gaussian(rng, sigma);
  return a;
}

double average_l1_error(std::span<const NoisyAnswer> answers) {
  if (answers.empty()) {
    throw InvalidArgumentError("average_l1_error requires at least one answer");
  }
  double sum = 0.0;
  for (const auto& a : answers) {
    sum += std::fabs(a.noisy_value - static_cast<double>(a.true_count));
  }
  return sum / static_cast<double>(answers.size());
}

}  // namespace parcomp
