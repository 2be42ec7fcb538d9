#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "parcomp/bitset.hpp"
#include "parcomp/error.hpp"

namespace parcomp {

// One finite attribute of a data domain. Values are canonical indices
// 0..cardinality-1; labels, when present, give each index a display name.
class Attribute {
 public:
  Attribute(std::string name, std::uint32_t cardinality,
            std::vector<std::string> labels = {});

  const std::string& name() const { return name_; }
  std::uint32_t cardinality() const { return cardinality_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of `label`, or nullopt when the attribute has no such label.
  std::optional<std::uint32_t> label_index(std::string_view label) const;

  friend bool operator==(const Attribute&, const Attribute&) = default;

 private:
  std::string name_;
  std::uint32_t cardinality_;
  std::vector<std::string> labels_;
};

// Cross product of attributes. Sizes are tracked in log10 so astronomically
// large domains never need to be materialized as integers.
class Domain {
 public:
  explicit Domain(std::vector<Attribute> attributes);

  int attribute_count() const { return static_cast<int>(attributes_.size()); }
  const Attribute& attribute(int i) const { return attributes_[i]; }
  const std::vector<Attribute>& attributes() const { return attributes_; }
  std::optional<int> attribute_index(std::string_view name) const;

  double log10_size() const { return log10_size_; }

  // Exact number of rows when it fits in 63 bits, nullopt otherwise.
  std::optional<std::uint64_t> exact_size() const;

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.attributes_ == b.attributes_;
  }

 private:
  std::vector<Attribute> attributes_;
  std::unordered_map<std::string, int> index_by_name_;
  double log10_size_ = 0.0;
};

// Subset of one attribute's values. Backed by a bitset for small universes
// and by a sorted index array for large ones, so huge attributes only pay
// for the values actually named.
class ValueSet {
 public:
  static constexpr std::uint32_t kDenseUniverseLimit = 4096;

  // `values` may be unsorted and may contain duplicates; they are
  // canonicalized. Every value must be < universe.
  ValueSet(std::uint32_t universe, std::vector<std::uint32_t> values);

  static ValueSet all(std::uint32_t universe);
  static ValueSet none(std::uint32_t universe);

  std::uint32_t universe() const { return universe_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool full() const { return size_ == universe_; }
  bool is_dense() const { return dense_; }

  bool contains(std::uint32_t v) const;
  bool intersects(const ValueSet& other) const;
  ValueSet intersect(const ValueSet& other) const;

  // All member values in ascending order.
  std::vector<std::uint32_t> indices() const;

  friend bool operator==(const ValueSet&, const ValueSet&) = default;

 private:
  ValueSet() = default;
  void check_same_universe(const ValueSet& other) const;

  std::uint32_t universe_ = 0;
  std::size_t size_ = 0;
  bool dense_ = true;
  Bitset bits_;                         // dense backing
  std::vector<std::uint32_t> sorted_;   // sparse backing
};

// Restriction of one attribute to a value set. An empty set is legal and
// makes the enclosing query a contradiction (it covers no row).
struct Predicate {
  int attribute_index;
  ValueSet values;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

// Conjunction of per-attribute predicates; attributes without a predicate
// are unconstrained. Counts the rows of a data set that satisfy all
// predicates. `weight` is the query's privacy weight (> 0).
class PredicateQuery {
 public:
  PredicateQuery(std::string id, double weight, std::vector<Predicate> predicates);

  const std::string& id() const { return id_; }
  double weight() const { return weight_; }
  const std::vector<Predicate>& predicates() const { return predicates_; }

  // Predicate on attribute `attribute_index`, or nullptr (tautology).
  const Predicate* predicate_for(int attribute_index) const;

  // True when some predicate has an empty value set: the query covers
  // nothing and is disjoint from every query, including itself.
  bool is_contradiction() const { return contradiction_; }

  friend bool operator==(const PredicateQuery&, const PredicateQuery&) = default;

 private:
  std::string id_;
  double weight_;
  std::vector<Predicate> predicates_;  // sorted by attribute index, unique
  bool contradiction_ = false;
};

// A domain plus the predicate queries asked against it.
class Workload {
 public:
  Workload(Domain domain, std::vector<PredicateQuery> queries);

  const Domain& domain() const { return domain_; }
  int query_count() const { return static_cast<int>(queries_.size()); }
  const PredicateQuery& query(int i) const { return queries_[i]; }
  const std::vector<PredicateQuery>& queries() const { return queries_; }
  std::optional<int> query_index(std::string_view id) const;

  friend bool operator==(const Workload& a, const Workload& b) {
    return a.domain_ == b.domain_ && a.queries_ == b.queries_;
  }

 private:
  Domain domain_;
  std::vector<PredicateQuery> queries_;
  std::unordered_map<std::string, int> index_by_id_;
};

// True when the two predicates constrain the same attribute to disjoint
// value sets. Throws InvalidArgumentError when the attributes differ.
bool predicates_disjoint(const Predicate& a, const Predicate& b);

// True when some row satisfies both queries. Two queries overlap unless one
// is a contradiction or some common attribute gets disjoint value sets.
bool queries_overlap(const PredicateQuery& a, const PredicateQuery& b);

// True when some row satisfies every query in the subset (nonempty joint
// coverage). Computed by intersecting value sets per attribute with early
// exit; the domain itself is never enumerated. Throws on an empty subset.
bool subset_coverage_nonempty(std::span<const PredicateQuery* const> queries);
bool subset_coverage_nonempty(const Workload& w, std::span<const int> query_indices);

// True when `row` (one value index per attribute) satisfies every predicate
// of `q`. Validates the row against the domain.
bool query_covers_row(const PredicateQuery& q, std::span<const std::uint32_t> row,
                      const Domain& d);

}  // namespace parcomp
