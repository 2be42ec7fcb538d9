#include "parcomp/domain.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <utility>

namespace parcomp {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw InvalidArgumentError(msg); }

}  // namespace

// ---------------------------------------------------------------------------
// Attribute

Attribute::Attribute(std::string name, std::uint32_t cardinality,
                     std::vector<std::string> labels)
    : name_(std::move(name)), cardinality_(cardinality), labels_(std::move(labels)) {
  if (name_.empty()) fail("attribute name must be non-empty");
  if (cardinality_ == 0) fail("attribute '" + name_ + "' must have cardinality >= 1");
  if (!labels_.empty()) {
    if (labels_.size() != cardinality_) {
      fail("attribute '" + name_ + "': label count must equal cardinality");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels_) {
      if (l.empty()) fail("attribute '" + name_ + "': labels must be non-empty");
      if (!seen.insert(l).second) {
        fail("attribute '" + name_ + "': duplicate label '" + l + "'");
      }
    }
  }
}

std::optional<std::uint32_t> Attribute::label_index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Domain

Domain::Domain(std::vector<Attribute> attributes) : attributes_(std::move(attributes)) {
  if (attributes_.empty()) fail("domain must have at least one attribute");
  for (int i = 0; i < attribute_count(); ++i) {
    if (!index_by_name_.emplace(attributes_[i].name(), i).second) {
      fail("duplicate attribute name '" + attributes_[i].name() + "'");
    }
    log10_size_ += std::log10(static_cast<double>(attributes_[i].cardinality()));
  }
}

std::optional<int> Domain::attribute_index(std::string_view name) const {
  auto it = index_by_name_.find(std::string(name));
  return it == index_by_name_.end() ? std::nullopt : std::optional<int>(it->second);
}

std::optional<std::uint64_t> Domain::exact_size() const {
  // 10^18.9 < 2^63, so anything past that cannot be represented exactly.
  if (log10_size_ > 18.9) return std::nullopt;
  std::uint64_t n = 1;
  for (const auto& a : attributes_) {
    if (n > (std::uint64_t{1} << 62) / a.cardinality()) return std::nullopt;
    n *= a.cardinality();
  }
  return n;
}

// ---------------------------------------------------------------------------
// ValueSet

ValueSet::ValueSet(std::uint32_t universe, std::vector<std::uint32_t> values)
    : universe_(universe), dense_(universe <= kDenseUniverseLimit) {
  if (universe_ == 0) fail("value set universe must be >= 1");
  for (auto v : values) {
    if (v >= universe_) {
      fail("value index " + std::to_string(v) + " out of range for universe size " +
           std::to_string(universe_));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  size_ = values.size();
  if (dense_) {
    bits_ = Bitset(static_cast<int>(universe_));
    for (auto v : values) bits_.set(static_cast<int>(v));
  } else {
    sorted_ = std::move(values);
  }
}

ValueSet ValueSet::all(std::uint32_t universe) {
  if (universe == 0) fail("value set universe must be >= 1");
  ValueSet s;
  s.universe_ = universe;
  s.size_ = universe;
  s.dense_ = universe <= kDenseUniverseLimit;
  if (s.dense_) {
    s.bits_ = Bitset::all(static_cast<int>(universe));
  } else {
    s.sorted_.resize(universe);
    for (std::uint32_t v = 0; v < universe; ++v) s.sorted_[v] = v;
  }
  return s;
}

ValueSet ValueSet::none(std::uint32_t universe) { return ValueSet(universe, {}); }

bool ValueSet::contains(std::uint32_t v) const {
  if (v >= universe_) return false;
  if (dense_) return bits_.test(static_cast<int>(v));
  return std::binary_search(sorted_.begin(), sorted_.end(), v);
}

void ValueSet::check_same_universe(const ValueSet& other) const {
  if (universe_ != other.universe_) {
    fail("value sets belong to attributes of different cardinality (" +
         std::to_string(universe_) + " vs " + std::to_string(other.universe_) + ")");
  }
}

bool ValueSet::intersects(const ValueSet& other) const {
  check_same_universe(other);
  if (empty() || other.empty()) return false;
  if (dense_) return bits_.intersects(other.bits_);
  // Walk the smaller array, binary-searching the larger.
  const auto& small = size_ <= other.size_ ? sorted_ : other.sorted_;
  const auto& large = size_ <= other.size_ ? other.sorted_ : sorted_;
  if (small.size() * 16 < large.size()) {
    for (auto v : small) {
      if (std::binary_search(large.begin(), large.end(), v)) return true;
    }
    return false;
  }
  auto a = small.begin();
  auto b = large.begin();
  while (a != small.end() && b != large.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

ValueSet ValueSet::intersect(const ValueSet& other) const {
  check_same_universe(other);
  ValueSet out;
  out.universe_ = universe_;
  out.dense_ = dense_;
  if (dense_) {
    out.bits_ = bits_;
    out.bits_.intersect_with(other.bits_);
    out.size_ = static_cast<std::size_t>(out.bits_.count());
  } else {
    out.sorted_.reserve(std::min(sorted_.size(), other.sorted_.size()));
    std::set_intersection(sorted_.begin(), sorted_.end(), other.sorted_.begin(),
                          other.sorted_.end(), std::back_inserter(out.sorted_));
    out.size_ = out.sorted_.size();
  }
  return out;
}

std::vector<std::uint32_t> ValueSet::indices() const {
  if (!dense_) return sorted_;
  std::vector<std::uint32_t> out;
  out.reserve(size_);
  bits_.for_each([&](int v) { out.push_back(static_cast<std::uint32_t>(v)); });
  return out;
}

// ---------------------------------------------------------------------------
// PredicateQuery

PredicateQuery::PredicateQuery(std::string id, double weight,
                               std::vector<Predicate> predicates)
    : id_(std::move(id)), weight_(weight), predicates_(std::move(predicates)) {
  if (id_.empty()) fail("query id must be non-empty");
  if (!(weight_ > 0.0) || !std::isfinite(weight_)) {
    fail("query '" + id_ + "': weight must be finite and > 0");
  }
  std::sort(predicates_.begin(), predicates_.end(),
            [](const Predicate& a, const Predicate& b) {
              return a.attribute_index < b.attribute_index;
            });
  for (std::size_t i = 0; i < predicates_.size(); ++i) {
    if (predicates_[i].attribute_index < 0) {
      fail("query '" + id_ + "': negative attribute index");
    }
    if (i > 0 && predicates_[i].attribute_index == predicates_[i - 1].attribute_index) {
      fail("query '" + id_ + "': more than one predicate on attribute index " +
           std::to_string(predicates_[i].attribute_index));
    }
    if (predicates_[i].values.empty()) contradiction_ = true;
  }
}

const Predicate* PredicateQuery::predicate_for(int attribute_index) const {
  auto it = std::lower_bound(predicates_.begin(), predicates_.end(), attribute_index,
                             [](const Predicate& p, int idx) {
                               return p.attribute_index < idx;
                             });
  if (it != predicates_.end() && it->attribute_index == attribute_index) return &*it;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Workload

Workload::Workload(Domain domain, std::vector<PredicateQuery> queries)
    : domain_(std::move(domain)), queries_(std::move(queries)) {
  const int m = domain_.attribute_count();
  for (int i = 0; i < query_count(); ++i) {
    const auto& q = queries_[i];
    if (!index_by_id_.emplace(q.id(), i).second) {
      fail("duplicate query id '" + q.id() + "'");
    }
    for (const auto& p : q.predicates()) {
      if (p.attribute_index >= m) {
        fail("query '" + q.id() + "': attribute index " +
             std::to_string(p.attribute_index) + " out of range (domain has " +
             std::to_string(m) + " attributes)");
      }
      const auto& attr = domain_.attribute(p.attribute_index);
      if (p.values.universe() != attr.cardinality()) {
        fail("query '" + q.id() + "': value set universe " +
             std::to_string(p.values.universe()) + " does not match attribute '" +
             attr.name() + "' cardinality " + std::to_string(attr.cardinality()));
      }
    }
  }
}

std::optional<int> Workload::query_index(std::string_view id) const {
  auto it = index_by_id_.find(std::string(id));
  return it == index_by_id_.end() ? std::nullopt : std::optional<int>(it->second);
}

// ---------------------------------------------------------------------------
// Coverage operations

bool predicates_disjoint(const Predicate& a, const Predicate& b) {
  if (a.attribute_index != b.attribute_index) {
    fail("predicates_disjoint requires predicates on the same attribute");
  }
  return !a.values.intersects(b.values);
}

bool queries_overlap(const PredicateQuery& a, const PredicateQuery& b) {
  if (a.is_contradiction() || b.is_contradiction()) return false;
  auto ia = a.predicates().begin();
  auto ib = b.predicates().begin();
  while (ia != a.predicates().end() && ib != b.predicates().end()) {
    if (ia->attribute_index < ib->attribute_index) {
      ++ia;
    } else if (ib->attribute_index < ia->attribute_index) {
      ++ib;
    } else {
      if (!ia->values.intersects(ib->values)) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

bool subset_coverage_nonempty(std::span<const PredicateQuery* const> queries) {
  if (queries.empty()) {
    fail("subset_coverage_nonempty requires a non-empty query subset");
  }
  // Lazily materialized running intersection per constrained attribute;
  // attributes no query constrains stay implicit (always nonempty).
  std::unordered_map<int, ValueSet> running;
  for (const PredicateQuery* q : queries) {
    if (q->is_contradiction()) return false;
    for (const Predicate& p : q->predicates()) {
      auto it = running.find(p.attribute_index);
      if (it == running.end()) {
        running.emplace(p.attribute_index, p.values);
      } else {
        it->second = it->second.intersect(p.values);
        if (it->second.empty()) return false;
      }
    }
  }
  return true;
}

bool subset_coverage_nonempty(const Workload& w, std::span<const int> query_indices) {
  std::vector<const PredicateQuery*> qs;
  qs.reserve(query_indices.size());
  for (int i : query_indices) {
    if (i < 0 || i >= w.query_count()) {
      fail("query index " + std::to_string(i) + " out of range");
    }
    qs.push_back(&w.query(i));
  }
  return subset_coverage_nonempty(std::span<const PredicateQuery* const>(qs));
}

bool query_covers_row(const PredicateQuery& q, std::span<const std::uint32_t> row,
                      const Domain& d) {
  if (static_cast<int>(row.size()) != d.attribute_count()) {
    fail("row has " + std::to_string(row.size()) + " values, domain has " +
         std::to_string(d.attribute_count()) + " attributes");
  }
  for (int i = 0; i < d.attribute_count(); ++i) {
    if (row[i] >= d.attribute(i).cardinality()) {
      fail("row value " + std::to_string(row[i]) + " out of range for attribute '" +
           d.attribute(i).name() + "'");
    }
  }
  for (const Predicate& p : q.predicates()) {
    if (!p.values.contains(row[p.attribute_index])) return false;
  }
  return true;
}

}  // namespace parcomp
