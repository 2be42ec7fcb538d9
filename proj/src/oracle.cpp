#include "parcomp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace parcomp {

namespace {

std::uint64_t checked_domain_size(const Workload& w, std::uint64_t domain_cap) {
  const auto size = w.domain().exact_size();
  if (!size || *size > domain_cap) {
    throw CapacityError("domain has more than " + std::to_string(domain_cap) +
                        " rows; row-scan oracle refused");
  }
  return *size;
}

// Calls visit(row) for every row of the domain, last attribute fastest.
template <typename Visit>
void for_each_row(const Domain& d, Visit&& visit) {
  const int m = d.attribute_count();
  std::vector<std::uint32_t> row(m, 0);
  while (true) {
    visit(row);
    int k = m - 1;
    while (k >= 0 && row[k] + 1 == d.attribute(k).cardinality()) {
      row[k] = 0;
      --k;
    }
    if (k < 0) return;
    ++row[k];
  }
}

}  // namespace

OracleResult gamma_by_row_scan(const Workload& w, const CompositionRule& rule,
                               std::uint64_t domain_cap) {
  checked_domain_size(w, domain_cap);
  const int t = w.query_count();

  OracleResult best;
  best.method = OracleMethod::kRowScan;
  std::vector<int> covering;
  covering.reserve(t);
  for_each_row(w.domain(), [&](const std::vector<std::uint32_t>& row) {
    covering.clear();
    double acc = 0.0;
    for (int i = 0; i < t; ++i) {
      bool covers = true;
      for (const Predicate& p : w.query(i).predicates()) {
        if (!p.values.contains(row[p.attribute_index])) {
          covers = false;
          break;
        }
      }
      if (covers) {
        covering.push_back(i);
        acc += rule.to_accumulator(w.query(i).weight());
      }
    }
    const double gamma = covering.empty() ? 0.0 : rule.from_accumulator(acc);
    if (gamma > best.gamma) {
      best.gamma = gamma;
      best.witness.clear();
      for (int i : covering) best.witness.push_back(w.query(i).id());
    }
  });
  return best;
}

OracleResult gamma_by_subset_enumeration(const Workload& w, const CompositionRule& rule,
                                         int query_cap) {
  const int t = w.query_count();
  if (t > query_cap) {
    throw CapacityError("workload has " + std::to_string(t) + " queries, above the " +
                        std::to_string(query_cap) + "-query subset-enumeration cap");
  }

  OracleResult best;
  best.method = OracleMethod::kSubsetEnumeration;
  auto record = [&](std::uint32_t mask, double gamma) {
    if (gamma > best.gamma) {
      best.gamma = gamma;
      best.witness.clear();
      for (int i = 0; i < t; ++i) {
        if (mask & (1u << i)) best.witness.push_back(w.query(i).id());
      }
    }
  };

  // Level 1: singletons. A contradiction covers nothing and is infeasible.
  std::vector<std::uint32_t> feasible;
  std::vector<const PredicateQuery*> subset;
  for (int i = 0; i < t; ++i) {
    if (w.query(i).is_contradiction()) continue;
    const std::uint32_t mask = 1u << i;
    feasible.push_back(mask);
    record(mask, w.query(i).weight());
  }

  // Level k from level k-1: extend each feasible set by one higher-index
  // query, require every one-smaller subset feasible, then test coverage.
  for (int level = 2; level <= t && !feasible.empty(); ++level) {
    std::unordered_set<std::uint32_t> feasible_prev(feasible.begin(), feasible.end());
    std::vector<std::uint32_t> next;
    for (std::uint32_t base : feasible) {
      const int top = 31 - std::countl_zero(base);
      for (int j = top + 1; j < t; ++j) {
        const std::uint32_t mask = base | (1u << j);
        bool closed = true;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
          const std::uint32_t sub = mask ^ (rest & -rest);
          if (!feasible_prev.count(sub)) {
            closed = false;
            break;
          }
        }
        if (!closed) continue;
        subset.clear();
        double acc = 0.0;
        for (int i = 0; i < t; ++i) {
          if (mask & (1u << i)) {
            subset.push_back(&w.query(i));
            acc += rule.to_accumulator(w.query(i).weight());
          }
        }
        if (!subset_coverage_nonempty(
                std::span<const PredicateQuery* const>(subset))) {
          continue;
        }
        next.push_back(mask);
        record(mask, rule.from_accumulator(acc));
      }
    }
    feasible = std::move(next);
  }
  return best;
}

std::uint64_t l1_sensitivity_by_row_scan(const Workload& w, std::uint64_t domain_cap) {
  checked_domain_size(w, domain_cap);
  const int t = w.query_count();
  std::uint64_t best = 0;
  for_each_row(w.domain(), [&](const std::vector<std::uint32_t>& row) {
    std::uint64_t count = 0;
    for (int i = 0; i < t; ++i) {
      bool covers = true;
      for (const Predicate& p : w.query(i).predicates()) {
        if (!p.values.contains(row[p.attribute_index])) {
          covers = false;
          break;
        }
      }
      if (covers) ++count;
    }
    best = std::max(best, count);
  });
  return best;
}

}  // namespace parcomp
