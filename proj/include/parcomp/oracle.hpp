#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parcomp/composition.hpp"
#include "parcomp/domain.hpp"

namespace parcomp {

enum class OracleMethod { kRowScan, kSubsetEnumeration };

// Result of a brute-force maximum-overlap computation. `gamma` is the
// combined weight (an integer-valued double for unit weights) of the best
// query subset with nonempty joint coverage; `witness` lists that subset's
// query ids. gamma == 0 with an empty witness only in the degenerate case
// where every query is a contradiction.
struct OracleResult {
  double gamma = 0.0;
  std::vector<std::string> witness;
  OracleMethod method = OracleMethod::kRowScan;
};

inline constexpr std::uint64_t kDefaultRowScanCap = 1'000'000;
inline constexpr int kDefaultSubsetEnumerationCap = 20;

// Walks every row of the domain (mixed-radix order, last attribute varying
// fastest) and combines the weights of the queries covering each row under
// `rule`; the maximum over rows is the exact maximum overlap. The witness
// is the covering set of the first maximizing row. CapacityError when the
// domain has more than `domain_cap` rows.
OracleResult gamma_by_row_scan(const Workload& w, const CompositionRule& rule,
                               std::uint64_t domain_cap = kDefaultRowScanCap);

// Enumerates query subsets in increasing cardinality order with
// down-closure pruning (a subset is coverage-tested only if each of its
// one-smaller subsets had nonempty coverage) and returns the feasible
// subset with the largest combined weight. Domain size is irrelevant;
// CapacityError when the workload has more than `query_cap` queries.
OracleResult gamma_by_subset_enumeration(const Workload& w, const CompositionRule& rule,
                                         int query_cap = kDefaultSubsetEnumerationCap);

// Largest number of queries whose answers one row can change at once: the
// l1-sensitivity of answering the whole workload with unit-sensitivity
// counting queries. Equals unweighted maximum overlap for predicate
// queries. Same capacity rules as gamma_by_row_scan.
std::uint64_t l1_sensitivity_by_row_scan(const Workload& w,
                                         std::uint64_t domain_cap = kDefaultRowScanCap);

}  // namespace parcomp
