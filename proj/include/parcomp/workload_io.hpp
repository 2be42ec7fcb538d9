#pragma once

#include <string>
#include <string_view>

#include "parcomp/domain.hpp"

namespace parcomp {

// Parses a workload from its JSON text form:
//
//   {
//     "domain": {"attributes": [{"name": "Age", "cardinality": 5,
//                                "labels": ["a", ...]  /* optional */}, ...]},
//     "queries": [{"id": "q1", "weight": 1.0,
//                  "predicates": {"Age": [0, 2] /* indices or labels */}}, ...]
//   }
//
// An attribute absent from a query's "predicates" object is unconstrained;
// an empty value list is a legal contradiction. "weight" defaults to 1.
// Every structural or semantic problem raises ParseError naming
// `source_name` and the offending element.
Workload parse_workload_json(std::string_view text,
                             std::string_view source_name = "<string>");

// Reads and parses a workload file; ParseError on unreadable input.
Workload load_workload_file(const std::string& path);

// Serializes to the JSON form above (2-space indent, stable field order,
// value indices in canonical ascending order). Parsing the output yields a
// workload equal to the input.
std::string workload_to_json(const Workload& w);

// Writes workload_to_json(w) to `path`; Error when the file cannot be written.
void save_workload_file(const Workload& w, const std::string& path);

}  // namespace parcomp
