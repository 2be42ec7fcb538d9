#include "parcomp/workload_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace parcomp {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(std::string_view source, const std::string& msg) {
  throw ParseError(std::string(source) + ": " + msg);
}

std::uint32_t parse_value_element(const json& elem, const Attribute& attr,
                                  std::string_view source, const std::string& qid) {
  if (elem.is_number_unsigned() || elem.is_number_integer()) {
    const auto v = elem.get<std::int64_t>();
    if (v < 0 || v >= static_cast<std::int64_t>(attr.cardinality())) {
      parse_fail(source, "query '" + qid + "': value index " + std::to_string(v) +
                             " out of range for attribute '" + attr.name() + "' (cardinality " +
                             std::to_string(attr.cardinality()) + ")");
    }
    return static_cast<std::uint32_t>(v);
  }
  if (elem.is_string()) {
    const auto label = elem.get<std::string>();
    if (auto idx = attr.label_index(label)) return *idx;
    parse_fail(source, "query '" + qid + "': unknown label '" + label +
                           "' for attribute '" + attr.name() + "'");
  }
  parse_fail(source, "query '" + qid + "': predicate values must be integers or labels");
}

}  // namespace

Workload parse_workload_json(std::string_view text, std::string_view source_name) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(source_name, e.what());
  }
  if (!root.is_object()) parse_fail(source_name, "top level must be a JSON object");
  if (!root.contains("domain") || !root["domain"].is_object()) {
    parse_fail(source_name, "missing \"domain\" object");
  }
  const json& jdomain = root["domain"];
  if (!jdomain.contains("attributes") || !jdomain["attributes"].is_array() ||
      jdomain["attributes"].empty()) {
    parse_fail(source_name, "\"domain.attributes\" must be a non-empty array");
  }

  std::vector<Attribute> attrs;
  for (const json& ja : jdomain["attributes"]) {
    if (!ja.is_object() || !ja.contains("name") || !ja["name"].is_string() ||
        !ja.contains("cardinality") || !ja["cardinality"].is_number_integer()) {
      parse_fail(source_name,
                 "each attribute needs a string \"name\" and integer \"cardinality\"");
    }
    const auto name = ja["name"].get<std::string>();
    const auto card = ja["cardinality"].get<std::int64_t>();
    if (card < 1 || card > 0xffffffffLL) {
      parse_fail(source_name, "attribute '" + name + "': cardinality " +
                                  std::to_string(card) + " out of range");
    }
    std::vector<std::string> labels;
    if (ja.contains("labels")) {
      if (!ja["labels"].is_array()) {
        parse_fail(source_name, "attribute '" + name + "': \"labels\" must be an array");
      }
      for (const json& jl : ja["labels"]) {
        if (!jl.is_string()) {
          parse_fail(source_name, "attribute '" + name + "': labels must be strings");
        }
        labels.push_back(jl.get<std::string>());
      }
    }
    try {
      attrs.emplace_back(name, static_cast<std::uint32_t>(card), std::move(labels));
    } catch (const InvalidArgumentError& e) {
      parse_fail(source_name, e.what());
    }
  }

  Domain domain = [&] {
    try {
      return Domain(std::move(attrs));
    } catch (const InvalidArgumentError& e) {
      parse_fail(source_name, e.what());
    }
  }();

  if (!root.contains("queries") || !root["queries"].is_array()) {
    parse_fail(source_name, "missing \"queries\" array");
  }
  std::vector<PredicateQuery> queries;
  for (const json& jq : root["queries"]) {
    if (!jq.is_object() || !jq.contains("id") || !jq["id"].is_string()) {
      parse_fail(source_name, "each query needs a string \"id\"");
    }
    const auto qid = jq["id"].get<std::string>();
    double weight = 1.0;
    if (jq.contains("weight")) {
      if (!jq["weight"].is_number()) {
        parse_fail(source_name, "query '" + qid + "': \"weight\" must be a number");
      }
      weight = jq["weight"].get<double>();
    }
    std::vector<Predicate> preds;
    if (jq.contains("predicates")) {
      if (!jq["predicates"].is_object()) {
        parse_fail(source_name, "query '" + qid + "': \"predicates\" must be an object");
      }
      for (const auto& [attr_name, jvalues] : jq["predicates"].items()) {
        const auto idx = domain.attribute_index(attr_name);
        if (!idx) {
          parse_fail(source_name,
                     "query '" + qid + "': unknown attribute '" + attr_name + "'");
        }
        if (!jvalues.is_array()) {
          parse_fail(source_name, "query '" + qid + "': predicate on '" + attr_name +
                                      "' must be an array of values");
        }
        const Attribute& attr = domain.attribute(*idx);
        std::vector<std::uint32_t> values;
        values.reserve(jvalues.size());
        for (const json& elem : jvalues) {
          values.push_back(parse_value_element(elem, attr, source_name, qid));
        }
        preds.push_back(Predicate{*idx, ValueSet(attr.cardinality(), std::move(values))});
      }
    }
    try {
      queries.emplace_back(qid, weight, std::move(preds));
    } catch (const InvalidArgumentError& e) {
      parse_fail(source_name, e.what());
    }
  }

  try {
    return Workload(std::move(domain), std::move(queries));
  } catch (const InvalidArgumentError& e) {
    parse_fail(source_name, e.what());
  }
}

Workload load_workload_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_workload_json(buf.str(), path);
}

std::string workload_to_json(const Workload& w) {
  json jattrs = json::array();
  for (const Attribute& a : w.domain().attributes()) {
    json ja{{"name", a.name()}, {"cardinality", a.cardinality()}};
    if (a.has_labels()) ja["labels"] = a.labels();
    jattrs.push_back(std::move(ja));
  }
  json jqueries = json::array();
  for (const PredicateQuery& q : w.queries()) {
    json jpreds = json::object();
    for (const Predicate& p : q.predicates()) {
      jpreds[w.domain().attribute(p.attribute_index).name()] = p.values.indices();
    }
    jqueries.push_back(
        json{{"id", q.id()}, {"weight", q.weight()}, {"predicates", std::move(jpreds)}});
  }
  json root{{"domain", json{{"attributes", std::move(jattrs)}}},
            {"queries", std::move(jqueries)}};
  return root.dump(2) + "\n";
}

void save_workload_file(const Workload& w, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot open file for writing");
  out << workload_to_json(w);
  if (!out) throw Error(path + ": write failed");
}

}  // namespace parcomp
