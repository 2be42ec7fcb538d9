#include "cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parcomp/accounting.hpp"
#include "parcomp/composition.hpp"
#include "parcomp/domain.hpp"
#include "parcomp/error.hpp"
#include "parcomp/generators.hpp"
#include "parcomp/mechanisms.hpp"
#include "parcomp/oracle.hpp"
#include "parcomp/overlap.hpp"
#include "parcomp/query_graph.hpp"
#include "parcomp/rng.hpp"
#include "parcomp/tradeoff.hpp"
#include "parcomp/workload_io.hpp"

namespace parcomp::cli {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

// Environment-variable capacity caps. An unset variable leaves the default
// in place; a malformed value is a hard usage error, never silently ignored.
std::optional<double> env_double(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !std::isfinite(v)) {
    throw InvalidArgumentError(std::string(name) + ": cannot parse '" + raw +
                               "' as a number");
  }
  return v;
}

std::optional<std::uint64_t> env_u64(const char* name) {
  const auto v = env_double(name);
  if (!v) return std::nullopt;
  if (*v < 0 || *v != std::floor(*v)) {
    throw InvalidArgumentError(std::string(name) +
                               ": expected a non-negative integer");
  }
  return static_cast<std::uint64_t>(*v);
}

SearchBudget make_budget(double timeout_secs, std::uint64_t check_interval) {
  if (!(timeout_secs > 0) || !std::isfinite(timeout_secs)) {
    throw InvalidArgumentError("--timeout-secs must be positive and finite");
  }
  if (check_interval == 0) {
    throw InvalidArgumentError("--check-interval must be positive");
  }
  SearchBudget budget;
  budget.deadline = std::chrono::duration<double>(timeout_secs);
  budget.check_interval = check_interval;
  return budget;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out.flush()) throw Error("failed while writing '" + path + "'");
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidArgumentError(std::string(what) + ": '" + item +
                                 "' is not a positive integer");
    }
  }
  if (out.empty()) {
    throw InvalidArgumentError(std::string(what) + ": list is empty");
  }
  return out;
}

nlohmann::ordered_json bound_to_json(const OverlapBound& bound) {
  nlohmann::ordered_json j;
  j["kind"] = bound_kind_name(bound.kind);
  j["value"] = bound.value;
  if (bound.kind == BoundKind::kApproxChromatic) {
    j["num_color_classes"] = bound.color_classes.size();
    j["color_classes"] = bound.color_classes;
  } else {
    j["witness"] = bound.witness;
  }
  return j;
}

void print_id_list(std::ostream& out, const std::vector<std::string>& ids) {
  constexpr std::size_t kShow = 20;
  for (std::size_t i = 0; i < ids.size() && i < kShow; ++i) {
    out << (i == 0 ? "" : " ") << ids[i];
  }
  if (ids.size() > kShow) out << " ... (" << ids.size() << " total)";
}

// Shared by analyze and answer: run the requested bound computation.
// `allow_fallback` turns a timed-out exact search into a greedy-coloring
// overestimate instead of an error; the caller must surface the note.
struct BoundRun {
  OverlapBound bound;
  bool safe_overestimate = false;
  double search_secs = 0.0;
  std::vector<std::string> notes;
};

BoundRun run_bound(const Workload& w, const QueryGraph& g,
                   const CompositionRule& rule, const std::string& method,
                   const SearchBudget& budget) {
  BoundRun run;
  const auto start = Clock::now();
  if (method == "overlap") {
    run.bound = max_overlap(w, g, rule, budget);
  } else if (method == "clique") {
    run.bound = max_weight_clique(g, rule, budget);
  } else if (method == "chromatic") {
    run.bound = dsatur_coloring(g, rule);
  } else if (method == "auto") {
    try {
      run.bound = max_overlap(w, g, rule, budget);
    } catch (const TimeoutError&) {
      run.bound = dsatur_coloring(g, rule);
      run.safe_overestimate = true;
      run.notes.push_back(
          "exact overlap search exceeded the deadline; fell back to greedy "
          "coloring (SAFE-OVERESTIMATE: bound is valid but may be loose)");
    }
  } else {
    throw InvalidArgumentError("unknown method '" + method +
                               "' (expected overlap, clique, chromatic or auto)");
  }
  run.search_secs = seconds_since(start);
  return run;
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& opt) {
  const Workload w = load_workload_file(opt.workload_file);
  const CompositionRule rule = CompositionRule::from_name(opt.rule);
  const SearchBudget budget = make_budget(opt.timeout_secs, opt.check_interval);

  const auto graph_start = Clock::now();
  const QueryGraph g = build_query_graph(w);
  const double graph_secs = seconds_since(graph_start);

  BoundRun run = run_bound(w, g, rule, opt.method, budget);
  const BudgetReport report = max_overlap_budget(w, run.bound, rule);
  if (!report.note.empty()) run.notes.push_back(report.note);

  const int t = static_cast<int>(w.queries().size());
  std::optional<double> gain;
  std::optional<double> effective_count;
  if (const auto weight = homogeneous_weight(w)) {
    effective_count = effective_overlap_count(run.bound, rule, *weight);
    gain = utility_gain(t, *effective_count);
  } else {
    run.notes.push_back(
        "utility gain is reported only for homogeneous query weights");
  }

  if (opt.oracle != "none") {
    OracleResult oracle;
    if (opt.oracle == "row-scan") {
      const auto cap = env_u64("PARCOMP_ROW_SCAN_CAP");
      oracle = gamma_by_row_scan(w, rule, cap.value_or(kDefaultRowScanCap));
    } else if (opt.oracle == "subset-enum") {
      const auto cap = env_u64("PARCOMP_SUBSET_ENUM_CAP");
      oracle = gamma_by_subset_enumeration(
          w, rule, static_cast<int>(cap.value_or(kDefaultSubsetEnumerationCap)));
    } else {
      throw InvalidArgumentError("unknown oracle '" + opt.oracle +
                                 "' (expected none, row-scan or subset-enum)");
    }
    std::string note = "oracle overlap = " + fmt("%.12g", oracle.gamma);
    if (run.bound.kind == BoundKind::kExactOverlap) {
      const bool agree = std::abs(oracle.gamma - run.bound.value) <= 1e-9;
      note += agree ? " (agrees with search)" : " (DISAGREES with search)";
    } else {
      note += " (search reports an overestimating bound; oracle may be lower)";
    }
    run.notes.push_back(note);
  }

  nlohmann::ordered_json j;
  j["workload"] = opt.workload_file;
  j["num_queries"] = t;
  j["num_edges"] = g.edge_count();
  j["method"] = opt.method;
  j["rule"] = rule.name();
  j["bound"] = bound_to_json(run.bound);
  j["safe_overestimate"] = run.safe_overestimate || report.may_overestimate;
  j["budget"] = report.budget;
  j["curve"] = report.curve.label();
  if (gain) {
    j["utility_gain"] = *gain;
  } else {
    j["utility_gain"] = nullptr;
  }
  if (effective_count) j["effective_overlap_count"] = *effective_count;
  j["timing"] = {{"graph_secs", graph_secs}, {"search_secs", run.search_secs}};
  j["notes"] = run.notes;

  std::ostream& out = std::cout;
  out << "workload: " << opt.workload_file << " (queries=" << t
      << ", edges=" << g.edge_count() << ")\n";
  out << "method: " << opt.method;
  if (run.safe_overestimate) out << " (greedy-coloring fallback)";
  out << ", rule: " << rule.name() << "\n";
  out << "bound: " << fmt("%.12g", run.bound.value) << " ("
      << bound_kind_name(run.bound.kind) << ")\n";
  if (run.bound.kind == BoundKind::kApproxChromatic) {
    out << "color classes: " << run.bound.color_classes.size() << "\n";
  } else {
    out << "witness: ";
    print_id_list(out, run.bound.witness);
    out << "\n";
  }
  out << "budget: " << fmt("%.12g", report.budget) << " (curve " << report.curve.label()
      << ")\n";
  if (effective_count) {
    out << "effective overlap count: " << fmt("%.12g", *effective_count) << "\n";
  }
  if (gain) out << "utility gain: " << fmt("%.6g", *gain) << "\n";
  for (const auto& note : run.notes) out << "note: " << note << "\n";
  out << "timing: graph " << fmt("%.3f", graph_secs) << "s, search "
      << fmt("%.3f", run.search_secs) << "s\n";

  if (!opt.output_file.empty()) {
    write_text_file(opt.output_file, j.dump(2) + "\n");
    out << "wrote report to " << opt.output_file << "\n";
  }
  if (!opt.curve_csv.empty()) {
    std::ostringstream csv;
    report.curve.write_csv(csv);
    write_text_file(opt.curve_csv, csv.str());
    out << "wrote trade-off curve to " << opt.curve_csv << "\n";
  }
  return kExitOk;
}

int cmd_answer(const AnswerOptions& opt) {
  const Workload w = load_workload_file(opt.workload_file);
  const DataSet data = DataSet::load_csv_file(opt.dataset_file, w.domain());

  MechanismKind mech;
  if (opt.mechanism == "laplace") {
    mech = MechanismKind::kLaplace;
  } else if (opt.mechanism == "gaussian") {
    mech = MechanismKind::kGaussian;
  } else {
    throw InvalidArgumentError("unknown mechanism '" + opt.mechanism +
                               "' (expected laplace or gaussian)");
  }
  // The mechanism fixes the composition arithmetic: Laplace budgets add,
  // Gaussian budgets add in squares.
  const CompositionRule rule = mech == MechanismKind::kLaplace
                                   ? CompositionRule::eps_sum()
                                   : CompositionRule::gdp_root_sum_squares();
  if (!(opt.total_budget > 0) || !std::isfinite(opt.total_budget)) {
    throw InvalidArgumentError("--total-budget must be positive and finite");
  }

  const auto weight = homogeneous_weight(w);
  if (!weight) {
    throw InvalidArgumentError(
        "per-query budget splitting requires a homogeneous workload (all "
        "query weights equal)");
  }
  const int t = static_cast<int>(w.queries().size());

  // `effective` is the number of per-query budgets the total must cover:
  // t under sequential composition, the (possibly overestimated) overlap
  // count under optimal parallel composition.
  double effective = 0.0;
  std::vector<std::string> notes;
  if (opt.allocation == "sequential") {
    effective = t;
  } else if (opt.allocation == "optimal") {
    if (opt.gamma > 0) {
      effective = opt.gamma;
      notes.push_back("using caller-supplied overlap count " +
                      fmt("%.12g", opt.gamma));
    } else {
      const QueryGraph g = build_query_graph(w);
      const SearchBudget budget = make_budget(opt.timeout_secs, 1024);
      BoundRun run = run_bound(w, g, rule, "auto", budget);
      for (auto& note : run.notes) notes.push_back(std::move(note));
      effective = effective_overlap_count(run.bound, rule, *weight);
      if (effective <= 0) {
        // Every query is a contradiction; answers are pure noise anyway.
        effective = 1;
        notes.push_back(
            "workload has zero overlap (all queries are contradictions); "
            "treating it as one effective query");
      }
    }
  } else {
    throw InvalidArgumentError("unknown allocation '" + opt.allocation +
                               "' (expected sequential or optimal)");
  }

  const double per_query = rule.kind() == CompositionKind::kEpsSum
                               ? opt.total_budget / effective
                               : opt.total_budget / std::sqrt(effective);

  std::vector<NoisyAnswer> answers;
  answers.reserve(w.queries().size());
  for (std::size_t i = 0; i < w.queries().size(); ++i) {
    const PredicateQuery& q = w.queries()[i];
    const std::uint64_t q_seed = derive_seed(opt.seed, i);
    answers.push_back(mech == MechanismKind::kLaplace
                          ? laplace_answer(q, data, per_query, 1.0, q_seed)
                          : gaussian_answer(q, data, per_query, 1.0, q_seed));
  }

  std::ostringstream csv;
  csv << "query_id,true_count,noisy_value,scale,mechanism\n";
  for (const auto& a : answers) {
    csv << a.query_id << "," << a.true_count << "," << fmt("%.17g", a.noisy_value)
        << "," << fmt("%.17g", a.scale) << "," << mechanism_name(a.mechanism)
        << "\n";
  }

  // When the CSV goes to stdout the summary moves to stderr so the data
  // stream stays machine-readable.
  std::ostream& info = opt.output_file.empty() ? std::cerr : std::cout;
  if (opt.output_file.empty()) {
    std::cout << csv.str();
  } else {
    write_text_file(opt.output_file, csv.str());
    info << "wrote " << answers.size() << " answers to " << opt.output_file
         << "\n";
  }
  info << "mechanism: " << mechanism_name(mech) << ", rule: " << rule.name()
       << ", allocation: " << opt.allocation << "\n";
  info << "queries: " << t << ", effective overlap count: "
       << fmt("%.12g", effective) << "\n";
  info << "per-query budget: " << fmt("%.12g", per_query) << " (total "
       << fmt("%.12g", opt.total_budget) << ")\n";
  info << "mean |noise|: " << fmt("%.6g", average_l1_error(answers)) << "\n";
  for (const auto& note : notes) info << "note: " << note << "\n";
  return kExitOk;
}

namespace {

void report_written(const Workload& w, const std::string& path) {
  save_workload_file(w, path);
  std::cout << "wrote " << w.queries().size() << " queries over a "
            << fmt("%.6g", w.domain().log10_size())
            << " log10-size domain to " << path << "\n";
}

double env_domain_cap() {
  return env_double("PARCOMP_MAX_LOG10_DOMAIN").value_or(kDefaultMaxLog10Domain);
}

}  // namespace

int cmd_generate_uniform(const GenerateUniformOptions& opt) {
  UniformWorkloadParams p;
  p.num_attributes = opt.num_attributes;
  p.min_exponent = opt.min_exponent;
  p.max_exponent = opt.max_exponent;
  p.num_queries = opt.num_queries;
  p.weight = opt.weight;
  p.max_log10_domain = env_domain_cap();
  report_written(gen_uniform_workload(p, opt.seed), opt.out_file);
  return kExitOk;
}

int cmd_generate_dist(const GenerateDistOptions& opt) {
  DistributionWorkloadParams p;
  p.num_attributes = opt.num_attributes;
  p.min_exponent = opt.min_exponent;
  p.max_exponent = opt.max_exponent;
  p.num_queries = opt.num_queries;
  p.weight = opt.weight;
  p.max_log10_domain = env_domain_cap();
  p.predicate_count = DistSpec::parse(opt.predicate_count);
  p.attribute_choice = DistSpec::parse(opt.attribute_choice);
  p.value_count = DistSpec::parse(opt.value_count);
  p.value_choice = DistSpec::parse(opt.value_choice);
  report_written(gen_distribution_workload(p, opt.seed), opt.out_file);
  return kExitOk;
}

int cmd_generate_census(const GenerateCensusOptions& opt) {
  if (opt.enumerate) {
    report_written(census_enumeration_slice(opt.begin, opt.count, opt.slice_cap),
                   opt.out_file);
  } else {
    report_written(gen_census_workload(opt.num_queries, opt.seed), opt.out_file);
  }
  return kExitOk;
}

int cmd_generate_maxcut(const GenerateMaxcutOptions& opt) {
  EdgeListGraph g;
  if (!opt.graph_file.empty()) {
    g = EdgeListGraph::load_file(opt.graph_file);
  } else if (opt.random_vertices > 0) {
    g = random_graph(opt.random_vertices, opt.edge_prob, opt.seed);
  } else {
    throw InvalidArgumentError(
        "maxcut needs --graph-file or --random-vertices");
  }
  report_written(maxcut_to_overlap(g), opt.out_file);
  // Sidecar copy of the source graph so the workload's overlap can later be
  // cross-checked against an independent max-cut computation.
  const std::string sidecar = opt.out_file + ".graph";
  std::ostringstream text;
  g.write(text);
  write_text_file(sidecar, text.str());
  std::cout << "wrote source graph (" << g.vertex_count << " vertices, "
            << g.edges.size() << " edges) to " << sidecar << "\n";
  return kExitOk;
}

namespace {

// One timed run of one algorithm; timeouts are recorded, not fatal.
struct TimedBound {
  bool completed = false;
  double value = 0.0;
  double secs = 0.0;
};

TimedBound timed_bound(const Workload& w, const QueryGraph& g,
                       const CompositionRule& rule, const std::string& method,
                       const SearchBudget& budget) {
  TimedBound r;
  const auto start = Clock::now();
  try {
    OverlapBound b;
    if (method == "overlap") {
      b = max_overlap(w, g, rule, budget);
    } else if (method == "clique") {
      b = max_weight_clique(g, rule, budget);
    } else {
      b = dsatur_coloring(g, rule);
    }
    r.completed = true;
    r.value = b.value;
  } catch (const TimeoutError&) {
    r.completed = false;
  }
  r.secs = seconds_since(start);
  return r;
}

int bench_census_utility(const BenchOptions& opt, std::ostream& csv,
                         std::ostream& info) {
  const std::vector<int> t_list = parse_int_list(opt.t_list, "--t-list");
  const CompositionRule rule = CompositionRule::eps_sum();
  const SearchBudget budget = make_budget(opt.timeout_secs, 1024);
  csv << "t,trials,overlap_completed,clique_completed,mean_overlap,"
         "mean_clique,mean_chromatic,mean_gain_overlap,mean_gain_chromatic,"
         "mean_secs_overlap\n";
  for (const int t : t_list) {
    int done_overlap = 0;
    int done_clique = 0;
    double sum_overlap = 0, sum_clique = 0, sum_chromatic = 0;
    double sum_gain_overlap = 0, sum_gain_chromatic = 0, sum_secs = 0;
    for (int trial = 0; trial < opt.trials; ++trial) {
      const std::uint64_t trial_seed =
          derive_seed(opt.seed, static_cast<std::uint64_t>(t) * 1000003u +
                                    static_cast<std::uint64_t>(trial));
      const Workload w = gen_census_workload(t, trial_seed);
      const QueryGraph g = build_query_graph(w);
      const TimedBound ov = timed_bound(w, g, rule, "overlap", budget);
      if (ov.completed) {
        ++done_overlap;
        sum_overlap += ov.value;
        sum_gain_overlap += utility_gain(t, ov.value);
        sum_secs += ov.secs;
      }
      const TimedBound cl = timed_bound(w, g, rule, "clique", budget);
      if (cl.completed) {
        ++done_clique;
        sum_clique += cl.value;
      }
      const TimedBound ch = timed_bound(w, g, rule, "chromatic", budget);
      sum_chromatic += ch.value;
      sum_gain_chromatic += utility_gain(t, ch.value);
    }
    const auto mean = [&](double sum, int n) {
      return n > 0 ? fmt("%.6g", sum / n) : std::string("");
    };
    csv << t << "," << opt.trials << "," << done_overlap << "," << done_clique
        << "," << mean(sum_overlap, done_overlap) << ","
        << mean(sum_clique, done_clique) << ","
        << mean(sum_chromatic, opt.trials) << ","
        << mean(sum_gain_overlap, done_overlap) << ","
        << mean(sum_gain_chromatic, opt.trials) << ","
        << mean(sum_secs, done_overlap) << "\n";
    info << "t=" << t << ": overlap completed " << done_overlap << "/"
         << opt.trials;
    if (done_overlap > 0) {
      info << ", mean overlap " << mean(sum_overlap, done_overlap)
           << ", mean gain " << mean(sum_gain_overlap, done_overlap);
    }
    info << ", mean greedy bound " << mean(sum_chromatic, opt.trials) << "\n";
  }
  return kExitOk;
}

int bench_feasibility(const BenchOptions& opt, std::ostream& csv,
                      std::ostream& info) {
  const std::vector<int> t_list = parse_int_list(opt.t_list, "--t-list");
  const std::vector<int> m_list = parse_int_list(opt.m_list, "--m-list");
  const std::vector<int> exp_list = parse_int_list(opt.exp_list, "--exp-list");
  const CompositionRule rule = CompositionRule::eps_sum();
  const SearchBudget budget = make_budget(opt.timeout_secs, 1024);
  const char* algorithms[] = {"overlap", "clique", "chromatic"};
  csv << "m,exponent,t,algorithm,trials,completed,timeouts,mean_secs\n";
  std::uint64_t combo = 0;
  for (const int m : m_list) {
    for (const int e : exp_list) {
      for (const int t : t_list) {
        ++combo;
        // One workload set per (m, e, t) so the three algorithms race on
        // identical inputs.
        std::vector<Workload> workloads;
        std::vector<QueryGraph> graphs;
        for (int trial = 0; trial < opt.trials; ++trial) {
          UniformWorkloadParams p;
          p.num_attributes = m;
          p.min_exponent = e;
          p.max_exponent = e;
          p.num_queries = t;
          p.max_log10_domain = env_domain_cap();
          workloads.push_back(gen_uniform_workload(
              p, derive_seed(opt.seed, combo * 1009u + trial)));
          graphs.push_back(build_query_graph(workloads.back()));
        }
        for (const char* alg : algorithms) {
          int completed = 0;
          double sum_secs = 0;
          for (int trial = 0; trial < opt.trials; ++trial) {
            const TimedBound r =
                timed_bound(workloads[trial], graphs[trial], rule, alg, budget);
            if (r.completed) {
              ++completed;
              sum_secs += r.secs;
            }
          }
          csv << m << "," << e << "," << t << "," << alg << "," << opt.trials
              << "," << completed << "," << (opt.trials - completed) << ",";
          if (completed > 0) csv << fmt("%.6f", sum_secs / completed);
          csv << "\n";
          info << "m=" << m << " 10^" << e << " t=" << t << " " << alg << ": "
               << completed << "/" << opt.trials << " within deadline";
          if (completed > 0) {
            info << ", mean " << fmt("%.4f", sum_secs / completed) << "s";
          }
          info << "\n";
        }
      }
    }
  }
  return kExitOk;
}

}  // namespace

int cmd_bench(const BenchOptions& opt) {
  if (opt.trials <= 0) {
    throw InvalidArgumentError("--trials must be positive");
  }
  std::ostringstream csv;
  std::ostream& info = opt.out_file.empty() ? std::cerr : std::cout;
  int rc;
  if (opt.suite == "census-utility") {
    rc = bench_census_utility(opt, csv, info);
  } else if (opt.suite == "feasibility") {
    rc = bench_feasibility(opt, csv, info);
  } else {
    throw InvalidArgumentError("unknown suite '" + opt.suite +
                               "' (expected census-utility or feasibility)");
  }
  if (opt.out_file.empty()) {
    std::cout << csv.str();
  } else {
    write_text_file(opt.out_file, csv.str());
    info << "wrote results to " << opt.out_file << "\n";
  }
  return rc;
}

namespace {

template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return kExitTimeout;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "optimal parallel composition of predicate counting queries:\n"
      "budget analysis, noisy answering, workload generation, benchmarks"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand(
      "analyze", "compute an overlap bound and privacy budget for a workload");
  a->add_option("workload", analyze.workload_file, "workload JSON file")
      ->required();
  a->add_option("--method", analyze.method,
                "overlap | clique | chromatic | auto (exact search with greedy "
                "fallback)")
      ->capture_default_str();
  a->add_option("--rule", analyze.rule, "eps (budgets add) | gdp (squares add)")
      ->capture_default_str();
  a->add_option("--timeout-secs", analyze.timeout_secs,
                "deadline for exact searches")
      ->capture_default_str();
  a->add_option("--check-interval", analyze.check_interval,
                "search nodes between deadline polls")
      ->capture_default_str();
  a->add_option("--output", analyze.output_file, "write a JSON report here");
  a->add_option("--curve-csv", analyze.curve_csv,
                "write the certified trade-off curve as CSV");
  a->add_option("--oracle", analyze.oracle,
                "cross-check with an exhaustive method: none | row-scan | "
                "subset-enum")
      ->capture_default_str();

  AnswerOptions answer;
  auto* ans = app.add_subcommand(
      "answer", "answer a workload over a dataset with calibrated noise");
  ans->add_option("workload", answer.workload_file, "workload JSON file")
      ->required();
  ans->add_option("dataset", answer.dataset_file, "dataset CSV file")
      ->required();
  ans->add_option("--mechanism", answer.mechanism, "laplace | gaussian")
      ->capture_default_str();
  ans->add_option("--total-budget", answer.total_budget,
                  "workload-wide privacy budget (epsilon or GDP mu)")
      ->capture_default_str();
  ans->add_option("--allocation", answer.allocation,
                  "sequential (split across all queries) | optimal (split "
                  "across the overlap count)")
      ->capture_default_str();
  ans->add_option("--seed", answer.seed, "RNG seed; answers are reproducible")
      ->capture_default_str();
  ans->add_option("--timeout-secs", answer.timeout_secs,
                  "deadline for the inline overlap search")
      ->capture_default_str();
  ans->add_option("--gamma", answer.gamma,
                  "skip the inline analysis and use this overlap count");
  ans->add_option("--output", answer.output_file,
                  "write the answers CSV here (default: stdout)");

  auto* gen = app.add_subcommand("generate", "create workload files");
  gen->require_subcommand(1);

  GenerateUniformOptions gu;
  auto* g_uni = gen->add_subcommand("uniform",
                                    "random workload, all choices uniform");
  g_uni->add_option("--num-attrs", gu.num_attributes, "attribute count")
      ->capture_default_str();
  g_uni->add_option("--num-queries", gu.num_queries, "query count")
      ->capture_default_str();
  g_uni->add_option("--exp-min", gu.min_exponent,
                    "min per-attribute cardinality exponent (10^k)")
      ->capture_default_str();
  g_uni->add_option("--exp-max", gu.max_exponent,
                    "max per-attribute cardinality exponent (10^k)")
      ->capture_default_str();
  g_uni->add_option("--weight", gu.weight, "common query weight")
      ->capture_default_str();
  g_uni->add_option("--seed", gu.seed, "RNG seed")->capture_default_str();
  g_uni->add_option("--out", gu.out_file, "output workload JSON")->required();

  GenerateDistOptions gd;
  auto* g_dist = gen->add_subcommand(
      "dist", "random workload with per-quantity sampling distributions");
  g_dist->add_option("--num-attrs", gd.num_attributes, "attribute count")
      ->capture_default_str();
  g_dist->add_option("--num-queries", gd.num_queries, "query count")
      ->capture_default_str();
  g_dist->add_option("--exp-min", gd.min_exponent,
                     "min per-attribute cardinality exponent (10^k)")
      ->capture_default_str();
  g_dist->add_option("--exp-max", gd.max_exponent,
                     "max per-attribute cardinality exponent (10^k)")
      ->capture_default_str();
  g_dist->add_option("--weight", gd.weight, "common query weight")
      ->capture_default_str();
  g_dist->add_option("--pred-count", gd.predicate_count,
                     "uniform | exp:<scale> | normal:<sd>")
      ->capture_default_str();
  g_dist->add_option("--attr-choice", gd.attribute_choice,
                     "uniform | exp:<scale> | normal:<sd>")
      ->capture_default_str();
  g_dist->add_option("--value-count", gd.value_count,
                     "uniform | exp:<scale> | normal:<sd>")
      ->capture_default_str();
  g_dist->add_option("--value-choice", gd.value_choice,
                     "uniform | exp:<scale> | normal:<sd>")
      ->capture_default_str();
  g_dist->add_option("--seed", gd.seed, "RNG seed")->capture_default_str();
  g_dist->add_option("--out", gd.out_file, "output workload JSON")->required();

  GenerateCensusOptions gc;
  auto* g_cen = gen->add_subcommand(
      "census", "demographic-style workload (income range x attributes)");
  g_cen->add_option("--num-queries", gc.num_queries, "query count (random mode)")
      ->capture_default_str();
  g_cen->add_option("--seed", gc.seed, "RNG seed (random mode)")
      ->capture_default_str();
  g_cen->add_flag("--enumerate", gc.enumerate,
                  "emit a slice of the full query enumeration instead");
  g_cen->add_option("--begin", gc.begin, "slice start index (enumerate mode)");
  g_cen->add_option("--count", gc.count, "slice length (enumerate mode)");
  g_cen->add_option("--cap", gc.slice_cap, "max slice length accepted")
      ->capture_default_str();
  g_cen->add_option("--out", gc.out_file, "output workload JSON")->required();

  GenerateMaxcutOptions gm;
  auto* g_max = gen->add_subcommand(
      "maxcut", "workload whose overlap equals a graph's max cut");
  g_max->add_option("--graph-file", gm.graph_file,
                    "edge-list file: first line '<n> <m>', then '<u> <v>' pairs");
  g_max->add_option("--random-vertices", gm.random_vertices,
                    "generate a random graph with this many vertices");
  g_max->add_option("--edge-prob", gm.edge_prob,
                    "edge probability for the random graph")
      ->capture_default_str();
  g_max->add_option("--seed", gm.seed, "RNG seed for the random graph")
      ->capture_default_str();
  g_max->add_option("--out", gm.out_file,
                    "output workload JSON (source graph lands in <out>.graph)")
      ->required();

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "run a benchmark suite, emit CSV");
  b->add_option("--suite", bench.suite, "census-utility | feasibility")
      ->capture_default_str();
  b->add_option("--trials", bench.trials, "trials per configuration")
      ->capture_default_str();
  b->add_option("--t-list", bench.t_list, "comma-separated query counts")
      ->capture_default_str();
  b->add_option("--m-list", bench.m_list,
                "comma-separated attribute counts (feasibility)")
      ->capture_default_str();
  b->add_option("--exp-list", bench.exp_list,
                "comma-separated cardinality exponents (feasibility)")
      ->capture_default_str();
  b->add_option("--timeout-secs", bench.timeout_secs,
                "per-run deadline for exact searches")
      ->capture_default_str();
  b->add_option("--seed", bench.seed, "master RNG seed")->capture_default_str();
  b->add_option("--out", bench.out_file, "results CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (a->parsed()) return guarded([&] { return cmd_analyze(analyze); });
  if (ans->parsed()) return guarded([&] { return cmd_answer(answer); });
  if (gen->parsed()) {
    if (g_uni->parsed()) return guarded([&] { return cmd_generate_uniform(gu); });
    if (g_dist->parsed()) return guarded([&] { return cmd_generate_dist(gd); });
    if (g_cen->parsed()) return guarded([&] { return cmd_generate_census(gc); });
    if (g_max->parsed()) return guarded([&] { return cmd_generate_maxcut(gm); });
  }
  if (b->parsed()) return guarded([&] { return cmd_bench(bench); });
  std::cerr << "error: no subcommand selected\n";
  return kExitUsage;
}

}  // namespace parcomp::cli
