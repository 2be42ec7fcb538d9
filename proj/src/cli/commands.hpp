#pragma once

#include <cstdint>
#include <string>

namespace parcomp::cli {

// Exit codes. Parse, capacity and timeout failures are distinguishable so
// scripts can react; everything else that goes wrong is a usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitTimeout = 4;

struct AnalyzeOptions {
  std::string workload_file;
  std::string method = "auto";  // overlap | clique | chromatic | auto
  std::string rule = "gdp";     // eps | gdp
  double timeout_secs = 60.0;
  std::uint64_t check_interval = 1024;
  std::string output_file;  // JSON report, optional
  std::string curve_csv;    // trade-off curve export, optional
  std::string oracle = "none";  // none | row-scan | subset-enum (debug cross-check)
};

struct AnswerOptions {
  std::string workload_file;
  std::string dataset_file;
  std::string mechanism = "gaussian";  // laplace | gaussian
  double total_budget = 1.0;
  std::string allocation = "optimal";  // sequential | optimal
  std::uint64_t seed = 0;
  double timeout_secs = 60.0;
  double gamma = 0.0;  // > 0: skip the inline overlap analysis and use this
  std::string output_file;  // answers CSV, optional (default stdout)
};

struct GenerateUniformOptions {
  int num_attributes = 10;
  int num_queries = 100;
  int min_exponent = 1;
  int max_exponent = 6;
  double weight = 1.0;
  std::uint64_t seed = 0;
  std::string out_file;
};

struct GenerateDistOptions {
  int num_attributes = 10;
  int num_queries = 100;
  int min_exponent = 1;
  int max_exponent = 6;
  double weight = 1.0;
  std::string predicate_count = "uniform";
  std::string attribute_choice = "uniform";
  std::string value_count = "uniform";
  std::string value_choice = "uniform";
  std::uint64_t seed = 0;
  std::string out_file;
};

struct GenerateCensusOptions {
  int num_queries = 100;
  std::uint64_t seed = 0;
  bool enumerate = false;          // emit a slice of the full enumeration
  std::uint64_t begin = 0;         // slice start (enumerate mode)
  std::uint64_t count = 0;         // slice length (enumerate mode)
  std::uint64_t slice_cap = 100'000;
  std::string out_file;
};

struct GenerateMaxcutOptions {
  std::string graph_file;   // read this graph ...
  int random_vertices = 0;  // ... or generate G(n, p) when n > 0
  double edge_prob = 0.5;
  std::uint64_t seed = 0;
  std::string out_file;  // workload; the source graph lands in out_file + ".graph"
};

struct BenchOptions {
  std::string suite = "census-utility";  // census-utility | feasibility
  int trials = 30;
  std::string t_list = "25,100,500";
  std::string m_list = "10,100";     // feasibility only
  std::string exp_list = "1,2,3";    // feasibility only
  double timeout_secs = 60.0;
  std::uint64_t seed = 1;
  std::string out_file;
};

int cmd_analyze(const AnalyzeOptions& opt);
int cmd_answer(const AnswerOptions& opt);
int cmd_generate_uniform(const GenerateUniformOptions& opt);
int cmd_generate_dist(const GenerateDistOptions& opt);
int cmd_generate_census(const GenerateCensusOptions& opt);
int cmd_generate_maxcut(const GenerateMaxcutOptions& opt);
int cmd_bench(const BenchOptions& opt);

// Full argument-parsing entry point (what main delegates to).
int run(int argc, const char* const* argv);

}  // namespace parcomp::cli
