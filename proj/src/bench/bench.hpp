#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bench/synthetic.hpp"
#include "query/store.hpp"

namespace ifcwod::bench {

class BenchConfigError : public std::runtime_error {
public:
    explicit BenchConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BenchPair {
    std::string name;
    std::string ifcowl_query_file;
    std::string ifcwod_query_file;
};

struct BenchSpec {
    std::string schema_path;
    std::string psd_dir;                      // optional
    std::string step_path;                    // either this or synthetic
    std::optional<SyntheticParams> synthetic;
    std::string base = "http://example.org/model#";
    std::string ifcowl_ns;                    // empty = default
    int repetitions = 20;
    query::Rules rules;
    std::vector<BenchPair> pairs;
};

struct FormResult {
    std::size_t results = 0;
    std::size_t patterns = 0;
    std::size_t intermediate_rows = 0;
    double mean_seconds = 0;
    double stddev_seconds = 0;
};

struct PairResult {
    std::string name;
    FormResult ifcowl;
    FormResult ifcwod;
    bool equal_results = false;
    double pattern_reduction_percent = 0;  // 1 - patterns(Q')/patterns(Q)
    double time_reduction_percent = 0;
};

struct BenchReport {
    int repetitions = 0;
    std::size_t store_triples = 0;
    std::vector<PairResult> pairs;

    bool allEqual() const;
    std::string toJson() const;   // stable key order, 3-decimal timings
    std::string toTable() const;  // human-readable summary
};

// Plain-text key/value + [section] config. Relative paths resolve against
// the config file's directory.
BenchSpec parse_bench_spec(const std::string& text, const std::string& base_dir = "");
BenchSpec parse_bench_spec_file(const std::string& path);

// Builds TBox + ABox (mode both) for the spec's dataset and loads the store,
// materializing the configured rules.
query::Store prepare_store(const BenchSpec& spec, std::vector<std::string>* warnings = nullptr);

// One warm-up run, then `repetitions` timed runs per query form.
BenchReport run_bench(const BenchSpec& spec, const query::Store& store);

}  // namespace ifcwod::bench
