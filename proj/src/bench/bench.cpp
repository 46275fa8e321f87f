#include "bench/bench.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "abox/convert.hpp"
#include "express/parser.hpp"
#include "psd/psd.hpp"
#include "query/eval.hpp"
#include "query/query.hpp"
#include "step/model.hpp"
#include "tbox/forge.hpp"

namespace ifcwod::bench {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> splitList(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string resolvePath(const std::string& path, const std::string& base_dir) {
    if (path.empty() || base_dir.empty() || fs::path(path).is_absolute()) return path;
    return (fs::path(base_dir) / path).string();
}

SyntheticParams parseSyntheticValue(const std::string& value) {
    // e.g. "walls=1000 external=370 doors=200 refs=141 spaces=150 tall=67 processes=100 seed=7"
    SyntheticParams p;
    std::stringstream ss(value);
    std::string tok;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw BenchConfigError("bad synthetic token: " + tok);
        std::string key = tok.substr(0, eq);
        unsigned long n = 0;
        try {
            n = std::stoul(tok.substr(eq + 1));
        } catch (const std::exception&) {
            throw BenchConfigError("bad synthetic count: " + tok);
        }
        if (key == "walls") p.walls = n;
        else if (key == "external") p.external_walls = n;
        else if (key == "doors") p.doors = n;
        else if (key == "refs") p.doors_with_reference = n;
        else if (key == "spaces") p.spaces = n;
        else if (key == "tall") p.tall_spaces = n;
        else if (key == "processes") p.processes = n;
        else if (key == "seed") p.seed = static_cast<std::uint32_t>(n);
        else throw BenchConfigError("unknown synthetic key: " + key);
    }
    return p;
}

// Human-readable table keeps the 3-decimal presentation; JSON keeps enough
// precision for sub-millisecond queries.
double roundMicros(double seconds) { return std::round(seconds * 1e6) / 1e6; }

}  // namespace

BenchSpec parse_bench_spec(const std::string& text, const std::string& base_dir) {
    BenchSpec spec;
    std::string section;
    BenchPair* pair = nullptr;
    std::stringstream ss(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(ss, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw BenchConfigError("line " + std::to_string(lineno) + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.rfind("pair", 0) == 0) {
                spec.pairs.push_back({trim(section.substr(4)), "", ""});
                pair = &spec.pairs.back();
                if (pair->name.empty()) pair->name = "pair" + std::to_string(spec.pairs.size());
            } else {
                pair = nullptr;
            }
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw BenchConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (pair) {
            if (key == "ifcowl") pair->ifcowl_query_file = resolvePath(value, base_dir);
            else if (key == "ifcwod") pair->ifcwod_query_file = resolvePath(value, base_dir);
            else throw BenchConfigError("line " + std::to_string(lineno) + ": unknown pair key " + key);
        } else if (section == "dataset") {
            if (key == "schema") spec.schema_path = resolvePath(value, base_dir);
            else if (key == "psd") spec.psd_dir = resolvePath(value, base_dir);
            else if (key == "step") spec.step_path = resolvePath(value, base_dir);
            else if (key == "synthetic") spec.synthetic = parseSyntheticValue(value);
            else throw BenchConfigError("line " + std::to_string(lineno) + ": unknown dataset key " + key);
        } else if (section == "rules") {
            if (key == "transitive") spec.rules.transitive = splitList(value);
            else if (key == "symmetric") spec.rules.symmetric = splitList(value);
            else if (key == "inverse") {
                for (const auto& entry : splitList(value)) {
                    auto arrow = entry.find("->");
                    if (arrow == std::string::npos)
                        throw BenchConfigError("line " + std::to_string(lineno) + ": inverse needs p -> q");
                    spec.rules.inverse.emplace_back(trim(entry.substr(0, arrow)),
                                                   trim(entry.substr(arrow + 2)));
                }
            } else if (key == "subproperty") {
                spec.rules.subproperty = value == "true" || value == "1";
            } else if (key == "budget") {
                spec.rules.triple_budget = std::stoul(value);
            } else {
                throw BenchConfigError("line " + std::to_string(lineno) + ": unknown rules key " + key);
            }
        } else if (section.empty()) {
            if (key == "repetitions") {
                spec.repetitions = std::stoi(value);
                if (spec.repetitions < 1)
                    throw BenchConfigError("repetitions must be >= 1");
            } else if (key == "base") {
                spec.base = value;
            } else if (key == "ifcowl_ns") {
                spec.ifcowl_ns = value;
            } else {
                throw BenchConfigError("line " + std::to_string(lineno) + ": unknown key " + key);
            }
        } else {
            throw BenchConfigError("line " + std::to_string(lineno) + ": unknown section " + section);
        }
    }
    for (const auto& p : spec.pairs)
        if (p.ifcowl_query_file.empty() || p.ifcwod_query_file.empty())
            throw BenchConfigError("pair " + p.name + " needs both ifcowl and ifcwod query files");
    if (spec.schema_path.empty()) throw BenchConfigError("dataset needs a schema");
    if (spec.step_path.empty() && !spec.synthetic)
        throw BenchConfigError("dataset needs either step or synthetic");
    return spec;
}

BenchSpec parse_bench_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BenchConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bench_spec(ss.str(), fs::path(path).parent_path().string());
}

query::Store prepare_store(const BenchSpec& spec, std::vector<std::string>* warnings) {
    auto warn = [&](const std::vector<std::string>& msgs) {
        if (warnings) warnings->insert(warnings->end(), msgs.begin(), msgs.end());
    };
    express::ExpressSchema schema = express::parse_schema_file(spec.schema_path);
    warn(schema.diagnostics);

    tbox::ForgeOptions opts;
    if (!spec.ifcowl_ns.empty()) opts.ifcowl_ns = spec.ifcowl_ns;
    std::vector<std::string> forgeWarnings;
    rdf::Graph tbox_graph = tbox::core_tbox(opts);
    tbox_graph.merge(tbox::derive_relationship_properties(schema, opts, &forgeWarnings));
    if (!spec.psd_dir.empty())
        for (const auto& doc : psd::parse_psd_dir(spec.psd_dir))
            tbox_graph.merge(tbox::map_psd(doc, opts, &forgeWarnings));
    warn(forgeWarnings);

    step::StepModel model;
    if (spec.synthetic) model = generate_synthetic(*spec.synthetic).model;
    else model = step::parse_spf_file(spec.step_path);
    warn(model.warnings);

    abox::ConversionConfig cfg;
    cfg.mode = abox::Mode::Both;
    cfg.base = spec.base;
    cfg.ifcowl_ns = opts.ifcowl_ns;
    auto converted = abox::convert(model, schema, tbox_graph, cfg);
    warn(converted.warnings);

    query::Store store;
    store.load(tbox_graph);
    store.load(converted.graph);
    store.materialize(spec.rules);
    return store;
}

namespace {

FormResult measure(const query::Store& store, const std::string& query_file, int reps) {
    query::Query q = query::parse_query_file(query_file);
    query::EvalReport warm = query::evaluate(store, q);
    FormResult r;
    r.patterns = q.patternCount();
    r.results = warm.solutions.size();
    r.intermediate_rows = warm.intermediate_rows;
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(reps));
    for (int i = 0; i < reps; ++i) times.push_back(query::evaluate(store, q).wall_seconds);
    double sum = 0;
    for (double t : times) sum += t;
    r.mean_seconds = sum / static_cast<double>(times.size());
    double var = 0;
    for (double t : times) var += (t - r.mean_seconds) * (t - r.mean_seconds);
    r.stddev_seconds = times.size() > 1 ? std::sqrt(var / static_cast<double>(times.size() - 1)) : 0;
    return r;
}

json formJson(const FormResult& f) {
    return json{{"results", f.results},
                {"patterns", f.patterns},
                {"intermediate_rows", f.intermediate_rows},
                {"mean_seconds", roundMicros(f.mean_seconds)},
                {"stddev_seconds", roundMicros(f.stddev_seconds)}};
}

}  // namespace

BenchReport run_bench(const BenchSpec& spec, const query::Store& store) {
    BenchReport report;
    report.repetitions = spec.repetitions;
    report.store_triples = store.size();
    for (const auto& pair : spec.pairs) {
        PairResult pr;
        pr.name = pair.name;
        pr.ifcowl = measure(store, pair.ifcowl_query_file, spec.repetitions);
        pr.ifcwod = measure(store, pair.ifcwod_query_file, spec.repetitions);

        query::Query qa = query::parse_query_file(pair.ifcowl_query_file);
        query::Query qb = query::parse_query_file(pair.ifcwod_query_file);
        pr.equal_results = query::evaluate(store, qa).sortedSolutions() ==
                           query::evaluate(store, qb).sortedSolutions();

        if (pr.ifcowl.patterns > 0)
            pr.pattern_reduction_percent =
                100.0 * (1.0 - static_cast<double>(pr.ifcwod.patterns) /
                                   static_cast<double>(pr.ifcowl.patterns));
        if (pr.ifcowl.mean_seconds > 0)
            pr.time_reduction_percent =
                100.0 * (1.0 - pr.ifcwod.mean_seconds / pr.ifcowl.mean_seconds);
        report.pairs.push_back(std::move(pr));
    }
    return report;
}

bool BenchReport::allEqual() const {
    for (const auto& p : pairs)
        if (!p.equal_results) return false;
    return true;
}

std::string BenchReport::toJson() const {
    json doc;
    doc["repetitions"] = repetitions;
    doc["store_triples"] = store_triples;
    doc["pairs"] = json::array();
    double patternSum = 0, timeSum = 0;
    std::size_t contributing = 0;
    for (const auto& p : pairs) {
        doc["pairs"].push_back(json{{"name", p.name},
                                    {"ifcowl", formJson(p.ifcowl)},
                                    {"ifcwod", formJson(p.ifcwod)},
                                    {"equal_results", p.equal_results},
                                    {"pattern_reduction_percent", p.pattern_reduction_percent},
                                    {"time_reduction_percent", p.time_reduction_percent}});
        if (p.equal_results) {
            patternSum += p.pattern_reduction_percent;
            timeSum += p.time_reduction_percent;
            ++contributing;
        }
    }
    doc["summary"] = json{
        {"pairs", pairs.size()},
        {"failed", pairs.size() - contributing},
        {"mean_pattern_reduction_percent", contributing ? patternSum / contributing : 0.0},
        {"mean_time_reduction_percent", contributing ? timeSum / contributing : 0.0}};
    return doc.dump(2);
}

std::string BenchReport::toTable() const {
    std::ostringstream out;
    out << "pair                      #results  patterns  rows(owl/wod)  mean s (owl/wod)  equal\n";
    char buf[160];
    for (const auto& p : pairs) {
        std::snprintf(buf, sizeof buf, "%-24s %5zu/%-5zu %3zu/%-3zu %8zu/%-8zu %.3f/%.3f  %s\n",
                      p.name.c_str(), p.ifcowl.results, p.ifcwod.results, p.ifcowl.patterns,
                      p.ifcwod.patterns, p.ifcowl.intermediate_rows, p.ifcwod.intermediate_rows,
                      p.ifcowl.mean_seconds, p.ifcwod.mean_seconds,
                      p.equal_results ? "yes" : "NO");
        out << buf;
    }
    return out.str();
}

}  // namespace ifcwod::bench
