#include "ifcwod/ifcwod.h"

#include <cstring>
#include <string>

#include "json.hpp"

#include "abox/convert.hpp"
#include "bench/bench.hpp"
#include "bench/synthetic.hpp"
#include "express/parser.hpp"
#include "psd/psd.hpp"
#include "query/eval.hpp"
#include "query/query.hpp"
#include "query/store.hpp"
#include "rdf/io.hpp"
#include "step/model.hpp"
#include "tbox/forge.hpp"

using namespace ifcwod;

struct ifcwod_schema {
    express::ExpressSchema value;
};
struct ifcwod_model {
    step::StepModel value;
};
struct ifcwod_graph {
    rdf::Graph value;
};
struct ifcwod_store {
    query::Store value;
};

namespace {

thread_local std::string g_error;

char* dupString(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int code, const std::string& msg) {
    g_error = msg;
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        g_error.clear();
        return fn();
    } catch (const query::QueryError& e) {
        return fail(IFCWOD_E_PARSE, e.what());
    } catch (const bench::BenchConfigError& e) {
        return fail(IFCWOD_E_PARSE, e.what());
    } catch (const rdf::ModelError& e) {
        return fail(IFCWOD_E_PARSE, e.what());
    } catch (const step::StepError& e) {
        return fail(IFCWOD_E_PARSE, e.what());
    } catch (const express::ExpressParseError& e) {
        return fail(IFCWOD_E_PARSE, e.what());
    } catch (const psd::PsdError& e) {
        return fail(IFCWOD_E_PARSE, e.what());
    } catch (const std::exception& e) {
        return fail(IFCWOD_E_INTERNAL, e.what());
    }
}

std::vector<std::string> splitCsv(const char* s) {
    std::vector<std::string> out;
    if (!s) return out;
    std::string cur;
    for (const char* p = s;; ++p) {
        if (*p == ',' || *p == '\0') {
            std::size_t b = cur.find_first_not_of(" \t");
            if (b != std::string::npos)
                out.push_back(cur.substr(b, cur.find_last_not_of(" \t") - b + 1));
            cur.clear();
            if (*p == '\0') break;
        } else {
            cur += *p;
        }
    }
    return out;
}

std::string termString(const rdf::Term& t) {
    switch (t.kind) {
        case rdf::TermKind::Iri: return "<" + t.value + ">";
        case rdf::TermKind::Blank: return "_:" + t.value;
        default:
            if (!t.lang.empty()) return "\"" + t.value + "\"@" + t.lang;
            if (!t.datatype.empty()) return "\"" + t.value + "\"^^<" + t.datatype + ">";
            return "\"" + t.value + "\"";
    }
}

}  // namespace

extern "C" {

const char* ifcwod_last_error(void) { return g_error.c_str(); }

void ifcwod_string_free(char* s) { delete[] s; }

int ifcwod_schema_load(const char* path, ifcwod_schema** out) {
    if (!path || !out) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        *out = new ifcwod_schema{express::parse_schema_file(path)};
        return IFCWOD_OK;
    });
}

void ifcwod_schema_free(ifcwod_schema* schema) { delete schema; }

int ifcwod_model_load(const char* path, ifcwod_model** out) {
    if (!path || !out) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        *out = new ifcwod_model{step::parse_spf_file(path)};
        return IFCWOD_OK;
    });
}

int ifcwod_model_parse(const char* text, ifcwod_model** out) {
    if (!text || !out) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        *out = new ifcwod_model{step::parse_spf(text)};
        return IFCWOD_OK;
    });
}

void ifcwod_model_free(ifcwod_model* model) { delete model; }

int ifcwod_tbox_build(const ifcwod_schema* schema, const char* psd_dir, const char* ifcowl_ns,
                      ifcwod_graph** out) {
    if (!schema || !out) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        tbox::ForgeOptions opts;
        if (ifcowl_ns) opts.ifcowl_ns = ifcowl_ns;
        rdf::Graph g = tbox::core_tbox(opts);
        g.merge(tbox::derive_relationship_properties(schema->value, opts));
        if (psd_dir)
            for (const auto& doc : psd::parse_psd_dir(psd_dir)) g.merge(tbox::map_psd(doc, opts));
        *out = new ifcwod_graph{std::move(g)};
        return IFCWOD_OK;
    });
}

int ifcwod_tbox_psd(const char* psd_dir, const char* ifcowl_ns, ifcwod_graph** out) {
    if (!psd_dir || !out) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        tbox::ForgeOptions opts;
        if (ifcowl_ns) opts.ifcowl_ns = ifcowl_ns;
        rdf::Graph g;
        for (const auto& doc : psd::parse_psd_dir(psd_dir)) g.merge(tbox::map_psd(doc, opts));
        *out = new ifcwod_graph{std::move(g)};
        return IFCWOD_OK;
    });
}

int ifcwod_convert(const ifcwod_model* model, const ifcwod_schema* schema,
                   const ifcwod_graph* tbox_graph, const char* mode, const char* base,
                   const char* ifcowl_ns, ifcwod_graph** out) {
    if (!model || !schema || !mode || !out) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        abox::ConversionConfig cfg;
        std::string m = mode;
        if (m == "ifcowl") cfg.mode = abox::Mode::IfcOwl;
        else if (m == "ifcwod") cfg.mode = abox::Mode::IfcWod;
        else if (m == "both") cfg.mode = abox::Mode::Both;
        else return fail(IFCWOD_E_USAGE, "mode must be ifcowl, ifcwod, or both");
        if (base) cfg.base = base;
        if (ifcowl_ns) cfg.ifcowl_ns = ifcowl_ns;
        static const rdf::Graph empty;
        auto result =
            abox::convert(model->value, schema->value, tbox_graph ? tbox_graph->value : empty, cfg);
        *out = new ifcwod_graph{std::move(result.graph)};
        return IFCWOD_OK;
    });
}

size_t ifcwod_graph_size(const ifcwod_graph* graph) { return graph ? graph->value.size() : 0; }

int ifcwod_graph_serialize(const ifcwod_graph* graph, const char* format, char** out) {
    if (!graph || !format || !out) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        std::string f = format;
        rdf::Format fmt;
        if (f == "turtle" || f == "ttl") fmt = rdf::Format::Turtle;
        else if (f == "ntriples" || f == "nt") fmt = rdf::Format::NTriples;
        else return fail(IFCWOD_E_USAGE, "format must be turtle or ntriples");
        *out = dupString(rdf::serialize(graph->value, fmt));
        return IFCWOD_OK;
    });
}

int ifcwod_graph_parse(const char* text, const char* format, ifcwod_graph** out) {
    if (!text || !format || !out) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        std::string f = format;
        rdf::Format fmt;
        if (f == "turtle" || f == "ttl") fmt = rdf::Format::Turtle;
        else if (f == "ntriples" || f == "nt") fmt = rdf::Format::NTriples;
        else return fail(IFCWOD_E_USAGE, "format must be turtle or ntriples");
        *out = new ifcwod_graph{rdf::parse(text, fmt)};
        return IFCWOD_OK;
    });
}

void ifcwod_graph_free(ifcwod_graph* graph) { delete graph; }

int ifcwod_store_create(ifcwod_store** out) {
    if (!out) return fail(IFCWOD_E_USAGE, "null argument");
    *out = new ifcwod_store{};
    return IFCWOD_OK;
}

int ifcwod_store_load(ifcwod_store* store, const ifcwod_graph* graph) {
    if (!store || !graph) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        store->value.load(graph->value);
        return IFCWOD_OK;
    });
}

size_t ifcwod_store_size(const ifcwod_store* store) { return store ? store->value.size() : 0; }

int ifcwod_store_materialize(ifcwod_store* store, const char* transitive, const char* symmetric,
                             const char* inverse, int subproperty, size_t budget) {
    if (!store) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        query::Rules rules;
        rules.transitive = splitCsv(transitive);
        rules.symmetric = splitCsv(symmetric);
        for (const auto& entry : splitCsv(inverse)) {
            auto arrow = entry.find("->");
            if (arrow == std::string::npos)
                return fail(IFCWOD_E_USAGE, "inverse entries must be \"p -> q\"");
            auto trim = [](std::string s) {
                auto b = s.find_first_not_of(" \t");
                if (b == std::string::npos) return std::string();
                return s.substr(b, s.find_last_not_of(" \t") - b + 1);
            };
            rules.inverse.emplace_back(trim(entry.substr(0, arrow)), trim(entry.substr(arrow + 2)));
        }
        rules.subproperty = subproperty != 0;
        if (budget) rules.triple_budget = budget;
        try {
            store->value.materialize(rules);
        } catch (const query::StoreError& e) {
            return fail(IFCWOD_E_INTERNAL, e.what());
        }
        return IFCWOD_OK;
    });
}

int ifcwod_store_graph(const ifcwod_store* store, ifcwod_graph** out) {
    if (!store || !out) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        *out = new ifcwod_graph{store->value.toGraph()};
        return IFCWOD_OK;
    });
}

int ifcwod_store_query(const ifcwod_store* store, const char* query_text, char** json_out) {
    if (!store || !query_text || !json_out) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        query::Query q = query::parse_query(query_text);
        query::EvalReport report = query::evaluate(store->value, q);
        nlohmann::json doc;
        doc["variables"] = report.variables;
        doc["solutions"] = nlohmann::json::array();
        for (const auto& row : report.sortedSolutions()) {
            nlohmann::json jrow = nlohmann::json::array();
            for (const auto& t : row) jrow.push_back(termString(t));
            doc["solutions"].push_back(std::move(jrow));
        }
        doc["intermediate_rows"] = report.intermediate_rows;
        doc["wall_seconds"] = report.wall_seconds;
        doc["warnings"] = report.warnings;
        *json_out = dupString(doc.dump(2));
        return IFCWOD_OK;
    });
}

void ifcwod_store_free(ifcwod_store* store) { delete store; }

int ifcwod_generate_synthetic(const char* params, char** spf_out) {
    if (!params || !spf_out) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        // reuse the bench config token grammar for the parameter string
        std::string config = "repetitions = 1\n[dataset]\nschema = unused\nsynthetic = ";
        config += params;
        bench::BenchSpec spec = bench::parse_bench_spec(config);
        auto generated = bench::generate_synthetic(*spec.synthetic);
        *spf_out = dupString(step::write_spf(generated.model));
        return IFCWOD_OK;
    });
}

int ifcwod_bench_run(const char* config_path, char** json_out) {
    if (!config_path || !json_out) return fail(IFCWOD_E_USAGE, "null argument");
    return guarded([&] {
        bench::BenchSpec spec = bench::parse_bench_spec_file(config_path);
        query::Store store = bench::prepare_store(spec);
        bench::BenchReport report = bench::run_bench(spec, store);
        *json_out = dupString(report.toJson());
        if (!report.allEqual()) return fail(IFCWOD_E_PARITY, "result multisets differ for at least one pair");
        return IFCWOD_OK;
    });
}

}  // extern "C"
