#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ifcwod/ifcwod.h"

namespace {

int writeOutput(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return IFCWOD_OK;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return IFCWOD_E_USAGE;
    }
    out << text;
    return IFCWOD_OK;
}

int report(int code) {
    if (code != IFCWOD_OK) std::cerr << "error: " << ifcwod_last_error() << "\n";
    return code;
}

// RAII for the C handles used below
struct Schema {
    ifcwod_schema* h = nullptr;
    ~Schema() { ifcwod_schema_free(h); }
};
struct Model {
    ifcwod_model* h = nullptr;
    ~Model() { ifcwod_model_free(h); }
};
struct GraphHandle {
    ifcwod_graph* h = nullptr;
    ~GraphHandle() { ifcwod_graph_free(h); }
};
struct StoreHandle {
    ifcwod_store* h = nullptr;
    ~StoreHandle() { ifcwod_store_free(h); }
};
struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { ifcwod_string_free(s); }
};

int serializeAndWrite(ifcwod_graph* g, const std::string& format, const std::string& out) {
    OwnedString text;
    int rc = ifcwod_graph_serialize(g, format.c_str(), &text.s);
    if (rc != IFCWOD_OK) return report(rc);
    return writeOutput(text.s, out);
}

std::string benchTable(const std::string& jsonText) {
    auto doc = nlohmann::json::parse(jsonText);
    std::string out =
        "pair                        results  patterns   rows           mean s          equal\n";
    char buf[200];
    for (const auto& p : doc["pairs"]) {
        std::snprintf(buf, sizeof buf, "%-26s %4llu/%-4llu %3llu/%-3llu %7llu/%-7llu %.3f/%.3f   %s\n",
                      p["name"].get<std::string>().c_str(),
                      p["ifcowl"]["results"].get<unsigned long long>(),
                      p["ifcwod"]["results"].get<unsigned long long>(),
                      p["ifcowl"]["patterns"].get<unsigned long long>(),
                      p["ifcwod"]["patterns"].get<unsigned long long>(),
                      p["ifcowl"]["intermediate_rows"].get<unsigned long long>(),
                      p["ifcwod"]["intermediate_rows"].get<unsigned long long>(),
                      p["ifcowl"]["mean_seconds"].get<double>(),
                      p["ifcwod"]["mean_seconds"].get<double>(),
                      p["equal_results"].get<bool>() ? "yes" : "NO");
        out += buf;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"IFC to OWL/RDF toolchain: relationship and property-set adaptation"};
    app.require_subcommand(1);

    std::string schemaPath, psdDir, stepPath, outPath, base, ifcowlNs;
    std::string mode = "both", format = "turtle";
    std::string transitive, symmetric, inverse, params = "walls=1000 external=370 seed=7";
    std::string configPath, queryPath;
    bool subproperty = false;
    std::size_t budget = 0;

    auto* deriveTbox = app.add_subcommand("derive-tbox", "EXPRESS schema to Turtle TBox");
    deriveTbox->add_option("--schema", schemaPath, "EXPRESS schema file")->required();
    deriveTbox->add_option("--psd", psdDir, "PSD XML directory");
    deriveTbox->add_option("--ifcowl-ns", ifcowlNs, "ifcOWL namespace IRI");
    deriveTbox->add_option("--out", outPath, "output file (default stdout)");
    deriveTbox->add_option("--format", format, "turtle or ntriples");

    auto* derivePsets = app.add_subcommand("derive-psets", "PSD XML directory to Turtle");
    derivePsets->add_option("--psd", psdDir, "PSD XML directory")->required();
    derivePsets->add_option("--ifcowl-ns", ifcowlNs, "ifcOWL namespace IRI");
    derivePsets->add_option("--out", outPath, "output file (default stdout)");
    derivePsets->add_option("--format", format, "turtle or ntriples");

    auto* convert = app.add_subcommand("convert", "STEP file to RDF");
    convert->add_option("--step", stepPath, "STEP (.ifc) file")->required();
    convert->add_option("--schema", schemaPath, "EXPRESS schema file")->required();
    convert->add_option("--psd", psdDir, "PSD XML directory");
    convert->add_option("--mode", mode, "ifcowl, ifcwod, or both");
    convert->add_option("--base", base, "instance IRI base");
    convert->add_option("--ifcowl-ns", ifcowlNs, "ifcOWL namespace IRI");
    convert->add_option("--out", outPath, "output file (default stdout)");
    convert->add_option("--format", format, "turtle or ntriples");

    auto* infer = app.add_subcommand("infer", "Convert, materialize rules, re-emit");
    infer->add_option("--step", stepPath, "STEP (.ifc) file")->required();
    infer->add_option("--schema", schemaPath, "EXPRESS schema file")->required();
    infer->add_option("--psd", psdDir, "PSD XML directory");
    infer->add_option("--mode", mode, "ifcowl, ifcwod, or both");
    infer->add_option("--base", base, "instance IRI base");
    infer->add_option("--transitive", transitive, "comma-separated transitive property IRIs");
    infer->add_option("--symmetric", symmetric, "comma-separated symmetric property IRIs");
    infer->add_option("--inverse", inverse, "comma-separated \"p -> q\" pairs");
    infer->add_flag("--subproperty", subproperty, "apply rdfs:subPropertyOf closure");
    infer->add_option("--budget", budget, "materialization triple budget");
    infer->add_option("--out", outPath, "output file (default stdout)");
    infer->add_option("--format", format, "turtle or ntriples");

    auto* query = app.add_subcommand("query", "Evaluate one query against a converted model");
    query->add_option("--step", stepPath, "STEP (.ifc) file")->required();
    query->add_option("--schema", schemaPath, "EXPRESS schema file")->required();
    query->add_option("--psd", psdDir, "PSD XML directory");
    query->add_option("--base", base, "instance IRI base");
    query->add_option("--query", queryPath, "query file (.rq)")->required();
    query->add_option("--out", outPath, "output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "Run the paired-query benchmark");
    bench->add_option("--config", configPath, "bench config file")->required();
    bench->add_option("--out", outPath, "JSON report file (default stdout)");

    auto* generate = app.add_subcommand("generate", "Emit a synthetic STEP dataset");
    generate->add_option("--params", params, "key=value tokens, e.g. \"walls=100 external=37 seed=7\"");
    generate->add_option("--out", outPath, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (deriveTbox->parsed()) {
        Schema schema;
        int rc = ifcwod_schema_load(schemaPath.c_str(), &schema.h);
        if (rc != IFCWOD_OK) return report(rc);
        GraphHandle g;
        rc = ifcwod_tbox_build(schema.h, psdDir.empty() ? nullptr : psdDir.c_str(),
                               ifcowlNs.empty() ? nullptr : ifcowlNs.c_str(), &g.h);
        if (rc != IFCWOD_OK) return report(rc);
        return serializeAndWrite(g.h, format, outPath);
    }

    if (derivePsets->parsed()) {
        GraphHandle g;
        int rc = ifcwod_tbox_psd(psdDir.c_str(), ifcowlNs.empty() ? nullptr : ifcowlNs.c_str(), &g.h);
        if (rc != IFCWOD_OK) return report(rc);
        return serializeAndWrite(g.h, format, outPath);
    }

    if (convert->parsed() || infer->parsed() || query->parsed()) {
        Schema schema;
        int rc = ifcwod_schema_load(schemaPath.c_str(), &schema.h);
        if (rc != IFCWOD_OK) return report(rc);
        Model model;
        rc = ifcwod_model_load(stepPath.c_str(), &model.h);
        if (rc != IFCWOD_OK) return report(rc);
        GraphHandle tbox;
        rc = ifcwod_tbox_build(schema.h, psdDir.empty() ? nullptr : psdDir.c_str(),
                               ifcowlNs.empty() ? nullptr : ifcowlNs.c_str(), &tbox.h);
        if (rc != IFCWOD_OK) return report(rc);
        GraphHandle abox;
        rc = ifcwod_convert(model.h, schema.h, tbox.h,
                            query->parsed() ? "both" : mode.c_str(),
                            base.empty() ? nullptr : base.c_str(),
                            ifcowlNs.empty() ? nullptr : ifcowlNs.c_str(), &abox.h);
        if (rc != IFCWOD_OK) return report(rc);

        if (convert->parsed()) return serializeAndWrite(abox.h, format, outPath);

        StoreHandle store;
        rc = ifcwod_store_create(&store.h);
        if (rc != IFCWOD_OK) return report(rc);
        rc = ifcwod_store_load(store.h, abox.h);
        if (rc != IFCWOD_OK) return report(rc);

        if (query->parsed()) {
            std::ifstream in(queryPath, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot open " << queryPath << "\n";
                return IFCWOD_E_USAGE;
            }
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            OwnedString json;
            rc = ifcwod_store_query(store.h, text.c_str(), &json.s);
            if (rc != IFCWOD_OK) return report(rc);
            return writeOutput(json.s, outPath);
        }

        rc = ifcwod_store_materialize(store.h, transitive.empty() ? nullptr : transitive.c_str(),
                                      symmetric.empty() ? nullptr : symmetric.c_str(),
                                      inverse.empty() ? nullptr : inverse.c_str(),
                                      subproperty ? 1 : 0, budget);
        if (rc != IFCWOD_OK) return report(rc);
        GraphHandle closed;
        rc = ifcwod_store_graph(store.h, &closed.h);
        if (rc != IFCWOD_OK) return report(rc);
        return serializeAndWrite(closed.h, format, outPath);
    }

    if (bench->parsed()) {
        OwnedString json;
        int rc = ifcwod_bench_run(configPath.c_str(), &json.s);
        if (!json.s) return report(rc);
        std::cerr << benchTable(json.s);
        int wrc = writeOutput(json.s, outPath);
        if (wrc != IFCWOD_OK) return wrc;
        if (rc != IFCWOD_OK) return report(rc);
        return IFCWOD_OK;
    }

    if (generate->parsed()) {
        OwnedString spf;
        int rc = ifcwod_generate_synthetic(params.c_str(), &spf.s);
        if (rc != IFCWOD_OK) return report(rc);
        return writeOutput(spf.s, outPath);
    }

    return IFCWOD_E_USAGE;
}
