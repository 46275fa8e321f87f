#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "ifcwod/ifcwod.h"

namespace {

std::string fixture(const std::string& name) {
    return std::string(IFCWOD_FIXTURE_DIR) + "/" + name;
}

struct Schema {
    ifcwod_schema* h = nullptr;
    ~Schema() { ifcwod_schema_free(h); }
};
struct Model {
    ifcwod_model* h = nullptr;
    ~Model() { ifcwod_model_free(h); }
};
struct GraphH {
    ifcwod_graph* h = nullptr;
    ~GraphH() { ifcwod_graph_free(h); }
};
struct StoreH {
    ifcwod_store* h = nullptr;
    ~StoreH() { ifcwod_store_free(h); }
};
struct Str {
    char* s = nullptr;
    ~Str() { ifcwod_string_free(s); }
};

}  // namespace

TEST_CASE("null arguments are usage errors with a message") {
    CHECK(ifcwod_schema_load(nullptr, nullptr) == IFCWOD_E_USAGE);
    CHECK(std::string(ifcwod_last_error()) == "null argument");
    CHECK(ifcwod_model_load(nullptr, nullptr) == IFCWOD_E_USAGE);
    CHECK(ifcwod_graph_serialize(nullptr, "turtle", nullptr) == IFCWOD_E_USAGE);
    CHECK(ifcwod_bench_run(nullptr, nullptr) == IFCWOD_E_USAGE);
}

TEST_CASE("missing or malformed inputs are parse errors") {
    Schema s;
    CHECK(ifcwod_schema_load("/nonexistent/schema.exp", &s.h) == IFCWOD_E_PARSE);
    CHECK(std::string(ifcwod_last_error()).size() > 0);
    Model m;
    CHECK(ifcwod_model_parse("not a step file", &m.h) == IFCWOD_E_PARSE);
    GraphH g;
    CHECK(ifcwod_graph_parse("<http://a/s> <http://a/p>", "ntriples", &g.h) == IFCWOD_E_PARSE);
    CHECK(ifcwod_graph_parse("<a> <b> <c> .", "nosuchformat", &g.h) == IFCWOD_E_USAGE);
}

TEST_CASE("schema, tbox, model, conversion round-trip through the C API") {
    Schema schema;
    REQUIRE(ifcwod_schema_load(fixture("ifc4_subset.exp").c_str(), &schema.h) == IFCWOD_OK);
    CHECK(std::string(ifcwod_last_error()).empty());

    GraphH tbox;
    REQUIRE(ifcwod_tbox_build(schema.h, fixture("psd").c_str(), nullptr, &tbox.h) == IFCWOD_OK);
    CHECK(ifcwod_graph_size(tbox.h) > 0);

    Str ttl;
    REQUIRE(ifcwod_graph_serialize(tbox.h, "turtle", &ttl.s) == IFCWOD_OK);
    std::string text(ttl.s);
    CHECK(text.find("isPredecessorTo_IfcProcess") != std::string::npos);
    CHECK(text.find("hasSingleValue") != std::string::npos);

    Model model;
    REQUIRE(ifcwod_model_load(fixture("figure1.ifc").c_str(), &model.h) == IFCWOD_OK);

    GraphH abox;
    REQUIRE(ifcwod_convert(model.h, schema.h, tbox.h, "both", nullptr, nullptr, &abox.h) ==
            IFCWOD_OK);
    CHECK(ifcwod_graph_size(abox.h) > 0);
    GraphH bad;
    CHECK(ifcwod_convert(model.h, schema.h, tbox.h, "everything", nullptr, nullptr, &bad.h) ==
          IFCWOD_E_USAGE);

    // Serialized N-Triples reparse to a graph of the same size.
    Str nt;
    REQUIRE(ifcwod_graph_serialize(abox.h, "ntriples", &nt.s) == IFCWOD_OK);
    GraphH back;
    REQUIRE(ifcwod_graph_parse(nt.s, "ntriples", &back.h) == IFCWOD_OK);
    CHECK(ifcwod_graph_size(back.h) == ifcwod_graph_size(abox.h));
}

TEST_CASE("store load, query, and materialize through the C API") {
    GraphH g;
    REQUIRE(ifcwod_graph_parse(
                "<http://a/n1> <http://a/next> <http://a/n2> .\n"
                "<http://a/n2> <http://a/next> <http://a/n3> .\n",
                "ntriples", &g.h) == IFCWOD_OK);
    StoreH store;
    REQUIRE(ifcwod_store_create(&store.h) == IFCWOD_OK);
    REQUIRE(ifcwod_store_load(store.h, g.h) == IFCWOD_OK);
    CHECK(ifcwod_store_size(store.h) == 2);

    REQUIRE(ifcwod_store_materialize(store.h, "http://a/next", nullptr, nullptr, 0, 0) ==
            IFCWOD_OK);
    CHECK(ifcwod_store_size(store.h) == 3);
    CHECK(ifcwod_store_materialize(store.h, nullptr, nullptr, "p without arrow", 0, 0) ==
          IFCWOD_E_USAGE);

    Str json;
    REQUIRE(ifcwod_store_query(store.h,
                               "PREFIX a: <http://a/> SELECT ?x ?y WHERE { ?x a:next ?y }",
                               &json.s) == IFCWOD_OK);
    std::string out(json.s);
    CHECK(out.find("\"variables\"") != std::string::npos);
    CHECK(out.find("http://a/n3") != std::string::npos);

    Str bad;
    CHECK(ifcwod_store_query(store.h, "SELECT ?x WHERE { OPTIONAL { ?x ?p ?o } }", &bad.s) ==
          IFCWOD_E_PARSE);

    GraphH dump;
    REQUIRE(ifcwod_store_graph(store.h, &dump.h) == IFCWOD_OK);
    CHECK(ifcwod_graph_size(dump.h) == 3);
}

TEST_CASE("synthetic generation through the C API") {
    Str spf;
    REQUIRE(ifcwod_generate_synthetic(
                "walls=4 external=2 doors=0 refs=0 spaces=0 tall=0 processes=3 seed=5",
                &spf.s) == IFCWOD_OK);
    std::string text(spf.s);
    CHECK(text.find("IFCWALLSTANDARDCASE") != std::string::npos);
    CHECK(text.find("IFCRELSEQUENCE") != std::string::npos);
    CHECK(ifcwod_generate_synthetic("walls=x", &spf.s) == IFCWOD_E_PARSE);
}

TEST_CASE("bench run through the C API") {
    std::string config =
        "repetitions = 2\n"
        "[dataset]\n"
        "schema = " + fixture("ifc4_subset.exp") + "\n"
        "psd = " + fixture("psd") + "\n"
        "synthetic = walls=40 external=15 doors=10 refs=4 spaces=10 tall=3 processes=5 seed=11\n"
        "[pair q1]\n"
        "ifcowl = " + fixture("queries/q1_external_walls_ifcowl.rq") + "\n"
        "ifcwod = " + fixture("queries/q1_external_walls_ifcwod.rq") + "\n";
    std::string path = "/tmp/ifcwod_capi_bench.conf";
    {
        std::ofstream out(path);
        out << config;
    }
    Str json;
    int rc = ifcwod_bench_run(path.c_str(), &json.s);
    CHECK(rc == IFCWOD_OK);
    REQUIRE(json.s != nullptr);
    std::string text(json.s);
    CHECK(text.find("\"equal_results\": true") != std::string::npos);
    CHECK(text.find("\"pattern_reduction_percent\": 50.0") != std::string::npos);
    std::remove(path.c_str());

    Str none;
    CHECK(ifcwod_bench_run("/nonexistent/bench.conf", &none.s) == IFCWOD_E_PARSE);
}
