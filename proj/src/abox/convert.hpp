#pragma once

#include <string>
#include <vector>

#include "express/schema.hpp"
#include "rdf/graph.hpp"
#include "step/model.hpp"
#include "tbox/forge.hpp"

namespace ifcwod::abox {

enum class Mode { IfcOwl, IfcWod, Both };

enum class ValueNodePolicy { AlwaysNode, LiteralUnlessUnit };

struct ConversionConfig {
    Mode mode = Mode::Both;
    std::string base = "http://example.org/model#";  // instance IRIs: {base}{Entity}_{id}
    std::string ifcowl_ns = tbox::ForgeOptions{}.ifcowl_ns;
    bool flatten_fixed_lists = true;  // IfcCartesianPoint coordinates -> coordinateX/Y/Z
    ValueNodePolicy value_node_policy = ValueNodePolicy::LiteralUnlessUnit;
};

struct ConversionResult {
    rdf::Graph graph;
    std::vector<std::string> warnings;
    std::vector<std::string> violations;  // complex-property cycles
};

ConversionResult convert(const step::StepModel& model, const express::ExpressSchema& schema,
                         const rdf::Graph& tbox, const ConversionConfig& cfg);

// Leaf parameter to RDF term. Returns false (no term) for unset/derived.
// Mismatches yield a literal plus a diagnostic, never silent coercion.
bool map_value(const step::StepParam& param, const std::string& expected_type,
               const express::ExpressSchema& schema, const std::string& ifcowl_ns, rdf::Term& out,
               std::vector<std::string>* diagnostics = nullptr);

}  // namespace ifcwod::abox
