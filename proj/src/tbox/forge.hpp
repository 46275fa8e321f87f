#pragma once

#include <string>
#include <vector>

#include "express/schema.hpp"
#include "psd/psd.hpp"
#include "rdf/graph.hpp"

namespace ifcwod::tbox {

struct ForgeOptions {
    std::string ifcowl_ns = "https://w3id.org/ifc/IFC4_ADD1#";
};

// Fixed IfcWoD core: hasSimpleProperty / hasComplexProperty, the six value
// sub-properties, and hasUnit.
rdf::Graph core_tbox(const ForgeOptions& opts = {});

// One owl:ObjectProperty ifcwod:{p}_{e} per inverse attribute declared on an
// entity, for relationship entities reaching IfcRelationship. Unknown range
// entities are still emitted, with a warning.
rdf::Graph derive_relationship_properties(const express::ExpressSchema& schema,
                                          const ForgeOptions& opts = {},
                                          std::vector<std::string>* warnings = nullptr);

// Pset property set mapping: one object property per PSD property, in the
// pset's own namespace.
rdf::Graph map_psd(const psd::PsdDocument& doc, const ForgeOptions& opts = {},
                   std::vector<std::string>* warnings = nullptr);

}  // namespace ifcwod::tbox
