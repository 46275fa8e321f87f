#pragma once

#include <cstdint>
#include <cstddef>

#include "step/model.hpp"

namespace ifcwod::bench {

struct SyntheticParams {
    std::size_t walls = 1000;
    std::size_t external_walls = 370;
    std::size_t doors = 200;
    std::size_t doors_with_reference = 141;
    std::size_t spaces = 150;
    std::size_t tall_spaces = 67;  // NominalHeight above the threshold
    double height_threshold = 2.5;
    std::size_t processes = 100;  // one linear IfcRelSequence chain
    std::uint32_t seed = 7;
};

// Answer counts known by construction for the bundled benchmark queries.
struct GroundTruth {
    std::size_t external_walls = 0;
    std::size_t doors_with_reference = 0;
    std::size_t tall_spaces = 0;
    std::size_t sequence_links = 0;  // direct predecessor pairs
    std::size_t closure_pairs = 0;   // pairs after transitive materialization
};

struct SyntheticModel {
    step::StepModel model;
    GroundTruth truth;
};

// Deterministic for a fixed seed; counts clamped to their totals.
SyntheticModel generate_synthetic(const SyntheticParams& params);

}  // namespace ifcwod::bench
