#pragma once

#include <vector>

#include "vitality/ids.hpp"

namespace vitality {

enum class Provenance : unsigned char {
    kBridgeRoute,      // MF = 1 degenerate route
    kSelfLoop,         // dual self-loop, vitality 0 outright
    kUnionForest,      // e^D on a chosen tight path
    kSliceTest,        // decided by the distance test in a slice
    kOracleRecompute,  // brute-force deletion/recompute
};

// Per-edge 0/1 vitality verdicts plus the max-flow value.
struct VitalityReport {
    Idx mf = 0;
    std::vector<signed char> vit;       // per primal edge
    std::vector<Provenance> tag;
    std::vector<Idx> slice_index;       // slice that decided the edge, or kNone
};

}  // namespace vitality
