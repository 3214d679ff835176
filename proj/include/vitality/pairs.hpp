#pragma once

#include <vector>

#include "vitality/cut.hpp"
#include "vitality/region.hpp"
#include "vitality/report.hpp"

namespace vitality {

// Max-flow value and the tight split pairs, ordered along pi_x.
struct PairData {
    Idx mf = 0;
    std::vector<Idx> tight_positions;  // pi positions with dist = mf

    Idx k() const { return static_cast<Idx>(tight_positions.size()); }
};

// dist_D(f*_l, f*_u) for every pi position, by divide and conquer: solve the
// middle pair by BFS, cut the region along that path, recurse on both sides.
std::vector<Idx> all_pair_distances(const DoubledDual& dd);

PairData compute_max_flow_and_tight_pairs(const std::vector<Idx>& distances);

// Degenerate route for MF = 1: vitality 1 exactly for the bridges separating
// s from t; everything else 0. Throws NotDegenerate when s and t are
// 2-edge-connected.
VitalityReport st_bridge_vitality(const EmbeddedGraph& g);

}  // namespace vitality
