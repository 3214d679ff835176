#pragma once

#include <vector>

#include "vitality/family.hpp"

namespace vitality {

// Rooted view of the union forest U with offline NCA answering.
struct NcaIndex {
    const PathFamily* fam = nullptr;
    const DoubledDual* dd = nullptr;
};

// Answers queries[i] = (u, v) over the forest; kNone for cross-tree pairs.
// Throws VertexNotInForest when a query vertex is off U.
std::vector<Idx> offline_nca(const NcaIndex& idx,
                             const std::vector<std::pair<Idx, Idx>>& queries);

struct PathIntersection {
    bool empty = true;
    Idx end_a = kNone;
    Idx end_b = kNone;
    Idx length = 0;  // edges
};

struct IntersectionSet {
    std::vector<PathIntersection> adjacent;  // [i] = p_{i+1} vs p_{i+2} (0-based pairs i, i+1)
    std::vector<PathIntersection> skip;      // [i] = p_i vs p_{i+2} (0-based), i.e. q_{i+2}

    // q_i for 1-based slice index (valid for 2 <= i <= k-1).
    const PathIntersection& q(Idx i) const { return skip[i - 2]; }
};

IntersectionSet consecutive_intersections(const PathFamily& fam, const NcaIndex& idx);

// Region index per face and per non-U edge, in {0..k}. Region r lies between
// p_r and p_{r+1}; a U edge with interval [lo, hi] walls regions lo-1 and hi.
struct RegionLabels {
    std::vector<Idx> edge_region;  // kNone for U edges
    std::vector<Idx> face_region;  // kNone for the outer face
};

RegionLabels region_labels(const DoubledDual& dd, const PathFamily& fam);

// Compact slice: unit edges plus at most one contracted edge of length |q_i|.
struct Slice {
    Idx index = 0;  // 1-based
    Idx num_vertices = 0;
    std::vector<Idx> local_tail, local_head;  // per local edge
    std::vector<Idx> global_edge;             // D edge id; kNone for the contracted edge
    std::vector<Idx> global_vertex;           // local -> D vertex
    Idx x_local = kNone, y_local = kNone;
    Idx contracted_edge = kNone;  // local edge id or kNone
    Idx contracted_len = 0;

    Idx num_edges() const { return static_cast<Idx>(local_tail.size()); }
};

std::vector<Slice> build_slices(const DoubledDual& dd, const PathFamily& fam,
                                const RegionLabels& labels, const IntersectionSet& inter);

// Ground-truth Omega_i as an explicit D edge set, from cutting D along the
// bounding paths and intersecting the sides. Capped; throws OracleCapExceeded.
std::vector<Idx> left_right_oracle(Idx i, const DoubledDual& dd, const PathFamily& fam,
                                   Idx cap = 2000);

}  // namespace vitality
