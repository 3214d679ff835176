#pragma once

#include <string>
#include <vector>

#include "vitality/cut.hpp"
#include "vitality/pairs.hpp"

namespace vitality {

// The chosen tight shortest paths p_1..p_k, their union forest U, and the
// per-edge path-index intervals.
struct PathFamily {
    Idx mf = 0;
    std::vector<Idx> positions;           // pi position per pair, ascending
    std::vector<std::vector<Idx>> paths;  // dart sequences x_i -> y_i

    // Union forest U over D vertices. Intervals are 1-based pair indices.
    std::vector<Idx> u_edges;
    std::vector<Idx> interval_lo;     // per D edge (kNone off U)
    std::vector<Idx> interval_hi;
    std::vector<Idx> forward_dart;    // per D edge in U: the x->y traversal dart
    std::vector<Idx> parent;          // per D vertex (forest; kNone off U or root)
    std::vector<Idx> parent_edge;
    std::vector<Idx> depth;
    std::vector<Idx> root_of;         // per D vertex: tree root (x of the smallest pair)

    Idx k() const { return static_cast<Idx>(paths.size()); }
    Idx x(Idx i) const { return x_verts[i]; }
    Idx y(Idx i) const { return y_verts[i]; }
    bool in_u(Idx e) const { return interval_lo[e] != kNone; }

    std::vector<Idx> x_verts, y_verts;
};

// Per-property validation outcome.
struct FamilyValidation {
    bool lengths_ok = true;
    bool single_touch_ok = true;
    bool non_crossing_ok = true;
    bool forest_ok = true;
    bool intervals_ok = true;   // only probed on small instances
    std::string detail;

    bool all_ok() const {
        return lengths_ok && single_touch_ok && non_crossing_ok && forest_ok && intervals_ok;
    }
};

// Leftmost shortest x->y path within a region of D (thin wrapper over
// RegionOps, kept as the public entry point).
std::vector<Idx> leftmost_shortest_path(const DoubledDual& dd, Idx x, Idx y, const Region& region);

// Builds p_1..p_k in index order, each restricted to the region on the far
// side of its predecessor, then validates the family and derives U. Throws
// FamilyInvariantViolation when validation fails.
PathFamily compute_path_family(const DoubledDual& dd, const PairData& pairs);

FamilyValidation validate_family(const PathFamily& fam, const DoubledDual& dd);

}  // namespace vitality
