#pragma once

#include "vitality/report.hpp"
#include "vitality/slices.hpp"

namespace vitality {

// Distances from x_i and y_i over a slice's local vertices, with the
// contracted edge counting its full length.
struct SliceDistances {
    std::vector<Idx> from_x;
    std::vector<Idx> from_y;
};

SliceDistances slice_distances(const Slice& slice, Idx mf);

// Remark-style tight test: the unit edge (a, b) lies on some shortest
// x_i y_i path iff d(x,a) + d(y,b) + 1 = MF in one orientation.
bool edge_on_tight_path(Idx local_edge, const Slice& slice, const SliceDistances& dist, Idx mf);

// Full pipeline: dual, cut path, doubled dual, tight pairs (or the bridge
// route when MF = 1), path family, slices, per-slice tests.
VitalityReport compute_vitality(const EmbeddedGraph& g);

// Everything the pipeline computed, for tests and the bench harness.
struct PipelineTrace {
    bool bridge_route = false;
    Idx mf = 0;
    Idx k = 0;
    std::int64_t sum_slice_edges = 0;
    Idx d_edges = 0;
    double t_dual = 0, t_cut = 0, t_pairs = 0, t_family = 0, t_slices = 0, t_tests = 0;
};

VitalityReport compute_vitality(const EmbeddedGraph& g, PipelineTrace& trace);

}  // namespace vitality
