#pragma once

#include "vitality/cut.hpp"
#include "vitality/report.hpp"

namespace vitality {

// Exact max-flow by BFS augmenting paths on the unit-capacity undirected
// graph, optionally with one edge removed.
Idx max_flow_oracle(const EmbeddedGraph& g, Idx skip_edge = kNone);

// vit(e) = MF(G) - MF(G - e) for every edge, by |E| + 1 max-flow runs.
VitalityReport vitality_oracle(const EmbeddedGraph& g, Idx vertex_cap = 20000);

struct SeparatingCycleStats {
    Idx min_length = kNone;      // shortest st-separating cycle through e*
    Idx min_crossings = kNone;   // fewest pi-crossings among minimal witnesses
};

// Exhaustive bond enumeration over vertex bipartitions: every st-cut whose
// sides are both connected corresponds to a simple separating cycle in the
// dual. Tiny instances only.
std::vector<SeparatingCycleStats> separating_cycle_stats(const EmbeddedGraph& g,
                                                         const FaceStructure& faces,
                                                         const DualGraph& dual,
                                                         const CutPath& pi);

SeparatingCycleStats separating_cycle_oracle(const EmbeddedGraph& g, const FaceStructure& faces,
                                             const DualGraph& dual, const CutPath& pi, Idx edge);

}  // namespace vitality
