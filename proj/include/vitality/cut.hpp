#pragma once

#include <utility>
#include <vector>

#include "vitality/planar_graph.hpp"

namespace vitality {

// Shortest dual path from f_s* to f_t*, plus the wedge markers that stand in
// for the dummy extensions through s and t. A wedge is stored as the dual
// dart A at the endpoint such that the dummy occupies the rotation slot
// between A and rot_next(A).
struct CutPath {
    std::vector<Idx> verts;   // f_s* = verts.front(), f_t* = verts.back()
    std::vector<Idx> edges;   // dual edge ids, edges[j] joins verts[j], verts[j+1]
    Idx wedge_s = kNone;
    Idx wedge_t = kNone;

    Idx length() const { return static_cast<Idx>(edges.size()); }
};

// Picks f_s* adjacent to s and f_t* adjacent to t. Tie-break: lowest face id
// not shared with the other terminal, else lowest id (second lowest for t if
// needed to keep them distinct). Throws OnlySharedFace when both terminals
// see exactly the same single face.
std::pair<Idx, Idx> select_terminal_faces(const EmbeddedGraph& g, const FaceStructure& faces);

// BFS shortest path in the dual ignoring self-loops; parents tie-break by
// smallest dual edge id. Wedges are located at the first corner of the
// endpoint face incident to s (resp. t) along its canonical boundary walk.
CutPath shortest_dual_path(const EmbeddedGraph& g, const FaceStructure& faces,
                           const DualGraph& dual, Idx f_s, Idx f_t);

// The dual cut open along pi. Every pi vertex splits into a low copy (on
// pi_x) and an up copy (on pi_y); pi edges are doubled, self-loop dual edges
// are dropped, everything else carries over to the side its rotation arc
// dictates.
struct DoubledDual {
    EmbeddedMultigraph g;
    FaceStructure faces;
    Idx outer_face = kNone;

    // Per pi position 0..L.
    std::vector<Idx> low_copy;       // vertices of pi_x
    std::vector<Idx> up_copy;        // vertices of pi_y
    std::vector<Idx> low_gap_after;  // dart A at low copy: outer gap in slot (A, rot_next A)
    std::vector<Idx> up_gap_after;

    // Per pi step 1..L (index j-1): D edge ids of the two copies of pi edge j.
    std::vector<Idx> x_edge;
    std::vector<Idx> y_edge;

    // Maps. d_edge_of_dual[e] is e^D (the x copy for pi edges), kNone for
    // self-loops. dual_edge_of_d inverts it; y copies also map back to their
    // dual edge but are not anyone's designated e^D.
    std::vector<Idx> d_edge_of_dual;
    std::vector<Idx> dual_edge_of_d;
    std::vector<char> is_x_copy;  // per D edge
    std::vector<char> is_y_copy;

    // Per D vertex: original dual vertex and pi position (kNone off the path).
    std::vector<Idx> orig_vertex;
    std::vector<Idx> pi_pos;
    std::vector<char> on_low;  // valid when pi_pos != kNone

    Idx positions() const { return static_cast<Idx>(low_copy.size()); }
};

DoubledDual build_doubled_dual(const DualGraph& dual, const CutPath& pi);

}  // namespace vitality
