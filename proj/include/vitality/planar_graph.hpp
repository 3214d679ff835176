#pragma once

#include <utility>
#include <vector>

#include "vitality/embedded_multigraph.hpp"

namespace vitality {

// Input description of an embedded planar graph: per-vertex neighbor lists in
// clockwise order plus the two terminals.
struct GraphSpec {
    Idx vertex_count = 0;
    Idx s = kNone;
    Idx t = kNone;
    std::vector<std::vector<Idx>> rotations;
};

// Simple connected planar graph with a fixed combinatorial embedding and
// terminals s, t. Immutable after construction.
class EmbeddedGraph {
public:
    const EmbeddedMultigraph& graph() const { return g_; }
    Idx num_vertices() const { return g_.num_vertices(); }
    Idx num_edges() const { return g_.num_edges(); }
    Idx s() const { return s_; }
    Idx t() const { return t_; }

    Idx edge_u(Idx e) const { return g_.tail(dart_of(e)); }
    Idx edge_v(Idx e) const { return g_.head(dart_of(e)); }

    GraphSpec to_spec() const;

    friend EmbeddedGraph build_embedded_graph(const GraphSpec& spec);

private:
    EmbeddedMultigraph g_;
    Idx s_ = kNone;
    Idx t_ = kNone;
};

// Builds the dart representation from clockwise neighbor lists. Edge ids are
// assigned in input order (scanning vertices ascending, neighbors as listed).
EmbeddedGraph build_embedded_graph(const GraphSpec& spec);

// Faces of the primal graph; Euler check |V| - |E| + |F| = 2.
FaceStructure trace_faces(const EmbeddedGraph& g);

// Dual multigraph over the faces of g. Dual edge ids equal primal edge ids;
// dual dart d runs from face_of(d) to face_of(twin(d)), and the rotation at a
// face vertex is its boundary walk order.
struct DualGraph {
    EmbeddedMultigraph g;
    std::vector<char> self_loop;  // per edge: primal edge is a bridge

    Idx num_faces() const { return g.num_vertices(); }
};

DualGraph build_dual(const EmbeddedGraph& g, const FaceStructure& faces);

// Bridges and 2-edge-connected components, independent of the embedding.
struct BridgeInfo {
    std::vector<char> is_bridge;   // per edge
    std::vector<Idx> component;    // per vertex: 2-edge-connected component id
    Idx component_count = 0;
};

BridgeInfo find_bridges(const EmbeddedGraph& g);

}  // namespace vitality
