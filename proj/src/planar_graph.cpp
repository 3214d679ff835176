#include "vitality/planar_graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace vitality {

GraphSpec EmbeddedGraph::to_spec() const {
    GraphSpec spec;
    spec.vertex_count = num_vertices();
    spec.s = s_;
    spec.t = t_;
    spec.rotations.resize(num_vertices());
    for (Idx v = 0; v < num_vertices(); ++v)
        for (Idx d : g_.rotation_of(v)) spec.rotations[v].push_back(g_.head(d));
    return spec;
}

EmbeddedGraph build_embedded_graph(const GraphSpec& spec) {
    const Idx n = spec.vertex_count;
    if (n < 2 || spec.s < 0 || spec.s >= n || spec.t < 0 || spec.t >= n || spec.s == spec.t)
        throw BadTerminals("terminals must be two distinct vertices in range");
    if (static_cast<Idx>(spec.rotations.size()) != n)
        throw AsymmetricAdjacency("rotation list count does not match vertex count");

    EmbeddedGraph out;
    out.s_ = spec.s;
    out.t_ = spec.t;
    EmbeddedMultigraph& g = out.g_;
    g = EmbeddedMultigraph(n);

    // Pair up (u, v) and (v, u) mentions; edge ids in first-mention order.
    std::unordered_map<std::int64_t, Idx> edge_id;
    auto key = [n](Idx a, Idx b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::int64_t>(a) * n + b;
    };
    std::vector<std::vector<Idx>> darts_at(n);
    std::vector<char> placed;  // per dart: already slotted into a rotation
    for (Idx u = 0; u < n; ++u) {
        for (Idx v : spec.rotations[u]) {
            if (v < 0 || v >= n)
                throw AsymmetricAdjacency("neighbor id out of range at vertex " + std::to_string(u));
            if (v == u)
                throw DuplicateEdge("self-loop at vertex " + std::to_string(u));
            auto it = edge_id.find(key(u, v));
            if (it == edge_id.end()) {
                Idx e = g.add_edge(u, v);
                edge_id.emplace(key(u, v), e);
                placed.resize(2 * g.num_edges(), 0);
                placed[dart_of(e)] = 1;
                darts_at[u].push_back(dart_of(e));
            } else {
                Idx e = it->second;
                Idx d = g.tail(dart_of(e)) == u ? dart_of(e) : twin(dart_of(e));
                if (placed[d])
                    throw DuplicateEdge("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} mentioned more than once at vertex " + std::to_string(u));
                placed[d] = 1;
                darts_at[u].push_back(d);
            }
        }
    }
    // Every edge must have been mentioned by both endpoints.
    for (Idx d = 0; d < g.num_darts(); ++d) {
        if (!placed[d])
            throw AsymmetricAdjacency("vertex " + std::to_string(g.head(d)) + " lists " +
                                      std::to_string(g.tail(d)) + " but not vice versa");
    }
    g.set_rotations(darts_at);
    if (!g.connected()) throw DisconnectedGraph("input graph is not connected");
    return out;
}

FaceStructure trace_faces(const EmbeddedGraph& g) {
    FaceStructure fs = trace_faces_multi(g.graph());
    // Connected primal graph: Euler's formula proper.
    if (g.num_vertices() - g.num_edges() + fs.num_faces() != 2)
        throw EmbeddingInconsistent("rotation system is not planar (Euler check failed)");
    return fs;
}

DualGraph build_dual(const EmbeddedGraph& g, const FaceStructure& faces) {
    DualGraph dual;
    dual.g = EmbeddedMultigraph(faces.num_faces());
    dual.self_loop.assign(g.num_edges(), 0);
    for (Idx e = 0; e < g.num_edges(); ++e) {
        Idx f = faces.face_of[dart_of(e)];
        Idx h = faces.face_of[twin(dart_of(e))];
        dual.g.add_edge(f, h);
        dual.self_loop[e] = (f == h);
    }
    // Rotation at a face vertex = its boundary walk order; dual dart ids
    // coincide with primal dart ids.
    std::vector<std::vector<Idx>> darts_at(faces.num_faces());
    for (Idx f = 0; f < faces.num_faces(); ++f) {
        darts_at[f].reserve(faces.walk_len[f]);
        for (Idx d : faces.walk(g.graph(), f)) darts_at[f].push_back(d);
    }
    dual.g.set_rotations(darts_at);
    return dual;
}

BridgeInfo find_bridges(const EmbeddedGraph& eg) {
    const EmbeddedMultigraph& g = eg.graph();
    const Idx n = g.num_vertices();
    BridgeInfo info;
    info.is_bridge.assign(g.num_edges(), 0);
    info.component.assign(n, kNone);

    // Iterative lowlink DFS.
    std::vector<Idx> disc(n, kNone), low(n, kNone), parent_edge(n, kNone), iter(n, kNone);
    std::vector<Idx> stack;
    Idx time = 0;
    for (Idx root = 0; root < n; ++root) {
        if (disc[root] != kNone) continue;
        stack.push_back(root);
        disc[root] = low[root] = time++;
        iter[root] = g.first_dart(root);
        while (!stack.empty()) {
            Idx v = stack.back();
            Idx d = iter[v];
            if (d != kNone) {
                iter[v] = g.rot_next(d) == g.first_dart(v) ? kNone : g.rot_next(d);
                if (edge_of(d) == parent_edge[v]) continue;
                Idx w = g.head(d);
                if (disc[w] == kNone) {
                    disc[w] = low[w] = time++;
                    parent_edge[w] = edge_of(d);
                    iter[w] = g.first_dart(w);
                    stack.push_back(w);
                } else {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    Idx p = stack.back();
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) info.is_bridge[parent_edge[v]] = 1;
                }
            }
        }
    }

    // 2-edge-connected components: flood without crossing bridges.
    std::vector<Idx> bfs;
    for (Idx v = 0; v < n; ++v) {
        if (info.component[v] != kNone) continue;
        Idx c = info.component_count++;
        info.component[v] = c;
        bfs.assign(1, v);
        while (!bfs.empty()) {
            Idx u = bfs.back();
            bfs.pop_back();
            Idx d0 = g.first_dart(u);
            if (d0 == kNone) continue;
            Idx d = d0;
            do {
                if (!info.is_bridge[edge_of(d)]) {
                    Idx w = g.head(d);
                    if (info.component[w] == kNone) {
                        info.component[w] = c;
                        bfs.push_back(w);
                    }
                }
                d = g.rot_next(d);
            } while (d != d0);
        }
    }
    return info;
}

}  // namespace vitality
