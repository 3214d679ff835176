#include "vitality/engine.hpp"

#include <algorithm>
#include <chrono>
#include <queue>

namespace vitality {

namespace {

// Unit BFS over a slice skipping the contracted edge.
std::vector<Idx> unit_bfs(const Slice& s, Idx src) {
    std::vector<std::vector<std::pair<Idx, Idx>>> adj(s.num_vertices);
    for (Idx e = 0; e < s.num_edges(); ++e) {
        if (e == s.contracted_edge) continue;
        adj[s.local_tail[e]].emplace_back(s.local_head[e], e);
        adj[s.local_head[e]].emplace_back(s.local_tail[e], e);
    }
    std::vector<Idx> dist(s.num_vertices, kNone);
    std::queue<Idx> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        Idx v = q.front();
        q.pop();
        for (auto [w, e] : adj[v]) {
            if (dist[w] == kNone) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

std::vector<Idx> mixed_distances(const Slice& s, Idx src) {
    std::vector<Idx> base = unit_bfs(s, src);
    if (s.contracted_edge == kNone) return base;
    // A shortest path uses the contracted edge at most once.
    Idx u1 = s.local_tail[s.contracted_edge];
    Idx u2 = s.local_head[s.contracted_edge];
    Idx w = s.contracted_len;
    std::vector<Idx> via1 = unit_bfs(s, u1);
    std::vector<Idx> via2 = unit_bfs(s, u2);
    std::vector<Idx> out(s.num_vertices, kNone);
    for (Idx v = 0; v < s.num_vertices; ++v) {
        Idx best = base[v];
        auto consider = [&](Idx d1, Idx d2) {
            if (d1 != kNone && d2 != kNone && (best == kNone || d1 + w + d2 < best))
                best = d1 + w + d2;
        };
        consider(base[u1], via2[v]);
        consider(base[u2], via1[v]);
        out[v] = best;
    }
    return out;
}

}  // namespace

SliceDistances slice_distances(const Slice& slice, Idx mf) {
    SliceDistances out;
    out.from_x = mixed_distances(slice, slice.x_local);
    out.from_y = mixed_distances(slice, slice.y_local);
    if (out.from_x[slice.y_local] != mf)
        throw Error("slice lost its tight path: d(x,y) != MF in slice " +
                    std::to_string(slice.index));
    return out;
}

bool edge_on_tight_path(Idx local_edge, const Slice& slice, const SliceDistances& dist, Idx mf) {
    if (local_edge == slice.contracted_edge)
        throw ContractedEdgeQueried("tight test queried on the contracted edge");
    Idx a = slice.local_tail[local_edge];
    Idx b = slice.local_head[local_edge];
    Idx xa = dist.from_x[a], xb = dist.from_x[b];
    Idx ya = dist.from_y[a], yb = dist.from_y[b];
    return (xa != kNone && yb != kNone && xa + yb + 1 == mf) ||
           (xb != kNone && ya != kNone && xb + ya + 1 == mf);
}

VitalityReport compute_vitality(const EmbeddedGraph& g) {
    PipelineTrace trace;
    return compute_vitality(g, trace);
}

VitalityReport compute_vitality(const EmbeddedGraph& g, PipelineTrace& trace) {
    using Clock = std::chrono::steady_clock;
    auto tick = [t = Clock::now()]() mutable {
        auto now = Clock::now();
        double s = std::chrono::duration<double>(now - t).count();
        t = now;
        return s;
    };

    // MF = 1 exactly when a bridge separates the terminals; the general
    // construction assumes MF >= 2, so settle that first.
    BridgeInfo bridges = find_bridges(g);
    if (bridges.component[g.s()] != bridges.component[g.t()]) {
        trace.bridge_route = true;
        trace.mf = 1;
        return st_bridge_vitality(g);
    }

    FaceStructure faces = trace_faces(g);
    DualGraph dual = build_dual(g, faces);
    trace.t_dual = tick();

    auto [f_s, f_t] = select_terminal_faces(g, faces);
    CutPath pi = shortest_dual_path(g, faces, dual, f_s, f_t);
    DoubledDual dd = build_doubled_dual(dual, pi);
    trace.d_edges = dd.g.num_edges();
    trace.t_cut = tick();

    std::vector<Idx> distances = all_pair_distances(dd);
    PairData pairs = compute_max_flow_and_tight_pairs(distances);
    if (pairs.mf < 2)
        throw Error("pair distances yield MF < 2 although the terminals are 2-edge-connected");
    trace.mf = pairs.mf;
    trace.k = pairs.k();
    trace.t_pairs = tick();

    PathFamily fam = compute_path_family(dd, pairs);
    trace.t_family = tick();

    NcaIndex nca{&fam, &dd};
    IntersectionSet inter = consecutive_intersections(fam, nca);
    RegionLabels labels = region_labels(dd, fam);
    std::vector<Slice> slices = build_slices(dd, fam, labels, inter);
    for (const Slice& s : slices) trace.sum_slice_edges += s.num_edges();
    trace.t_slices = tick();

    VitalityReport report;
    report.mf = pairs.mf;
    report.vit.assign(g.num_edges(), 0);
    report.tag.assign(g.num_edges(), Provenance::kSliceTest);
    report.slice_index.assign(g.num_edges(), kNone);

    // Slice tests for every D edge that is not on U.
    std::vector<signed char> d_edge_tight(dd.g.num_edges(), 0);
    std::vector<Idx> d_edge_slice(dd.g.num_edges(), kNone);
    for (const Slice& s : slices) {
        SliceDistances dist = slice_distances(s, pairs.mf);
        for (Idx le = 0; le < s.num_edges(); ++le) {
            Idx de = s.global_edge[le];
            if (de == kNone || fam.in_u(de)) continue;
            if (d_edge_slice[de] == kNone) d_edge_slice[de] = s.index;
            if (edge_on_tight_path(le, s, dist, pairs.mf)) {
                d_edge_tight[de] = 1;
                d_edge_slice[de] = s.index;
            }
        }
    }

    for (Idx e = 0; e < g.num_edges(); ++e) {
        Idx de = dd.d_edge_of_dual[e];
        if (de == kNone) {
            // Dual self-loop: a bridge that separates nothing at MF >= 2.
            report.vit[e] = 0;
            report.tag[e] = Provenance::kSelfLoop;
        } else if (fam.in_u(de)) {
            report.vit[e] = 1;
            report.tag[e] = Provenance::kUnionForest;
        } else {
            report.vit[e] = d_edge_tight[de];
            report.tag[e] = Provenance::kSliceTest;
            report.slice_index[e] = d_edge_slice[de];
        }
    }
    trace.t_tests = tick();
    return report;
}

}  // namespace vitality
