#include "vitality/pairs.hpp"

#include <algorithm>
#include <queue>

namespace vitality {

namespace {

void recurse(RegionOps& ops, const DoubledDual& dd, Idx lo, Idx hi, Region region,
             std::vector<Idx>& out) {
    if (lo > hi) return;
    Idx m = lo + (hi - lo) / 2;
    Idx x = dd.low_copy[m], y = dd.up_copy[m];
    ops.bfs(region, x);
    if (ops.dist(y) == kNone)
        throw PairUnreachable("split pair unreachable inside its region");
    out[m] = ops.dist(y);
    if (lo == hi) return;
    std::vector<Idx> path = ops.extract_path(region, x, y);
    auto [low_side, high_side] = ops.split(region, path);
    region.edges.clear();
    region.edges.shrink_to_fit();
    recurse(ops, dd, lo, m - 1, std::move(low_side), out);
    recurse(ops, dd, m + 1, hi, std::move(high_side), out);
}

}  // namespace

std::vector<Idx> all_pair_distances(const DoubledDual& dd) {
    const Idx positions = dd.positions();
    std::vector<Idx> out(positions, kNone);
    RegionOps ops(dd);
    recurse(ops, dd, 0, positions - 1, ops.whole(), out);
    return out;
}

PairData compute_max_flow_and_tight_pairs(const std::vector<Idx>& distances) {
    PairData pd;
    pd.mf = *std::min_element(distances.begin(), distances.end());
    for (Idx j = 0; j < static_cast<Idx>(distances.size()); ++j)
        if (distances[j] == pd.mf) pd.tight_positions.push_back(j);
    return pd;
}

VitalityReport st_bridge_vitality(const EmbeddedGraph& g) {
    BridgeInfo info = find_bridges(g);
    if (info.component[g.s()] == info.component[g.t()])
        throw NotDegenerate("terminals are 2-edge-connected; bridge route does not apply");

    // Bridge tree: components as nodes, bridges as edges; the s-t tree path
    // picks out the separating bridges.
    const Idx c = info.component_count;
    std::vector<std::vector<std::pair<Idx, Idx>>> adj(c);  // (neighbor comp, bridge edge)
    for (Idx e = 0; e < g.num_edges(); ++e) {
        if (!info.is_bridge[e]) continue;
        Idx a = info.component[g.edge_u(e)];
        Idx b = info.component[g.edge_v(e)];
        adj[a].emplace_back(b, e);
        adj[b].emplace_back(a, e);
    }
    std::vector<Idx> parent_comp(c, kNone), parent_bridge(c, kNone);
    std::queue<Idx> q;
    Idx root = info.component[g.s()];
    parent_comp[root] = root;
    q.push(root);
    while (!q.empty()) {
        Idx v = q.front();
        q.pop();
        for (auto [w, e] : adj[v]) {
            if (parent_comp[w] == kNone) {
                parent_comp[w] = v;
                parent_bridge[w] = e;
                q.push(w);
            }
        }
    }

    VitalityReport report;
    report.mf = 1;
    report.vit.assign(g.num_edges(), 0);
    report.tag.assign(g.num_edges(), Provenance::kBridgeRoute);
    report.slice_index.assign(g.num_edges(), kNone);
    for (Idx comp = info.component[g.t()]; comp != root; comp = parent_comp[comp])
        report.vit[parent_bridge[comp]] = 1;
    return report;
}

}  // namespace vitality
