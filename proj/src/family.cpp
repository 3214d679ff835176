#include "vitality/family.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "vitality/crossing.hpp"

namespace vitality {

std::vector<Idx> leftmost_shortest_path(const DoubledDual& dd, Idx x, Idx y,
                                        const Region& region) {
    RegionOps ops(dd);
    return ops.leftmost_path(region, x, y);
}

namespace {

void build_union_forest(PathFamily& fam, const DoubledDual& dd) {
    const Idx m = dd.g.num_edges();
    fam.interval_lo.assign(m, kNone);
    fam.interval_hi.assign(m, kNone);
    fam.forward_dart.assign(m, kNone);
    for (Idx i = 0; i < fam.k(); ++i) {
        for (Idx d : fam.paths[i]) {
            Idx e = edge_of(d);
            if (fam.interval_lo[e] == kNone) {
                fam.interval_lo[e] = fam.interval_hi[e] = i + 1;
                fam.forward_dart[e] = d;
                fam.u_edges.push_back(e);
            } else {
                fam.interval_hi[e] = i + 1;
                if (fam.forward_dart[e] != d)
                    throw FamilyInvariantViolation(
                        "paths traverse a shared edge in opposite directions");
            }
        }
    }

    // Root every tree at the x vertex of its smallest pair.
    const Idx n = dd.g.num_vertices();
    fam.parent.assign(n, kNone);
    fam.parent_edge.assign(n, kNone);
    fam.depth.assign(n, kNone);
    fam.root_of.assign(n, kNone);
    std::vector<std::vector<std::pair<Idx, Idx>>> adj(n);  // (vertex, edge) in U
    for (Idx e : fam.u_edges) {
        Idx a = dd.g.tail(dart_of(e)), b = dd.g.head(dart_of(e));
        adj[a].emplace_back(b, e);
        adj[b].emplace_back(a, e);
    }
    std::queue<Idx> q;
    for (Idx i = 0; i < fam.k(); ++i) {
        Idx root = fam.x_verts[i];
        if (fam.root_of[root] != kNone) continue;
        fam.root_of[root] = root;
        fam.depth[root] = 0;
        q.push(root);
        while (!q.empty()) {
            Idx v = q.front();
            q.pop();
            for (auto [w, e] : adj[v]) {
                if (fam.root_of[w] != kNone) continue;
                fam.root_of[w] = root;
                fam.parent[w] = v;
                fam.parent_edge[w] = e;
                fam.depth[w] = fam.depth[v] + 1;
                q.push(w);
            }
        }
    }
}

}  // namespace

PathFamily compute_path_family(const DoubledDual& dd, const PairData& pairs) {
    PathFamily fam;
    fam.mf = pairs.mf;
    fam.positions = pairs.tight_positions;
    for (Idx pos : fam.positions) {
        fam.x_verts.push_back(dd.low_copy[pos]);
        fam.y_verts.push_back(dd.up_copy[pos]);
    }

    RegionOps ops(dd);
    Region region = ops.whole();
    for (Idx i = 0; i < pairs.k(); ++i) {
        std::vector<Idx> p = ops.leftmost_path(region, fam.x_verts[i], fam.y_verts[i]);
        if (static_cast<Idx>(p.size()) != pairs.mf)
            throw NoTightPath("region lost the tight path for a pair");
        if (i + 1 < pairs.k()) {
            auto [low_side, high_side] = ops.split(region, p);
            region = std::move(high_side);
        }
        fam.paths.push_back(std::move(p));
    }

    FamilyValidation check = validate_family(fam, dd);
    if (!check.all_ok())
        throw FamilyInvariantViolation("path family validation failed: " + check.detail);
    build_union_forest(fam, dd);
    return fam;
}

FamilyValidation validate_family(const PathFamily& fam, const DoubledDual& dd) {
    FamilyValidation out;
    const EmbeddedMultigraph& g = dd.g;

    for (Idx i = 0; i < fam.k(); ++i) {
        if (static_cast<Idx>(fam.paths[i].size()) != fam.mf) {
            out.lengths_ok = false;
            out.detail += "path " + std::to_string(i + 1) + " is not tight; ";
            break;
        }
        std::vector<Idx> verts{g.tail(fam.paths[i].front())};
        for (Idx d : fam.paths[i]) {
            if (g.tail(d) != verts.back()) {
                out.lengths_ok = false;
                out.detail += "path " + std::to_string(i + 1) + " is not a walk; ";
                break;
            }
            verts.push_back(g.head(d));
        }
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
            out.lengths_ok = false;
            out.detail += "path " + std::to_string(i + 1) + " revisits a vertex; ";
        }
        if (!out.lengths_ok) break;
    }
    for (Idx i = 0; out.lengths_ok && i < fam.k() && out.single_touch_ok && out.non_crossing_ok;
         ++i) {
        for (Idx j = i + 1; j < fam.k(); ++j) {
            if (!single_touch(g, fam.paths[i], fam.paths[j])) {
                out.single_touch_ok = false;
                out.detail += "paths " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              " are not single-touch; ";
                break;
            }
            if (count_crossings(g, fam.paths[i], false, fam.paths[j]) != 0) {
                out.non_crossing_ok = false;
                out.detail += "paths " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              " cross; ";
                break;
            }
        }
    }

    // U acyclic: union all path edges, count distinct edges and vertices.
    {
        std::vector<Idx> edges;
        for (const auto& p : fam.paths)
            for (Idx d : p) edges.push_back(edge_of(d));
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        std::vector<Idx> parent(g.num_vertices(), kNone);
        std::vector<Idx> touched;
        auto find = [&](Idx a) {
            while (parent[a] != a && parent[a] != kNone) a = parent[a];
            return a;
        };
        for (Idx e : edges) {
            Idx a = g.tail(dart_of(e)), b = g.head(dart_of(e));
            for (Idx v : {a, b})
                if (parent[v] == kNone) {
                    parent[v] = v;
                    touched.push_back(v);
                }
            Idx ra = find(a), rb = find(b);
            if (ra == rb) {
                out.forest_ok = false;
                out.detail += "U contains a cycle; ";
                break;
            }
            parent[ra] = rb;
        }
    }

    // Interval contiguity, probed directly on small instances.
    if (g.num_vertices() <= 500) {
        std::vector<std::vector<Idx>> member(g.num_edges());
        for (Idx i = 0; i < fam.k(); ++i)
            for (Idx d : fam.paths[i]) member[edge_of(d)].push_back(i);
        for (Idx e = 0; e < g.num_edges() && out.intervals_ok; ++e) {
            for (std::size_t a = 1; a < member[e].size(); ++a) {
                if (member[e][a] != member[e][a - 1] + 1) {
                    out.intervals_ok = false;
                    out.detail += "edge " + std::to_string(e) + " has a gapped index set; ";
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace vitality
