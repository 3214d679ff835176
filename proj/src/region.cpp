#include "vitality/region.hpp"

#include <algorithm>
#include <numeric>

namespace vitality {

namespace {

// Disjoint sets over a dense unit range, path halving.
struct Dsu {
    std::vector<Idx> parent;
    explicit Dsu(Idx n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    Idx find(Idx a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(Idx a, Idx b) { parent[find(a)] = find(b); }
};

}  // namespace

RegionOps::RegionOps(const DoubledDual& dd)
    : dd_(&dd),
      edge_epoch_(dd.g.num_edges(), -1),
      dist_(dd.g.num_vertices(), kNone),
      dist_epoch_(dd.g.num_vertices(), -1) {}

Region RegionOps::whole() const {
    Region r;
    r.edges.resize(dd_->g.num_edges());
    std::iota(r.edges.begin(), r.edges.end(), 0);
    return r;
}

void RegionOps::load(const Region& r) {
    ++epoch_;
    for (Idx e : r.edges) edge_epoch_[e] = epoch_;
}

Idx RegionOps::gap_after(Idx v) const {
    Idx pos = dd_->pi_pos[v];
    if (pos == kNone) throw Error("gap anchor requested off the cut path");
    return dd_->on_low[v] ? dd_->low_gap_after[pos] : dd_->up_gap_after[pos];
}

void RegionOps::bfs(const Region& r, Idx src) {
    load(r);
    const EmbeddedMultigraph& g = dd_->g;
    dist_epoch_[src] = epoch_;
    dist_[src] = 0;
    queue_.assign(1, src);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
        Idx v = queue_[qi];
        Idx d0 = g.first_dart(v);
        if (d0 == kNone) continue;
        Idx d = d0;
        do {
            if (edge_epoch_[edge_of(d)] == epoch_) {
                Idx w = g.head(d);
                if (dist_epoch_[w] != epoch_) {
                    dist_epoch_[w] = epoch_;
                    dist_[w] = dist_[v] + 1;
                    queue_.push_back(w);
                }
            }
            d = g.rot_next(d);
        } while (d != d0);
    }
}

Idx RegionOps::dist(Idx v) const { return dist_epoch_[v] == epoch_ ? dist_[v] : kNone; }

std::vector<Idx> RegionOps::extract_path(const Region&, Idx src, Idx dst) const {
    const EmbeddedMultigraph& g = dd_->g;
    if (dist(dst) == kNone) throw PairUnreachable("path endpoint unreachable in region");
    std::vector<Idx> rev;
    Idx cur = dst;
    while (cur != src) {
        Idx best_dart = kNone;
        Idx d0 = g.first_dart(cur);
        Idx d = d0;
        do {
            if (edge_epoch_[edge_of(d)] == epoch_) {
                Idx w = g.head(d);
                if (dist(w) == dist(cur) - 1 &&
                    (best_dart == kNone || edge_of(d) < edge_of(best_dart)))
                    best_dart = d;
            }
            d = g.rot_next(d);
        } while (d != d0);
        if (best_dart == kNone) throw PairUnreachable("BFS backtrack failed");
        rev.push_back(twin(best_dart));
        cur = g.head(best_dart);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

std::pair<Region, Region> RegionOps::split(const Region& r, const std::vector<Idx>& path_darts) {
    const EmbeddedMultigraph& g = dd_->g;
    load(r);

    std::vector<Idx> path_verts;
    path_verts.push_back(g.tail(path_darts.front()));
    for (Idx d : path_darts) path_verts.push_back(g.head(d));

    std::vector<Idx> path_edges;
    for (Idx d : path_darts) path_edges.push_back(edge_of(d));
    std::sort(path_edges.begin(), path_edges.end());
    auto on_path = [&](Idx e) {
        return std::binary_search(path_edges.begin(), path_edges.end(), e);
    };

    // Units: one per arc at path vertices, one per other region vertex.
    // unit_of_vertex covers non-path vertices; arc units are assigned to darts.
    std::vector<Idx> unit_of_vertex(g.num_vertices(), kNone);
    std::vector<std::pair<Idx, Idx>> dart_units;  // (dart, unit) at path vertices
    Idx unit_count = 0;
    std::vector<Idx> high_units, low_units;

    const Idx T = static_cast<Idx>(path_darts.size());
    for (Idx idx = 0; idx <= T; ++idx) {
        Idx v = path_verts[idx];
        std::vector<Idx> rot = g.rotation_of(v);
        const Idx deg = static_cast<Idx>(rot.size());
        auto pos_of_dart = [&](Idx dart) {
            for (Idx i = 0; i < deg; ++i)
                if (rot[i] == dart) return 2 * i;
            throw Error("dart missing from rotation during split");
        };
        Idx out_pos = idx < T ? pos_of_dart(path_darts[idx]) : pos_of_dart(gap_after(v)) + 1;
        Idx in_pos = idx > 0 ? pos_of_dart(twin(path_darts[idx - 1])) : pos_of_dart(gap_after(v)) + 1;
        if (out_pos == in_pos && idx > 0 && idx < T)
            throw Error("degenerate spokes during split");
        // Arc from out to in = high side; the rest = low side.
        Idx high_unit = unit_count++, low_unit = unit_count++;
        high_units.push_back(high_unit);
        low_units.push_back(low_unit);
        const Idx mod = 2 * deg;
        for (Idx p = (out_pos + 1) % mod; p != in_pos; p = (p + 1) % mod) {
            if (p % 2 == 0 && edge_epoch_[edge_of(rot[p / 2])] == epoch_ && !on_path(edge_of(rot[p / 2])))
                dart_units.emplace_back(rot[p / 2], high_unit);
        }
        for (Idx p = (in_pos + 1) % mod; p != out_pos; p = (p + 1) % mod) {
            if (p % 2 == 0 && edge_epoch_[edge_of(rot[p / 2])] == epoch_ && !on_path(edge_of(rot[p / 2])))
                dart_units.emplace_back(rot[p / 2], low_unit);
        }
    }
    std::sort(dart_units.begin(), dart_units.end());
    auto unit_of_dart = [&](Idx dart) -> Idx {
        auto it = std::lower_bound(dart_units.begin(), dart_units.end(),
                                   std::make_pair(dart, kNone));
        if (it != dart_units.end() && it->first == dart) return it->second;
        return kNone;
    };
    // Path vertices must not pick up whole-vertex units.
    for (Idx v : path_verts) unit_of_vertex[v] = -2;

    auto attach_unit = [&](Idx dart) -> Idx {
        Idx v = g.tail(dart);
        if (unit_of_vertex[v] == -2) {
            Idx u = unit_of_dart(dart);
            if (u == kNone) throw Error("dart at path vertex missing arc assignment");
            return u;
        }
        if (unit_of_vertex[v] == kNone) unit_of_vertex[v] = unit_count++;
        return unit_of_vertex[v];
    };

    // First pass assigns unit ids (attach_unit mutates unit_count), second
    // pass unions them.
    std::vector<std::pair<Idx, Idx>> links;
    for (Idx e : r.edges) {
        if (on_path(e)) continue;
        links.emplace_back(attach_unit(dart_of(e)), attach_unit(twin(dart_of(e))));
    }
    Dsu dsu(unit_count);
    for (auto [a, b] : links) dsu.unite(a, b);

    // Side per DSU root: +1 high, -1 low.
    std::vector<signed char> side(unit_count, 0);
    auto mark = [&](Idx unit, signed char s) {
        Idx root = dsu.find(unit);
        if (side[root] == -s) throw Error("region split produced a crossing component");
        side[root] = s;
    };
    for (Idx u : high_units) mark(u, +1);
    for (Idx u : low_units) mark(u, -1);

    std::pair<Region, Region> out;
    Region& low = out.first;
    Region& high = out.second;
    for (Idx e : r.edges) {
        if (on_path(e)) continue;
        signed char s = side[dsu.find(attach_unit(dart_of(e)))];
        if (s == 0) throw Error("region split left a floating component");
        (s > 0 ? high : low).edges.push_back(e);
    }
    for (Idx d : path_darts) {
        low.edges.push_back(edge_of(d));
        high.edges.push_back(edge_of(d));
    }
    return out;
}

std::vector<Idx> RegionOps::leftmost_path(const Region& r, Idx x, Idx y) {
    const EmbeddedMultigraph& g = dd_->g;
    if (x == y) throw NoTightPath("leftmost walk endpoints coincide");
    bfs(r, y);
    if (dist(x) == kNone) throw NoTightPath("target unreachable within region");

    std::vector<Idx> path;
    Idx cur = x;
    Idx ref = gap_after(x);  // scan starts just past the outer gap
    while (cur != y) {
        Idx d = g.rot_next(ref);
        Idx chosen = kNone;
        for (Idx steps = 0; steps < g.degree(cur); ++steps) {
            if (edge_epoch_[edge_of(d)] == epoch_ && dist(g.head(d)) == dist(cur) - 1) {
                chosen = d;
                break;
            }
            d = g.rot_next(d);
        }
        if (chosen == kNone) throw NoTightPath("leftmost walk stuck");
        path.push_back(chosen);
        cur = g.head(chosen);
        ref = twin(chosen);
    }
    return path;
}

}  // namespace vitality
