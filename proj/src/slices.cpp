#include "vitality/slices.hpp"

#include <algorithm>
#include <numeric>

namespace vitality {

namespace {

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
};

}  // namespace

std::vector<Idx> offline_nca(const NcaIndex& idx,
                             const std::vector<std::pair<Idx, Idx>>& queries) {
    const PathFamily& fam = *idx.fam;
    const EmbeddedMultigraph& g = idx.dd->g;
    const Idx n = g.num_vertices();

    for (const auto& [u, v] : queries) {
        if (u < 0 || u >= n || fam.root_of[u] == kNone || v < 0 || v >= n ||
            fam.root_of[v] == kNone)
            throw VertexNotInForest("NCA query vertex is not in U");
    }

    // Children lists of the rooted forest.
    std::vector<std::vector<Idx>> children(n);
    std::vector<Idx> roots;
    for (Idx v = 0; v < n; ++v) {
        if (fam.root_of[v] == kNone) continue;
        if (fam.parent[v] == kNone)
            roots.push_back(v);
        else
            children[fam.parent[v]].push_back(v);
    }
    std::vector<std::vector<std::pair<Idx, Idx>>> pending(n);  // (partner, query idx)
    for (Idx qi = 0; qi < static_cast<Idx>(queries.size()); ++qi) {
        auto [u, v] = queries[qi];
        pending[u].emplace_back(v, qi);
        if (u != v) pending[v].emplace_back(u, qi);
    }

    std::vector<Idx> answer(queries.size(), kNone);
    Dsu dsu(n);
    std::vector<Idx> ancestor(n, kNone);
    std::vector<char> done(n, 0);

    // Tarjan offline NCA, iterative.
    struct Frame {
        Idx v;
        Idx child = 0;
    };
    std::vector<Frame> stack;
    for (Idx root : roots) {
        stack.push_back({root});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.child == 0) ancestor[dsu.find(f.v)] = f.v;
            if (f.child < static_cast<Idx>(children[f.v].size())) {
                Idx c = children[f.v][f.child++];
                stack.push_back({c});
                continue;
            }
            // Subtree finished.
            for (auto [partner, qi] : pending[f.v]) {
                if (partner == f.v)
                    answer[qi] = f.v;
                else if (done[partner] && fam.root_of[partner] == fam.root_of[f.v])
                    answer[qi] = ancestor[dsu.find(partner)];
            }
            done[f.v] = 1;
            Idx v = f.v;
            stack.pop_back();
            if (!stack.empty()) {
                Idx p = stack.back().v;
                dsu.parent[dsu.find(v)] = dsu.find(p);
                ancestor[dsu.find(p)] = p;
            }
        }
    }
    return answer;
}

namespace {

// Intersection of tree paths (a1, b1) and (a2, b2) from batched NCA rounds.
struct IntersectJob {
    Idx a1, b1, a2, b2;
};

std::vector<PathIntersection> intersect_paths(const NcaIndex& idx,
                                              const std::vector<IntersectJob>& jobs) {
    const PathFamily& fam = *idx.fam;
    std::vector<std::pair<Idx, Idx>> round1;
    round1.reserve(jobs.size() * 6);
    for (const auto& j : jobs) {
        round1.emplace_back(j.a1, j.b1);
        round1.emplace_back(j.a2, j.b2);
        round1.emplace_back(j.a1, j.a2);
        round1.emplace_back(j.a1, j.b2);
        round1.emplace_back(j.b1, j.a2);
        round1.emplace_back(j.b1, j.b2);
    }
    std::vector<Idx> r1 = offline_nca(idx, round1);

    auto depth = [&](Idx v) { return v == kNone ? -1 : fam.depth[v]; };

    // Candidate endpoints: the two deepest distinct cross-NCAs.
    std::vector<std::pair<Idx, Idx>> cand(jobs.size(), {kNone, kNone});
    std::vector<std::pair<Idx, Idx>> round2;
    for (std::size_t ji = 0; ji < jobs.size(); ++ji) {
        const Idx* r = &r1[ji * 6];
        if (fam.root_of[jobs[ji].a1] != fam.root_of[jobs[ji].a2]) continue;
        Idx cross[4] = {r[2], r[3], r[4], r[5]};
        std::sort(cross, cross + 4, [&](Idx a, Idx b) { return depth(a) > depth(b); });
        Idx u = cross[0];
        Idx v = u;
        for (Idx c : cross)
            if (c != u) {
                v = c;
                break;
            }
        cand[ji] = {u, v};
        // Membership probes: u, v on both paths, plus nca(u, v) for the length.
        for (Idx w : {u, v}) {
            round2.emplace_back(w, jobs[ji].a1);
            round2.emplace_back(w, jobs[ji].b1);
            round2.emplace_back(w, jobs[ji].a2);
            round2.emplace_back(w, jobs[ji].b2);
        }
        round2.emplace_back(u, v);
    }
    std::vector<Idx> r2 = offline_nca(idx, round2);

    std::vector<PathIntersection> out(jobs.size());
    std::size_t r2_pos = 0;
    for (std::size_t ji = 0; ji < jobs.size(); ++ji) {
        if (fam.root_of[jobs[ji].a1] != fam.root_of[jobs[ji].a2]) continue;
        const Idx* r = &r1[ji * 6];
        Idx top1 = r[0], top2 = r[1];
        auto [u, v] = cand[ji];
        const Idx* m = &r2[r2_pos];
        r2_pos += 9;
        // w is on path (a,b) iff depth(w) >= depth(top) and w is an ancestor
        // of a or of b.
        auto on1 = [&](Idx w, Idx anc_a, Idx anc_b) {
            return depth(w) >= depth(top1) && (anc_a == w || anc_b == w);
        };
        auto on2 = [&](Idx w, Idx anc_a, Idx anc_b) {
            return depth(w) >= depth(top2) && (anc_a == w || anc_b == w);
        };
        if (!on1(u, m[0], m[1]) || !on2(u, m[2], m[3])) continue;
        if (!on1(v, m[4], m[5]) || !on2(v, m[6], m[7])) continue;
        out[ji].empty = false;
        out[ji].end_a = u;
        out[ji].end_b = v;
        out[ji].length = depth(u) + depth(v) - 2 * depth(m[8]);
    }
    return out;
}

}  // namespace

IntersectionSet consecutive_intersections(const PathFamily& fam, const NcaIndex& idx) {
    IntersectionSet out;
    const Idx k = fam.k();
    std::vector<IntersectJob> jobs;
    for (Idx i = 0; i + 1 < k; ++i)
        jobs.push_back({fam.x(i), fam.y(i), fam.x(i + 1), fam.y(i + 1)});
    for (Idx i = 0; i + 2 < k; ++i)
        jobs.push_back({fam.x(i), fam.y(i), fam.x(i + 2), fam.y(i + 2)});
    std::vector<PathIntersection> res = intersect_paths(idx, jobs);
    out.adjacent.assign(res.begin(), res.begin() + std::max<Idx>(0, k - 1));
    out.skip.assign(res.begin() + std::max<Idx>(0, k - 1), res.end());
    return out;
}

RegionLabels region_labels(const DoubledDual& dd, const PathFamily& fam) {
    const EmbeddedMultigraph& g = dd.g;
    const Idx k = fam.k();
    RegionLabels out;
    out.edge_region.assign(g.num_edges(), kNone);
    out.face_region.assign(dd.faces.num_faces(), kNone);

    std::vector<Idx> dart_region(g.num_darts(), kNone);

    // Virtual walls where each path exits through the boundary: at x_i the
    // continuation points south (gap slot on the low copy), at y_i north.
    std::vector<Idx> virtual_after(g.num_darts(), 0);  // per dart: 1-based pair, + north / - south
    for (Idx i = 0; i < k; ++i) {
        Idx pos = fam.positions[i];
        virtual_after[dd.low_gap_after[pos]] = -(i + 1);
        virtual_after[dd.up_gap_after[pos]] = i + 1;
    }

    auto is_u = [&](Idx d) { return fam.in_u(edge_of(d)); };
    auto northward = [&](Idx d) { return fam.forward_dart[edge_of(d)] == d; };

    // Sector sweep around every U vertex. Crossing a northward wall dart of
    // interval [lo, hi] moves the region from lo-1 to hi; southward reverses.
    std::vector<char> is_u_vertex(g.num_vertices(), 0);
    for (Idx e : fam.u_edges) {
        is_u_vertex[g.tail(dart_of(e))] = 1;
        is_u_vertex[g.head(dart_of(e))] = 1;
    }
    for (Idx v = 0; v < g.num_vertices(); ++v) {
        if (!is_u_vertex[v]) continue;
        std::vector<Idx> rot = g.rotation_of(v);
        const Idx deg = static_cast<Idx>(rot.size());
        Idx a0 = kNone;
        for (Idx i = 0; i < deg; ++i)
            if (is_u(rot[i])) {
                a0 = i;
                break;
            }
        if (a0 == kNone) throw LabelInconsistency("U vertex without U darts");
        auto after_cross = [&](Idx d) {
            Idx e = edge_of(d);
            return northward(d) ? fam.interval_hi[e] : fam.interval_lo[e] - 1;
        };
        auto before_cross = [&](Idx d) {
            Idx e = edge_of(d);
            return northward(d) ? fam.interval_lo[e] - 1 : fam.interval_hi[e];
        };
        Idx r = after_cross(rot[a0]);
        // Walk the doubled circle: even steps are darts, odd steps slots.
        for (Idx p = 2 * a0 + 1;; ++p) {
            Idx pm = p % (2 * deg);
            if (pm == 2 * a0) {
                if (r != before_cross(rot[a0]))
                    throw LabelInconsistency("sector sweep did not close");
                break;
            }
            if (pm % 2 == 0) {
                Idx d = rot[pm / 2];
                if (is_u(d)) {
                    if (r != before_cross(d))
                        throw LabelInconsistency("sector sweep mismatch at a wall");
                    r = after_cross(d);
                } else {
                    if (dart_region[d] != kNone && dart_region[d] != r)
                        throw LabelInconsistency("sector sweep reassigned a dart");
                    dart_region[d] = r;
                }
            } else {
                Idx w = virtual_after[rot[pm / 2]];
                if (w != 0) {
                    Idx i = w > 0 ? w : -w;
                    bool north = w > 0;
                    if (r != (north ? i - 1 : i))
                        throw LabelInconsistency("sector sweep mismatch at a boundary wall");
                    r = north ? i : i - 1;
                }
            }
        }
    }

    // Flood regions across the rest: twin jumps and rotation steps that do
    // not climb over a wall dart or a boundary wall slot.
    std::vector<Idx> stack;
    for (Idx d = 0; d < g.num_darts(); ++d)
        if (dart_region[d] != kNone) stack.push_back(d);
    auto push = [&](Idx d, Idx r) {
        if (is_u(d)) return;
        if (dart_region[d] == kNone) {
            dart_region[d] = r;
            stack.push_back(d);
        } else if (dart_region[d] != r) {
            throw LabelInconsistency("conflicting region labels meet");
        }
    };
    while (!stack.empty()) {
        Idx d = stack.back();
        stack.pop_back();
        Idx r = dart_region[d];
        push(twin(d), r);
        if (virtual_after[d] == 0) push(g.rot_next(d), r);
        Idx p = g.rot_prev(d);
        if (virtual_after[p] == 0) push(p, r);
    }
    for (Idx d = 0; d < g.num_darts(); ++d) {
        if (!is_u(d) && dart_region[d] == kNone)
            throw LabelInconsistency("unlabeled dart after region flood");
        if (!is_u(d) && (dart_region[d] < 0 || dart_region[d] > k))
            throw LabelInconsistency("region label out of range");
    }

    for (Idx e = 0; e < g.num_edges(); ++e)
        if (!fam.in_u(e)) out.edge_region[e] = dart_region[dart_of(e)];

    // Face labels from their darts' flanks.
    for (Idx f = 0; f < dd.faces.num_faces(); ++f) {
        if (f == dd.outer_face) continue;
        Idx label = kNone;
        for (Idx d : dd.faces.walk(g, f)) {
            Idx flank = is_u(d) ? (northward(d) ? fam.interval_lo[edge_of(d)] - 1
                                                : fam.interval_hi[edge_of(d)])
                                : dart_region[d];
            if (label == kNone)
                label = flank;
            else if (label != flank)
                throw LabelInconsistency("face flanked by disagreeing regions");
        }
        out.face_region[f] = label;
    }
    return out;
}

std::vector<Slice> build_slices(const DoubledDual& dd, const PathFamily& fam,
                                const RegionLabels& labels, const IntersectionSet& inter) {
    const EmbeddedMultigraph& g = dd.g;
    const Idx k = fam.k();
    std::vector<std::vector<Idx>> bucket(k + 1);  // 1-based slices
    for (Idx e = 0; e < g.num_edges(); ++e) {
        if (fam.in_u(e)) {
            Idx a = fam.interval_lo[e], b = fam.interval_hi[e];
            Idx members[4] = {a - 1, a, b, b + 1};
            Idx prev = kNone;
            for (Idx i : members) {
                if (i < 1 || i > k || i == prev) continue;
                bucket[i].push_back(e);
                prev = i;
            }
        } else {
            Idx r = labels.edge_region[e];
            if (r >= 1) bucket[r].push_back(e);
            if (r + 1 <= k) bucket[r + 1].push_back(e);
        }
    }

    std::vector<Slice> slices;
    slices.reserve(k);
    std::vector<Idx> local_of(g.num_vertices(), kNone);
    std::vector<Idx> touched;
    for (Idx i = 1; i <= k; ++i) {
        Slice s;
        s.index = i;
        touched.clear();
        auto local = [&](Idx v) {
            if (local_of[v] == kNone) {
                local_of[v] = s.num_vertices++;
                s.global_vertex.push_back(v);
                touched.push_back(v);
            }
            return local_of[v];
        };
        for (Idx e : bucket[i]) {
            s.local_tail.push_back(local(g.tail(dart_of(e))));
            s.local_head.push_back(local(g.head(dart_of(e))));
            s.global_edge.push_back(e);
        }
        if (i >= 2 && i <= k - 1) {
            const PathIntersection& q = inter.q(i);
            if (!q.empty && q.length >= 1) {
                s.contracted_edge = s.num_edges();
                s.contracted_len = q.length;
                s.local_tail.push_back(local(q.end_a));
                s.local_head.push_back(local(q.end_b));
                s.global_edge.push_back(kNone);
            }
        }
        s.x_local = local(fam.x(i - 1));
        s.y_local = local(fam.y(i - 1));
        for (Idx v : touched) local_of[v] = kNone;
        slices.push_back(std::move(s));
    }
    return slices;
}

std::vector<Idx> left_right_oracle(Idx i, const DoubledDual& dd, const PathFamily& fam,
                                   Idx cap) {
    if (dd.g.num_vertices() > cap)
        throw OracleCapExceeded("doubled dual exceeds the oracle cap");
    const Idx k = fam.k();
    RegionOps ops(dd);
    Region whole = ops.whole();

    auto left_of = [&](Idx j) {  // weakly left of p_j
        auto [low, high] = ops.split(whole, fam.paths[j - 1]);
        return low;
    };
    auto right_of = [&](Idx j) {
        auto [low, high] = ops.split(whole, fam.paths[j - 1]);
        return high;
    };

    std::vector<Idx> edges;
    if (k == 1) {
        edges = whole.edges;
    } else if (i == 1) {
        edges = left_of(2).edges;
    } else if (i == k) {
        edges = right_of(k - 1).edges;
    } else {
        Region r = right_of(i - 1);
        Region l = left_of(i + 1);
        std::sort(r.edges.begin(), r.edges.end());
        std::sort(l.edges.begin(), l.edges.end());
        std::set_intersection(r.edges.begin(), r.edges.end(), l.edges.begin(), l.edges.end(),
                              std::back_inserter(edges));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace vitality
