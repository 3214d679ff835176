#include "vitality/oracle.hpp"

#include <algorithm>
#include <queue>

#include "vitality/crossing.hpp"

namespace vitality {

Idx max_flow_oracle(const EmbeddedGraph& eg, Idx skip_edge) {
    const EmbeddedMultigraph& g = eg.graph();
    // flow[e] in {-1, 0, 1}, oriented along dart 2e.
    std::vector<signed char> flow(g.num_edges(), 0);
    std::vector<Idx> parent_dart(g.num_vertices());
    std::vector<char> seen(g.num_vertices());
    Idx total = 0;
    for (;;) {
        std::fill(seen.begin(), seen.end(), 0);
        std::queue<Idx> q;
        seen[eg.s()] = 1;
        q.push(eg.s());
        bool reached = false;
        while (!q.empty() && !reached) {
            Idx v = q.front();
            q.pop();
            Idx d0 = g.first_dart(v);
            if (d0 == kNone) continue;
            Idx d = d0;
            do {
                Idx e = edge_of(d);
                // Residual along d: 1 - flow if d is the forward dart, else 1 + flow.
                Idx res = (d == dart_of(e)) ? 1 - flow[e] : 1 + flow[e];
                if (e != skip_edge && res > 0 && !seen[g.head(d)]) {
                    seen[g.head(d)] = 1;
                    parent_dart[g.head(d)] = d;
                    if (g.head(d) == eg.t()) {
                        reached = true;
                        break;
                    }
                    q.push(g.head(d));
                }
                d = g.rot_next(d);
            } while (d != d0);
        }
        if (!reached) break;
        for (Idx v = eg.t(); v != eg.s(); v = g.tail(parent_dart[v])) {
            Idx d = parent_dart[v];
            Idx e = edge_of(d);
            flow[e] += (d == dart_of(e)) ? 1 : -1;
        }
        ++total;
    }
    return total;
}

VitalityReport vitality_oracle(const EmbeddedGraph& g, Idx vertex_cap) {
    if (g.num_vertices() > vertex_cap)
        throw OracleCapExceeded("instance exceeds the vitality oracle cap");
    VitalityReport report;
    report.mf = max_flow_oracle(g);
    report.vit.assign(g.num_edges(), 0);
    report.tag.assign(g.num_edges(), Provenance::kOracleRecompute);
    report.slice_index.assign(g.num_edges(), kNone);
    for (Idx e = 0; e < g.num_edges(); ++e)
        report.vit[e] = static_cast<signed char>(report.mf - max_flow_oracle(g, e));
    return report;
}

namespace {

// Orders the dual edges of a bond into a closed dart walk.
std::vector<Idx> bond_cycle(const DualGraph& dual, const std::vector<Idx>& cut_edges) {
    if (cut_edges.size() == 1) {
        // A separating bridge: its dual is a self-loop.
        return {dart_of(cut_edges[0])};
    }
    const EmbeddedMultigraph& g = dual.g;
    std::vector<std::pair<Idx, Idx>> at;  // (vertex, dart with that tail)
    for (Idx e : cut_edges) {
        at.emplace_back(g.tail(dart_of(e)), dart_of(e));
        at.emplace_back(g.head(dart_of(e)), twin(dart_of(e)));
    }
    std::sort(at.begin(), at.end());
    auto darts_at = [&](Idx v) {
        auto lo = std::lower_bound(at.begin(), at.end(), std::make_pair(v, kNone));
        std::vector<Idx> out;
        for (auto it = lo; it != at.end() && it->first == v; ++it) out.push_back(it->second);
        return out;
    };
    std::vector<Idx> walk;
    Idx d = dart_of(cut_edges[0]);
    do {
        walk.push_back(d);
        Idx v = g.head(d);
        std::vector<Idx> cand = darts_at(v);
        if (cand.size() != 2) throw Error("bond does not trace a simple dual cycle");
        Idx nxt = (cand[0] == twin(d)) ? cand[1] : cand[0];
        d = nxt;
    } while (d != dart_of(cut_edges[0]));
    return walk;
}

}  // namespace

std::vector<SeparatingCycleStats> separating_cycle_stats(const EmbeddedGraph& eg,
                                                         const FaceStructure& faces,
                                                         const DualGraph& dual,
                                                         const CutPath& pi) {
    const Idx n = eg.num_vertices();
    const Idx m = eg.num_edges();
    if (n > 22 || dual.num_faces() > 64)
        throw OracleCapExceeded("instance too large for bond enumeration");
    (void)faces;

    std::vector<Idx> pi_darts;
    for (Idx j = 0; j < pi.length(); ++j) {
        Idx d = dart_of(pi.edges[j]);
        if (dual.g.tail(d) != pi.verts[j]) d = twin(d);
        pi_darts.push_back(d);
    }

    std::vector<SeparatingCycleStats> stats(m);
    const EmbeddedMultigraph& g = eg.graph();

    // Positions of s and t inside the mask; enumerate S with s in, t out.
    std::vector<Idx> others;
    for (Idx v = 0; v < n; ++v)
        if (v != eg.s() && v != eg.t()) others.push_back(v);
    const Idx bits = static_cast<Idx>(others.size());

    std::vector<char> in_s(n);
    std::vector<Idx> comp_stack;
    auto side_connected = [&](char side, Idx start, Idx expect) {
        // Vertices with in_s == side reachable from start.
        std::vector<char> seen(n, 0);
        comp_stack.assign(1, start);
        seen[start] = 1;
        Idx cnt = 1;
        while (!comp_stack.empty()) {
            Idx v = comp_stack.back();
            comp_stack.pop_back();
            Idx d0 = g.first_dart(v);
            Idx d = d0;
            do {
                Idx w = g.head(d);
                if (in_s[w] == side && !seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    comp_stack.push_back(w);
                }
                d = g.rot_next(d);
            } while (d != d0);
        }
        return cnt == expect;
    };

    std::vector<Idx> cut;
    for (std::int64_t mask = 0; mask < (std::int64_t{1} << bits); ++mask) {
        std::fill(in_s.begin(), in_s.end(), 0);
        in_s[eg.s()] = 1;
        Idx s_count = 1;
        for (Idx b = 0; b < bits; ++b)
            if (mask >> b & 1) {
                in_s[others[b]] = 1;
                ++s_count;
            }
        if (!side_connected(1, eg.s(), s_count)) continue;
        if (!side_connected(0, eg.t(), n - s_count)) continue;
        cut.clear();
        for (Idx e = 0; e < m; ++e)
            if (in_s[eg.edge_u(e)] != in_s[eg.edge_v(e)]) cut.push_back(e);
        Idx len = static_cast<Idx>(cut.size());

        bool relevant = false;
        for (Idx e : cut)
            if (stats[e].min_length == kNone || len <= stats[e].min_length) relevant = true;
        if (!relevant) continue;

        std::vector<Idx> cycle = bond_cycle(dual, cut);
        Idx crossings = count_crossings(dual.g, cycle, true, pi_darts);
        for (Idx e : cut) {
            SeparatingCycleStats& st = stats[e];
            if (st.min_length == kNone || len < st.min_length) {
                st.min_length = len;
                st.min_crossings = crossings;
            } else if (len == st.min_length) {
                st.min_crossings = std::min(st.min_crossings, crossings);
            }
        }
    }
    return stats;
}

SeparatingCycleStats separating_cycle_oracle(const EmbeddedGraph& g, const FaceStructure& faces,
                                             const DualGraph& dual, const CutPath& pi, Idx edge) {
    return separating_cycle_stats(g, faces, dual, pi)[edge];
}

}  // namespace vitality
