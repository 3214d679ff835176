#include "vitality/crossing.hpp"

#include <algorithm>
#include <unordered_map>

namespace vitality {

namespace {

std::vector<Idx> walk_vertices(const EmbeddedMultigraph& g, const std::vector<Idx>& walk) {
    std::vector<Idx> out;
    out.reserve(walk.size() + 1);
    out.push_back(g.tail(walk.front()));
    for (Idx d : walk) out.push_back(g.head(d));
    return out;
}

// Is dart (with tail v) inside the rotation arc from `from` to `to`,
// exclusive? `from`/`to` are darts at v.
bool in_arc(const EmbeddedMultigraph& g, Idx dart, Idx from, Idx to) {
    for (Idx d = g.rot_next(from); d != to; d = g.rot_next(d)) {
        if (d == dart) return true;
        if (d == from) throw Error("arc scan wrapped");
    }
    return false;
}

struct SharedRun {
    Idx w1_begin;  // positions into walk1's vertex sequence
    Idx w1_end;    // inclusive
    Idx w2_begin;  // matching walk2 vertex positions (may run backwards)
    Idx w2_end;
};

// Maximal runs where walk1 follows walk2 through the same vertices and edges.
// walk2 must be a simple path. Closed walk1 must already be rotated to start
// at a vertex off walk2, so runs never wrap the seam.
std::vector<SharedRun> shared_runs(const std::vector<Idx>& v1, const std::vector<Idx>& w1_darts,
                                   const std::vector<Idx>& v2,
                                   const std::vector<Idx>& w2_darts) {
    std::unordered_map<Idx, Idx> pos2;
    for (Idx i = 0; i < static_cast<Idx>(v2.size()); ++i) {
        if (!pos2.emplace(v2[i], i).second) throw Error("walk2 is not simple");
    }
    auto shared = [&](Idx i) { return pos2.count(v1[i]) > 0; };
    // Same edge in both walks between walk1 positions i, i+1?
    auto same_edge = [&](Idx i) {
        if (i + 1 >= static_cast<Idx>(v1.size())) return false;
        if (!shared(i) || !shared(i + 1)) return false;
        Idx a = pos2[v1[i]], b = pos2[v1[i + 1]];
        if (a > b) std::swap(a, b);
        if (b != a + 1) return false;
        return edge_of(w1_darts[i]) == edge_of(w2_darts[a]);
    };

    std::vector<SharedRun> runs;
    for (Idx start = 0; start < static_cast<Idx>(v1.size()); ++start) {
        if (!shared(start)) continue;
        if (start > 0 && same_edge(start - 1)) continue;  // interior of a run
        Idx end = start;
        while (end + 1 < static_cast<Idx>(v1.size()) && same_edge(end)) ++end;
        runs.push_back({start, end, pos2[v1[start]], pos2[v1[end]]});
    }
    return runs;
}

}  // namespace

Idx count_crossings(const EmbeddedMultigraph& g, const std::vector<Idx>& walk1,
                    bool walk1_closed, const std::vector<Idx>& walk2) {
    if (walk1.empty() || walk2.empty()) return 0;
    std::vector<Idx> v1 = walk_vertices(g, walk1);
    std::vector<Idx> v2 = walk_vertices(g, walk2);

    std::vector<Idx> w1 = walk1;
    if (walk1_closed) {
        // Rotate so the walk starts at a vertex off walk2; a fully shared
        // cycle cannot cross a simple path.
        std::unordered_map<Idx, char> on2;
        for (Idx v : v2) on2[v] = 1;
        Idx pivot = kNone;
        for (Idx i = 0; i + 1 < static_cast<Idx>(v1.size()); ++i) {
            if (!on2.count(v1[i])) {
                pivot = i;
                break;
            }
        }
        if (pivot == kNone) return 0;
        std::rotate(w1.begin(), w1.begin() + pivot, w1.end());
        v1 = walk_vertices(g, w1);
    }

    std::vector<SharedRun> runs = shared_runs(v1, w1, v2, walk2);
    const Idx len2 = static_cast<Idx>(walk2.size());

    // Side of a dart at walk2 position p (interior): true if inside the arc
    // from the outgoing spoke to the incoming spoke.
    auto side_at = [&](Idx p, Idx dart) {
        Idx out2 = walk2[p];
        Idx in2 = twin(walk2[p - 1]);
        return in_arc(g, dart, out2, in2);
    };

    Idx crossings = 0;
    for (const SharedRun& run : runs) {
        bool has_entry = walk1_closed || run.w1_begin > 0;
        bool has_exit = walk1_closed || run.w1_end + 1 < static_cast<Idx>(v1.size());
        if (!has_entry || !has_exit) continue;
        if (run.w2_begin == 0 || run.w2_begin == len2 || run.w2_end == 0 || run.w2_end == len2)
            continue;  // touches an endpoint of walk2: no side change possible
        Idx entry_dart = twin(w1[run.w1_begin - 1]);  // at the run start vertex
        Idx exit_dart = w1[run.w1_end];               // at the run end vertex
        bool entry_side = side_at(run.w2_begin, entry_dart);
        bool exit_side = side_at(run.w2_end, exit_dart);
        if (entry_side != exit_side) ++crossings;
    }
    return crossings;
}

bool single_touch(const EmbeddedMultigraph& g, const std::vector<Idx>& p,
                  const std::vector<Idx>& q) {
    if (p.empty() || q.empty()) return true;
    std::vector<Idx> vp = walk_vertices(g, p);
    std::vector<Idx> vq = walk_vertices(g, q);
    std::unordered_map<Idx, Idx> qpos;
    for (Idx i = 0; i < static_cast<Idx>(vq.size()); ++i)
        if (!qpos.emplace(vq[i], i).second) throw Error("path is not simple");

    std::vector<Idx> shared_p;  // positions in p of shared vertices
    for (Idx i = 0; i < static_cast<Idx>(vp.size()); ++i)
        if (qpos.count(vp[i])) shared_p.push_back(i);
    if (shared_p.size() <= 1) return true;

    // Contiguous in p.
    for (std::size_t i = 1; i < shared_p.size(); ++i)
        if (shared_p[i] != shared_p[i - 1] + 1) return false;
    // Contiguous and monotone in q.
    Idx first_q = qpos[vp[shared_p.front()]];
    Idx second_q = qpos[vp[shared_p[1]]];
    Idx step = second_q > first_q ? 1 : -1;
    for (std::size_t i = 1; i < shared_p.size(); ++i) {
        if (qpos[vp[shared_p[i]]] != first_q + step * static_cast<Idx>(i)) return false;
    }
    // Shared edges must coincide (no parallel-edge skips).
    for (std::size_t i = 0; i + 1 < shared_p.size(); ++i) {
        Idx pe = edge_of(p[shared_p[i]]);
        Idx qa = qpos[vp[shared_p[i]]], qb = qpos[vp[shared_p[i + 1]]];
        Idx qe = edge_of(q[std::min(qa, qb)]);
        if (pe != qe) return false;
    }
    return true;
}

}  // namespace vitality
