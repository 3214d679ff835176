#include "vitality/cut.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace vitality {

namespace {

std::vector<Idx> faces_at_vertex(const EmbeddedGraph& g, const FaceStructure& faces, Idx v) {
    std::vector<Idx> out;
    for (Idx d : g.graph().rotation_of(v)) out.push_back(faces.face_of[d]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::pair<Idx, Idx> select_terminal_faces(const EmbeddedGraph& g, const FaceStructure& faces) {
    std::vector<Idx> fs = faces_at_vertex(g, faces, g.s());
    std::vector<Idx> ft = faces_at_vertex(g, faces, g.t());

    std::vector<Idx> s_only, t_only;
    std::set_difference(fs.begin(), fs.end(), ft.begin(), ft.end(), std::back_inserter(s_only));
    std::set_difference(ft.begin(), ft.end(), fs.begin(), fs.end(), std::back_inserter(t_only));

    Idx f_s = s_only.empty() ? fs.front() : s_only.front();
    Idx f_t;
    if (!t_only.empty()) {
        f_t = t_only.front();
    } else {
        f_t = kNone;
        for (Idx f : ft) {
            if (f != f_s) {
                f_t = f;
                break;
            }
        }
        if (f_t == kNone)
            throw OnlySharedFace("terminals see only one common face");
    }
    return {f_s, f_t};
}

CutPath shortest_dual_path(const EmbeddedGraph& g, const FaceStructure& faces,
                           const DualGraph& dual, Idx f_s, Idx f_t) {
    if (f_s == f_t) throw OnlySharedFace("terminal faces coincide");
    const EmbeddedMultigraph& dg = dual.g;
    std::vector<Idx> dist(dg.num_vertices(), kNone);
    std::queue<Idx> q;
    dist[f_s] = 0;
    q.push(f_s);
    while (!q.empty()) {
        Idx v = q.front();
        q.pop();
        Idx d0 = dg.first_dart(v);
        if (d0 == kNone) continue;
        Idx d = d0;
        do {
            if (!dual.self_loop[edge_of(d)]) {
                Idx w = dg.head(d);
                if (dist[w] == kNone) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
            d = dg.rot_next(d);
        } while (d != d0);
    }

    CutPath pi;
    Idx cur = f_t;
    pi.verts.push_back(cur);
    while (cur != f_s) {
        // Parent tie-break: smallest dual edge id among tight predecessors.
        Idx best_edge = kNone, best_to = kNone;
        Idx d0 = dg.first_dart(cur);
        Idx d = d0;
        do {
            Idx e = edge_of(d);
            if (!dual.self_loop[e]) {
                Idx w = dg.head(d);
                if (dist[w] != kNone && dist[w] == dist[cur] - 1 &&
                    (best_edge == kNone || e < best_edge)) {
                    best_edge = e;
                    best_to = w;
                }
            }
            d = dg.rot_next(d);
        } while (d != d0);
        if (best_edge == kNone)
            throw EmbeddingInconsistent("dual BFS backtrack failed");
        pi.edges.push_back(best_edge);
        pi.verts.push_back(best_to);
        cur = best_to;
    }
    std::reverse(pi.verts.begin(), pi.verts.end());
    std::reverse(pi.edges.begin(), pi.edges.end());

    // Wedges: first corner of the endpoint face at the terminal along the
    // canonical face walk. Dual dart ids coincide with primal dart ids, so the
    // arrival dart (head = terminal) doubles as the dual rotation position.
    auto find_wedge = [&](Idx face, Idx terminal) {
        for (Idx d : faces.walk(g.graph(), face))
            if (g.graph().head(d) == terminal) return d;
        throw EmbeddingInconsistent("terminal face is not adjacent to its terminal");
    };
    pi.wedge_s = find_wedge(f_s, g.s());
    pi.wedge_t = find_wedge(f_t, g.t());
    return pi;
}

namespace {

// Positions on the doubled rotation circle: dart at rotation index i sits at
// 2i, the slot after it at 2i+1.
struct Circle {
    std::vector<Idx> rot;  // sigma order

    explicit Circle(const EmbeddedMultigraph& g, Idx v) : rot(g.rotation_of(v)) {}

    Idx find(Idx dart) const {
        for (Idx i = 0; i < static_cast<Idx>(rot.size()); ++i)
            if (rot[i] == dart) return i;
        throw WedgeInconsistent("spoke dart missing from rotation");
    }
};

}  // namespace

DoubledDual build_doubled_dual(const DualGraph& dual, const CutPath& pi) {
    const EmbeddedMultigraph& dg = dual.g;
    const Idx L = pi.length();
    const Idx n_dual = dg.num_vertices();

    std::vector<Idx> pos_of(n_dual, kNone);
    for (Idx j = 0; j <= L; ++j) {
        if (pos_of[pi.verts[j]] != kNone)
            throw WedgeInconsistent("cut path revisits a dual vertex");
        pos_of[pi.verts[j]] = j;
    }

    DoubledDual dd;
    // Vertex ids: non-path dual vertices first (keeping relative order), then
    // low copies, then up copies.
    std::vector<Idx> plain_id(n_dual, kNone);
    Idx next_id = 0;
    for (Idx v = 0; v < n_dual; ++v)
        if (pos_of[v] == kNone) plain_id[v] = next_id++;
    dd.low_copy.resize(L + 1);
    dd.up_copy.resize(L + 1);
    for (Idx j = 0; j <= L; ++j) dd.low_copy[j] = next_id++;
    for (Idx j = 0; j <= L; ++j) dd.up_copy[j] = next_id++;
    dd.g = EmbeddedMultigraph(next_id);
    dd.orig_vertex.assign(next_id, kNone);
    dd.pi_pos.assign(next_id, kNone);
    dd.on_low.assign(next_id, 0);
    for (Idx v = 0; v < n_dual; ++v)
        if (plain_id[v] != kNone) dd.orig_vertex[plain_id[v]] = v;
    for (Idx j = 0; j <= L; ++j) {
        dd.orig_vertex[dd.low_copy[j]] = pi.verts[j];
        dd.orig_vertex[dd.up_copy[j]] = pi.verts[j];
        dd.pi_pos[dd.low_copy[j]] = j;
        dd.pi_pos[dd.up_copy[j]] = j;
        dd.on_low[dd.low_copy[j]] = 1;
    }

    // Spoke darts per path position: toward the next / previous path vertex.
    std::vector<Idx> out_spoke(L + 1, kNone), in_spoke(L + 1, kNone);
    for (Idx j = 0; j < L; ++j) {
        Idx e = pi.edges[j];
        Idx d = dart_of(e);
        if (dg.tail(d) != pi.verts[j]) d = twin(d);
        if (dg.tail(d) != pi.verts[j] || dg.head(d) != pi.verts[j + 1])
            throw WedgeInconsistent("cut path edge endpoints mismatch");
        out_spoke[j] = d;
        in_spoke[j + 1] = twin(d);
    }

    // Sides per dart at path vertices: 1 = up arc, 0 = low arc.
    // Walking the circle from the out spoke to the in spoke passes the up arc;
    // at endpoints the wedge slot plays the missing spoke.
    std::vector<char> dart_side(dg.num_darts(), 0);
    std::vector<char> dart_side_known(dg.num_darts(), 0);
    for (Idx j = 0; j <= L; ++j) {
        Circle circle(dg, pi.verts[j]);
        const Idx deg = static_cast<Idx>(circle.rot.size());
        // Positions on the doubled circle.
        Idx out_pos, in_pos;
        if (j < L) {
            out_pos = 2 * circle.find(out_spoke[j]);
        } else {
            out_pos = 2 * circle.find(pi.wedge_t) + 1;
        }
        if (j > 0) {
            in_pos = 2 * circle.find(in_spoke[j]);
        } else {
            in_pos = 2 * circle.find(pi.wedge_s) + 1;
        }
        if (out_pos == in_pos) throw WedgeInconsistent("cut path spokes coincide");
        // Mark darts strictly between out and in (circle order) as up.
        for (Idx p = (out_pos + 1) % (2 * deg); p != in_pos; p = (p + 1) % (2 * deg)) {
            if (p % 2 == 0) {
                dart_side[circle.rot[p / 2]] = 1;
                dart_side_known[circle.rot[p / 2]] = 1;
            }
        }
        for (Idx p = (in_pos + 1) % (2 * deg); p != out_pos; p = (p + 1) % (2 * deg)) {
            if (p % 2 == 0) {
                dart_side[circle.rot[p / 2]] = 0;
                dart_side_known[circle.rot[p / 2]] = 1;
            }
        }
    }

    // D endpoint of a dual dart (the side its tail attaches to).
    auto attach = [&](Idx d) -> Idx {
        Idx v = dg.tail(d);
        if (pos_of[v] == kNone) return plain_id[v];
        if (!dart_side_known[d]) throw WedgeInconsistent("unassigned dart at cut vertex");
        return dart_side[d] ? dd.up_copy[pos_of[v]] : dd.low_copy[pos_of[v]];
    };

    // Edges of D. Non-path dual edges keep one copy; path edges get two.
    const Idx m_dual = dg.num_edges();
    dd.d_edge_of_dual.assign(m_dual, kNone);
    std::vector<char> on_path(m_dual, 0);
    for (Idx e : pi.edges) on_path[e] = 1;

    std::vector<Idx> ddart_of(dg.num_darts(), kNone);  // dual dart -> D dart (non-path edges)
    for (Idx e = 0; e < m_dual; ++e) {
        if (dual.self_loop[e] || on_path[e]) continue;
        Idx d = dart_of(e);
        Idx u = attach(d), v = attach(twin(d));
        Idx de = dd.g.add_edge(u, v);
        dd.d_edge_of_dual[e] = de;
        dd.dual_edge_of_d.push_back(e);
        dd.is_x_copy.push_back(0);
        dd.is_y_copy.push_back(0);
        ddart_of[d] = dart_of(de);
        ddart_of[twin(d)] = twin(dart_of(de));
    }
    dd.x_edge.resize(L);
    dd.y_edge.resize(L);
    for (Idx j = 0; j < L; ++j) {
        Idx e = pi.edges[j];
        Idx ex = dd.g.add_edge(dd.low_copy[j], dd.low_copy[j + 1]);
        dd.dual_edge_of_d.push_back(e);
        dd.is_x_copy.push_back(1);
        dd.is_y_copy.push_back(0);
        Idx ey = dd.g.add_edge(dd.up_copy[j], dd.up_copy[j + 1]);
        dd.dual_edge_of_d.push_back(e);
        dd.is_x_copy.push_back(0);
        dd.is_y_copy.push_back(1);
        dd.x_edge[j] = ex;
        dd.y_edge[j] = ey;
        dd.d_edge_of_dual[e] = ex;  // designated copy
    }

    // Rotations.
    std::vector<std::vector<Idx>> darts_at(dd.g.num_vertices());
    for (Idx v = 0; v < n_dual; ++v) {
        if (pos_of[v] != kNone) continue;
        for (Idx d : dg.rotation_of(v))
            if (ddart_of[d] != kNone) darts_at[plain_id[v]].push_back(ddart_of[d]);
    }
    auto x_dart = [&](Idx j, bool outgoing) {
        // Dart of the x copy of pi edge (outgoing: j -> j+1, else j -> j-1).
        return outgoing ? dart_of(dd.x_edge[j]) : twin(dart_of(dd.x_edge[j - 1]));
    };
    auto y_dart = [&](Idx j, bool outgoing) {
        return outgoing ? dart_of(dd.y_edge[j]) : twin(dart_of(dd.y_edge[j - 1]));
    };
    dd.low_gap_after.assign(L + 1, kNone);
    dd.up_gap_after.assign(L + 1, kNone);
    for (Idx j = 0; j <= L; ++j) {
        Circle circle(dg, pi.verts[j]);
        // Low copy: original cyclic order restricted to {out, in, low arc}.
        std::vector<Idx>& low_rot = darts_at[dd.low_copy[j]];
        std::vector<Idx>& up_rot = darts_at[dd.up_copy[j]];
        Idx start = j < L ? circle.find(out_spoke[j]) : circle.find(in_spoke[j]);
        const Idx deg = static_cast<Idx>(circle.rot.size());
        for (Idx k = 0; k < deg; ++k) {
            Idx d = circle.rot[(start + k) % deg];
            if (j < L && d == out_spoke[j]) {
                low_rot.push_back(x_dart(j, true));
                up_rot.push_back(y_dart(j, true));
            } else if (j > 0 && d == in_spoke[j]) {
                low_rot.push_back(x_dart(j, false));
                up_rot.push_back(y_dart(j, false));
            } else if (ddart_of[d] != kNone) {
                (dart_side[d] ? up_rot : low_rot).push_back(ddart_of[d]);
            }
        }
    }
    dd.g.set_rotations(darts_at);

    // Outer gap anchors. Low copies: slot after the outgoing x dart (last
    // rotation entry at position L); up copies: slot after the incoming y dart
    // (last rotation entry at position 0).
    for (Idx j = 0; j <= L; ++j) {
        dd.low_gap_after[j] = j < L ? x_dart(j, true) : darts_at[dd.low_copy[j]].back();
        dd.up_gap_after[j] = j > 0 ? y_dart(j, false) : darts_at[dd.up_copy[j]].back();
    }

    if (!dd.g.connected()) throw WedgeInconsistent("doubled dual is disconnected");
    try {
        dd.faces = trace_faces_multi(dd.g);
    } catch (const EmbeddingInconsistent& e) {
        throw WedgeInconsistent(std::string("doubled dual is not planar: ") + e.what());
    }

    // The cut face must show up at all four wedge corners.
    Idx f0 = dd.faces.face_of[twin(dd.low_gap_after[0])];
    if (dd.faces.face_of[twin(dd.up_gap_after[0])] != f0 ||
        dd.faces.face_of[twin(dd.low_gap_after[L])] != f0 ||
        dd.faces.face_of[twin(dd.up_gap_after[L])] != f0)
        throw WedgeInconsistent("wedge corners disagree on the outer face");
    dd.outer_face = f0;
    return dd;
}

}  // namespace vitality
