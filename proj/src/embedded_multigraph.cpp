#include "vitality/embedded_multigraph.hpp"

#include <numeric>

namespace vitality {

void EmbeddedMultigraph::set_rotations(const std::vector<std::vector<Idx>>& darts_at) {
    rot_next_.assign(head_.size(), kNone);
    rot_prev_.assign(head_.size(), kNone);
    for (Idx v = 0; v < num_vertices(); ++v) {
        const auto& ring = darts_at[v];
        first_dart_[v] = ring.empty() ? kNone : ring.front();
        const Idx n = static_cast<Idx>(ring.size());
        for (Idx i = 0; i < n; ++i) {
            Idx d = ring[i];
            Idx nxt = ring[(i + 1) % n];
            rot_next_[d] = nxt;
            rot_prev_[nxt] = d;
        }
    }
}

Idx EmbeddedMultigraph::degree(Idx v) const {
    Idx d0 = first_dart_[v];
    if (d0 == kNone) return 0;
    Idx deg = 0, d = d0;
    do {
        ++deg;
        d = rot_next_[d];
    } while (d != d0);
    return deg;
}

std::vector<Idx> EmbeddedMultigraph::rotation_of(Idx v) const {
    std::vector<Idx> out;
    Idx d0 = first_dart_[v];
    if (d0 == kNone) return out;
    Idx d = d0;
    do {
        out.push_back(d);
        d = rot_next_[d];
    } while (d != d0);
    return out;
}

bool EmbeddedMultigraph::connected() const {
    if (num_vertices() == 0) return true;
    std::vector<char> seen(num_vertices(), 0);
    std::vector<Idx> stack{0};
    seen[0] = 1;
    Idx reached = 1;
    while (!stack.empty()) {
        Idx v = stack.back();
        stack.pop_back();
        Idx d0 = first_dart_[v];
        if (d0 == kNone) continue;
        Idx d = d0;
        do {
            Idx w = head_[d];
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
            d = rot_next_[d];
        } while (d != d0);
    }
    return reached == num_vertices();
}

std::vector<Idx> FaceStructure::walk(const EmbeddedMultigraph& g, Idx f) const {
    std::vector<Idx> out;
    Idx d0 = start_dart[f];
    Idx d = d0;
    do {
        out.push_back(d);
        d = g.next_in_face(d);
    } while (d != d0);
    return out;
}

FaceStructure trace_faces_multi(const EmbeddedMultigraph& g) {
    FaceStructure fs;
    fs.face_of.assign(g.num_darts(), kNone);
    for (Idx d0 = 0; d0 < g.num_darts(); ++d0) {
        if (fs.face_of[d0] != kNone) continue;
        Idx f = fs.num_faces();
        fs.start_dart.push_back(d0);
        Idx len = 0;
        Idx d = d0;
        do {
            fs.face_of[d] = f;
            ++len;
            d = g.next_in_face(d);
            if (d == kNone || len > g.num_darts())
                throw EmbeddingInconsistent("face walk does not close");
        } while (d != d0);
        fs.walk_len.push_back(len);
    }

    // Euler check: V - E + F = 1 + C.
    Idx components = 0;
    {
        std::vector<char> seen(g.num_vertices(), 0);
        std::vector<Idx> stack;
        for (Idx s = 0; s < g.num_vertices(); ++s) {
            if (seen[s]) continue;
            ++components;
            seen[s] = 1;
            stack.assign(1, s);
            while (!stack.empty()) {
                Idx v = stack.back();
                stack.pop_back();
                Idx d0 = g.first_dart(v);
                if (d0 == kNone) continue;
                Idx d = d0;
                do {
                    Idx w = g.head(d);
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                    d = g.rot_next(d);
                } while (d != d0);
            }
        }
    }
    if (g.num_vertices() - g.num_edges() + fs.num_faces() != 1 + components)
        throw EmbeddingInconsistent("rotation system is not planar (Euler check failed)");
    return fs;
}

}  // namespace vitality
