#pragma once

#include <vector>

#include "vitality/errors.hpp"
#include "vitality/ids.hpp"

namespace vitality {

// Rotation-system multigraph. Edge e owns darts 2e (u->v) and 2e+1 (v->u).
// Rotations are cyclic per-vertex dart orders; the convention throughout is
// that input rotations are clockwise and each dart's face lies to its left,
// so the face successor of d is rot_next(twin(d)).
//
// Parallel edges and self-loops are allowed; simplicity is enforced one
// level up where it matters.
class EmbeddedMultigraph {
public:
    EmbeddedMultigraph() = default;
    explicit EmbeddedMultigraph(Idx vertex_count) : first_dart_(vertex_count, kNone) {}

    Idx add_vertex() {
        first_dart_.push_back(kNone);
        return static_cast<Idx>(first_dart_.size()) - 1;
    }

    // Appends edge (u, v). Rotations must be set afterwards via set_rotations
    // or append_rotation calls; until then rot_next is undefined.
    Idx add_edge(Idx u, Idx v) {
        head_.push_back(v);
        head_.push_back(u);
        rot_next_.push_back(kNone);
        rot_next_.push_back(kNone);
        return num_edges() - 1;
    }

    // Installs per-vertex rotations. darts_at[v] lists the darts with tail v
    // in clockwise order.
    void set_rotations(const std::vector<std::vector<Idx>>& darts_at);

    Idx num_vertices() const { return static_cast<Idx>(first_dart_.size()); }
    Idx num_edges() const { return static_cast<Idx>(head_.size() / 2); }
    Idx num_darts() const { return static_cast<Idx>(head_.size()); }

    Idx head(Idx d) const { return head_[d]; }
    Idx tail(Idx d) const { return head_[twin(d)]; }
    Idx rot_next(Idx d) const { return rot_next_[d]; }
    Idx rot_prev(Idx d) const { return rot_prev_[d]; }
    Idx first_dart(Idx v) const { return first_dart_[v]; }
    Idx degree(Idx v) const;

    bool is_self_loop(Idx e) const { return head_[dart_of(e)] == head_[twin(dart_of(e))]; }

    // Face successor: next dart of the face walk lying to the left of d.
    Idx next_in_face(Idx d) const { return rot_next_[twin(d)]; }

    // Clockwise dart list at v starting from first_dart(v).
    std::vector<Idx> rotation_of(Idx v) const;

    bool connected() const;

private:
    std::vector<Idx> head_;
    std::vector<Idx> rot_next_;
    std::vector<Idx> rot_prev_;
    std::vector<Idx> first_dart_;
};

// Faces of an embedded multigraph. face_of[d] is the face to the left of d.
struct FaceStructure {
    std::vector<Idx> face_of;
    std::vector<Idx> start_dart;  // one dart per face
    std::vector<Idx> walk_len;    // boundary walk length per face

    Idx num_faces() const { return static_cast<Idx>(start_dart.size()); }

    // Reconstructs the boundary walk of face f as a dart sequence.
    std::vector<Idx> walk(const EmbeddedMultigraph& g, Idx f) const;
};

// Traces all faces by iterating the face-successor permutation. Throws
// EmbeddingInconsistent when Euler's formula V - E + F = 1 + C fails for the
// rotation system (C = number of connected components).
FaceStructure trace_faces_multi(const EmbeddedMultigraph& g);

}  // namespace vitality
