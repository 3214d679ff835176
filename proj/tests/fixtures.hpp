#pragma once

#include "vitality/planar_graph.hpp"

namespace vitality::fixtures {

// Single edge s - t.
inline GraphSpec single_edge() {
    return {2, 0, 1, {{1}, {0}}};
}

// Path s - v - t.
inline GraphSpec path3() {
    return {3, 0, 2, {{1}, {0, 2}, {1}}};
}

// 4-cycle s - a - t - b - s, drawn s west, a north, t east, b south.
// Vertex ids: s=0, a=1, t=2, b=3.
inline GraphSpec cycle4() {
    return {4, 0, 2, {{1, 3}, {2, 0}, {1, 3}, {0, 2}}};
}

// Diamond: V = {s, a, b, t}, E = {sa, sb, ab, at, bt}, outer face s-a-t-b.
// s=0, a=1, b=2, t=3; drawn s west, a north, b south, t east, ab vertical.
// Rotation lists start so that first mentions yield edge ids in the
// canonical sa, sb, ab, at, bt order.
inline GraphSpec diamond() {
    return {4, 0, 3, {{1, 2}, {2, 0, 3}, {0, 1, 3}, {1, 2}}};
}

// Theta: V = {s, u, w, t}, E = {st, su, ut, sw, wt}; s=0, u=1, w=2, t=3.
// Drawn s west, t east, u north, w south, with the st chord straight.
inline GraphSpec theta() {
    return {4, 0, 3, {{1, 3, 2}, {3, 0}, {0, 3}, {0, 1, 2}}};
}

// grid(3,3) with s=(0,0)=0, t=(2,2)=8 matches the canonical 3x3 fixture.

}  // namespace vitality::fixtures
