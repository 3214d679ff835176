#pragma once

#include <cstdint>

namespace vitality {

// Graph indices. 32 bits keeps the hot arrays compact for million-vertex
// instances; twin darts are paired as (2e, 2e^1).
using Idx = std::int32_t;

constexpr Idx kNone = -1;

inline Idx twin(Idx dart) { return dart ^ 1; }
inline Idx edge_of(Idx dart) { return dart >> 1; }
inline Idx dart_of(Idx edge) { return edge << 1; }

}  // namespace vitality
