#pragma once

#include <vector>

#include "vitality/embedded_multigraph.hpp"

namespace vitality {

// Crossing count between walk1 and a simple open path walk2, both given as
// dart sequences. A crossing is a maximal shared subpath entered and left on
// opposite sides of walk2; sides are read off the rotation at the shared
// endpoints. Runs touching either walk's endpoints cannot change sides and
// count as touches, not crossings.
Idx count_crossings(const EmbeddedMultigraph& g, const std::vector<Idx>& walk1,
                    bool walk1_closed, const std::vector<Idx>& walk2);

// True when the intersection of the two simple paths is a single (possibly
// empty or trivial) contiguous path of both.
bool single_touch(const EmbeddedMultigraph& g, const std::vector<Idx>& p,
                  const std::vector<Idx>& q);

}  // namespace vitality
