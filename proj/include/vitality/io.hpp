#pragma once

#include <string>

#include "vitality/planar_graph.hpp"

namespace vitality {

// Text instance format:
//   # comments anywhere
//   pg 1 <n> <m> <s> <t>
//   <id>: v1 v2 ... vd        (neighbors in clockwise order, one line per vertex)
GraphSpec parse_spec(const std::string& text);
EmbeddedGraph parse_instance(const std::string& text);

std::string serialize_instance(const GraphSpec& spec);
std::string serialize_instance(const EmbeddedGraph& g);

}  // namespace vitality
