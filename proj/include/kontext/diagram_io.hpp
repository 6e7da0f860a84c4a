#pragma once

#include <string>

#include "kontext/diagram.hpp"

namespace kontext {

// JSON exchange format:
//
//   {"dimension": 3,
//    "atoms": [{"id": "c", "vector": [0.8164965809, 0.5773502692, 0.0]}, ...],
//    "blocks": [["c", "a", "d"], ...]}
//
// "vector" is optional per atom. Parsing canonicalizes vectors (normalize
// unless already unit within tolerance, positive leading sign), so
// serialize(parse(t)) is a fixed point of the round trip.
Diagram parse_diagram(const std::string& text);

// Deterministic output: fixed key order, atoms and blocks in stored order,
// vector components as fixed-point decimals with 16 fractional digits.
std::string serialize_diagram(const Diagram& diag);

// Graphviz export: one node per atom, one chain subgraph per block, all in
// stored order; byte-identical output for identical diagrams. Throws
// ValidationError when the diagram has no blocks.
std::string to_dot(const Diagram& diag);

} // namespace kontext
