#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kontext/geometry.hpp"

namespace kontext {

struct Atom {
    std::string id;
    std::optional<Ray> ray; // coordinatization, when known
};

// A context: exactly `dimension` atoms, mutually orthogonal when realized.
struct Block {
    std::vector<std::string> atom_ids;
};

// Orthogonality diagram: atoms are points, blocks are the smooth lines.
// Distinct blocks share at most one atom for d = 3; for d > 3 that check
// only warns (see legality_violations).
struct Diagram {
    std::size_t dimension = 3;
    std::vector<Atom> atoms;
    std::vector<Block> blocks;

    const Atom* find_atom(const std::string& id) const;
    // Index into atoms; throws ValidationError for unknown ids.
    std::size_t atom_index(const std::string& id) const;
    bool fully_coordinatized() const;
};

// Pairs of block indices sharing two or more atoms, in scan order.
std::vector<std::pair<std::size_t, std::size_t>> legality_violations(const Diagram& diag);

// Structural checks shared by parse_diagram and programmatic construction:
// unique nonempty ids, block size == dimension, ids resolve, ray dimensions
// match, and (for d = 3) Greechie legality. Throws ParseError.
void validate_structure(const Diagram& diag);

struct RealizeViolation {
    std::size_t block;
    std::string atom_a;
    std::string atom_b;
    double overlap; // |<a|b>|
};

struct RealizeReport {
    std::vector<RealizeViolation> violations;
    double max_residual = 0.0; // over all in-block pairs

    bool realized() const { return violations.empty(); }
};

// Checks every in-block pair for orthogonality within tau. Requires a fully
// coordinatized diagram (throws ValidationError otherwise).
RealizeReport realize_check(const Diagram& diag, double tau = default_tolerance());

// Sub-diagram of all blocks containing the atom, plus their atoms.
Diagram star(const Diagram& diag, const std::string& atom_id);

// Diagram spanned by a set of rays: one atom per ray (named r0..rn in input
// order), one block per d-subset of mutually orthogonal rays, enumerated in
// lexicographic index order. Throws ValidationError on duplicate rays or
// when fewer than d rays are given.
Diagram from_vectors(const std::vector<Ray>& rays, std::size_t dimension,
                     double tau = default_tolerance());

// n >= 1 contexts sharing the common atom c, coordinatized with c = e3 and
// the partner pairs at angles i*pi/(2n) in the x-y plane.
Diagram make_star(std::size_t n);

// The 13-atom, 7-block bug configuration, blocks C1..C7 in index order
// 0..6, with its (rigid) coordinatization attached.
Diagram make_bug();

} // namespace kontext
