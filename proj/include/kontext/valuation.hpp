#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kontext/diagram.hpp"

namespace kontext {

// Partial {0,1} assignment to atoms; an absent id is undefined.
struct PartialValuation {
    std::map<std::string, int> values;
};

// Total two-valued measure: every block has exactly one atom with value 1.
struct Valuation {
    std::map<std::string, int> values;
};

// Fixed point of the admissibility rules, or a contradiction witness.
struct Propagation {
    PartialValuation values;
    std::optional<std::size_t> witness_block;

    bool contradiction() const { return witness_block.has_value(); }
};

// Least fixed point of
//   R1: a 1 in a block forces 0 on the block's other atoms;
//   R2: d-1 zeros in a block force 1 on the remaining atom.
// A block with two 1s or d zeros is a contradiction; the witness is the
// first such block in scan order. Throws ValidationError for premises on
// unknown atoms or with values outside {0,1}.
Propagation propagate(const Diagram& diag, const PartialValuation& premises);

// All total two-valued measures, ordered lexicographically in the value
// vector of the atoms sorted by id (0 before 1). Empty result is the
// Kochen-Specker case.
std::vector<Valuation> enumerate_two_valued(const Diagram& diag);

// True iff at least one two-valued measure exists; stops at the first one.
bool admits_two_valued(const Diagram& diag);

// measures must be the full enumeration for diag.
bool is_separating(const Diagram& diag, const std::vector<Valuation>& measures);
bool is_unital(const Diagram& diag, const std::vector<Valuation>& measures);

enum class AtomStatus { Forced0, Forced1, Contingent, ValueIndefinite };

const char* to_string(AtomStatus status);

struct ClassificationReport {
    PartialValuation premises;
    std::map<std::string, AtomStatus> status;
};

// Status of every atom against the total measures extending the premises:
// both values reachable -> Contingent, only one -> Forced0/Forced1, none
// (no extension exists at all) -> ValueIndefinite for every atom. Throws
// ContradictionError when the premises already propagate to a contradiction.
ClassificationReport classify(const Diagram& diag, const PartialValuation& premises);

// JSON array of {atom_id: 0|1} objects in enumeration order.
std::string to_json(const std::vector<Valuation>& measures);

} // namespace kontext
