#include "kontext/valuation.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace kontext {

namespace {

constexpr signed char kUndefined = -1;

// Index structures for the search: slots are atoms sorted by id, so that
// branching in slot order yields lexicographic output.
struct Engine {
    std::vector<std::string> slot_ids;              // sorted
    std::vector<std::vector<std::size_t>> blocks;   // member slots per block

    explicit Engine(const Diagram& d) {
        for (const Atom& a : d.atoms) slot_ids.push_back(a.id);
        std::sort(slot_ids.begin(), slot_ids.end());
        std::map<std::string, std::size_t> slot_of;
        for (std::size_t i = 0; i < slot_ids.size(); ++i) slot_of[slot_ids[i]] = i;
        for (const Block& b : d.blocks) {
            std::vector<std::size_t> members;
            for (const std::string& id : b.atom_ids) members.push_back(slot_of.at(id));
            blocks.push_back(std::move(members));
        }
    }

    std::size_t slot(const std::string& id) const {
        const auto it = std::lower_bound(slot_ids.begin(), slot_ids.end(), id);
        if (it == slot_ids.end() || *it != id) {
            throw ValidationError("unknown atom '" + id + "'");
        }
        return static_cast<std::size_t>(it - slot_ids.begin());
    }
};

// Runs R1/R2 to the fixed point. Returns the first contradicted block in
// scan order, if any.
std::optional<std::size_t> close_under_rules(const Engine& eng, std::vector<signed char>& vals) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t bi = 0; bi < eng.blocks.size(); ++bi) {
            const auto& members = eng.blocks[bi];
            const std::size_t d = members.size();
            std::size_t ones = 0, zeros = 0;
            for (std::size_t slot : members) {
                if (vals[slot] == 1) ++ones;
                else if (vals[slot] == 0) ++zeros;
            }
            if (ones >= 2 || zeros == d) return bi;
            if (ones == 1 && zeros + ones < d) {
                for (std::size_t slot : members) {
                    if (vals[slot] == kUndefined) {
                        vals[slot] = 0;
                        changed = true;
                    }
                }
            } else if (ones == 0 && zeros == d - 1) {
                for (std::size_t slot : members) {
                    if (vals[slot] == kUndefined) {
                        vals[slot] = 1;
                        changed = true;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<signed char> seed_values(const Engine& eng, const PartialValuation& premises) {
    std::vector<signed char> vals(eng.slot_ids.size(), kUndefined);
    for (const auto& [id, value] : premises.values) {
        if (value != 0 && value != 1) {
            throw ValidationError("premise '" + id + "' must be 0 or 1");
        }
        vals[eng.slot(id)] = static_cast<signed char>(value);
    }
    return vals;
}

Valuation to_valuation(const Engine& eng, const std::vector<signed char>& vals) {
    Valuation v;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        v.values[eng.slot_ids[i]] = vals[i];
    }
    return v;
}

// Depth-first search branching the first undefined slot, 0 before 1, with
// rule closure as pruning. `sink` returns false to stop the whole search.
template <typename Sink>
bool search(const Engine& eng, std::vector<signed char>& vals, Sink&& sink) {
    std::size_t slot = vals.size();
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] == kUndefined) {
            slot = i;
            break;
        }
    }
    if (slot == vals.size()) return sink(vals);

    for (signed char branch = 0; branch <= 1; ++branch) {
        std::vector<signed char> next = vals;
        next[slot] = branch;
        if (!close_under_rules(eng, next)) {
            if (!search(eng, next, sink)) return false;
        }
    }
    return true;
}

} // namespace

Propagation propagate(const Diagram& diag, const PartialValuation& premises) {
    const Engine eng(diag);
    std::vector<signed char> vals = seed_values(eng, premises);

    Propagation result;
    result.witness_block = close_under_rules(eng, vals);
    if (!result.contradiction()) {
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (vals[i] != kUndefined) result.values.values[eng.slot_ids[i]] = vals[i];
        }
    }
    return result;
}

std::vector<Valuation> enumerate_two_valued(const Diagram& diag) {
    const Engine eng(diag);
    std::vector<Valuation> out;
    std::vector<signed char> vals(eng.slot_ids.size(), kUndefined);
    if (!close_under_rules(eng, vals)) {
        search(eng, vals, [&](const std::vector<signed char>& leaf) {
            out.push_back(to_valuation(eng, leaf));
            return true;
        });
    }
    return out;
}

bool admits_two_valued(const Diagram& diag) {
    const Engine eng(diag);
    std::vector<signed char> vals(eng.slot_ids.size(), kUndefined);
    if (close_under_rules(eng, vals)) return false;
    bool found = false;
    search(eng, vals, [&](const std::vector<signed char>&) {
        found = true;
        return false; // first witness is enough
    });
    return found;
}

bool is_separating(const Diagram& diag, const std::vector<Valuation>& measures) {
    if (diag.atoms.size() >= 2 && measures.empty()) return false;
    for (std::size_t i = 0; i < diag.atoms.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.atoms.size(); ++j) {
            const std::string& x = diag.atoms[i].id;
            const std::string& y = diag.atoms[j].id;
            bool separated = false;
            for (const Valuation& m : measures) {
                if (m.values.at(x) != m.values.at(y)) {
                    separated = true;
                    break;
                }
            }
            if (!separated) return false;
        }
    }
    return true;
}

bool is_unital(const Diagram& diag, const std::vector<Valuation>& measures) {
    for (const Atom& a : diag.atoms) {
        bool hit = false;
        for (const Valuation& m : measures) {
            if (m.values.at(a.id) == 1) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

const char* to_string(AtomStatus status) {
    switch (status) {
    case AtomStatus::Forced0: return "Forced0";
    case AtomStatus::Forced1: return "Forced1";
    case AtomStatus::Contingent: return "Contingent";
    case AtomStatus::ValueIndefinite: return "ValueIndefinite";
    }
    return "?";
}

ClassificationReport classify(const Diagram& diag, const PartialValuation& premises) {
    const Engine eng(diag);
    std::vector<signed char> vals = seed_values(eng, premises);

    if (const auto witness = close_under_rules(eng, vals)) {
        const Block& blk = diag.blocks[*witness];
        std::string atoms;
        for (const std::string& id : blk.atom_ids) {
            if (!atoms.empty()) atoms += ", ";
            atoms += id;
        }
        throw ContradictionError("contradictory premises: block #" +
                                     std::to_string(*witness + 1) + " {" + atoms + "}",
                                 *witness);
    }

    const std::size_t n = eng.slot_ids.size();
    std::vector<bool> seen0(n, false), seen1(n, false);
    std::size_t unsaturated = n;
    search(eng, vals, [&](const std::vector<signed char>& leaf) {
        for (std::size_t i = 0; i < n; ++i) {
            auto& seen = leaf[i] == 1 ? seen1 : seen0;
            if (!seen[i]) {
                seen[i] = true;
                if (seen0[i] && seen1[i]) --unsaturated;
            }
        }
        return unsaturated > 0; // all atoms contingent: nothing left to learn
    });

    ClassificationReport report;
    report.premises = premises;
    for (std::size_t i = 0; i < n; ++i) {
        AtomStatus status;
        if (seen0[i] && seen1[i]) status = AtomStatus::Contingent;
        else if (seen0[i]) status = AtomStatus::Forced0;
        else if (seen1[i]) status = AtomStatus::Forced1;
        else status = AtomStatus::ValueIndefinite;
        report.status[eng.slot_ids[i]] = status;
    }
    return report;
}

namespace {

std::string quoted(const std::string& id) {
    std::string out = "\"";
    for (char ch : id) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += "\"";
    return out;
}

} // namespace

std::string to_json(const std::vector<Valuation>& measures) {
    if (measures.empty()) return "[]\n";
    std::string out = "[\n";
    for (std::size_t i = 0; i < measures.size(); ++i) {
        out += "  {";
        bool first = true;
        for (const auto& [id, value] : measures[i].values) {
            if (!first) out += ", ";
            first = false;
            out += quoted(id) + ": " + std::to_string(value);
        }
        out += i + 1 < measures.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

} // namespace kontext
