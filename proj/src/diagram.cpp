#include "kontext/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_set>

namespace kontext {

const Atom* Diagram::find_atom(const std::string& id) const {
    for (const Atom& a : atoms) {
        if (a.id == id) return &a;
    }
    return nullptr;
}

std::size_t Diagram::atom_index(const std::string& id) const {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].id == id) return i;
    }
    throw ValidationError("unknown atom '" + id + "'");
}

bool Diagram::fully_coordinatized() const {
    return std::all_of(atoms.begin(), atoms.end(),
                       [](const Atom& a) { return a.ray.has_value(); });
}

std::vector<std::pair<std::size_t, std::size_t>> legality_violations(const Diagram& diag) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < diag.blocks.size(); ++i) {
        const std::set<std::string> left(diag.blocks[i].atom_ids.begin(),
                                         diag.blocks[i].atom_ids.end());
        for (std::size_t j = i + 1; j < diag.blocks.size(); ++j) {
            std::size_t shared = 0;
            for (const std::string& id : diag.blocks[j].atom_ids) shared += left.count(id);
            if (shared >= 2) out.emplace_back(i, j);
        }
    }
    return out;
}

void validate_structure(const Diagram& diag) {
    if (diag.dimension < 2) throw ParseError("dimension must be at least 2");

    std::unordered_set<std::string> ids;
    for (const Atom& a : diag.atoms) {
        if (a.id.empty()) throw ParseError("empty atom id");
        if (!ids.insert(a.id).second) throw ParseError("duplicate atom id '" + a.id + "'");
        if (a.ray && a.ray->dimension() != diag.dimension) {
            throw ParseError("atom '" + a.id + "': vector of wrong length");
        }
    }

    for (std::size_t bi = 0; bi < diag.blocks.size(); ++bi) {
        const Block& b = diag.blocks[bi];
        if (b.atom_ids.size() != diag.dimension) {
            throw ParseError("block size: block #" + std::to_string(bi + 1) + " has " +
                             std::to_string(b.atom_ids.size()) + " atoms, expected " +
                             std::to_string(diag.dimension));
        }
        std::unordered_set<std::string> seen;
        for (const std::string& id : b.atom_ids) {
            if (!ids.count(id)) {
                throw ParseError("block #" + std::to_string(bi + 1) +
                                 " references unknown atom '" + id + "'");
            }
            if (!seen.insert(id).second) {
                throw ParseError("block #" + std::to_string(bi + 1) +
                                 " repeats atom '" + id + "'");
            }
        }
    }

    // Distinct contexts may share at most one atom in dimension 3; higher
    // dimensions use other pasting conventions, so only the caller warns.
    if (diag.dimension == 3) {
        const auto violations = legality_violations(diag);
        if (!violations.empty()) {
            throw ParseError("blocks #" + std::to_string(violations.front().first + 1) +
                             " and #" + std::to_string(violations.front().second + 1) +
                             " share more than one atom");
        }
    }
}

RealizeReport realize_check(const Diagram& diag, double tau) {
    for (const Atom& a : diag.atoms) {
        if (!a.ray) throw ValidationError("atom '" + a.id + "' has no coordinates");
    }
    RealizeReport report;
    for (std::size_t bi = 0; bi < diag.blocks.size(); ++bi) {
        const Block& b = diag.blocks[bi];
        for (std::size_t i = 0; i < b.atom_ids.size(); ++i) {
            for (std::size_t j = i + 1; j < b.atom_ids.size(); ++j) {
                const Atom& x = diag.atoms[diag.atom_index(b.atom_ids[i])];
                const Atom& y = diag.atoms[diag.atom_index(b.atom_ids[j])];
                const double overlap = std::abs(inner_product(*x.ray, *y.ray));
                report.max_residual = std::max(report.max_residual, overlap);
                if (overlap > tau) {
                    report.violations.push_back({bi, x.id, y.id, overlap});
                }
            }
        }
    }
    return report;
}

Diagram star(const Diagram& diag, const std::string& atom_id) {
    diag.atom_index(atom_id); // throws for unknown ids

    Diagram sub;
    sub.dimension = diag.dimension;
    std::unordered_set<std::string> used;
    for (const Block& b : diag.blocks) {
        if (std::find(b.atom_ids.begin(), b.atom_ids.end(), atom_id) != b.atom_ids.end()) {
            sub.blocks.push_back(b);
            used.insert(b.atom_ids.begin(), b.atom_ids.end());
        }
    }
    for (const Atom& a : diag.atoms) {
        if (used.count(a.id)) sub.atoms.push_back(a);
    }
    return sub;
}

namespace {

// Emits every d-clique of the orthogonality graph in lexicographic index order.
void collect_cliques(const std::vector<std::vector<bool>>& adjacent, std::size_t d,
                     std::vector<std::size_t>& clique, std::size_t start,
                     std::vector<std::vector<std::size_t>>& out) {
    if (clique.size() == d) {
        out.push_back(clique);
        return;
    }
    for (std::size_t v = start; v < adjacent.size(); ++v) {
        bool fits = true;
        for (std::size_t u : clique) {
            if (!adjacent[u][v]) {
                fits = false;
                break;
            }
        }
        if (fits) {
            clique.push_back(v);
            collect_cliques(adjacent, d, clique, v + 1, out);
            clique.pop_back();
        }
    }
}

} // namespace

Diagram from_vectors(const std::vector<Ray>& rays, std::size_t dimension, double tau) {
    if (dimension < 2) throw ValidationError("dimension must be at least 2");
    if (rays.size() < dimension) {
        throw ValidationError("need at least d rays to form a block");
    }

    Diagram diag;
    diag.dimension = dimension;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (rays[i].dimension() != dimension) {
            throw ValidationError("ray " + std::to_string(i) + " has wrong dimension");
        }
        Ray canonical = make_ray(rays[i].components, tau);
        for (const Atom& prev : diag.atoms) {
            if (same_ray(canonical, *prev.ray, tau)) {
                throw ValidationError("duplicate ray at index " + std::to_string(i));
            }
        }
        diag.atoms.push_back({"r" + std::to_string(i), std::move(canonical)});
    }

    const std::size_t n = diag.atoms.size();
    std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool orth = is_orthogonal(*diag.atoms[i].ray, *diag.atoms[j].ray, tau);
            adjacent[i][j] = adjacent[j][i] = orth;
        }
    }
    std::vector<std::vector<std::size_t>> cliques;
    std::vector<std::size_t> clique;
    collect_cliques(adjacent, dimension, clique, 0, cliques);
    for (const auto& members : cliques) {
        Block b;
        for (std::size_t v : members) b.atom_ids.push_back(diag.atoms[v].id);
        diag.blocks.push_back(std::move(b));
    }
    return diag;
}

} // namespace kontext
