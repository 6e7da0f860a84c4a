#include "kontext/diagram_io.hpp"

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "json.hpp"

namespace kontext {

namespace {

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

// Fixed-point with 16 fractional digits: finer than one ulp for unit-vector
// components, so parsing reproduces the stored doubles and derived
// quantities (Born probabilities, residuals) survive the file round trip.
std::string format_component(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16f", x);
    if (std::strcmp(buf, "-0.0000000000000000") == 0) return "0.0000000000000000";
    return buf;
}

} // namespace

Diagram parse_diagram(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned()) {
        throw ParseError("missing or invalid \"dimension\"");
    }
    if (!doc.contains("atoms") || !doc["atoms"].is_array()) {
        throw ParseError("missing \"atoms\" array");
    }
    if (!doc.contains("blocks") || !doc["blocks"].is_array()) {
        throw ParseError("missing \"blocks\" array");
    }

    Diagram diag;
    diag.dimension = doc["dimension"].get<std::size_t>();

    for (const auto& item : doc["atoms"]) {
        if (!item.is_object() || !item.contains("id") || !item["id"].is_string()) {
            throw ParseError("every atom needs a string \"id\"");
        }
        Atom atom;
        atom.id = item["id"].get<std::string>();
        if (item.contains("vector")) {
            if (!item["vector"].is_array()) {
                throw ParseError("atom '" + atom.id + "': \"vector\" must be an array");
            }
            std::vector<double> components;
            for (const auto& value : item["vector"]) {
                if (!value.is_number()) {
                    throw ParseError("atom '" + atom.id + "': vector entries must be numbers");
                }
                components.push_back(value.get<double>());
            }
            if (components.size() != diag.dimension) {
                throw ParseError("atom '" + atom.id + "': vector of wrong length");
            }
            try {
                atom.ray = make_ray(std::move(components));
            } catch (const GeometryError& e) {
                throw ParseError("atom '" + atom.id + "': " + e.what());
            }
        }
        diag.atoms.push_back(std::move(atom));
    }

    for (const auto& item : doc["blocks"]) {
        if (!item.is_array()) throw ParseError("every block must be an array of atom ids");
        Block block;
        for (const auto& value : item) {
            if (!value.is_string()) throw ParseError("block entries must be atom ids");
            block.atom_ids.push_back(value.get<std::string>());
        }
        diag.blocks.push_back(std::move(block));
    }

    validate_structure(diag);
    return diag;
}

std::string serialize_diagram(const Diagram& diag) {
    std::string out = "{\n  \"dimension\": " + std::to_string(diag.dimension) + ",\n";

    out += "  \"atoms\": [\n";
    for (std::size_t i = 0; i < diag.atoms.size(); ++i) {
        const Atom& a = diag.atoms[i];
        out += "    {\"id\": \"" + escape_json(a.id) + "\"";
        if (a.ray) {
            out += ", \"vector\": [";
            for (std::size_t k = 0; k < a.ray->components.size(); ++k) {
                if (k > 0) out += ", ";
                out += format_component(a.ray->components[k]);
            }
            out += "]";
        }
        out += "}";
        if (i + 1 < diag.atoms.size()) out += ",";
        out += "\n";
    }
    out += "  ],\n";

    out += "  \"blocks\": [\n";
    for (std::size_t i = 0; i < diag.blocks.size(); ++i) {
        out += "    [";
        const Block& b = diag.blocks[i];
        for (std::size_t k = 0; k < b.atom_ids.size(); ++k) {
            if (k > 0) out += ", ";
            out += "\"" + escape_json(b.atom_ids[k]) + "\"";
        }
        out += "]";
        if (i + 1 < diag.blocks.size()) out += ",";
        out += "\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string to_dot(const Diagram& diag) {
    if (diag.blocks.empty()) throw ValidationError("diagram has no blocks to draw");

    std::string out = "graph diagram {\n  node [shape=circle];\n";
    for (const Atom& a : diag.atoms) {
        out += "  \"" + escape_json(a.id) + "\";\n";
    }
    for (std::size_t bi = 0; bi < diag.blocks.size(); ++bi) {
        const Block& b = diag.blocks[bi];
        out += "  subgraph block_" + std::to_string(bi + 1) + " {\n";
        for (std::size_t k = 0; k + 1 < b.atom_ids.size(); ++k) {
            out += "    \"" + escape_json(b.atom_ids[k]) + "\" -- \"" +
                   escape_json(b.atom_ids[k + 1]) + "\";\n";
        }
        out += "  }\n";
    }
    out += "}\n";
    return out;
}

} // namespace kontext
