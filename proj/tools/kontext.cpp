// Command-line front end: validate, measures, classify, born, qrng, export.
// JSON goes to stdout, diagnostics to stderr. Exit codes: 0 ok, 1 I/O,
// 2 schema/usage, 3 realization failure, 10 no two-valued measure,
// 11 contradictory premises.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kontext/diagram.hpp"
#include "kontext/diagram_io.hpp"
#include "kontext/qrng.hpp"
#include "kontext/valuation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitSchema = 2;
constexpr int kExitRealization = 3;
constexpr int kExitNoMeasures = 10;
constexpr int kExitContradiction = 11;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read '" + path + "'");
    return buffer.str();
}

kontext::Diagram load_diagram(const std::string& path) {
    return kontext::parse_diagram(read_file(path));
}

kontext::PartialValuation parse_premises(const std::vector<std::string>& sets) {
    kontext::PartialValuation premises;
    for (const std::string& s : sets) {
        const auto eq = s.rfind('=');
        if (eq == std::string::npos || eq == 0 || eq + 2 != s.size() ||
            (s[eq + 1] != '0' && s[eq + 1] != '1')) {
            throw kontext::ValidationError("bad premise '" + s + "', expected atom=0|1");
        }
        premises.values[s.substr(0, eq)] = s[eq + 1] - '0';
    }
    return premises;
}

// "path:atom", split on the last colon.
std::pair<std::string, std::string> parse_ray_ref(const std::string& ref) {
    const auto colon = ref.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == ref.size()) {
        throw kontext::ValidationError("bad ray reference '" + ref + "', expected file:atom");
    }
    return {ref.substr(0, colon), ref.substr(colon + 1)};
}

const kontext::Ray& resolve_ray(const kontext::Diagram& diag, const std::string& atom_id) {
    const kontext::Atom* atom = diag.find_atom(atom_id);
    if (!atom) throw kontext::ValidationError("unknown atom '" + atom_id + "'");
    if (!atom->ray) throw kontext::ValidationError("atom '" + atom_id + "' has no coordinates");
    return *atom->ray;
}

std::string quoted(const std::string& id) {
    std::string out = "\"";
    for (char ch : id) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += "\"";
    return out;
}

int cmd_validate(const std::string& path) {
    kontext::Diagram diag;
    try {
        diag = load_diagram(path);
    } catch (const kontext::Error& e) {
        std::cerr << "schema: " << e.what() << "\n";
        return kExitSchema;
    }
    std::cout << "schema: ok\n";

    const auto violations = kontext::legality_violations(diag);
    if (violations.empty()) {
        std::cout << "legality: ok\n";
    } else {
        // parse_diagram rejects d = 3 violations, so these are d > 3 pastings.
        for (const auto& [i, j] : violations) {
            std::cerr << "legality: warning: blocks #" << i + 1 << " and #" << j + 1
                      << " share more than one atom\n";
        }
        std::cout << "legality: " << violations.size() << " warning(s)\n";
    }

    if (!diag.fully_coordinatized()) {
        std::cout << "realization: skipped (missing coordinates)\n";
        return kExitOk;
    }
    const kontext::RealizeReport report = kontext::realize_check(diag);
    if (!report.realized()) {
        const auto& v = report.violations.front();
        std::cerr << "realization: block #" << v.block + 1 << ": |<" << v.atom_a << "|"
                  << v.atom_b << ">| = " << v.overlap << "\n";
        return kExitRealization;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", report.max_residual);
    std::cout << "realization: ok (max residual " << buf << ")\n";
    return kExitOk;
}

int cmd_measures(const std::string& path, bool count_only) {
    const auto measures = kontext::enumerate_two_valued(load_diagram(path));
    if (count_only) {
        std::cout << measures.size() << "\n";
    } else {
        std::cout << kontext::to_json(measures);
    }
    return measures.empty() ? kExitNoMeasures : kExitOk;
}

int cmd_classify(const std::string& path, const std::vector<std::string>& sets,
                 const std::string& format) {
    const kontext::Diagram diag = load_diagram(path);
    const kontext::PartialValuation premises = parse_premises(sets);
    const kontext::ClassificationReport report = kontext::classify(diag, premises);

    if (format == "json") {
        std::string out = "{\n  \"premises\": {";
        bool first = true;
        for (const auto& [id, value] : report.premises.values) {
            if (!first) out += ", ";
            first = false;
            out += quoted(id) + ": " + std::to_string(value);
        }
        out += "},\n  \"status\": {";
        first = true;
        for (const auto& [id, status] : report.status) {
            if (!first) out += ", ";
            first = false;
            out += quoted(id) + ": \"" + kontext::to_string(status) + "\"";
        }
        out += "}\n}\n";
        std::cout << out;
        return kExitOk;
    }

    std::size_t width = 4;
    for (const auto& [id, status] : report.status) width = std::max(width, id.size());
    std::string premise_line = "premises:";
    for (const auto& [id, value] : report.premises.values) {
        premise_line += " " + id + "=" + std::to_string(value);
    }
    if (report.premises.values.empty()) premise_line += " (none)";
    std::cout << premise_line << "\n";
    std::cout << std::string("atom") + std::string(width - 4, ' ') << "  status\n";
    for (const auto& [id, status] : report.status) {
        std::cout << id << std::string(width - id.size(), ' ') << "  "
                  << kontext::to_string(status) << "\n";
    }
    return kExitOk;
}

int cmd_born(const std::string& path, const std::string& atom_c, const std::string& atom_b) {
    const kontext::Diagram diag = load_diagram(path);
    const double p = kontext::born_probability(resolve_ray(diag, atom_c),
                                               resolve_ray(diag, atom_b));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12f", p);
    std::cout << buf << "\n";
    return kExitOk;
}

int cmd_qrng(const std::string& prep_ref, const std::string& target_ref, std::size_t n,
             std::uint64_t seed, double bound_lower, double bound_upper,
             const std::string& bits_out) {
    const auto [prep_path, prep_atom] = parse_ray_ref(prep_ref);
    const auto [target_path, target_atom] = parse_ray_ref(target_ref);

    const kontext::Diagram prep_diag = load_diagram(prep_path);
    const kontext::Diagram target_diag =
        target_path == prep_path ? prep_diag : load_diagram(target_path);

    kontext::QrngConfig config;
    config.preparation = resolve_ray(prep_diag, prep_atom);
    config.measurement =
        kontext::complete_context({resolve_ray(target_diag, target_atom)});
    config.target_index = 0;
    config.n = n;
    config.seed = seed;
    config.bound_lower = bound_lower;
    config.bound_upper = bound_upper;

    const kontext::SampleRun run = kontext::sample(config);
    if (!run.certified) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12f", run.overlap);
        std::cerr << "warning: overlap " << buf << " outside certification bounds ["
                  << bound_lower << ", " << bound_upper << "]\n";
    }
    if (!bits_out.empty()) {
        const auto bytes = kontext::pack_bits(run.bits);
        std::ofstream out(bits_out, std::ios::binary);
        if (!out) throw IoError("cannot open '" + bits_out + "' for writing");
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out) throw IoError("cannot write '" + bits_out + "'");
    }
    std::cout << kontext::to_json(run);
    return kExitOk;
}

int cmd_export(const std::string& path) {
    std::cout << kontext::to_dot(load_diagram(path));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greechie diagrams, two-valued measures and Born-rule sampling"};
    app.require_subcommand(1);

    double tolerance = kontext::default_tolerance();
    if (const char* env = std::getenv("KONTEXT_TOLERANCE")) {
        char* end = nullptr;
        const double parsed = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(parsed > 0.0)) {
            std::cerr << "invalid KONTEXT_TOLERANCE '" << env << "'\n";
            return kExitSchema;
        }
        tolerance = parsed;
    }
    app.add_option("--tolerance", tolerance, "orthogonality tolerance (default 1e-9)")
        ->check(CLI::PositiveNumber);

    std::string file;
    bool count_only = false;
    std::vector<std::string> sets;
    std::string format = "table";
    std::string atom_c, atom_b;
    std::string prep_ref, target_ref;
    std::size_t n = 100000;
    std::uint64_t seed = 1;
    double bound_lower = kontext::accs_lower_bound();
    double bound_upper = kontext::accs_upper_bound();
    std::string bits_out;
    bool dot = false;

    CLI::App* validate = app.add_subcommand("validate", "check schema, legality and realization");
    validate->add_option("file", file, "diagram file")->required();

    CLI::App* measures = app.add_subcommand("measures", "enumerate two-valued measures");
    measures->add_option("file", file, "diagram file")->required();
    measures->add_flag("--count-only", count_only, "print only the number of measures");

    CLI::App* classify = app.add_subcommand("classify", "classify atoms against premises");
    classify->add_option("file", file, "diagram file")->required();
    classify->add_option("--set", sets, "premise atom=0|1 (repeatable)");
    classify->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    CLI::App* born = app.add_subcommand("born", "Born probability of two coordinatized atoms");
    born->add_option("file", file, "diagram file")->required();
    born->add_option("atom_c", atom_c, "prepared atom")->required();
    born->add_option("atom_b", atom_b, "measured atom")->required();

    CLI::App* qrng = app.add_subcommand("qrng", "simulate Born-rule sampling");
    qrng->add_option("--prep", prep_ref, "preparation, file:atom")->required();
    qrng->add_option("--target", target_ref, "target, file:atom")->required();
    qrng->add_option("--n", n, "number of draws")->check(CLI::PositiveNumber);
    qrng->add_option("--seed", seed, "PRNG seed");
    qrng->add_option("--bound-lower", bound_lower, "certification lower bound");
    qrng->add_option("--bound-upper", bound_upper, "certification upper bound");
    qrng->add_option("--bits-out", bits_out, "write raw bits to this file, packed MSB first");

    CLI::App* exp = app.add_subcommand("export", "export the diagram");
    exp->add_option("file", file, "diagram file")->required();
    exp->add_flag("--dot", dot, "Graphviz output (the default and only format)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitSchema;
    }

    try {
        kontext::set_default_tolerance(tolerance);
        if (validate->parsed()) return cmd_validate(file);
        if (measures->parsed()) return cmd_measures(file, count_only);
        if (classify->parsed()) return cmd_classify(file, sets, format);
        if (born->parsed()) return cmd_born(file, atom_c, atom_b);
        if (qrng->parsed())
            return cmd_qrng(prep_ref, target_ref, n, seed, bound_lower, bound_upper, bits_out);
        if (exp->parsed()) return cmd_export(file);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const kontext::ContradictionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContradiction;
    } catch (const kontext::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    }
    return kExitOk;
}
