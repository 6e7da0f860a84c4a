#include "kontext/qrng.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace kontext {

std::uint64_t SplitMix64::next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double accs_lower_bound() { return std::sqrt(5.0 / 14.0); }

double accs_upper_bound() { return 3.0 / std::sqrt(14.0); }

AngleCertificate certify_angle(const Ray& c, const Ray& b, double lower, double upper) {
    const double overlap = std::abs(inner_product(c, b));
    return {lower <= overlap && overlap <= upper, overlap};
}

SampleRun sample(const QrngConfig& config) {
    const std::size_t d = config.measurement.dimension();
    if (d < 2) throw ValidationError("measurement basis is empty");
    if (config.preparation.dimension() != d) {
        throw GeometryError("preparation dimension does not match the basis");
    }
    if (config.target_index >= d) throw ValidationError("target_index out of range");
    if (config.n < 1) throw ValidationError("sample count must be at least 1");
    if (!(0.0 <= config.bound_lower && config.bound_lower <= config.bound_upper &&
          config.bound_upper <= 1.0)) {
        throw ValidationError("bounds must be ordered within [0, 1]");
    }

    std::vector<double> cumulative(d, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        total += born_probability(config.preparation, config.measurement.rays[i]);
        cumulative[i] = total;
    }

    SampleRun run;
    run.seed = config.seed;
    run.n = config.n;
    run.target_index = config.target_index;
    run.tallies.assign(d, 0);
    run.bits.reserve(config.n);

    SplitMix64 rng(config.seed);
    for (std::size_t draw = 0; draw < config.n; ++draw) {
        const double u = rng.uniform01() * total;
        std::size_t outcome = d - 1;
        for (std::size_t i = 0; i < d; ++i) {
            if (u < cumulative[i]) {
                outcome = i;
                break;
            }
        }
        ++run.tallies[outcome];
        run.bits.push_back(outcome == config.target_index ? 1 : 0);
    }
    run.frequency = static_cast<double>(run.tallies[config.target_index]) /
                    static_cast<double>(config.n);

    const AngleCertificate cert =
        certify_angle(config.preparation, config.measurement.rays[config.target_index],
                      config.bound_lower, config.bound_upper);
    run.certified = cert.certified;
    run.overlap = cert.overlap;
    return run;
}

std::vector<std::uint8_t> debias(const std::vector<std::uint8_t>& bits) {
    std::vector<std::uint8_t> out;
    for (std::size_t i = 0; i + 1 < bits.size(); i += 2) {
        if (bits[i] != bits[i + 1]) out.push_back(bits[i] ? 1 : 0);
    }
    return out;
}

std::vector<std::uint8_t> pack_bits(const std::vector<std::uint8_t>& bits) {
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }
    return bytes;
}

std::string to_json(const SampleRun& run) {
    char buf[64];
    std::string out = "{\n";
    out += std::string("  \"certified\": ") + (run.certified ? "true" : "false") + ",\n";
    std::snprintf(buf, sizeof buf, "%.12f", run.frequency);
    out += std::string("  \"frequency\": ") + buf + ",\n";
    out += "  \"n\": " + std::to_string(run.n) + ",\n";
    std::snprintf(buf, sizeof buf, "%.12f", run.overlap);
    out += std::string("  \"overlap\": ") + buf + ",\n";
    out += "  \"seed\": " + std::to_string(run.seed) + ",\n";
    out += "  \"tallies\": [";
    for (std::size_t i = 0; i < run.tallies.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(run.tallies[i]);
    }
    out += "],\n";
    out += "  \"target_index\": " + std::to_string(run.target_index) + "\n";
    out += "}\n";
    return out;
}

} // namespace kontext
