#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kontext/geometry.hpp"

namespace kontext {

// SplitMix64 (Steele, Lea and Flood's mix; the reference stream, e.g. seed 0
// yields 0xe220a8397b1dcdaf first). Fixed algorithm so identical seeds
// reproduce identical bit streams on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next();

    // Top 53 bits scaled into [0, 1).
    double uniform01();
};

// Overlap interval within which an angle certifies value indefiniteness.
double accs_lower_bound(); // sqrt(5/14)
double accs_upper_bound(); // 3/sqrt(14)

struct AngleCertificate {
    bool certified;
    double overlap; // |<c|b>|
};

// True iff lower <= |<c|b>| <= upper (boundaries inclusive).
AngleCertificate certify_angle(const Ray& c, const Ray& b,
                               double lower = accs_lower_bound(),
                               double upper = accs_upper_bound());

struct QrngConfig {
    Ray preparation;          // the prepared ray c
    ContextBasis measurement; // basis containing the target ray
    std::size_t target_index = 0;
    std::uint64_t seed = 1;
    std::size_t n = 1;
    double bound_lower = accs_lower_bound();
    double bound_upper = accs_upper_bound();
};

struct SampleRun {
    std::vector<std::uint8_t> bits;     // 1 = target outcome
    std::vector<std::uint64_t> tallies; // one per basis element
    double frequency = 0.0;             // tallies[target_index] / n
    bool certified = false;
    double overlap = 0.0;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t target_index = 0;
};

// n independent draws from the categorical distribution
// p_i = born_probability(preparation, measurement.rays[i]).
SampleRun sample(const QrngConfig& config);

// von Neumann extractor over non-overlapping pairs: 01 -> 0, 10 -> 1,
// 00/11 discarded; an odd trailing bit is dropped.
std::vector<std::uint8_t> debias(const std::vector<std::uint8_t>& bits);

// Packs bits most significant bit first; the final byte is zero-padded.
std::vector<std::uint8_t> pack_bits(const std::vector<std::uint8_t>& bits);

// Deterministic JSON (sorted keys, 12-decimal fixed point); raw bits are
// not included, see pack_bits for the binary side channel.
std::string to_json(const SampleRun& run);

} // namespace kontext
