#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "kontext/diagram.hpp"
#include "kontext/qrng.hpp"

using namespace kontext;

namespace {

QrngConfig bug_pair_config(std::uint64_t seed, std::size_t n) {
    const Diagram bug = make_bug();
    QrngConfig config;
    config.preparation = *bug.atoms[bug.atom_index("c")].ray;
    config.measurement = complete_context({*bug.atoms[bug.atom_index("b")].ray});
    config.target_index = 0;
    config.seed = seed;
    config.n = n;
    return config;
}

} // namespace

TEST_CASE("splitmix64 reference stream") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);

    SplitMix64 one(1);
    CHECK(one.next() == 0x910a2dec89025cc1ULL);

    SplitMix64 u(9);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform01();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("accs bounds") {
    CHECK(std::abs(accs_lower_bound() - 0.597614) < 1e-6);
    CHECK(std::abs(accs_upper_bound() - 0.801784) < 1e-6);
}

TEST_CASE("certify_angle on the bug pair and the boundaries") {
    const Diagram bug = make_bug();
    const Ray& c = *bug.atoms[bug.atom_index("c")].ray;
    const Ray& b = *bug.atoms[bug.atom_index("b")].ray;

    const AngleCertificate pair = certify_angle(c, b);
    CHECK_FALSE(pair.certified); // overlap 1/3 is below sqrt(5/14)
    CHECK(pair.overlap == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    // overlap 0.7 sits inside the interval
    const Ray e1 = make_ray({1.0, 0.0, 0.0});
    const Ray mid = make_ray({0.7, std::sqrt(1.0 - 0.49), 0.0});
    CHECK(certify_angle(e1, mid).certified);

    // boundaries certify (inclusive comparison)
    const double lo = accs_lower_bound();
    const double hi = accs_upper_bound();
    CHECK(certify_angle(e1, make_ray({lo, std::sqrt(1.0 - lo * lo), 0.0})).certified);
    CHECK(certify_angle(e1, make_ray({hi, std::sqrt(1.0 - hi * hi), 0.0})).certified);

    // collinear rays are not certifiable
    CHECK_FALSE(certify_angle(c, c).certified);

    CHECK_THROWS_AS(certify_angle(e1, make_ray({1.0, 0.0})), GeometryError);
}

TEST_CASE("certification is monotone under widening bounds") {
    SplitMix64 rng(3);
    const Ray e1 = make_ray({1.0, 0.0, 0.0});
    for (int i = 0; i < 200; ++i) {
        const double x = rng.uniform01();
        const Ray probe = make_ray({x, std::sqrt(1.0 - x * x), 0.0});
        const double lo = rng.uniform01() * 0.5;
        const double hi = 0.5 + rng.uniform01() * 0.5;
        const bool narrow = certify_angle(e1, probe, lo, hi).certified;
        const bool wide = certify_angle(e1, probe, lo * 0.5, hi + (1.0 - hi) * 0.5).certified;
        if (narrow) CHECK(wide);
    }
}

TEST_CASE("sampling a collinear target always hits it") {
    const Ray c = make_ray({1.0, 0.0, 0.0});
    QrngConfig config;
    config.preparation = c;
    config.measurement = complete_context({c});
    config.n = 1000;
    config.seed = 42;
    const SampleRun run = sample(config);
    CHECK(run.frequency == 1.0);
    CHECK(run.tallies[0] == 1000);
    for (std::uint8_t bit : run.bits) CHECK(bit == 1);
}

TEST_CASE("sampling an orthogonal target never hits it") {
    QrngConfig config;
    config.preparation = make_ray({0.0, 0.0, 1.0});
    config.measurement = complete_context({make_ray({1.0, 0.0, 0.0})});
    config.n = 1000;
    config.seed = 42;
    const SampleRun run = sample(config);
    CHECK(run.frequency == 0.0);
    CHECK(run.tallies[0] == 0);
}

TEST_CASE("identical configs reproduce identical runs") {
    const SampleRun a = sample(bug_pair_config(123, 20000));
    const SampleRun b = sample(bug_pair_config(123, 20000));
    CHECK(a.bits == b.bits);
    CHECK(a.tallies == b.tallies);
    CHECK(a.frequency == b.frequency);

    const SampleRun other = sample(bug_pair_config(124, 20000));
    CHECK(a.bits != other.bits); // different seed, different stream
}

TEST_CASE("bug pair frequency approaches one ninth") {
    const std::size_t n = 100000;
    const double p = 1.0 / 9.0;
    const double bound = 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    const SampleRun run = sample(bug_pair_config(1, n));
    CHECK(std::abs(run.frequency - p) < bound);
    CHECK_FALSE(run.certified); // overlap 1/3 lies outside the interval
    CHECK(run.overlap == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    std::uint64_t total = 0;
    for (const auto tally : run.tallies) total += tally;
    CHECK(total == n);
}

TEST_CASE("even odds stay within four sigma across a hundred seeds") {
    const Ray c = make_ray({1.0, 0.0, 0.0});
    const Ray half = make_ray({1.0, 1.0, 0.0}); // overlap 1/sqrt2, probability 1/2
    QrngConfig config;
    config.preparation = c;
    config.measurement = complete_context({half});
    config.n = 100000;
    const double bound = 4.0 * std::sqrt(0.25 / static_cast<double>(config.n));
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        config.seed = seed;
        if (std::abs(sample(config).frequency - 0.5) < bound) ++hits;
    }
    CHECK(hits >= 99);
}

TEST_CASE("config validation") {
    QrngConfig config = bug_pair_config(1, 10);
    config.target_index = 5;
    CHECK_THROWS_AS(sample(config), ValidationError);
    config = bug_pair_config(1, 10);
    config.n = 0;
    CHECK_THROWS_AS(sample(config), ValidationError);
    config = bug_pair_config(1, 10);
    config.bound_lower = 0.9;
    config.bound_upper = 0.3;
    CHECK_THROWS_AS(sample(config), ValidationError);
    config = bug_pair_config(1, 10);
    config.preparation = make_ray({1.0, 0.0});
    CHECK_THROWS_AS(sample(config), GeometryError);
}

TEST_CASE("von Neumann debiasing by the rulebook") {
    CHECK(debias({0, 1, 1, 0}) == std::vector<std::uint8_t>{0, 1});
    CHECK(debias({0, 0, 0, 0}).empty());
    CHECK(debias({1, 1, 1, 1}).empty());
    // alternating 01 pairs give only zeros
    std::vector<std::uint8_t> alternating;
    for (int i = 0; i < 10; ++i) {
        alternating.push_back(0);
        alternating.push_back(1);
    }
    CHECK(debias(alternating) == std::vector<std::uint8_t>(10, 0));
    // odd trailing bit is dropped
    CHECK(debias({0, 1, 1}) == std::vector<std::uint8_t>{0});
    CHECK(debias({}).empty());
}

TEST_CASE("debiasing a skewed source leaves no measurable bias") {
    SplitMix64 rng(2718);
    std::vector<std::uint8_t> biased;
    for (int i = 0; i < 200000; ++i) biased.push_back(rng.uniform01() < 0.75 ? 1 : 0);
    const auto fair = debias(biased);
    REQUIRE(fair.size() > 10000);
    double ones = 0;
    for (std::uint8_t bit : fair) ones += bit;
    const double freq = ones / static_cast<double>(fair.size());
    CHECK(std::abs(freq - 0.5) <= 4.0 * std::sqrt(0.25 / static_cast<double>(fair.size())));
}

TEST_CASE("bit packing is MSB first with zero padding") {
    CHECK(pack_bits({1, 0, 1, 1, 0, 0, 1, 0}) == std::vector<std::uint8_t>{0xb2});
    CHECK(pack_bits({1, 1, 1}) == std::vector<std::uint8_t>{0xe0});
    CHECK(pack_bits({}).empty());
    CHECK(pack_bits({0, 0, 0, 0, 0, 0, 0, 0, 1}) ==
          std::vector<std::uint8_t>{0x00, 0x80});
}

TEST_CASE("sample runs serialize deterministically") {
    const SampleRun run = sample(bug_pair_config(7, 1000));
    const std::string json = to_json(run);
    CHECK(json == to_json(sample(bug_pair_config(7, 1000))));
    CHECK(json.find("\"certified\": false") != std::string::npos);
    CHECK(json.find("\"n\": 1000") != std::string::npos);
    CHECK(json.find("\"overlap\": 0.333333333333") != std::string::npos);
    CHECK(json.find("\"seed\": 7") != std::string::npos);
}
