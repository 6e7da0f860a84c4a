#include <cmath>
#include <numbers>
#include <string>

#include "kontext/diagram.hpp"

namespace kontext {

Diagram make_star(std::size_t n) {
    if (n < 1) throw ValidationError("a star needs at least one context");

    Diagram diag;
    diag.dimension = 3;
    diag.atoms.push_back({"c", make_ray({0.0, 0.0, 1.0})});
    for (std::size_t i = 1; i <= n; ++i) {
        const double theta = static_cast<double>(i) * std::numbers::pi / (2.0 * static_cast<double>(n));
        const std::string ai = "a" + std::to_string(i);
        const std::string aip = ai + "p";
        diag.atoms.push_back({ai, make_ray({std::cos(theta), std::sin(theta), 0.0})});
        diag.atoms.push_back({aip, make_ray({-std::sin(theta), std::cos(theta), 0.0})});
        diag.blocks.push_back({{"c", ai, aip}});
    }
    return diag;
}

Diagram make_bug() {
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);

    // Rays realizing the seven blocks, with c and b fixed at overlap 1/3.
    // The realization is rigid: writing a = cos(t) u + sin(t) w and
    // e = cos(s) u + sin(s) w over the plane orthogonal to c, closing the
    // remaining blocks by cross products leaves one constraint for C5,
    // cos(t) sin(s) sin(t - s) = 1/8, whose left side peaks at exactly 1/8
    // for t = pi/3, s = pi/6. The search pinning this down lives in the
    // test suite; the resulting rays are exact.
    const std::vector<double> c = {s2 / s3, 1.0 / s3, 0.0};
    const std::vector<double> a = {1.0 / (2.0 * s3), -s2 / (2.0 * s3), 3.0 / (2.0 * s3)};
    const std::vector<double> d = {0.5, -s2 / 2.0, -0.5};
    const std::vector<double> m2 = {1.0 / (2.0 * s3), -s2 / (2.0 * s3), -3.0 / (2.0 * s3)};
    const std::vector<double> e = {0.5, -s2 / 2.0, 0.5};
    const std::vector<double> f = {1.0 / s2, 0.0, 1.0 / s2};
    const std::vector<double> g = {0.5, s2 / 2.0, -0.5};
    const std::vector<double> h = {1.0 / s2, 0.0, -1.0 / s2};
    const std::vector<double> k = {0.5, s2 / 2.0, 0.5};
    const std::vector<double> z = {0.0, 1.0, 0.0};
    const std::vector<double> m6 = {1.0 / (2.0 * s3), s2 / (2.0 * s3), 3.0 / (2.0 * s3)};
    const std::vector<double> b = {s2 / s3, -1.0 / s3, 0.0};
    const std::vector<double> m7 = {1.0 / (2.0 * s3), s2 / (2.0 * s3), -3.0 / (2.0 * s3)};

    Diagram diag;
    diag.dimension = 3;
    diag.atoms = {
        {"c", make_ray(c)},   {"a", make_ray(a)},   {"d", make_ray(d)},
        {"m2", make_ray(m2)}, {"e", make_ray(e)},   {"f", make_ray(f)},
        {"g", make_ray(g)},   {"h", make_ray(h)},   {"k", make_ray(k)},
        {"z", make_ray(z)},   {"m6", make_ray(m6)}, {"b", make_ray(b)},
        {"m7", make_ray(m7)},
    };
    diag.blocks = {
        {{"c", "a", "d"}},   // C1
        {{"c", "m2", "e"}},  // C2
        {{"d", "f", "g"}},   // C3
        {{"e", "h", "k"}},   // C4
        {{"f", "z", "h"}},   // C5
        {{"g", "m6", "b"}},  // C6
        {{"b", "m7", "k"}},  // C7
    };
    return diag;
}

} // namespace kontext
