#pragma once

#include <cstddef>
#include <vector>

#include "kontext/errors.hpp"

namespace kontext {

// Global orthogonality tolerance. Geometric predicates either take an
// explicit tolerance argument or default to this value.
double default_tolerance();
void set_default_tolerance(double tau);

// A unit vector in real d-space, standing for the rank-1 projector it spans.
// Invariants (maintained by make_ray):
//   - Euclidean norm 1 within the tolerance;
//   - canonical sign: the first component with magnitude above the tolerance
//     is positive, so a ray and its negative compare equal.
struct Ray {
    std::vector<double> components;

    std::size_t dimension() const { return components.size(); }
};

// Normalizes (unless the norm is already 1 within tau, which keeps parsed
// golden files byte-stable) and applies the canonical sign convention.
// Throws GeometryError on a (near-)zero vector or dimension < 2.
Ray make_ray(std::vector<double> components, double tau = default_tolerance());

// Collinearity within tau: |<a|b>| >= 1 - tau.
bool same_ray(const Ray& a, const Ray& b, double tau = default_tolerance());

// Euclidean dot product. Throws GeometryError on dimension mismatch.
double inner_product(const Ray& a, const Ray& b);

// |<c|b>|^2, clamped to [0,1].
double born_probability(const Ray& c, const Ray& b);

bool is_orthogonal(const Ray& a, const Ray& b, double tau = default_tolerance());

// An orthonormal basis: exactly d pairwise orthogonal rays in d dimensions.
struct ContextBasis {
    std::vector<Ray> rays;

    std::size_t dimension() const { return rays.size(); }
};

ContextBasis make_context_basis(std::vector<Ray> rays, double tau = default_tolerance());

// Completes k < d pairwise orthonormal rays to a full basis by Gram-Schmidt
// against the standard basis vectors in index order, skipping candidates
// whose residual is near-dependent on the span so far. Deterministic: the
// same input yields the same basis, and re-completing any prefix of the
// output reproduces the whole output.
ContextBasis complete_context(const std::vector<Ray>& partial, double tau = default_tolerance());

// Normalized, sign-canonical cross product; dimension 3 only.
// Throws GeometryError for (near-)collinear inputs.
Ray cross3(const Ray& a, const Ray& b, double tau = default_tolerance());

} // namespace kontext
