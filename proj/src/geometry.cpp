#include "kontext/geometry.hpp"

#include <atomic>
#include <cmath>
#include <string>
#include <utility>

namespace kontext {

namespace {

std::atomic<double> g_default_tolerance{1e-9};

// Below this residual norm a Gram-Schmidt candidate counts as dependent.
constexpr double kDependentResidual = 1e-6;

void require_same_dimension(const Ray& a, const Ray& b) {
    if (a.dimension() != b.dimension()) {
        throw GeometryError("dimension mismatch: " + std::to_string(a.dimension()) +
                            " vs " + std::to_string(b.dimension()));
    }
}

double raw_dot(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

} // namespace

double default_tolerance() { return g_default_tolerance.load(); }

void set_default_tolerance(double tau) {
    if (!(tau > 0.0)) throw GeometryError("tolerance must be positive");
    g_default_tolerance.store(tau);
}

Ray make_ray(std::vector<double> components, double tau) {
    if (components.size() < 2) throw GeometryError("ray needs dimension >= 2");
    const double norm = std::sqrt(raw_dot(components, components));
    if (norm <= tau) throw GeometryError("cannot normalize a (near-)zero vector");
    if (std::abs(norm - 1.0) > tau) {
        for (double& x : components) x /= norm;
    }
    for (double x : components) {
        if (std::abs(x) > tau) {
            if (x < 0.0) {
                for (double& y : components) y = -y;
            }
            break;
        }
    }
    return Ray{std::move(components)};
}

bool same_ray(const Ray& a, const Ray& b, double tau) {
    if (a.dimension() != b.dimension()) return false;
    return std::abs(inner_product(a, b)) >= 1.0 - tau;
}

double inner_product(const Ray& a, const Ray& b) {
    require_same_dimension(a, b);
    return raw_dot(a.components, b.components);
}

double born_probability(const Ray& c, const Ray& b) {
    const double overlap = inner_product(c, b);
    const double p = overlap * overlap;
    return p > 1.0 ? 1.0 : p;
}

bool is_orthogonal(const Ray& a, const Ray& b, double tau) {
    return std::abs(inner_product(a, b)) <= tau;
}

ContextBasis make_context_basis(std::vector<Ray> rays, double tau) {
    if (rays.size() < 2) throw GeometryError("a context needs at least 2 rays");
    for (const Ray& r : rays) {
        if (r.dimension() != rays.size()) {
            throw GeometryError("a context of dimension d needs exactly d rays of length d");
        }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
        for (std::size_t j = i + 1; j < rays.size(); ++j) {
            if (!is_orthogonal(rays[i], rays[j], tau)) {
                throw GeometryError("context rays are not pairwise orthogonal");
            }
        }
    }
    return ContextBasis{std::move(rays)};
}

ContextBasis complete_context(const std::vector<Ray>& partial, double tau) {
    if (partial.empty()) throw GeometryError("complete_context needs at least one ray");
    const std::size_t d = partial.front().dimension();
    if (partial.size() >= d) {
        throw GeometryError("context already has d or more rays; nothing to complete");
    }

    std::vector<Ray> basis;
    basis.reserve(d);
    for (const Ray& r : partial) {
        if (r.dimension() != d) throw GeometryError("dimension mismatch among inputs");
        Ray canonical = make_ray(r.components, tau);
        for (const Ray& prev : basis) {
            if (!is_orthogonal(canonical, prev, tau)) {
                throw GeometryError("inputs are not pairwise orthonormal");
            }
        }
        basis.push_back(std::move(canonical));
    }

    for (std::size_t i = 0; i < d && basis.size() < d; ++i) {
        std::vector<double> candidate(d, 0.0);
        candidate[i] = 1.0;
        for (const Ray& prev : basis) {
            const double proj = raw_dot(candidate, prev.components);
            for (std::size_t k = 0; k < d; ++k) candidate[k] -= proj * prev.components[k];
        }
        if (std::sqrt(raw_dot(candidate, candidate)) > kDependentResidual) {
            basis.push_back(make_ray(std::move(candidate), tau));
        }
    }
    if (basis.size() != d) {
        throw GeometryError("could not complete the context to a full basis");
    }
    return ContextBasis{std::move(basis)};
}

Ray cross3(const Ray& a, const Ray& b, double tau) {
    if (a.dimension() != 3 || b.dimension() != 3) {
        throw GeometryError("cross3 requires dimension 3");
    }
    const std::vector<double>& x = a.components;
    const std::vector<double>& y = b.components;
    std::vector<double> v = {x[1] * y[2] - x[2] * y[1],
                             x[2] * y[0] - x[0] * y[2],
                             x[0] * y[1] - x[1] * y[0]};
    if (std::sqrt(raw_dot(v, v)) <= tau) {
        throw GeometryError("cross3 of (near-)collinear rays");
    }
    return make_ray(std::move(v), tau);
}

} // namespace kontext
