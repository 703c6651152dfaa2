#pragma once

// Shared fixtures for the test binaries. Random draws are seeded per call
// site so failures reproduce exactly.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "weaklens/linalg.hpp"
#include "weaklens/weak.hpp"

namespace testutil {

using weaklens::Complex;
using weaklens::ComplexMatrix;
using weaklens::HermitianObservable;
using weaklens::PureState;
using weaklens::WeakContext;

inline bool close(double a, double b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
}

inline bool close(Complex a, Complex b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
}

// Uniform complex entries in the unit square, then normalized. Resamples
// degenerate draws instead of failing.
inline PureState random_state(std::mt19937& rng, std::size_t dim) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        std::vector<Complex> v(dim);
        double norm_sq = 0.0;
        for (auto& c : v) {
            c = Complex(u(rng), u(rng));
            norm_sq += std::norm(c);
        }
        if (norm_sq > 1e-6) return PureState(weaklens::normalize(v));
    }
}

// Hermitian matrix with entries of order one: real diagonal in [-1, 1],
// off-diagonal complex in the unit square, mirrored by conjugation.
inline ComplexMatrix random_hermitian_matrix(std::mt19937& rng, std::size_t dim) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = Complex(u(rng), 0.0);
        for (std::size_t j = i + 1; j < dim; ++j) {
            m(i, j) = Complex(u(rng), u(rng));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

inline HermitianObservable random_observable(std::mt19937& rng, std::size_t dim) {
    return HermitianObservable(random_hermitian_matrix(rng, dim));
}

// Pre/post pair with an overlap bounded away from the pole. The floor keeps
// the 1e-12 property tolerances honest: cancellation error scales like
// 1/|overlap|.
inline WeakContext random_context(std::mt19937& rng, std::size_t dim,
                                  double overlap_floor = 0.2) {
    for (;;) {
        PureState pre = random_state(rng, dim);
        PureState post = random_state(rng, dim);
        if (std::abs(weaklens::inner(post, pre)) >= overlap_floor)
            return WeakContext(pre, post);
    }
}

// The worked two-level family: pre is |+x>, post is (|+x> + a|-x>)/sqrt(1+a^2),
// written in the z basis as (1+a, 1-a) up to normalization.
inline WeakContext lens_context(double a) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    PureState pre({Complex(inv_sqrt2, 0.0), Complex(inv_sqrt2, 0.0)});
    PureState post(weaklens::normalize(
        {Complex(1.0 + a, 0.0), Complex(1.0 - a, 0.0)}));
    return WeakContext(pre, post);
}

inline HermitianObservable half_sigma_z() {
    ComplexMatrix m(2);
    m(0, 0) = Complex(0.5, 0.0);
    m(1, 1) = Complex(-0.5, 0.0);
    return HermitianObservable(m);
}

}  // namespace testutil
