// blochgeom.hpp
// Scalar field g(theta, phi) = <psi(theta, phi)| a . sigma |psi(theta, phi)>
// on the Bloch sphere, its analytic gradient, and the degenerate rank-1
// metric that gradient induces, next to the Fubini-Study metric for scale.

#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "weaklens/linalg.hpp"

namespace weaklens {

// Margin kept from both poles when laying out sample grids, since the
// phi coordinate degenerates there.
inline constexpr double kGridPoleMargin = 1e-3;

// Point on the sphere: theta in [0, pi] from the north pole, phi reduced
// mod 2 pi into [0, 2 pi).
class BlochPoint {
public:
    BlochPoint(double theta, double phi);

    double theta() const { return theta_; }
    double phi() const { return phi_; }

private:
    double theta_;
    double phi_;
};

// Coefficient vector of a . sigma.  Deliberately not normalized: the field
// and metric scale with |a| and tests rely on that.
struct PauliAxis {
    std::array<double, 3> a{0.0, 0.0, 0.0};
};

// Symmetric 2x2 tensor in (theta, phi) coordinates.
struct MetricTensor {
    double tt = 0.0;
    double tp = 0.0;
    double pp = 0.0;
};

struct FieldGridRow {
    double theta = 0.0;
    double phi = 0.0;
    double g = 0.0;
    double dg_dtheta = 0.0;
    double dg_dphi = 0.0;
    MetricTensor induced;
    MetricTensor fubini_study;
};

// |psi(theta, phi)> = (cos(theta/2), e^{i phi} sin(theta/2)).
PureState state_from_angles(const BlochPoint& p);

// Unit vector n = (sin theta cos phi, sin theta sin phi, cos theta).
std::array<double, 3> bloch_vector(const BlochPoint& p);

// g = a . n, the expectation of a . sigma in |psi(theta, phi)>.
double scalar_field(const PauliAxis& axis, const BlochPoint& p);

// Analytic (d g / d theta, d g / d phi).
std::pair<double, double> field_gradient(const PauliAxis& axis, const BlochPoint& p);

// Outer square of the gradient: always rank 1, det identically zero.
MetricTensor induced_metric(const PauliAxis& axis, const BlochPoint& p);

// diag(1/4, sin^2(theta)/4), the round metric every state sees.
MetricTensor fubini_study_metric(const BlochPoint& p);

// Row-major grid: n_theta values spanning [margin, pi - margin] crossed with
// n_phi values spanning [0, 2 pi).  Both counts must be at least 2.
std::vector<FieldGridRow> sample_field_grid(const PauliAxis& axis, std::size_t n_theta,
                                            std::size_t n_phi);

}  // namespace weaklens
