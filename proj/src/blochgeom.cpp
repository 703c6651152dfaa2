#include "weaklens/blochgeom.hpp"

#include <cmath>

namespace weaklens {

BlochPoint::BlochPoint(double theta, double phi) : theta_(theta) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw std::invalid_argument("BlochPoint: angles must be finite");
    }
    if (theta < 0.0 || theta > M_PI) {
        throw std::invalid_argument("BlochPoint: theta must lie in [0, pi]");
    }
    phi_ = std::fmod(phi, 2.0 * M_PI);
    if (phi_ < 0.0) phi_ += 2.0 * M_PI;
    if (phi_ >= 2.0 * M_PI) phi_ = 0.0;  // fmod can land on 2 pi after the shift
}

PureState state_from_angles(const BlochPoint& p) {
    const double half = 0.5 * p.theta();
    return PureState({Complex(std::cos(half), 0.0), std::polar(std::sin(half), p.phi())});
}

std::array<double, 3> bloch_vector(const BlochPoint& p) {
    const double st = std::sin(p.theta());
    return {st * std::cos(p.phi()), st * std::sin(p.phi()), std::cos(p.theta())};
}

double scalar_field(const PauliAxis& axis, const BlochPoint& p) {
    const std::array<double, 3> n = bloch_vector(p);
    return axis.a[0] * n[0] + axis.a[1] * n[1] + axis.a[2] * n[2];
}

std::pair<double, double> field_gradient(const PauliAxis& axis, const BlochPoint& p) {
    const double st = std::sin(p.theta());
    const double ct = std::cos(p.theta());
    const double sp = std::sin(p.phi());
    const double cp = std::cos(p.phi());
    const double d_theta = axis.a[0] * ct * cp + axis.a[1] * ct * sp - axis.a[2] * st;
    const double d_phi = -axis.a[0] * st * sp + axis.a[1] * st * cp;
    return {d_theta, d_phi};
}

MetricTensor induced_metric(const PauliAxis& axis, const BlochPoint& p) {
    const auto [d_theta, d_phi] = field_gradient(axis, p);
    return {d_theta * d_theta, d_theta * d_phi, d_phi * d_phi};
}

MetricTensor fubini_study_metric(const BlochPoint& p) {
    const double st = std::sin(p.theta());
    return {0.25, 0.0, 0.25 * st * st};
}

std::vector<FieldGridRow> sample_field_grid(const PauliAxis& axis, std::size_t n_theta,
                                            std::size_t n_phi) {
    if (n_theta < 2 || n_phi < 2) {
        throw InvalidResolutionError("sample_field_grid: need at least 2 points per direction");
    }
    const double t_lo = kGridPoleMargin;
    const double t_hi = M_PI - kGridPoleMargin;
    std::vector<FieldGridRow> rows;
    rows.reserve(n_theta * n_phi);
    for (std::size_t i = 0; i < n_theta; ++i) {
        const double theta = t_lo + double(i) * (t_hi - t_lo) / double(n_theta - 1);
        for (std::size_t j = 0; j < n_phi; ++j) {
            const double phi = double(j) * 2.0 * M_PI / double(n_phi);
            const BlochPoint p(theta, phi);
            FieldGridRow row;
            row.theta = p.theta();
            row.phi = p.phi();
            row.g = scalar_field(axis, p);
            const auto [d_theta, d_phi] = field_gradient(axis, p);
            row.dg_dtheta = d_theta;
            row.dg_dphi = d_phi;
            row.induced = induced_metric(axis, p);
            row.fubini_study = fubini_study_metric(p);
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace weaklens
