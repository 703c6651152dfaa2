#include "weaklens/superosc.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace weaklens {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void require_copies(int copies) {
    if (copies < 1) throw std::invalid_argument("copies must be at least 1");
}

Complex integer_power(Complex base, int exponent) {
    Complex acc = 1.0;
    while (exponent > 0) {
        if (exponent & 1) acc *= base;
        base *= base;
        exponent >>= 1;
    }
    return acc;
}

// In-place radix-2 FFT, forward convention sum x_j e^{-2 pi i j k / n}.
void fft(std::vector<Complex>& x) {
    const std::size_t n = x.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * M_PI / double(len);
        for (std::size_t base = 0; base < n; base += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex w = std::polar(1.0, ang * double(k));
                const Complex u = x[base + k];
                const Complex t = w * x[base + k + len / 2];
                x[base + k] = u + t;
                x[base + k + len / 2] = u - t;
            }
        }
    }
}

double fractional_part_distance(double r) {
    return std::abs(r - std::round(r));
}

}  // namespace

ThetaGrid::ThetaGrid(double min_value, double max_value, std::size_t count)
    : min_(min_value), max_(max_value), count_(count) {
    if (!std::isfinite(min_) || !std::isfinite(max_)) {
        throw std::invalid_argument("ThetaGrid: bounds must be finite");
    }
    if (!(min_ < max_)) throw std::invalid_argument("ThetaGrid: min must be below max");
    if (count_ < 2) throw std::invalid_argument("ThetaGrid: need at least 2 points");
}

Complex weak_amplitude(const WeakContext& ctx, const HermitianObservable& a, double theta) {
    if (ctx.dim() != a.dim()) {
        throw DimensionMismatchError("weak_amplitude: observable and state dimensions differ");
    }
    const Complex overlap = ctx.overlap();
    if (std::abs(overlap) <= kPoleThreshold) {
        throw PoleError("weak_amplitude: |<phi|psi>| <= 1e-12, at the pole");
    }
    return inner(ctx.post(), evolve(a, theta, ctx.pre())) / overlap;
}

Complex predicted_amplitude(Complex weak_val, double theta) {
    return std::exp(Complex(0.0, 1.0) * weak_val * theta);
}

Complex amplified_amplitude(const WeakContext& ctx, const HermitianObservable& a, int copies,
                            double theta) {
    require_copies(copies);
    return integer_power(weak_amplitude(ctx, a, theta), copies);
}

double local_frequency(const WeakContext& ctx, const HermitianObservable& a, int copies,
                       double theta0, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("local_frequency: step must be positive");
    }
    const Complex fm = amplified_amplitude(ctx, a, copies, theta0 - step);
    const Complex f0 = amplified_amplitude(ctx, a, copies, theta0);
    const Complex fp = amplified_amplitude(ctx, a, copies, theta0 + step);
    for (const Complex& f : {fm, f0, fp}) {
        if (std::abs(f) <= kPhaseMagnitudeThreshold) {
            throw PhaseUndefinedError("local_frequency: |F| below 1e-9 on the stencil");
        }
    }
    // Branch-reduced one-sided steps; their sum is the centered difference
    // and stays correct across a principal-branch cut.
    const double forward = reduce_phase(std::arg(fp) - std::arg(f0));
    const double backward = reduce_phase(std::arg(f0) - std::arg(fm));
    return (forward + backward) / (2.0 * step);
}

double taylor_residual(const WeakContext& ctx, const HermitianObservable& a, double theta,
                       int order) {
    if (order != 1 && order != 2) {
        throw std::invalid_argument("taylor_residual: order must be 1 or 2");
    }
    const Complex f = weak_amplitude(ctx, a, theta);
    Complex series = 0.0;
    Complex term = 1.0;  // (i theta)^n / n! accumulated incrementally
    for (int n = 0; n <= order; ++n) {
        if (n > 0) term *= Complex(0.0, theta) / double(n);
        series += term * weak_moment(ctx, a, n);
    }
    return std::abs(f - series);
}

SuperoscillationTrace trace_scan(const WeakContext& ctx, const HermitianObservable& a, int copies,
                                 const ThetaGrid& grid) {
    require_copies(copies);
    const WeakValueResult wv = weak_value(ctx, a);  // also enforces the pole rule
    const Complex n_aw = double(copies) * wv.value;

    const std::size_t count = grid.count();
    SuperoscillationTrace tr{grid, {}, {}, {}, {}, {}, copies * wv.value.real(),
                             copies * spectral_bound(a), copies};
    tr.f.resize(count);
    tr.g.resize(count);
    tr.phase_unwrapped.assign(count, kNan);
    tr.phase_valid.assign(count, false);
    tr.local_freq.assign(count, kNan);

    for (std::size_t k = 0; k < count; ++k) {
        const double theta = grid.point(k);
        tr.f[k] = amplified_amplitude(ctx, a, copies, theta);
        tr.g[k] = predicted_amplitude(n_aw, theta);
    }

    // Unwrap left to right.  A magnitude dip below the floor ends the current
    // run; the next valid point re-anchors at its own principal phase.
    bool have_anchor = false;
    double prev_unwrapped = 0.0;
    double prev_principal = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        if (std::abs(tr.f[k]) <= kPhaseMagnitudeThreshold) {
            have_anchor = false;
            continue;
        }
        tr.phase_valid[k] = true;
        const double principal = principal_phase(tr.f[k]);
        if (!have_anchor) {
            tr.phase_unwrapped[k] = principal;
            have_anchor = true;
        } else {
            tr.phase_unwrapped[k] = prev_unwrapped + reduce_phase(principal - prev_principal);
        }
        prev_unwrapped = tr.phase_unwrapped[k];
        prev_principal = principal;
    }

    for (std::size_t k = 1; k + 1 < count; ++k) {
        if (tr.phase_valid[k - 1] && tr.phase_valid[k] && tr.phase_valid[k + 1]) {
            tr.local_freq[k] =
                (tr.phase_unwrapped[k + 1] - tr.phase_unwrapped[k - 1]) / (2.0 * grid.spacing());
        }
    }
    return tr;
}

BandlimitReport bandlimit_spectrum(const WeakContext& ctx, const HermitianObservable& a,
                                   int copies, double period, std::size_t samples) {
    require_copies(copies);
    if (!(period > 0.0) || !std::isfinite(period)) {
        throw std::invalid_argument("bandlimit_spectrum: period must be positive");
    }
    if (samples < 8 || (samples & (samples - 1)) != 0) {
        throw std::invalid_argument("bandlimit_spectrum: samples must be a power of two, >= 8");
    }
    const double band = double(copies) * spectral_bound(a);
    const double required = 8.0 * band * period / (2.0 * M_PI);
    if (double(samples) < required) {
        throw std::invalid_argument("bandlimit_spectrum: need at least " +
                                    std::to_string(required) + " samples for this bandlimit");
    }

    // Every frequency present in F^N is a sum of eigenvalue differences plus
    // copies * lambda_0, so the spectrum sits on exact DFT bins iff all
    // spacings and that base frequency are integer multiples of 2 pi / period.
    const std::vector<double>& lam = a.eigenvalues();
    const double bins_per_unit = period / (2.0 * M_PI);
    for (std::size_t i = 0; i + 1 < lam.size(); ++i) {
        for (std::size_t j = i + 1; j < lam.size(); ++j) {
            if (fractional_part_distance((lam[j] - lam[i]) * bins_per_unit) >
                kCommensurabilityTolerance) {
                throw NotPeriodicError("bandlimit_spectrum: eigenvalue spacing incommensurate "
                                       "with the period");
            }
        }
    }
    if (fractional_part_distance(double(copies) * lam[0] * bins_per_unit) >
        kCommensurabilityTolerance) {
        throw NotPeriodicError("bandlimit_spectrum: F^N does not close over the period");
    }

    std::vector<Complex> x(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        x[j] = amplified_amplitude(ctx, a, copies, double(j) * period / double(samples));
    }
    fft(x);

    BandlimitReport rep;
    rep.sample_count = samples;
    rep.bandlimit = band;
    rep.frequencies.reserve(samples);
    rep.coefficients.reserve(samples);
    const long half = long(samples) / 2;
    for (long k = -half; k < half; ++k) {
        const std::size_t idx = std::size_t(k < 0 ? k + long(samples) : k);
        const double freq = 2.0 * M_PI * double(k) / period;
        const Complex coeff = x[idx] / double(samples);
        rep.frequencies.push_back(freq);
        rep.coefficients.push_back(coeff);
        const double energy = std::norm(coeff);
        if (std::abs(freq) <= band + kBandMargin) {
            rep.in_band_energy += energy;
        } else {
            rep.out_band_energy += energy;
        }
    }
    return rep;
}

}  // namespace weaklens
