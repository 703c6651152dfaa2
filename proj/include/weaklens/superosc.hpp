// superosc.hpp
// The weak evolution amplitude F(theta) = <phi|e^{i theta A}|psi> / <phi|psi>
// and its N-copy power F^N.  Near theta = 0 the phase of F^N advances at the
// rate N * Re(A_w), which for anomalous weak values exceeds the spectral
// bandlimit N * max|lambda| even though the signal is built from frequencies
// inside it.  This module scans traces, estimates local frequency from the
// unwrapped phase, checks Taylor truncations, and verifies the bandlimit
// claim with a DFT over one exact period.

#pragma once

#include <cstddef>
#include <vector>

#include "weaklens/weak.hpp"

namespace weaklens {

inline constexpr double kPhaseMagnitudeThreshold = 1e-9;   // |F| at or below this: arg F undefined
inline constexpr double kDefaultFrequencyStep = 1e-5;
inline constexpr double kCommensurabilityTolerance = 1e-9;
inline constexpr double kBandMargin = 1e-9;                // slack on |freq| <= bandlimit

// Uniform grid over [min_value, max_value], endpoints included.
class ThetaGrid {
public:
    ThetaGrid(double min_value, double max_value, std::size_t count);

    double min_value() const { return min_; }
    double max_value() const { return max_; }
    std::size_t count() const { return count_; }
    double spacing() const { return (max_ - min_) / double(count_ - 1); }
    // Endpoints are exact; interior points are min + k * spacing.
    double point(std::size_t k) const {
        return k + 1 == count_ ? max_ : min_ + double(k) * spacing();
    }

private:
    double min_;
    double max_;
    std::size_t count_;
};

// Scan of F^N against the single-frequency prediction e^{i N A_w theta}.
// phase_unwrapped and local_freq carry NaN wherever the corresponding
// phase_valid flags rule the value out; consumers must check the flags.
struct SuperoscillationTrace {
    ThetaGrid grid;
    std::vector<Complex> f;                // F^N at each grid point
    std::vector<Complex> g;                // e^{i N A_w theta}
    std::vector<double> phase_unwrapped;   // continuous within each valid run
    std::vector<bool> phase_valid;         // |f| above kPhaseMagnitudeThreshold
    std::vector<double> local_freq;        // centered d(phase)/d(theta); NaN at ends
    double omega = 0.0;                    // N * Re(A_w)
    double bandlimit = 0.0;                // N * max|lambda|
    int copies = 1;
};

// DFT of F^N sampled over one period, binned to frequencies 2 pi k / period.
struct BandlimitReport {
    std::size_t sample_count = 0;
    std::vector<double> frequencies;       // ascending, signed
    std::vector<Complex> coefficients;     // c_k such that F^N = sum c_k e^{i freq_k theta}
    double in_band_energy = 0.0;           // sum |c_k|^2 with |freq_k| <= bandlimit
    double out_band_energy = 0.0;
    double bandlimit = 0.0;                // N * max|lambda|
};

// F(theta).  Shares the pole rules of weak_value.
Complex weak_amplitude(const WeakContext& ctx, const HermitianObservable& a, double theta);

// exp(i * weak_val * theta): what F would be if A_w were the whole story.
Complex predicted_amplitude(Complex weak_val, double theta);

// F(theta)^copies.  Equal to the amplitude of `copies` independent pre/post
// pairs evolved by the sum of the single-copy observables, so the power is
// exact, not an approximation.
Complex amplified_amplitude(const WeakContext& ctx, const HermitianObservable& a, int copies,
                            double theta);

// d(arg F^N)/d(theta) at theta0 by centered differences with branch-safe
// phase steps.  Throws PhaseUndefinedError if |F^N| dips below the magnitude
// floor anywhere on the three-point stencil.
double local_frequency(const WeakContext& ctx, const HermitianObservable& a, int copies,
                       double theta0, double step = kDefaultFrequencyStep);

// |F(theta) - truncated Taylor series| with moments (A^n)_w as coefficients.
// order must be 1 or 2.
double taylor_residual(const WeakContext& ctx, const HermitianObservable& a, double theta,
                       int order);

SuperoscillationTrace trace_scan(const WeakContext& ctx, const HermitianObservable& a, int copies,
                                 const ThetaGrid& grid);

// Samples F^N over [0, period) and takes a DFT.  Demands that every
// eigenvalue spacing (and the resulting total phase) closes over the period;
// otherwise NotPeriodicError.  samples must be a power of two, at least 8,
// and at least 8 * (bandlimit * period / 2 pi) so the band sits well inside
// Nyquist.
BandlimitReport bandlimit_spectrum(const WeakContext& ctx, const HermitianObservable& a,
                                   int copies, double period, std::size_t samples);

}  // namespace weaklens
