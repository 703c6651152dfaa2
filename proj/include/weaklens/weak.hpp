// weak.hpp
// Weak values as deformation ratios between a pre-selected state |psi> and a
// post-selected state <phi|: A_w = <phi|A|psi> / <phi|psi>, higher moments,
// two-observable ratios, the three-state Bargmann invariant, and the pole
// diagnostics that tell you when these ratios stop being trustworthy.

#pragma once

#include "weaklens/linalg.hpp"

namespace weaklens {

inline constexpr double kPoleThreshold = 1e-12;        // |<phi|psi>| at or below this: hard error
inline constexpr double kNearPoleThreshold = 1e-6;     // below this: answer valid but flagged
inline constexpr double kBargmannPhaseThreshold = 1e-14;
inline constexpr int kMaxMomentOrder = 32;

// Pre/post selection pair with the overlap <phi|psi> fixed at construction.
// Exactly orthogonal selections are rejected here; small but nonzero overlaps
// are allowed so that pole-proximity diagnostics stay expressible.
class WeakContext {
public:
    WeakContext(PureState pre, PureState post);

    std::size_t dim() const { return pre_.dim(); }
    const PureState& pre() const { return pre_; }
    const PureState& post() const { return post_; }
    Complex overlap() const { return overlap_; }  // <post|pre>

private:
    PureState pre_;
    PureState post_;
    Complex overlap_;
};

struct WeakValueResult {
    Complex value;
    double overlap_magnitude = 0.0;
    bool near_pole = false;  // overlap_magnitude < kNearPoleThreshold
};

struct BargmannTriple {
    Complex delta;             // <s1|s2><s2|s3><s3|s1>
    double phase = 0.0;        // arg delta in (-pi, pi]; 0 when not defined
    bool phase_defined = false;
};

// A_w = <phi|A|psi> / <phi|psi>.  Throws PoleError when |<phi|psi>| <= 1e-12.
WeakValueResult weak_value(const WeakContext& ctx, const HermitianObservable& a);

// (A^n)_w by iterated application of A; order 0 gives 1.  order in [0, 32].
Complex weak_moment(const WeakContext& ctx, const HermitianObservable& a, int order);

// W = <phi|A1|psi> / <phi|A2|psi>.  The overlap itself may be small here; the
// only pole that matters is the denominator's own.
Complex weak_ratio(const WeakContext& ctx, const HermitianObservable& a1,
                   const HermitianObservable& a2);

// Cyclic three-state invariant.  Its phase is gauge invariant; the magnitude
// decides whether that phase means anything.
BargmannTriple bargmann_invariant(const PureState& s1, const PureState& s2, const PureState& s3);

// |<phi|psi>| in (0, 1].  Small values mean large weak-value amplification.
double pole_proximity(const WeakContext& ctx);

}  // namespace weaklens
