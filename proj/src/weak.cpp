#include "weaklens/weak.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace weaklens {

namespace {

void require_context_dim(const WeakContext& ctx, const HermitianObservable& a) {
    if (ctx.dim() != a.dim()) {
        throw DimensionMismatchError("weak value: observable dim " + std::to_string(a.dim()) +
                                     " does not match state dim " + std::to_string(ctx.dim()));
    }
}

Complex checked_overlap(const WeakContext& ctx) {
    const Complex overlap = ctx.overlap();
    if (std::abs(overlap) <= kPoleThreshold) {
        throw PoleError("weak value: |<phi|psi>| <= 1e-12, at the pole");
    }
    return overlap;
}

}  // namespace

WeakContext::WeakContext(PureState pre, PureState post)
    : pre_(std::move(pre)), post_(std::move(post)) {
    if (pre_.dim() != post_.dim()) {
        throw DimensionMismatchError("WeakContext: pre and post dimensions differ");
    }
    overlap_ = inner(post_, pre_);
    if (std::abs(overlap_) == 0.0) {
        throw PoleError("WeakContext: pre- and post-selection are exactly orthogonal");
    }
}

WeakValueResult weak_value(const WeakContext& ctx, const HermitianObservable& a) {
    require_context_dim(ctx, a);
    const Complex overlap = checked_overlap(ctx);
    const Complex num = inner_raw(ctx.post().amplitudes(), matvec(a.matrix(), ctx.pre().amplitudes()));
    const double mag = std::abs(overlap);
    return WeakValueResult{num / overlap, mag, mag < kNearPoleThreshold};
}

Complex weak_moment(const WeakContext& ctx, const HermitianObservable& a, int order) {
    if (order < 0 || order > kMaxMomentOrder) {
        throw std::invalid_argument("weak_moment: order must be in [0, 32]");
    }
    require_context_dim(ctx, a);
    const Complex overlap = checked_overlap(ctx);
    std::vector<Complex> vec = ctx.pre().amplitudes();
    for (int k = 0; k < order; ++k) vec = matvec(a.matrix(), vec);
    return inner_raw(ctx.post().amplitudes(), vec) / overlap;
}

Complex weak_ratio(const WeakContext& ctx, const HermitianObservable& a1,
                   const HermitianObservable& a2) {
    require_context_dim(ctx, a1);
    require_context_dim(ctx, a2);
    const Complex num = inner_raw(ctx.post().amplitudes(), matvec(a1.matrix(), ctx.pre().amplitudes()));
    const Complex den = inner_raw(ctx.post().amplitudes(), matvec(a2.matrix(), ctx.pre().amplitudes()));
    if (std::abs(den) <= kPoleThreshold) {
        throw RatioPoleError("weak_ratio: |<phi|A2|psi>| <= 1e-12, generalized pole");
    }
    return num / den;
}

BargmannTriple bargmann_invariant(const PureState& s1, const PureState& s2, const PureState& s3) {
    if (s1.dim() != s2.dim() || s2.dim() != s3.dim()) {
        throw DimensionMismatchError("bargmann_invariant: state dimensions differ");
    }
    BargmannTriple out;
    out.delta = inner(s1, s2) * inner(s2, s3) * inner(s3, s1);
    if (std::abs(out.delta) > kBargmannPhaseThreshold) {
        out.phase = principal_phase(out.delta);
        out.phase_defined = true;
    }
    return out;
}

double pole_proximity(const WeakContext& ctx) {
    return std::abs(ctx.overlap());
}

}  // namespace weaklens
