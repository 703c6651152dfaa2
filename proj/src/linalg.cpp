#include "weaklens/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace weaklens {

namespace {

constexpr int kMaxJacobiSweeps = 100;

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatchError(std::string(what) + ": dimensions " + std::to_string(a) +
                                     " and " + std::to_string(b) + " differ");
    }
}

// One rotation zeroing the (p, q) entry of the Hermitian matrix h, with the
// same unitary accumulated into v (v <- v * U).  The pivot b = |b| e^{i beta}
// turns the 2x2 block real after factoring e^{i beta} into the second column,
// so the classic symmetric Jacobi angle applies unchanged.
void jacobi_rotate(ComplexMatrix& h, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = h(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex u = apq / mag;  // e^{i beta}
    const double app = h(p, p).real();
    const double aqq = h(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    // Smaller-magnitude root of t^2 + 2 tau t - 1 = 0; keeps rotations small.
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Complex uc = std::conj(u);
    const std::size_t n = h.dim();

    // h <- h U, columns p and q.
    for (std::size_t i = 0; i < n; ++i) {
        const Complex hip = h(i, p);
        const Complex hiq = h(i, q);
        h(i, p) = c * hip - (s * uc) * hiq;
        h(i, q) = s * hip + (c * uc) * hiq;
    }
    // h <- U^dagger h, rows p and q.
    for (std::size_t j = 0; j < n; ++j) {
        const Complex hpj = h(p, j);
        const Complex hqj = h(q, j);
        h(p, j) = c * hpj - (s * u) * hqj;
        h(q, j) = s * hpj + (c * u) * hqj;
    }
    // The rotation zeroes these up to roundoff; pin them exactly.
    h(p, q) = 0.0;
    h(q, p) = 0.0;
    h(p, p) = Complex(h(p, p).real(), 0.0);
    h(q, q) = Complex(h(q, q).real(), 0.0);

    for (std::size_t i = 0; i < n; ++i) {
        const Complex vip = v(i, p);
        const Complex viq = v(i, q);
        v(i, p) = c * vip - (s * uc) * viq;
        v(i, q) = s * vip + (c * uc) * viq;
    }
}

double off_diagonal_norm(const ComplexMatrix& h) {
    double sum = 0.0;
    const std::size_t n = h.dim();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            sum += std::norm(h(p, q));
        }
    }
    return std::sqrt(2.0 * sum);
}

}  // namespace

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

double principal_phase(Complex z) {
    double p = std::arg(z);
    if (p <= -M_PI) p += 2.0 * M_PI;
    return p;
}

double reduce_phase(double x) {
    double y = std::remainder(x, 2.0 * M_PI);
    if (y <= -M_PI) y += 2.0 * M_PI;
    return y;
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim_ * dim_) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match dim^2");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

double ComplexMatrix::max_hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex& z : data_) sum += std::norm(z);
    return std::sqrt(sum);
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](Complex z) { return is_finite(z); });
}

std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> v) {
    require_same_dim(m.dim(), v.size(), "matvec");
    std::vector<Complex> out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < m.dim(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 2) {
        throw std::invalid_argument("PureState: dimension must be at least 2");
    }
    double norm_sq = 0.0;
    for (const Complex& z : amplitudes_) {
        if (!is_finite(z)) throw std::invalid_argument("PureState: amplitude is not finite");
        norm_sq += std::norm(z);
    }
    if (std::abs(std::sqrt(norm_sq) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("PureState: norm deviates from 1 beyond 1e-10; use normalize()");
    }
}

PureState normalize(const std::vector<Complex>& v) {
    double norm_sq = 0.0;
    for (const Complex& z : v) {
        if (!is_finite(z)) throw std::invalid_argument("normalize: component is not finite");
        norm_sq += std::norm(z);
    }
    const double nrm = std::sqrt(norm_sq);
    if (nrm <= kZeroVectorThreshold) {
        throw ZeroVectorError("normalize: vector norm <= 1e-12, direction undefined");
    }
    std::vector<Complex> scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = v[i] / nrm;
    return PureState(std::move(scaled));
}

Complex inner(const PureState& bra, const PureState& ket) {
    return inner_raw(bra.amplitudes(), ket.amplitudes());
}

Complex inner_raw(std::span<const Complex> bra, std::span<const Complex> ket) {
    require_same_dim(bra.size(), ket.size(), "inner");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < bra.size(); ++i) acc += std::conj(bra[i]) * ket[i];
    return acc;
}

std::vector<Complex> apply(const HermitianObservable& a, const PureState& psi) {
    require_same_dim(a.dim(), psi.dim(), "apply");
    return matvec(a.matrix(), psi.amplitudes());
}

EigenSystem hermitian_eigendecomposition(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) throw std::invalid_argument("hermitian_eigendecomposition: empty matrix");
    if (n > kMaxDimension) {
        throw DimensionTooLargeError("hermitian_eigendecomposition: dim " + std::to_string(n) +
                                     " exceeds the cap of 64");
    }
    if (!m.all_finite() || m.max_hermiticity_defect() > kHermitianTolerance) {
        throw NotHermitianError("hermitian_eigendecomposition: matrix is not Hermitian within 1e-12");
    }

    // Work on the Hermitian average so an asymmetry up to the tolerance
    // cannot bias the iteration.
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double tol = 1e-14 * std::max(1.0, h.frobenius_norm());
    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        if (off_diagonal_norm(h) <= tol) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                jacobi_rotate(h, v, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&h](std::size_t a, std::size_t b) { return h(a, a).real() < h(b, b).real(); });

    EigenSystem out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = h(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

HermitianObservable::HermitianObservable(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    EigenSystem eig = hermitian_eigendecomposition(matrix_);
    eigenvalues_ = std::move(eig.eigenvalues);
    eigenvectors_ = std::move(eig.eigenvectors);
    for (double lam : eigenvalues_) spectral_bound_ = std::max(spectral_bound_, std::abs(lam));

    // V diag(lambda) V^dagger has to give the matrix back, otherwise the
    // cached spectral data would silently poison every later evolve().
    const std::size_t n = dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                acc += eigenvectors_(i, k) * eigenvalues_[k] * std::conj(eigenvectors_(j, k));
            }
            worst = std::max(worst, std::abs(acc - matrix_(i, j)));
        }
    }
    if (worst > kReconstructionTolerance) {
        throw Error("HermitianObservable: eigendecomposition reconstruction error " +
                    std::to_string(worst) + " exceeds 1e-10");
    }
}

PureState evolve(const HermitianObservable& a, double theta, const PureState& psi) {
    require_same_dim(a.dim(), psi.dim(), "evolve");
    if (!std::isfinite(theta)) throw std::invalid_argument("evolve: theta is not finite");
    const std::size_t n = a.dim();
    const ComplexMatrix& v = a.eigenvectors();

    // y = V^dagger psi, then phases, then back.
    std::vector<Complex> y(n, Complex(0.0));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) y[k] += std::conj(v(i, k)) * psi[i];
    }
    for (std::size_t k = 0; k < n; ++k) y[k] *= std::polar(1.0, theta * a.eigenvalues()[k]);
    std::vector<Complex> out(n, Complex(0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) out[i] += v(i, k) * y[k];
    }
    return PureState(std::move(out));
}

double spectral_bound(const HermitianObservable& a) {
    return a.spectral_bound();
}

HermitianObservable pauli_observable(const std::array<double, 3>& axis, double scale) {
    for (double c : axis) {
        if (!std::isfinite(c)) throw std::invalid_argument("pauli_observable: axis is not finite");
    }
    if (!std::isfinite(scale)) throw std::invalid_argument("pauli_observable: scale is not finite");
    const double ax = axis[0] * scale;
    const double ay = axis[1] * scale;
    const double az = axis[2] * scale;
    ComplexMatrix m(2);
    m(0, 0) = Complex(az, 0.0);
    m(0, 1) = Complex(ax, -ay);
    m(1, 0) = Complex(ax, ay);
    m(1, 1) = Complex(-az, 0.0);
    return HermitianObservable(std::move(m));
}

}  // namespace weaklens
