// linalg.hpp
// Dense complex linear algebra for small quantum systems: normalized state
// vectors, Hermitian observables with cached spectral data, and the unitary
// evolution e^{i theta A}.  Dimensions are capped at 64, so everything here
// is plain O(n^2)/O(n^3) code with no external solver.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "weaklens/errors.hpp"

namespace weaklens {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;          // allowed | ||psi|| - 1 | at construction
inline constexpr double kZeroVectorThreshold = 1e-12;    // below this a vector cannot be normalized
inline constexpr double kHermitianTolerance = 1e-12;     // elementwise |M - M^dagger| bound
inline constexpr double kReconstructionTolerance = 1e-10;
inline constexpr std::size_t kMaxDimension = 64;

bool is_finite(Complex z);

// arg z mapped to the principal branch (-pi, pi].
double principal_phase(Complex z);

// x reduced mod 2*pi into (-pi, pi].
double reduce_phase(double x);

// Dense square matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    Complex operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    ComplexMatrix adjoint() const;
    double max_hermiticity_defect() const;  // max_ij |M_ij - conj(M_ji)|
    double frobenius_norm() const;
    bool all_finite() const;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

// M v for a vector of matching size.
std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> v);

// Normalized state vector.  dim >= 2, finite amplitudes, and unit norm within
// kNormTolerance are enforced at construction, so a PureState in hand is
// always usable without further checks.
class PureState {
public:
    explicit PureState(std::vector<Complex> amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[i]; }

private:
    std::vector<Complex> amplitudes_;
};

struct EigenSystem {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // orthonormal columns, same order
};

// Hermitian matrix plus its spectral data, computed once at construction.
// Construction rejects non-Hermitian input (elementwise defect above 1e-12)
// and dimensions above 64, and verifies that V diag(lambda) V^dagger
// reproduces the matrix within kReconstructionTolerance.
class HermitianObservable {
public:
    explicit HermitianObservable(ComplexMatrix matrix);

    std::size_t dim() const { return matrix_.dim(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    const ComplexMatrix& eigenvectors() const { return eigenvectors_; }
    double spectral_bound() const { return spectral_bound_; }  // max |lambda|

private:
    ComplexMatrix matrix_;
    std::vector<double> eigenvalues_;
    ComplexMatrix eigenvectors_;
    double spectral_bound_ = 0.0;
};

// Scales v to unit norm.  Throws ZeroVectorError if ||v|| <= 1e-12.
PureState normalize(const std::vector<Complex>& v);

// <bra|ket>, conjugate-linear in bra.
Complex inner(const PureState& bra, const PureState& ket);

// Unnormalized variant of inner, same conjugation convention.
Complex inner_raw(std::span<const Complex> bra, std::span<const Complex> ket);

// A|psi> as a raw (generally unnormalized) vector.
std::vector<Complex> apply(const HermitianObservable& a, const PureState& psi);

// Cyclic Jacobi diagonalization of a Hermitian matrix.  Each rotation factors
// the phase out of the pivot entry and applies a real 2x2 rotation, which
// keeps the working matrix Hermitian throughout.  Off-diagonal mass below
// 1e-14 (relative to the Frobenius norm) stops the sweep loop; 100 sweeps is
// far more than dim 64 ever needs.
EigenSystem hermitian_eigendecomposition(const ComplexMatrix& m);

// e^{i theta A} |psi> via the cached eigenbasis: V diag(e^{i theta lambda}) V^dagger psi.
PureState evolve(const HermitianObservable& a, double theta, const PureState& psi);

double spectral_bound(const HermitianObservable& a);

// scale * (a . sigma) on dim 2: the 2x2 matrix [[az, ax - i ay], [ax + i ay, -az]]
// times scale.  The axis is used as given, not normalized first.
HermitianObservable pauli_observable(const std::array<double, 3>& axis, double scale = 1.0);

}  // namespace weaklens
