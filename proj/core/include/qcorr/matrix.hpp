#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qcorr/errors.hpp"

namespace qcorr {

using cplx = std::complex<double>;

// Dense square complex matrix of dimension 1, 2, 4 or 8, stored row-major in
// fixed inline storage so that copies never allocate.
class ComplexMatrix {
public:
    static constexpr std::size_t kMaxDim = 8;

    ComplexMatrix() : ComplexMatrix(2) {}
    explicit ComplexMatrix(std::size_t dim);

    // Rows must form a square matrix of supported dimension.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const cplx> diag);
    static ComplexMatrix diagonal(std::initializer_list<cplx> diag);
    // |ket><ket|
    static ComplexMatrix outer(std::span<const cplx> ket);

    std::size_t dim() const noexcept { return dim_; }

    cplx& operator()(std::size_t row, std::size_t col) noexcept {
        return data_[row * dim_ + col];
    }
    const cplx& operator()(std::size_t row, std::size_t col) const noexcept {
        return data_[row * dim_ + col];
    }

    std::span<const cplx> entries() const noexcept { return {data_.data(), dim_ * dim_}; }

    ComplexMatrix adjoint() const;
    cplx trace() const noexcept;
    // max_ij |a_ij - b_ij|; dimensions must agree.
    double max_abs_diff(const ComplexMatrix& other) const;
    // max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx scale) noexcept;

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, cplx scale) { return lhs *= scale; }
    friend ComplexMatrix operator*(cplx scale, ComplexMatrix rhs) { return rhs *= scale; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

private:
    std::size_t dim_;
    std::array<cplx, kMaxDim * kMaxDim> data_{};
};

// Pauli operators and the qubit basis projectors.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Tolerances of the density-matrix invariants.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPositivityTol = -1e-10;

// A ComplexMatrix known to be Hermitian, unit-trace and positive
// semidefinite. Only constructible through validation.
class DensityMatrix {
public:
    // Throws InvalidStateError when any invariant is violated.
    explicit DensityMatrix(ComplexMatrix m);

    // Pure state |ket><ket|; the ket must be normalized to 1e-12.
    static DensityMatrix pure(std::span<const cplx> ket);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.dim(); }
    const cplx& operator()(std::size_t row, std::size_t col) const noexcept { return m_(row, col); }

private:
    ComplexMatrix m_;
};

// Tensor product. Throws DimensionError when the product exceeds 8.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Traces out the subsystems listed in traced_indices. subsystem_dims must
// multiply to dim(m); at least one subsystem must remain.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> traced_indices);
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::initializer_list<std::size_t> subsystem_dims,
                            std::initializer_list<std::size_t> traced_indices);

// Transpose on one qubit of a two-qubit operator (subsystem 0 or 1).
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t subsystem);

// Ascending eigenvalues of a Hermitian matrix by cyclic complex Jacobi
// rotations. Throws NotHermitianError when |M - M^dagger|_max > 1e-10.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);

// Entropy in bits, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

// Entropy in bits of a probability vector; nonpositive entries contribute 0.
double shannon_entropy_bits(std::span<const double> probabilities);

}  // namespace qcorr
