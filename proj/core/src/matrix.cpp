#include "qcorr/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qcorr {

namespace {

bool supported_dim(std::size_t dim) {
    return dim == 1 || dim == 2 || dim == 4 || dim == 8;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    }
}

constexpr double kEigenHermitianTol = 1e-10;
constexpr double kJacobiOffTol = 1e-14;
constexpr int kMaxJacobiSweeps = 64;

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
    if (!supported_dim(dim)) {
        throw DimensionError("unsupported matrix dimension " + std::to_string(dim));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : ComplexMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != dim_) throw DimensionError("matrix rows must form a square matrix");
        std::size_t c = 0;
        for (const auto& value : row) (*this)(r, c++) = value;
        ++r;
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<cplx> diag) {
    return diagonal(std::span<const cplx>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> ket) {
    ComplexMatrix m(ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i)
        for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
    return out;
}

cplx ComplexMatrix::trace() const noexcept {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
    return sum;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    require_same_dim(*this, other);
    double worst = 0.0;
    for (std::size_t k = 0; k < dim_ * dim_; ++k) worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    return worst;
}

double ComplexMatrix::hermiticity_defect() const noexcept {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t k = 0; k < dim_ * dim_; ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t k = 0; k < dim_ * dim_; ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) noexcept {
    for (std::size_t k = 0; k < dim_ * dim_; ++k) data_[k] *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    require_same_dim(lhs, rhs);
    const std::size_t n = lhs.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx a = lhs(i, k);
            if (a == cplx{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(m) {
    const double herm = m_.hermiticity_defect();
    if (herm > kHermitianTol) {
        throw InvalidStateError("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
    }
    const cplx tr = m_.trace();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw InvalidStateError("density matrix trace differs from 1 by " + std::to_string(std::abs(tr - 1.0)));
    }
    const auto eig = hermitian_eigenvalues(m_);
    if (eig.front() < kPositivityTol) {
        throw InvalidStateError("density matrix has negative eigenvalue " + std::to_string(eig.front()));
    }
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> ket) {
    double norm2 = 0.0;
    for (const auto& a : ket) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > kTraceTol) throw InvalidStateError("state vector is not normalized");
    return DensityMatrix(ComplexMatrix::outer(ket));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    if (na * nb > ComplexMatrix::kMaxDim) {
        throw DimensionError("kron product dimension " + std::to_string(na * nb) + " exceeds 8");
    }
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> traced_indices) {
    const std::size_t n_sub = subsystem_dims.size();
    std::size_t total = 1;
    for (auto d : subsystem_dims) {
        if (d == 0) throw DimensionError("subsystem dimension must be positive");
        total *= d;
    }
    if (n_sub == 0 || total != m.dim()) {
        throw DimensionError("subsystem dimensions do not multiply to the matrix dimension");
    }
    if (traced_indices.empty()) throw DimensionError("no subsystem selected for tracing");

    std::array<bool, ComplexMatrix::kMaxDim> traced{};
    for (auto idx : traced_indices) {
        if (idx >= n_sub) throw DimensionError("traced subsystem index out of range");
        if (traced[idx]) throw DimensionError("traced subsystem listed twice");
        traced[idx] = true;
    }

    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
    for (std::size_t s = 0; s < n_sub; ++s) (traced[s] ? traced_dim : kept_dim) *= subsystem_dims[s];
    if (kept_dim == 1 && traced_dim == m.dim() && n_sub == traced_indices.size()) {
        throw DimensionError("cannot trace out every subsystem");
    }

    // Splits a full index into (kept, traced) multi-indices, both row-major.
    auto split = [&](std::size_t full) {
        std::size_t kept = 0, tr = 0, kept_stride = 1, tr_stride = 1;
        for (std::size_t s = n_sub; s-- > 0;) {
            const std::size_t digit = full % subsystem_dims[s];
            full /= subsystem_dims[s];
            if (traced[s]) {
                tr += digit * tr_stride;
                tr_stride *= subsystem_dims[s];
            } else {
                kept += digit * kept_stride;
                kept_stride *= subsystem_dims[s];
            }
        }
        return std::pair{kept, tr};
    };

    ComplexMatrix out(kept_dim);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        const auto [ki, ti] = split(i);
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const auto [kj, tj] = split(j);
            if (ti == tj) out(ki, kj) += m(i, j);
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::initializer_list<std::size_t> subsystem_dims,
                            std::initializer_list<std::size_t> traced_indices) {
    return partial_trace(m, std::span<const std::size_t>(subsystem_dims.begin(), subsystem_dims.size()),
                         std::span<const std::size_t>(traced_indices.begin(), traced_indices.size()));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t subsystem) {
    if (m.dim() != 4) throw DimensionError("partial transpose requires a two-qubit (4x4) operator");
    if (subsystem > 1) throw DimensionError("partial transpose subsystem must be 0 or 1");
    ComplexMatrix out(4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d) {
                    // element <a b| m |c d>
                    const cplx v = m(2 * a + b, 2 * c + d);
                    if (subsystem == 0) out(2 * c + b, 2 * a + d) = v;
                    else out(2 * a + d, 2 * c + b) = v;
                }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (m.hermiticity_defect() > kEigenHermitianTol) {
        throw NotHermitianError("eigenvalue solver requires a Hermitian matrix");
    }
    const std::size_t n = m.dim();
    ComplexMatrix a = m;
    // Symmetrize so that rounding in the input cannot seed asymmetric drift.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }

    double scale = 0.0;
    for (auto v : a.entries()) scale += std::norm(v);
    const double off_tol = kJacobiOffTol * std::max(1.0, std::sqrt(scale));

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off_norm() > off_tol) {
        if (++sweep > kMaxJacobiSweeps) throw ConvergenceError("Jacobi eigensolver did not converge");
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r == 0.0) continue;
                // Phase e^{i phi} of a_pq is absorbed into column q, leaving a
                // real symmetric 2x2 problem handled by a standard rotation.
                const cplx phase = a(p, q) / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx pc = std::conj(phase);

                // A <- A V with V = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q).
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - s * pc * akq;
                    a(k, q) = s * akp + c * pc * akq;
                }
                // A <- V^dagger A
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

double trace_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (double lambda : hermitian_eigenvalues(m)) sum += std::abs(lambda);
    return sum;
}

double shannon_entropy_bits(std::span<const double> probabilities) {
    double h = 0.0;
    for (double p : probabilities)
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const auto eig = hermitian_eigenvalues(rho.matrix());
    return shannon_entropy_bits(eig);
}

}  // namespace qcorr
