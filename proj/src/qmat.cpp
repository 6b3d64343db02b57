#include "xygp/qmat.hpp"

#include "xygp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace xygp {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw ValidationError("matrix entry count " + std::to_string(data_.size()) + " does not match " +
                              std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ValidationError("ragged matrix initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const cplx> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

cplx Matrix::trace() const {
    if (!square()) throw ValidationError("trace of a non-square matrix");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("shape mismatch in matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("shape mismatch in matrix difference");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ValidationError("shape mismatch in matrix product");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

bool is_hermitian(const Matrix& m, double tol) {
    return m.square() && max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
    return m.square() && max_abs_diff(m.adjoint() * m, Matrix::identity(m.rows())) <= tol;
}

// ---------------------------------------------------------------------------

StateVector::StateVector(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
    double n = 0.0;
    for (const auto& a : amps_) n += std::norm(a);
    n = std::sqrt(n);
    if (n == 0.0 || !std::isfinite(n)) throw ValidationError("cannot normalize a zero or non-finite state");
    for (auto& a : amps_) a /= n;
}

StateVector::StateVector(std::initializer_list<cplx> amplitudes)
    : StateVector(std::vector<cplx>(amplitudes)) {}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw ValidationError("basis index out of range");
    std::vector<cplx> a(dim);
    a[index] = 1.0;
    return StateVector(std::move(a));
}

double StateVector::norm() const {
    double n = 0.0;
    for (const auto& a : amps_) n += std::norm(a);
    return std::sqrt(n);
}

StateVector StateVector::with_phase(double angle) const {
    std::vector<cplx> a = amps_;
    const cplx f = std::polar(1.0, angle);
    for (auto& z : a) z *= f;
    return StateVector(std::move(a));
}

cplx inner(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size()) throw ValidationError("dimension mismatch in inner product");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

StateVector apply(const Matrix& m, const StateVector& v) {
    if (m.cols() != v.size()) throw ValidationError("dimension mismatch applying operator");
    std::vector<cplx> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return StateVector(std::move(out));
}

StateVector kron(const StateVector& a, const StateVector& b) {
    std::vector<cplx> out;
    out.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out.push_back(a[i] * b[j]);
    return StateVector(std::move(out));
}

cplx expectation(const Matrix& m, const StateVector& v) {
    if (m.rows() != v.size() || m.cols() != v.size()) throw ValidationError("dimension mismatch in expectation");
    cplx s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s += std::conj(v[i]) * m(i, j) * v[j];
    return s;
}

Matrix outer(const StateVector& v) {
    Matrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

StateVector canonical_phase(const StateVector& v, double threshold) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > threshold) return v.with_phase(-std::arg(v[i]));
    }
    return v;
}

// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(Matrix deviation, double polarization)
    : deviation_(std::move(deviation)), eps_(polarization) {
    if (!is_hermitian(deviation_)) throw ValidationError("density matrix must be Hermitian");
    if (std::abs(deviation_.trace() - cplx(1.0)) > 1e-12) throw ValidationError("density matrix must have unit trace");
    if (!(eps_ > 0.0 && eps_ <= 1.0)) throw ValidationError("polarization must lie in (0, 1]");
    const auto eig = eig_hermitian(deviation_);
    if (eig.values.front() < -1e-12) throw ValidationError("density matrix must be positive semidefinite");
}

Matrix DensityMatrix::full() const {
    const double d = static_cast<double>(dim());
    return (1.0 - eps_) / d * Matrix::identity(dim()) + eps_ * deviation_;
}

// ---------------------------------------------------------------------------

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenSystem eig_hermitian(const Matrix& h) {
    if (!is_hermitian(h)) throw ValidationError("eig_hermitian: matrix is not Hermitian");
    const std::size_t n = h.rows();
    Matrix a = h;
    Matrix v = Matrix::identity(n);
    const double scale = std::max(1.0, h.max_abs());
    constexpr double kThreshold = 1e-14;
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > kThreshold * scale; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double b = std::abs(apq);
                if (b < 1e-300) continue;
                // Phase the (p,q) element real, then apply a real Jacobi rotation.
                const cplx phase = apq / b;  // e^{i alpha}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * b);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // G = [[c, s], [-s e^{-i alpha}, c e^{-i alpha}]] on columns p, q.
                const cplx gqp = -s * std::conj(phase);
                const cplx gqq = c * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {  // A <- A G
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * c + akq * gqp;
                    a(k, q) = akp * s + akq * gqq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // A <- G^dagger A
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(gqp) * aqk;
                    a(q, k) = s * apk + std::conj(gqq) * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {  // V <- V G
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * gqp;
                    v(k, q) = vkp * s + vkq * gqq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem out{std::vector<double>(n), Matrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.values[k] = a(src, src).real();
        // Deterministic gauge: first significant component real positive.
        cplx phase = 1.0;
        for (std::size_t r = 0; r < n; ++r) {
            if (std::abs(v(r, src)) > 1e-10) {
                phase = std::conj(v(r, src)) / std::abs(v(r, src));
                break;
            }
        }
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, src) * phase;
    }
    return out;
}

Matrix expm_i(const Matrix& h, double t) {
    const auto eig = eig_hermitian(h);
    const std::size_t n = h.rows();
    Matrix out(n, n);
    std::vector<cplx> phases(n);
    for (std::size_t k = 0; k < n; ++k) phases[k] = std::polar(1.0, -eig.values[k] * t);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += eig.vectors(i, k) * phases[k] * std::conj(eig.vectors(j, k));
            out(i, j) = s;
        }
    return out;
}

double fidelity_unitary(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || !u.square()) {
        throw ValidationError("fidelity_unitary: dimension mismatch");
    }
    cplx s = 0.0;
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j) s += std::conj(u(i, j)) * v(i, j);
    return std::min(1.0, std::abs(s) / static_cast<double>(u.rows()));
}

namespace pauli {

Matrix I() { return Matrix::identity(2); }
Matrix X() { return Matrix{{0.0, 1.0}, {1.0, 0.0}}; }
Matrix Y() { return Matrix{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}}; }
Matrix Z() { return Matrix{{1.0, 0.0}, {0.0, -1.0}}; }

Matrix on(const Matrix& op, std::size_t k, std::size_t n_qubits) {
    if (k >= n_qubits) throw ValidationError("qubit index out of range");
    Matrix out = Matrix::identity(1);
    for (std::size_t q = 0; q < n_qubits; ++q) out = kron(out, q == k ? op : I());
    return out;
}

}  // namespace pauli

} // namespace xygp
