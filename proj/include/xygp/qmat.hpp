#pragma once

// Dense complex linear algebra for the handful of small operators this
// project needs (at most 8x8): Kronecker products, a Jacobi Hermitian
// eigensolver, exact propagators and trace fidelities.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace xygp {

using cplx = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;

/// Row-major dense complex matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    Matrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix diagonal(std::span<const cplx> diag);
    static Matrix diagonal(std::span<const double> diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const cplx> entries() const { return data_; }

    Matrix adjoint() const;
    cplx trace() const;
    /// Largest entry magnitude.
    double max_abs() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(cplx s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
    friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
    friend Matrix operator*(double s, Matrix a) { return a *= cplx(s); }
    friend Matrix operator*(Matrix a, double s) { return a *= cplx(s); }
    friend Matrix operator-(Matrix a) { return a *= cplx(-1.0); }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// max |a - b| entrywise; shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

bool is_hermitian(const Matrix& m, double tol = kHermitianTol);
bool is_unitary(const Matrix& m, double tol = kUnitaryTol);

/// Normalized complex vector. Construction normalizes; a zero vector is rejected.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::vector<cplx> amplitudes);
    StateVector(std::initializer_list<cplx> amplitudes);

    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t size() const { return amps_.size(); }
    const cplx& operator[](std::size_t i) const { return amps_[i]; }
    std::span<const cplx> amplitudes() const { return amps_; }
    double norm() const;

    /// Same ray with a global phase applied.
    StateVector with_phase(double angle) const;

private:
    std::vector<cplx> amps_;
};

/// <a|b>
cplx inner(const StateVector& a, const StateVector& b);
/// m |v>; m must be unitary for the result to stay a state.
StateVector apply(const Matrix& m, const StateVector& v);
StateVector kron(const StateVector& a, const StateVector& b);
/// <v| m |v>
cplx expectation(const Matrix& m, const StateVector& v);
/// |v><v|
Matrix outer(const StateVector& v);

/// Rotates the global phase so the first amplitude with magnitude above
/// `threshold` is real and positive.
StateVector canonical_phase(const StateVector& v, double threshold = 1e-10);

/// Ensemble state (1 - eps)/d * 1 + eps * rho_dev, stored with its polarization.
class DensityMatrix {
public:
    /// eps = 1: a plain density matrix equal to `deviation`.
    DensityMatrix(Matrix deviation, double polarization = 1.0);

    static DensityMatrix pure(const StateVector& psi) { return DensityMatrix(outer(psi), 1.0); }
    static DensityMatrix pseudopure(const StateVector& psi, double polarization) {
        return DensityMatrix(outer(psi), polarization);
    }

    double polarization() const { return eps_; }
    std::size_t dim() const { return deviation_.rows(); }
    /// Normalized deviation part (rho - (1 - eps) 1/d) / eps.
    const Matrix& deviation() const { return deviation_; }
    /// Full ensemble matrix.
    Matrix full() const;

private:
    Matrix deviation_;
    double eps_;
};

struct EigenSystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k pairs with values[k]
};

Matrix kron(const Matrix& a, const Matrix& b);

/// Cyclic complex Jacobi. Throws ValidationError if h is not Hermitian.
EigenSystem eig_hermitian(const Matrix& h);

/// exp(-i h t) through the eigendecomposition of h.
Matrix expm_i(const Matrix& h, double t);

/// |Tr(u^dagger v)| / dim; insensitive to a global phase.
double fidelity_unitary(const Matrix& u, const Matrix& v);

namespace pauli {
Matrix I();
Matrix X();
Matrix Y();
Matrix Z();
/// Single-qubit operator `op` on qubit `k` of an n-qubit register; qubit 0 is the most significant.
Matrix on(const Matrix& op, std::size_t k, std::size_t n_qubits);
}  // namespace pauli

} // namespace xygp
