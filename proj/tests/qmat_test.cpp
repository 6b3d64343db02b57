#include "xygp/errors.hpp"
#include "xygp/qmat.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace xygp {
namespace {

Matrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cplx(d(rng), d(rng));
    return (a + a.adjoint()) * 0.5;
}

// Taylor series with scaling and squaring; independent of the eigensolver.
Matrix expm_taylor(const Matrix& h, double t) {
    int squarings = 0;
    double scale = h.max_abs() * std::abs(t) * static_cast<double>(h.rows());
    while (scale > 0.5) {
        scale /= 2.0;
        ++squarings;
    }
    const Matrix a = h * cplx(0.0, -t / std::pow(2.0, squarings));
    Matrix term = Matrix::identity(h.rows());
    Matrix sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * a * (1.0 / k);
        sum = sum + term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

TEST(QmatTest, IdentityAndProduct) {
    const Matrix a{{1.0, 2.0}, {3.0, 4.0}};
    EXPECT_EQ(max_abs_diff(a * Matrix::identity(2), a), 0.0);
    const Matrix b{{0.0, 1.0}, {1.0, 0.0}};
    const Matrix ab{{2.0, 1.0}, {4.0, 3.0}};
    EXPECT_EQ(max_abs_diff(a * b, ab), 0.0);
}

TEST(QmatTest, DimensionMismatchThrows) {
    EXPECT_THROW(Matrix::identity(2) * Matrix::identity(3), ValidationError);
    EXPECT_THROW(Matrix::identity(2) + Matrix::identity(4), ValidationError);
}

TEST(QmatTest, PaulisAreHermitianAndUnitary) {
    for (const Matrix& p : {pauli::I(), pauli::X(), pauli::Y(), pauli::Z()}) {
        EXPECT_TRUE(is_hermitian(p));
        EXPECT_TRUE(is_unitary(p));
    }
    EXPECT_LT(max_abs_diff(pauli::X() * pauli::Y(), pauli::Z() * cplx(0.0, 1.0)), 1e-15);
}

TEST(QmatTest, KronOrdersFirstFactorMostSignificant) {
    const Matrix zi = kron(pauli::Z(), pauli::I());
    EXPECT_EQ(zi(0, 0), cplx(1.0));
    EXPECT_EQ(zi(1, 1), cplx(1.0));
    EXPECT_EQ(zi(2, 2), cplx(-1.0));
    EXPECT_LT(max_abs_diff(pauli::on(pauli::Z(), 0, 2), zi), 1e-15);
}

TEST(QmatTest, EigenTwoByTwoClosedForm) {
    const double a = 0.3, d = -1.1;
    const cplx b(0.4, -0.7);
    const Matrix h{{a, b}, {std::conj(b), d}};
    const auto es = eig_hermitian(h);
    const double mid = (a + d) / 2.0;
    const double rad = std::sqrt((a - d) * (a - d) / 4.0 + std::norm(b));
    EXPECT_NEAR(es.values[0], mid - rad, 1e-13);
    EXPECT_NEAR(es.values[1], mid + rad, 1e-13);
}

TEST(QmatTest, EigenReconstructsRandomHermitian) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix h = random_hermitian(trial % 2 ? 4 : 8, rng);
        const auto es = eig_hermitian(h);
        EXPECT_TRUE(is_unitary(es.vectors));
        for (std::size_t k = 1; k < es.values.size(); ++k) EXPECT_LE(es.values[k - 1], es.values[k]);
        const Matrix back = es.vectors * Matrix::diagonal(std::span<const double>(es.values)) * es.vectors.adjoint();
        EXPECT_LT(max_abs_diff(back, h), 1e-12);
    }
}

TEST(QmatTest, EigenRejectsNonHermitian) {
    EXPECT_THROW(eig_hermitian(Matrix{{0.0, 1.0}, {0.0, 0.0}}), ValidationError);
}

TEST(QmatTest, ExpmMatchesTaylorOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix h = random_hermitian(4, rng);
        const double t = 0.1 + 0.3 * trial;
        EXPECT_LT(max_abs_diff(expm_i(h, t), expm_taylor(h, t)), 1e-11);
    }
}

TEST(QmatTest, ExpmOfPauliX) {
    const double t = 0.37;
    const Matrix expected{{std::cos(t), cplx(0.0, -std::sin(t))}, {cplx(0.0, -std::sin(t)), std::cos(t)}};
    EXPECT_LT(max_abs_diff(expm_i(pauli::X(), t), expected), 1e-15);
}

TEST(QmatTest, FidelityIgnoresGlobalPhase) {
    const Matrix u = expm_i(pauli::Y(), 0.8);
    EXPECT_NEAR(fidelity_unitary(u, u * std::polar(1.0, 1.3)), 1.0, 1e-15);
    EXPECT_LT(fidelity_unitary(pauli::X(), pauli::Z()), 1e-15);
}

TEST(QmatTest, StateVectorNormalizes) {
    const StateVector v{3.0, cplx(0.0, 4.0)};
    EXPECT_NEAR(v.norm(), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(v[1]), 0.8, 1e-15);
    EXPECT_THROW(StateVector(std::vector<cplx>{0.0, 0.0}), ValidationError);
}

TEST(QmatTest, CanonicalPhaseMakesLeadingAmplitudePositive) {
    const StateVector v{cplx(0.0, 0.6), 0.8};
    const StateVector c = canonical_phase(v);
    EXPECT_NEAR(c[0].real(), 0.6, 1e-15);
    EXPECT_NEAR(c[0].imag(), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inner(v, c)), 1.0, 1e-15);
}

TEST(QmatTest, DensityMatrixValidation) {
    const StateVector psi = StateVector::basis(2, 0);
    EXPECT_NO_THROW(DensityMatrix::pure(psi));
    EXPECT_THROW(DensityMatrix(Matrix{{1.0, 1.0}, {0.0, 0.0}}), ValidationError);  // not Hermitian
    EXPECT_THROW(DensityMatrix(Matrix{{2.0, 0.0}, {0.0, 0.0}}), ValidationError);  // trace
    EXPECT_THROW(DensityMatrix(Matrix{{1.5, 0.0}, {0.0, -0.5}}), ValidationError); // not PSD
    EXPECT_THROW(DensityMatrix::pseudopure(psi, 0.0), ValidationError);
}

TEST(QmatTest, PseudopureFullMatrixHasUnitTrace) {
    const StateVector psi{1.0, 1.0};
    const auto rho = DensityMatrix::pseudopure(psi, 1e-5);
    EXPECT_NEAR(rho.full().trace().real(), 1.0, 1e-15);
    EXPECT_LT(max_abs_diff(rho.deviation(), outer(psi)), 1e-15);
}

}  // namespace
}  // namespace xygp
