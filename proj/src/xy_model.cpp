#include "xygp/xy_model.hpp"

#include "xygp/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace xygp {

double XYParams::r() const { return std::hypot(lambda, gamma); }

double XYParams::theta() const { return std::atan2(gamma, lambda); }

bool XYParams::off_degeneracy() const { return std::abs(r() - 1.0) > kDegeneracyGuard; }

void XYParams::require_off_degeneracy() const {
    if (!off_degeneracy()) {
        std::ostringstream os;
        os << "ground state is doubly degenerate at r = 1 (lambda=" << lambda << ", gamma=" << gamma << ")";
        throw DegeneracyError(os.str());
    }
}

Matrix build_h(const XYParams& p) {
    using namespace pauli;
    const Matrix xx = kron(X(), X());
    const Matrix yy = kron(Y(), Y());
    const Matrix zsum = kron(Z(), I()) + kron(I(), Z());
    Matrix h = -((1.0 + p.gamma) / 2.0 * xx + (1.0 - p.gamma) / 2.0 * yy) - p.lambda / 2.0 * zsum;
    // XX and YY are real in this basis; drop the rounding residue in the imaginary parts.
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) h(i, j) = cplx(h(i, j).real(), 0.0);
    return h;
}

Matrix build_h_tilde(const XYParams& p) {
    const cplx corner = p.gamma * std::polar(1.0, 2.0 * p.phi);
    return Matrix{
        {-p.lambda, 0.0, 0.0, -corner},
        {0.0, 0.0, -1.0, 0.0},
        {0.0, -1.0, 0.0, 0.0},
        {-std::conj(corner), 0.0, 0.0, p.lambda},
    };
}

Matrix uz(double phi) {
    const cplx a = std::polar(1.0, -phi / 2.0);
    const cplx b = std::polar(1.0, phi / 2.0);
    const cplx d[4] = {a * a, a * b, b * a, b * b};
    return Matrix::diagonal(std::span<const cplx>(d, 4));
}

GroundState ground_state(const XYParams& p) {
    p.require_off_degeneracy();
    const double r = p.r();
    if (r < 1.0) {
        const double s = 1.0 / std::numbers::sqrt2;
        return {-1.0, StateVector{0.0, s, s, 0.0}};
    }
    const double half = p.theta() / 2.0;
    StateVector psi{std::cos(half), 0.0, 0.0, std::sin(half) * std::polar(1.0, -2.0 * p.phi)};
    return {-r, canonical_phase(psi)};
}

namespace {

// exp(-i a P) for an involutory P (P^2 = 1).
Matrix exp_pauli(const Matrix& pauli_product, double a) {
    return std::cos(a) * Matrix::identity(pauli_product.rows()) + cplx(0.0, -std::sin(a)) * pauli_product;
}

}  // namespace

DiagonalFactorization vd_hd_factorization(const XYParams& p) {
    using namespace pauli;
    const double theta = p.theta();
    const double r = p.r();
    const double q = std::numbers::pi / 2.0;
    // v_d = exp(+i (theta - pi/2)/4 X1Y2) exp(+i (theta + pi/2)/4 Y1X2)
    const Matrix v_d = exp_pauli(kron(X(), Y()), -(theta - q) / 4.0) * exp_pauli(kron(Y(), X()), -(theta + q) / 4.0);
    const double diag[4] = {-r, -1.0, 1.0, r};
    return {v_d, Matrix::diagonal(std::span<const double>(diag, 4))};
}

} // namespace xygp
