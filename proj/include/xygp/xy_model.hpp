#pragma once

// Two-site XY model in a transverse field:
//   H(lambda, gamma) = -[(1+gamma)/2 XX + (1-gamma)/2 YY] - lambda/2 (Z1 + Z2)
// and its z-rotated family H~(lambda, gamma, phi) = Uz(phi)^dagger H Uz(phi).
// Basis order is |00>, |01>, |10>, |11> with qubit 1 most significant.

#include "xygp/qmat.hpp"

namespace xygp {

inline constexpr double kDegeneracyGuard = 1e-9;

struct XYParams {
    double lambda = 0.0;
    double gamma = 0.0;
    double phi = 0.0;

    double r() const;
    /// atan2(gamma, lambda), so lambda < 0 is handled without branching.
    double theta() const;
    /// True when the ground state is nondegenerate (|r - 1| beyond the guard).
    bool off_degeneracy() const;
    /// Throws DegeneracyError at the r = 1 crossing.
    void require_off_degeneracy() const;
};

Matrix build_h(const XYParams& p);
Matrix build_h_tilde(const XYParams& p);

/// Uz(phi) = exp(-i phi/2 Z1) exp(-i phi/2 Z2).
Matrix uz(double phi);

struct GroundState {
    double energy;
    StateVector state;
};

/// Closed-form ground state of H~(p). Throws DegeneracyError at r = 1.
GroundState ground_state(const XYParams& p);

/// h_d = v_d H v_d^dagger = diag(-r, -1, 1, r).
struct DiagonalFactorization {
    Matrix v_d;
    Matrix h_d;
};

/// Exact diagonalizing frame built from two two-body exponentials; valid for every
/// (lambda, gamma) including r = 1.
DiagonalFactorization vd_hd_factorization(const XYParams& p);

} // namespace xygp
