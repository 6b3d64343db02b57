#pragma once

// Three-qubit interferometer: ancilla a (qubit 0, most significant) in
// superposition controls a stepwise cyclic evolution of the XY pair (qubits 1, 2).
// The ancilla coherence 2<|0><1|_a> = <Psi_g| U_path |Psi_g> carries the
// accumulated phase beta_t = arg of that coherence.

#include "xygp/geom_phase.hpp"
#include "xygp/qmat.hpp"
#include "xygp/xy_model.hpp"

#include <optional>

namespace xygp {

/// R_kz(pi) = exp(-i pi/2 Z_k) on the two-qubit system, k in {1, 2}.
Matrix rz_pi(int k);

/// Step generator at phi: H~(lambda, gamma, phi) on C; on Cbar the sign-flipped
/// generator R_kz(pi)^dagger H~(-lambda, gamma, phi) R_kz(pi) = -H~(lambda, gamma, phi).
Matrix cycle_generator(const CycleSpec& spec, double phi, int flip_spin = 1);

/// U_path = prod_{m=0..M} exp(-i G(phi_m) tau), later steps to the left.
Matrix path_unitary(const CycleSpec& spec);

/// |0><0|_a (x) 1 + |1><1|_a (x) U_path, assembled as the product of the controlled steps
/// exp(-i (1 - Z_a)/2 (x) G(phi_m) tau).
Matrix controlled_cycle(const CycleSpec& spec);

struct InterferometryResult {
    CycleSpec spec;
    double beta_t = 0.0;  // (-pi, pi]
    cplx ancilla_coherence = 0.0;
    double system_return_fidelity = 0.0;
};

InterferometryResult run_interferometry(const CycleSpec& spec);

/// beta_g = (beta_C + beta_Cbar)/2 resolved mod pi against `reference` (a previous
/// beta_g of a sweep); falls back to gp_analytic when no reference is given.
PhaseReading combine_phases(const InterferometryResult& rc, const InterferometryResult& rcbar,
                            std::optional<double> reference = std::nullopt);

/// arg Tr[U rho_dev], the ancilla phase an ideal interferometer reads when the
/// system starts in `rho`. Only the deviation part of a pseudopure state produces signal.
double phase_from_density(const DensityMatrix& rho, const Matrix& u_path);

} // namespace xygp
