#pragma once

// Adiabatic state preparation along H_ad(s) = (1 - s) h0 + s h1.
//
// The sweep speed is tied to the local adiabatic speed limit chi(s) by a
// constant adiabaticity kappa = (ds/dt) / chi(s). chi is evaluated with
// energies in frequency units (E / 2 pi), the convention in which the NMR
// literature quotes kappa, and as the tightest limit over every excited
// level the sweep actually couples to.

#include "xygp/qmat.hpp"
#include "xygp/xy_model.hpp"

#include <vector>

namespace xygp {

inline constexpr double kChiCap = 1e6;
inline constexpr double kGapFloor = 1e-6;

/// sigma_x on both qubits; its ground state is |-->.
Matrix asp_initial_hamiltonian();
/// (|0> - |1>)/sqrt2 on both qubits.
StateVector asp_initial_state();

/// Adiabatic speed limit at s. Throws GapClosureError when the ground-state gap
/// is at or below kGapFloor; returns kChiCap when no excited level couples.
double chi(double s, const Matrix& h0, const Matrix& h1);

struct ScheduleSample {
    double t;
    double s;
};

struct AdiabaticSchedule {
    double kappa = 0.0;
    double total_time = 0.0;  // T_P
    std::vector<ScheduleSample> samples;  // uniform in s, t from 0 to T_P

    /// s(t) by piecewise-linear interpolation, clamped to [0, T_P].
    double s_at(double t) const;
};

/// Integrates dt/ds = 1 / (kappa chi(s)) on a uniform s-grid (RK4 with chi
/// interpolated linearly between nodes). kappa in (0, 1), grid_points >= 64.
AdiabaticSchedule solve_schedule(double kappa, const Matrix& h0, const Matrix& h1, int grid_points = 2048);

struct TrotterPlan {
    int steps = 0;              // M_P
    double delta = 0.0;         // T_P / (M_P + 1)
    std::vector<double> s_values;  // M_P + 1 entries

    /// s_m = s(m T_P / M_P). M_P = 0 is the sudden limit: one step at s = 1.
    static TrotterPlan sample(const AdiabaticSchedule& schedule, int steps);
    /// Picks M_P = max(min_steps, ceil(T_P / max_delta) - 1) so that delta <= max_delta.
    static TrotterPlan automatic(const AdiabaticSchedule& schedule, double max_delta = 1.0, int min_steps = 32);
};

/// Strang step exp(-i(1-s)h0 delta/2) exp(-i s h1 delta) exp(-i(1-s)h0 delta/2).
Matrix trotter_step(double s, double delta, const Matrix& h0, const Matrix& h1);

struct AspResult {
    StateVector final_state;
    std::vector<double> fidelity_trace;  // |<g(s_m)|psi_m>| after each step
    double final_fidelity = 0.0;         // against ground_state(p)
};

/// Runs the Trotterized sweep from |--> towards the ground state of H(p).
AspResult run_asp(const XYParams& p, const AdiabaticSchedule& schedule, const TrotterPlan& plan);

/// Schedule at kappa plus the automatic Trotter plan, then run_asp.
AspResult prepare_ground_state(const XYParams& p, double kappa = 0.25);

} // namespace xygp
