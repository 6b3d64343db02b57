#pragma once

#include "xygp/qmat.hpp"
#include "xygp/xy_model.hpp"

#include <optional>
#include <span>

namespace xygp {

enum class Path { C, Cbar };

const char* to_string(Path p);

/// One cyclic sweep of phi at fixed (lambda, gamma). Path C runs phi over
/// [0, pi] under H~; path Cbar runs phi over [pi, 2 pi] under -H~.
struct CycleSpec {
    Path path = Path::C;
    XYParams params;  // phi is ignored
    int segments = 64;
    double cycle_time = 40.0;

    /// Throws ValidationError unless segments >= 1 and cycle_time > 0.
    void validate() const;
    /// Step duration tau = T / (M + 1).
    double step_time() const { return cycle_time / (segments + 1); }
    /// phi_m for m = 0..M.
    double phi_at(int m) const;
};

struct PhaseReading {
    double beta_C = 0.0;     // (-pi, pi]
    double beta_Cbar = 0.0;  // (-pi, pi]
    double beta_g = 0.0;     // [0, 2 pi)
    double beta_g_analytic = 0.0;
    /// The mod-pi branch was chosen against gp_analytic rather than a sweep continuation.
    bool analytic_assisted = false;
};

/// Wraps into (-pi, pi].
double wrap_pm_pi(double a);
/// Wraps into [0, 2 pi).
double wrap_2pi(double a);
/// Circular distance between two angles, in [0, pi].
double angular_distance(double a, double b);

/// 0 inside the unit sphere, pi (1 - cos theta) outside. Result in [0, 2 pi).
double gp_analytic(const XYParams& p);

/// -arg of the closed overlap product around `loop`; the loop closes back onto
/// its first state. Independent of the phase of every element.
double pancharatnam_phase(std::span<const StateVector> loop);

/// Discrete Berry phase over the uniform grid phi_m = m pi / M, m = 0..M-1. Requires M >= 8.
double gp_discrete(const XYParams& p, int segments);

/// Accumulated evolution phase -int E dt of the tracked eigenstate: +max(r,1) T
/// on C, -max(r,1) T on Cbar. Not wrapped.
double dynamical_phase(const CycleSpec& spec);

/// Halving (beta_C + beta_Cbar) is ambiguous mod pi: returns whichever of the two
/// candidates in [0, 2 pi) lies closest to `reference`.
double resolve_half_sum(double beta_C, double beta_Cbar, double reference);

} // namespace xygp
