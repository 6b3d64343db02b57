#pragma once

// Gate-to-pulse compilation for the interferometry experiment. Every gate is
// built from instantaneous rf pulses, free z rotations, and J-coupling delays
// in which spin echoes leave exactly one Z_i Z_j term active. Delays follow
// from the unitary decompositions; simulate_sequence against an independently
// built target is the only acceptance test.

#include "xygp/geom_phase.hpp"
#include "xygp/pulse.hpp"
#include "xygp/qmat.hpp"

#include <variant>

namespace xygp {

inline constexpr std::size_t kAncilla = 0;
inline constexpr std::size_t kSpin1 = 1;
inline constexpr std::size_t kSpin2 = 2;
inline constexpr std::size_t kRegisterSpins = 3;

/// exp(-i (angle/2) Z_i Z_j): one delay of |angle| / (pi |J_ij|), Walsh-pattern
/// pi pulses on every spectator, and a pi sandwich on spin i when sign(angle)
/// differs from sign(J_ij). Throws ValidationError when J_ij = 0.
PulseSequence compile_zz(std::size_t i, std::size_t j, double angle, const SpinSystem& sys);

struct UzGate {
    double phi;
};
struct VdGate {
    double theta;
};
struct SwapGate {
    std::size_t i;
    std::size_t j;
};
struct AspStepGate {
    double s;
    double delta;
    double lambda;
    double gamma;
};
struct ControlledStepGate {
    double phi;
    double tau;
    double lambda;
    double gamma;
    Path path;
};

using GateSpec = std::variant<UzGate, VdGate, SwapGate, AspStepGate, ControlledStepGate>;

const char* gate_name(const GateSpec& gate);

/// Ideal propagator of `gate` on the three-spin register (a, 1, 2), built
/// directly from the model matrices without going through any pulse sequence.
Matrix gate_target(const GateSpec& gate);

PulseSequence compile_gate(const GateSpec& gate, const SpinSystem& sys);

/// Full experiment from |000>: [pi/2]_-y on the pair, the ASP steps of
/// `asp_s` at step `asp_delta`, a pseudo-Hadamard on the ancilla, the controlled
/// cycle, then (optionally) SWAP(a, 1) so the ancilla phase is read on spin 1.
PulseSequence compile_experiment(double lambda, double gamma, const std::vector<double>& asp_s, double asp_delta,
                                 const CycleSpec& cycle, const SpinSystem& sys, bool readout_swap = true);

} // namespace xygp
