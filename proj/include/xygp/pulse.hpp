#pragma once

// Idealized NMR pulse sequences over a small coupled spin register, and the
// propagator simulator used to verify every compiled sequence.
//
// Spin 0 is the ancilla "a" (1H), spins 1 and 2 are the XY pair (13C, 19F).
// Internal Hamiltonian during a delay:
//   H_NMR = -sum_i (w_i/2) Z_i + sum_{i<j} (pi J_ij / 2) Z_i Z_j
// with w_i = 2 pi offset_i. rf pulses and z rotations are instantaneous.

#include "xygp/qmat.hpp"

#include <string>
#include <variant>
#include <vector>

namespace xygp {

enum class Axis { X, MinusX, Y, MinusY };

const char* to_string(Axis a);
Axis axis_from_string(const std::string& s);

struct SpinSystem {
    std::vector<double> offsets_hz;
    std::vector<std::vector<double>> couplings_hz;  // symmetric, zero diagonal

    /// Diethyl-fluoromalonate register: J_a1 = 160.7, J_12 = -194.4, J_a2 = 47.6 Hz, zero offsets.
    static SpinSystem defaults();

    std::size_t size() const { return offsets_hz.size(); }
    double coupling(std::size_t i, std::size_t j) const { return couplings_hz.at(i).at(j); }
    void set_coupling(std::size_t i, std::size_t j, double hz);
    /// Throws ValidationError on shape or symmetry violations.
    void validate() const;
};

/// Label used in files: "a", "1", "2", then "3", ... for larger registers.
std::string spin_label(std::size_t spin);
std::size_t spin_from_label(const std::string& label);

struct RfPulse {
    std::size_t spin;
    Axis axis;
    double angle;  // rad
};

struct ZRotation {
    std::size_t spin;
    double angle;  // rad, exp(-i angle/2 Z)
};

struct Delay {
    double seconds;
};

using PulseElement = std::variant<RfPulse, ZRotation, Delay>;

class PulseSequence {
public:
    const std::vector<PulseElement>& elements() const { return elements_; }
    bool empty() const { return elements_.empty(); }
    /// Sum of delays; pulses and z rotations take no time.
    double total_duration() const;

    PulseSequence& rf(std::size_t spin, Axis axis, double angle);
    /// Rotation about +x / +y by a signed angle; negative angles use the -x / -y axis.
    PulseSequence& rx(std::size_t spin, double angle);
    PulseSequence& ry(std::size_t spin, double angle);
    PulseSequence& rz(std::size_t spin, double angle);
    PulseSequence& delay(double seconds);
    PulseSequence& append(const PulseSequence& later);
    PulseSequence& push(PulseElement e);

private:
    std::vector<PulseElement> elements_;
};

/// Propagator of `seq` on an n-spin register, first element applied first.
/// Throws ValidationError for a spin label >= n_spins.
Matrix simulate_sequence(const PulseSequence& seq, const SpinSystem& sys, std::size_t n_spins);

/// fidelity_unitary(simulate_sequence(seq, sys), target); the register size follows target.
double verify(const PulseSequence& seq, const Matrix& target, const SpinSystem& sys);

} // namespace xygp
