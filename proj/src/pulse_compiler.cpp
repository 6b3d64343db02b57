#include "xygp/pulse_compiler.hpp"

#include "xygp/adiabatic.hpp"
#include "xygp/errors.hpp"
#include "xygp/xy_model.hpp"

#include <cmath>
#include <numbers>

namespace xygp {

using std::numbers::pi;

namespace {

// Toggles every spin in `spins` by pi about x, alternating x / -x per spin so
// that each pair of flips multiplies to exactly the identity.
class Flipper {
public:
    explicit Flipper(std::size_t n) : count_(n, 0) {}
    void flip(PulseSequence& seq, std::size_t spin) {
        seq.rf(spin, count_[spin] % 2 == 0 ? Axis::X : Axis::MinusX, pi);
        ++count_[spin];
    }

private:
    std::vector<int> count_;
};

// Delay of `seconds` during which only Z_i Z_j (and Zeeman terms of i, j) survive.
void echoed_delay(PulseSequence& seq, std::size_t i, std::size_t j, double seconds, const SpinSystem& sys,
                  Flipper& flipper) {
    std::vector<std::size_t> spectators;
    for (std::size_t k = 0; k < sys.size(); ++k)
        if (k != i && k != j) spectators.push_back(k);
    const std::size_t segments = std::size_t{1} << spectators.size();
    const double piece = seconds / static_cast<double>(segments);
    std::size_t state = 0;
    for (std::size_t g = 0; g < segments; ++g) {
        const std::size_t changed = state ^ g;
        for (std::size_t b = 0; b < spectators.size(); ++b)
            if (changed & (std::size_t{1} << b)) flipper.flip(seq, spectators[b]);
        state = g;
        seq.delay(piece);
    }
    for (std::size_t b = 0; b < spectators.size(); ++b)
        if (state & (std::size_t{1} << b)) flipper.flip(seq, spectators[b]);
}

bool has_offsets(const SpinSystem& sys) {
    for (double w : sys.offsets_hz)
        if (w != 0.0) return true;
    return false;
}

// exp(-i (angle/2) ZZ) with the angle first reduced into [-pi/2, pi/2]; the
// removed multiple of pi is a product of free z rotations.
void append_zz(PulseSequence& seq, std::size_t i, std::size_t j, double angle, const SpinSystem& sys) {
    const double turns = std::round(angle / pi);
    const double rest = angle - turns * pi;
    if (static_cast<long long>(turns) % 2 != 0) {
        seq.rz(i, pi).rz(j, pi);
    }
    if (std::abs(rest) > 1e-15) seq.append(compile_zz(i, j, rest, sys));
}

enum class PauliAxis { X, Y, Z };

// Basis change R with R Z R^dagger = P. `to_z` emits R^dagger, `from_z` emits R.
void to_z(PulseSequence& seq, std::size_t spin, PauliAxis p) {
    if (p == PauliAxis::X) seq.ry(spin, -pi / 2.0);
    if (p == PauliAxis::Y) seq.rx(spin, pi / 2.0);
}
void from_z(PulseSequence& seq, std::size_t spin, PauliAxis p) {
    if (p == PauliAxis::X) seq.ry(spin, pi / 2.0);
    if (p == PauliAxis::Y) seq.rx(spin, -pi / 2.0);
}

// exp(-i b P_i Q_j)
void append_pauli_pair(PulseSequence& seq, std::size_t i, PauliAxis pi_axis, std::size_t j, PauliAxis qj_axis, double b,
                       const SpinSystem& sys) {
    to_z(seq, i, pi_axis);
    to_z(seq, j, qj_axis);
    append_zz(seq, i, j, 2.0 * b, sys);
    from_z(seq, i, pi_axis);
    from_z(seq, j, qj_axis);
}

// v_d = exp(+i (theta - pi/2)/4 X1Y2) exp(+i (theta + pi/2)/4 Y1X2)
void append_vd(PulseSequence& seq, double theta, const SpinSystem& sys) {
    append_pauli_pair(seq, kSpin1, PauliAxis::Y, kSpin2, PauliAxis::X, -(theta + pi / 2.0) / 4.0, sys);
    append_pauli_pair(seq, kSpin1, PauliAxis::X, kSpin2, PauliAxis::Y, -(theta - pi / 2.0) / 4.0, sys);
}

void append_vd_dagger(PulseSequence& seq, double theta, const SpinSystem& sys) {
    append_pauli_pair(seq, kSpin1, PauliAxis::X, kSpin2, PauliAxis::Y, (theta - pi / 2.0) / 4.0, sys);
    append_pauli_pair(seq, kSpin1, PauliAxis::Y, kSpin2, PauliAxis::X, (theta + pi / 2.0) / 4.0, sys);
}

Matrix on_system(const Matrix& two_qubit) { return kron(pauli::I(), two_qubit); }

// Controlled C step at (lambda, gamma, phi): Uz(-phi) v_d^dagger D_c v_d Uz(phi) with
// D_c = exp(-i tau (1 - Z_a)/2 (x) h_d).
void append_controlled_c(PulseSequence& seq, double phi, double tau, double lambda, double gamma,
                         const SpinSystem& sys) {
    const XYParams p{lambda, gamma, 0.0};
    const double r = p.r();
    const double theta = p.theta();
    const double upper = (r + 1.0) / 2.0;
    const double lower = (r - 1.0) / 2.0;
    seq.rz(kSpin1, phi).rz(kSpin2, phi);
    append_vd(seq, theta, sys);
    // (1 - Z_a)/2 (x) (-upper Z1 - lower Z2) splits into local Z terms and two ZaZk terms.
    seq.rz(kSpin1, -tau * upper).rz(kSpin2, -tau * lower);
    append_zz(seq, kAncilla, kSpin1, tau * upper, sys);
    append_zz(seq, kAncilla, kSpin2, tau * lower, sys);
    append_vd_dagger(seq, theta, sys);
    seq.rz(kSpin1, -phi).rz(kSpin2, -phi);
}

}  // namespace

PulseSequence compile_zz(std::size_t i, std::size_t j, double angle, const SpinSystem& sys) {
    sys.validate();
    if (i == j || i >= sys.size() || j >= sys.size()) throw ValidationError("compile_zz: invalid spin pair");
    const double coupling = sys.coupling(i, j);
    if (coupling == 0.0) {
        throw ValidationError("compile_zz: spins " + spin_label(i) + " and " + spin_label(j) + " are not coupled");
    }
    const double seconds = std::abs(angle) / (pi * std::abs(coupling));
    const bool invert = angle != 0.0 && ((angle > 0.0) != (coupling > 0.0));

    PulseSequence seq;
    Flipper flipper(sys.size());
    if (invert) flipper.flip(seq, i);
    if (has_offsets(sys)) {
        // A pi pulse on every spin halfway through reverses all Zeeman terms and keeps every ZZ.
        echoed_delay(seq, i, j, seconds / 2.0, sys, flipper);
        for (std::size_t k = 0; k < sys.size(); ++k) flipper.flip(seq, k);
        echoed_delay(seq, i, j, seconds / 2.0, sys, flipper);
        for (std::size_t k = 0; k < sys.size(); ++k) flipper.flip(seq, k);
    } else {
        echoed_delay(seq, i, j, seconds, sys, flipper);
    }
    if (invert) flipper.flip(seq, i);
    return seq;
}

const char* gate_name(const GateSpec& gate) {
    struct Visitor {
        const char* operator()(const UzGate&) const { return "uz"; }
        const char* operator()(const VdGate&) const { return "vd"; }
        const char* operator()(const SwapGate&) const { return "swap"; }
        const char* operator()(const AspStepGate&) const { return "asp-step"; }
        const char* operator()(const ControlledStepGate&) const { return "controlled-step"; }
    };
    return std::visit(Visitor{}, gate);
}

Matrix gate_target(const GateSpec& gate) {
    struct Visitor {
        Matrix operator()(const UzGate& g) const { return on_system(uz(g.phi)); }
        Matrix operator()(const VdGate& g) const {
            using namespace pauli;
            return on_system(expm_i(kron(X(), Y()), -(g.theta - pi / 2.0) / 4.0) *
                             expm_i(kron(Y(), X()), -(g.theta + pi / 2.0) / 4.0));
        }
        Matrix operator()(const SwapGate& g) const {
            if (g.i == g.j || g.i >= kRegisterSpins || g.j >= kRegisterSpins) {
                throw ValidationError("swap: invalid spin pair");
            }
            Matrix out(8, 8);
            for (std::size_t b = 0; b < 8; ++b) {
                const std::size_t si = 2 - g.i, sj = 2 - g.j;  // bit positions
                const std::size_t bi = (b >> si) & 1u, bj = (b >> sj) & 1u;
                std::size_t swapped = b & ~((std::size_t{1} << si) | (std::size_t{1} << sj));
                swapped |= (bj << si) | (bi << sj);
                out(swapped, b) = 1.0;
            }
            return out;
        }
        Matrix operator()(const AspStepGate& g) const {
            return on_system(
                trotter_step(g.s, g.delta, asp_initial_hamiltonian(), build_h(XYParams{g.lambda, g.gamma, 0.0})));
        }
        Matrix operator()(const ControlledStepGate& g) const {
            Matrix generator = build_h_tilde(XYParams{g.lambda, g.gamma, g.phi});
            if (g.path == Path::Cbar) generator = -generator;
            const Matrix projector_one{{0.0, 0.0}, {0.0, 1.0}};
            return expm_i(kron(projector_one, generator), g.tau);
        }
    };
    return std::visit(Visitor{}, gate);
}

PulseSequence compile_gate(const GateSpec& gate, const SpinSystem& sys) {
    sys.validate();
    if (sys.size() != kRegisterSpins) throw ValidationError("gate compiler targets the three-spin register");
    PulseSequence seq;
    if (const auto* g = std::get_if<UzGate>(&gate)) {
        for (std::size_t k : {kSpin1, kSpin2}) seq.rx(k, -pi / 2.0).ry(k, g->phi).rx(k, pi / 2.0);
    } else if (const auto* g = std::get_if<VdGate>(&gate)) {
        append_vd(seq, g->theta, sys);
    } else if (const auto* g = std::get_if<SwapGate>(&gate)) {
        if (g->i == g->j || g->i >= kRegisterSpins || g->j >= kRegisterSpins) {
            throw ValidationError("swap: invalid spin pair");
        }
        // SWAP is proportional to exp(-i pi/4 (XX + YY + ZZ)).
        append_pauli_pair(seq, g->i, PauliAxis::X, g->j, PauliAxis::X, pi / 4.0, sys);
        append_pauli_pair(seq, g->i, PauliAxis::Y, g->j, PauliAxis::Y, pi / 4.0, sys);
        append_zz(seq, g->i, g->j, pi / 2.0, sys);
    } else if (const auto* g = std::get_if<AspStepGate>(&gate)) {
        if (!(g->delta > 0.0)) throw ValidationError("asp-step: delta must be positive");
        const XYParams p{g->lambda, g->gamma, 0.0};
        const double r = p.r();
        const double half_x = (1.0 - g->s) * g->delta;  // R_x angle for exp(-i (1-s) delta/2 X)
        seq.rx(kSpin1, half_x).rx(kSpin2, half_x);
        append_vd(seq, p.theta(), sys);
        seq.rz(kSpin1, -g->s * g->delta * (r + 1.0)).rz(kSpin2, -g->s * g->delta * (r - 1.0));
        append_vd_dagger(seq, p.theta(), sys);
        seq.rx(kSpin1, half_x).rx(kSpin2, half_x);
    } else if (const auto* g = std::get_if<ControlledStepGate>(&gate)) {
        XYParams{g->lambda, g->gamma, 0.0}.require_off_degeneracy();
        if (g->path == Path::C) {
            append_controlled_c(seq, g->phi, g->tau, g->lambda, g->gamma, sys);
        } else {
            // -H~(l, g, phi) = R_1z(pi)^dagger H~(-l, g, phi) R_1z(pi)
            seq.rz(kSpin1, pi);
            append_controlled_c(seq, g->phi, g->tau, -g->lambda, g->gamma, sys);
            seq.rz(kSpin1, -pi);
        }
    }
    return seq;
}

PulseSequence compile_experiment(double lambda, double gamma, const std::vector<double>& asp_s, double asp_delta,
                                 const CycleSpec& cycle, const SpinSystem& sys, bool readout_swap) {
    cycle.validate();
    PulseSequence seq;
    seq.ry(kSpin1, -pi / 2.0).ry(kSpin2, -pi / 2.0);
    for (double s : asp_s) seq.append(compile_gate(AspStepGate{s, asp_delta, lambda, gamma}, sys));
    seq.ry(kAncilla, pi / 2.0);
    const double tau = cycle.step_time();
    for (int m = 0; m <= cycle.segments; ++m) {
        seq.append(compile_gate(ControlledStepGate{cycle.phi_at(m), tau, lambda, gamma, cycle.path}, sys));
    }
    if (readout_swap) seq.append(compile_gate(SwapGate{kAncilla, kSpin1}, sys));
    return seq;
}

} // namespace xygp
