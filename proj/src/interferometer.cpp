#include "xygp/interferometer.hpp"

#include "xygp/errors.hpp"

#include <cmath>
#include <numbers>

namespace xygp {

Matrix rz_pi(int k) {
    if (k != 1 && k != 2) throw ValidationError("flip spin must be 1 or 2");
    const Matrix rz{{cplx(0.0, -1.0), 0.0}, {0.0, cplx(0.0, 1.0)}};
    return k == 1 ? kron(rz, pauli::I()) : kron(pauli::I(), rz);
}

Matrix cycle_generator(const CycleSpec& spec, double phi, int flip_spin) {
    XYParams p = spec.params;
    p.phi = phi;
    if (spec.path == Path::C) return build_h_tilde(p);
    p.lambda = -p.lambda;
    const Matrix r = rz_pi(flip_spin);
    return r.adjoint() * build_h_tilde(p) * r;
}

Matrix path_unitary(const CycleSpec& spec) {
    spec.validate();
    const double tau = spec.step_time();
    Matrix u = Matrix::identity(4);
    for (int m = 0; m <= spec.segments; ++m) u = expm_i(cycle_generator(spec, spec.phi_at(m)), tau) * u;
    return u;
}

Matrix controlled_cycle(const CycleSpec& spec) {
    spec.validate();
    spec.params.require_off_degeneracy();
    const double tau = spec.step_time();
    const Matrix projector_one{{0.0, 0.0}, {0.0, 1.0}};  // (1 - Z_a)/2
    Matrix u = Matrix::identity(8);
    for (int m = 0; m <= spec.segments; ++m) {
        const Matrix generator = kron(projector_one, cycle_generator(spec, spec.phi_at(m)));
        u = expm_i(generator, tau) * u;
    }
    return u;
}

InterferometryResult run_interferometry(const CycleSpec& spec) {
    XYParams start = spec.params;
    start.phi = 0.0;  // e^{-i2phi} has period pi, so Cbar's phi = pi start is the same state
    const StateVector psi_g = ground_state(start).state;

    const Matrix hadamard_a = kron(Matrix{{1.0, 1.0}, {1.0, -1.0}} * (1.0 / std::numbers::sqrt2), Matrix::identity(4));
    StateVector state = kron(StateVector::basis(2, 0), psi_g);
    state = apply(hadamard_a, state);
    state = apply(controlled_cycle(spec), state);

    // 2 <Psi| (|0><1|_a (x) 1) |Psi> = 2 sum_j conj(Psi[0 j]) Psi[1 j]
    cplx coherence = 0.0;
    for (std::size_t j = 0; j < 4; ++j) coherence += std::conj(state[j]) * state[4 + j];
    coherence *= 2.0;

    std::vector<cplx> branch(4);
    for (std::size_t j = 0; j < 4; ++j) branch[j] = state[4 + j];
    const StateVector returned{std::move(branch)};

    InterferometryResult out;
    out.spec = spec;
    out.ancilla_coherence = coherence;
    out.beta_t = std::abs(coherence) > 0.0 ? wrap_pm_pi(std::arg(coherence)) : 0.0;
    out.system_return_fidelity = std::abs(inner(psi_g, returned));
    return out;
}

PhaseReading combine_phases(const InterferometryResult& rc, const InterferometryResult& rcbar,
                            std::optional<double> reference) {
    if (rc.spec.path != Path::C || rcbar.spec.path != Path::Cbar) {
        throw ValidationError("combine_phases expects one C and one Cbar result");
    }
    const auto& a = rc.spec;
    const auto& b = rcbar.spec;
    if (a.params.lambda != b.params.lambda || a.params.gamma != b.params.gamma || a.segments != b.segments ||
        a.cycle_time != b.cycle_time) {
        throw ValidationError("combine_phases: C and Cbar runs use different cycle parameters");
    }
    PhaseReading out;
    out.beta_C = rc.beta_t;
    out.beta_Cbar = rcbar.beta_t;
    out.beta_g_analytic = gp_analytic(a.params);
    out.analytic_assisted = !reference.has_value();
    out.beta_g = resolve_half_sum(rc.beta_t, rcbar.beta_t, reference.value_or(out.beta_g_analytic));
    return out;
}

double phase_from_density(const DensityMatrix& rho, const Matrix& u_path) {
    if (rho.dim() != u_path.rows() || !u_path.square()) {
        throw ValidationError("phase_from_density: dimension mismatch");
    }
    const cplx signal = (u_path * rho.deviation()).trace();
    if (std::abs(signal) < 1e-12) throw UndefinedPhaseError("interferometer signal vanishes");
    return std::arg(signal);
}

} // namespace xygp
