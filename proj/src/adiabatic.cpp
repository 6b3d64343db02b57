#include "xygp/adiabatic.hpp"

#include "xygp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace xygp {

Matrix asp_initial_hamiltonian() {
    using namespace pauli;
    return kron(X(), I()) + kron(I(), X());
}

StateVector asp_initial_state() {
    const StateVector minus{1.0, -1.0};
    return kron(minus, minus);
}

double chi(double s, const Matrix& h0, const Matrix& h1) {
    const Matrix h = (1.0 - s) * h0 + s * h1;
    const auto eig = eig_hermitian(h);
    const double gap = eig.values[1] - eig.values[0];
    if (gap <= kGapFloor) {
        std::ostringstream os;
        os << "instantaneous gap " << gap << " at s=" << s << " closes the adiabatic passage";
        throw GapClosureError(os.str());
    }
    const Matrix dh = h1 - h0;
    const std::size_t n = h.rows();
    double best = kChiCap;
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t k = 1; k < n; ++k) {
        cplx element = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                element += std::conj(eig.vectors(i, 0)) * dh(i, j) * eig.vectors(j, k);
        const double coupling = std::abs(element);
        if (coupling < 1e-12) continue;
        const double level_gap = eig.values[k] - eig.values[0];
        best = std::min(best, level_gap * level_gap / (two_pi * coupling));
    }
    return best;
}

double AdiabaticSchedule::s_at(double t) const {
    if (samples.empty()) throw ValidationError("empty schedule");
    if (t <= samples.front().t) return samples.front().s;
    if (t >= samples.back().t) return samples.back().s;
    const auto it = std::upper_bound(samples.begin(), samples.end(), t,
                                     [](double value, const ScheduleSample& x) { return value < x.t; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double w = (t - lo.t) / (hi.t - lo.t);
    return lo.s + w * (hi.s - lo.s);
}

AdiabaticSchedule solve_schedule(double kappa, const Matrix& h0, const Matrix& h1, int grid_points) {
    if (!(kappa > 0.0 && kappa < 1.0)) throw ValidationError("kappa must lie in (0, 1)");
    if (grid_points < 64) throw ValidationError("schedule grid needs at least 64 points");

    const int n = grid_points;
    const double ds = 1.0 / (n - 1);
    std::vector<double> chis(n);
    for (int k = 0; k < n; ++k) chis[k] = chi(k * ds, h0, h1);

    AdiabaticSchedule out;
    out.kappa = kappa;
    out.samples.reserve(n);
    out.samples.push_back({0.0, 0.0});
    double t = 0.0;
    // dt/ds has no t dependence, so each RK4 step is Simpson's rule on the
    // interval with the midpoint chi interpolated linearly.
    for (int k = 0; k + 1 < n; ++k) {
        const double f0 = 1.0 / (kappa * chis[k]);
        const double fm = 1.0 / (kappa * 0.5 * (chis[k] + chis[k + 1]));
        const double f1 = 1.0 / (kappa * chis[k + 1]);
        t += ds / 6.0 * (f0 + 4.0 * fm + f1);
        out.samples.push_back({t, k + 1 == n - 1 ? 1.0 : (k + 1) * ds});
    }
    out.total_time = t;
    return out;
}

TrotterPlan TrotterPlan::sample(const AdiabaticSchedule& schedule, int steps) {
    if (steps < 0) throw ValidationError("Trotter step count must be non-negative");
    TrotterPlan plan;
    plan.steps = steps;
    plan.delta = schedule.total_time / (steps + 1);
    if (steps == 0) {
        plan.s_values = {1.0};
        return plan;
    }
    plan.s_values.reserve(steps + 1);
    for (int m = 0; m <= steps; ++m) {
        plan.s_values.push_back(m == steps ? 1.0 : schedule.s_at(schedule.total_time * m / steps));
    }
    return plan;
}

TrotterPlan TrotterPlan::automatic(const AdiabaticSchedule& schedule, double max_delta, int min_steps) {
    if (!(max_delta > 0.0)) throw ValidationError("max_delta must be positive");
    const int needed = static_cast<int>(std::ceil(schedule.total_time / max_delta)) - 1;
    return sample(schedule, std::max(min_steps, needed));
}

Matrix trotter_step(double s, double delta, const Matrix& h0, const Matrix& h1) {
    if (!(delta > 0.0)) throw ValidationError("Trotter step duration must be positive");
    const Matrix half = expm_i((1.0 - s) * h0, delta / 2.0);
    return half * expm_i(s * h1, delta) * half;
}

AspResult run_asp(const XYParams& p, const AdiabaticSchedule& schedule, const TrotterPlan& plan) {
    if (plan.s_values.size() != static_cast<std::size_t>(plan.steps + 1)) {
        throw ValidationError("Trotter plan has inconsistent step count");
    }
    if (std::abs(plan.delta * (plan.steps + 1) - schedule.total_time) > 1e-9 * std::max(1.0, schedule.total_time)) {
        throw ValidationError("Trotter plan was not sampled from this schedule");
    }
    const Matrix h0 = asp_initial_hamiltonian();
    const Matrix h1 = build_h(p);
    const auto target = ground_state(p);

    // h0 is fixed, so the half steps only differ through (1 - s); reuse its eigenbasis.
    const auto eig0 = eig_hermitian(h0);
    auto half_step = [&](double weight) {
        const std::size_t n = h0.rows();
        Matrix out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                cplx acc = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    acc += eig0.vectors(i, k) * std::polar(1.0, -weight * eig0.values[k] * plan.delta / 2.0) *
                           std::conj(eig0.vectors(j, k));
                out(i, j) = acc;
            }
        return out;
    };
    const auto eig1 = eig_hermitian(h1);
    auto full_step = [&](double weight) {
        const std::size_t n = h1.rows();
        Matrix out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                cplx acc = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    acc += eig1.vectors(i, k) * std::polar(1.0, -weight * eig1.values[k] * plan.delta) *
                           std::conj(eig1.vectors(j, k));
                out(i, j) = acc;
            }
        return out;
    };

    AspResult out{asp_initial_state(), {}, 0.0};
    out.fidelity_trace.reserve(plan.s_values.size());
    for (const double s : plan.s_values) {
        const Matrix half = half_step(1.0 - s);
        const Matrix step = half * full_step(s) * half;
        out.final_state = apply(step, out.final_state);
        const auto inst = eig_hermitian((1.0 - s) * h0 + s * h1);
        cplx overlap = 0.0;
        for (std::size_t i = 0; i < inst.vectors.rows(); ++i)
            overlap += std::conj(inst.vectors(i, 0)) * out.final_state[i];
        out.fidelity_trace.push_back(std::abs(overlap));
    }
    out.final_fidelity = std::abs(inner(target.state, out.final_state));
    return out;
}

AspResult prepare_ground_state(const XYParams& p, double kappa) {
    const auto schedule = solve_schedule(kappa, asp_initial_hamiltonian(), build_h(p));
    return run_asp(p, schedule, TrotterPlan::automatic(schedule));
}

} // namespace xygp
