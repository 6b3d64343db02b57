#include "xygp/geom_phase.hpp"

#include "xygp/errors.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace xygp {

using std::numbers::pi;

const char* to_string(Path p) { return p == Path::C ? "C" : "Cbar"; }

void CycleSpec::validate() const {
    if (segments < 1) throw ValidationError("cycle needs at least one segment");
    if (!(cycle_time > 0.0)) throw ValidationError("cycle time must be positive");
}

double CycleSpec::phi_at(int m) const {
    const double start = path == Path::C ? 0.0 : pi;
    return start + m * pi / segments;
}

double wrap_pm_pi(double a) {
    double w = std::remainder(a, 2.0 * pi);  // [-pi, pi]
    if (w <= -pi) w += 2.0 * pi;
    return w;
}

double wrap_2pi(double a) {
    double w = std::fmod(a, 2.0 * pi);
    if (w < 0.0) w += 2.0 * pi;
    if (w >= 2.0 * pi) w -= 2.0 * pi;
    return w;
}

double angular_distance(double a, double b) { return std::abs(wrap_pm_pi(a - b)); }

double gp_analytic(const XYParams& p) {
    p.require_off_degeneracy();
    if (p.r() < 1.0) return 0.0;
    if (p.gamma == 0.0) return 0.0;
    return wrap_2pi(pi * (1.0 - std::cos(p.theta())));
}

double pancharatnam_phase(std::span<const StateVector> loop) {
    if (loop.size() < 2) throw ValidationError("a discrete loop needs at least two states");
    cplx product = 1.0;
    for (std::size_t m = 0; m < loop.size(); ++m) {
        const auto& next = loop[(m + 1) % loop.size()];
        product *= inner(loop[m], next);
        // Keep the running product O(1); only its argument matters.
        const double mag = std::abs(product);
        if (mag == 0.0) throw UndefinedPhaseError("orthogonal neighbours in discrete loop");
        product /= mag;
    }
    return -std::arg(product);
}

double gp_discrete(const XYParams& p, int segments) {
    if (segments < 8) throw ValidationError("gp_discrete needs at least 8 segments");
    p.require_off_degeneracy();
    std::vector<StateVector> loop;
    loop.reserve(segments);
    for (int m = 0; m < segments; ++m) {
        XYParams q = p;
        q.phi = m * pi / segments;
        loop.push_back(ground_state(q).state);
    }
    return wrap_2pi(pancharatnam_phase(loop));
}

double dynamical_phase(const CycleSpec& spec) {
    spec.validate();
    spec.params.require_off_degeneracy();
    const double level = std::max(spec.params.r(), 1.0);
    return spec.path == Path::C ? level * spec.cycle_time : -level * spec.cycle_time;
}

double resolve_half_sum(double beta_C, double beta_Cbar, double reference) {
    const double first = wrap_2pi((beta_C + beta_Cbar) / 2.0);
    const double second = wrap_2pi(first + pi);
    return angular_distance(first, reference) <= angular_distance(second, reference) ? first : second;
}

} // namespace xygp
