#include "xygp/pulse.hpp"

#include "xygp/errors.hpp"

#include <cmath>
#include <numbers>

namespace xygp {

const char* to_string(Axis a) {
    switch (a) {
        case Axis::X: return "x";
        case Axis::MinusX: return "-x";
        case Axis::Y: return "y";
        case Axis::MinusY: return "-y";
    }
    return "?";
}

Axis axis_from_string(const std::string& s) {
    if (s == "x") return Axis::X;
    if (s == "-x") return Axis::MinusX;
    if (s == "y") return Axis::Y;
    if (s == "-y") return Axis::MinusY;
    throw ValidationError("unknown pulse axis '" + s + "'");
}

SpinSystem SpinSystem::defaults() {
    SpinSystem sys;
    sys.offsets_hz = {0.0, 0.0, 0.0};
    sys.couplings_hz.assign(3, std::vector<double>(3, 0.0));
    sys.set_coupling(0, 1, 160.7);
    sys.set_coupling(1, 2, -194.4);
    sys.set_coupling(0, 2, 47.6);
    return sys;
}

void SpinSystem::set_coupling(std::size_t i, std::size_t j, double hz) {
    if (i == j) throw ValidationError("a spin cannot couple to itself");
    couplings_hz.at(i).at(j) = hz;
    couplings_hz.at(j).at(i) = hz;
}

void SpinSystem::validate() const {
    const std::size_t n = offsets_hz.size();
    if (couplings_hz.size() != n) throw ValidationError("coupling table does not match spin count");
    for (std::size_t i = 0; i < n; ++i) {
        if (couplings_hz[i].size() != n) throw ValidationError("coupling table is not square");
        if (couplings_hz[i][i] != 0.0) throw ValidationError("coupling table must have a zero diagonal");
        for (std::size_t j = 0; j < i; ++j)
            if (couplings_hz[i][j] != couplings_hz[j][i]) throw ValidationError("coupling table must be symmetric");
    }
}

std::string spin_label(std::size_t spin) { return spin == 0 ? "a" : std::to_string(spin); }

std::size_t spin_from_label(const std::string& label) {
    if (label == "a") return 0;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(label, &pos);
    } catch (const std::exception&) {
        throw ValidationError("unknown spin label '" + label + "'");
    }
    if (pos != label.size() || v == 0) throw ValidationError("unknown spin label '" + label + "'");
    return v;
}

double PulseSequence::total_duration() const {
    double t = 0.0;
    for (const auto& e : elements_)
        if (const auto* d = std::get_if<Delay>(&e)) t += d->seconds;
    return t;
}

PulseSequence& PulseSequence::rf(std::size_t spin, Axis axis, double angle) {
    return push(RfPulse{spin, axis, angle});
}

PulseSequence& PulseSequence::rx(std::size_t spin, double angle) {
    if (angle == 0.0) return *this;
    return rf(spin, angle > 0.0 ? Axis::X : Axis::MinusX, std::abs(angle));
}

PulseSequence& PulseSequence::ry(std::size_t spin, double angle) {
    if (angle == 0.0) return *this;
    return rf(spin, angle > 0.0 ? Axis::Y : Axis::MinusY, std::abs(angle));
}

PulseSequence& PulseSequence::rz(std::size_t spin, double angle) {
    if (angle == 0.0) return *this;
    return push(ZRotation{spin, angle});
}

PulseSequence& PulseSequence::delay(double seconds) {
    if (seconds < 0.0) throw ValidationError("delays must be non-negative");
    if (seconds == 0.0) return *this;
    return push(Delay{seconds});
}

PulseSequence& PulseSequence::append(const PulseSequence& later) {
    elements_.insert(elements_.end(), later.elements_.begin(), later.elements_.end());
    return *this;
}

PulseSequence& PulseSequence::push(PulseElement e) {
    if (const auto* d = std::get_if<Delay>(&e); d && d->seconds < 0.0) {
        throw ValidationError("delays must be non-negative");
    }
    elements_.push_back(std::move(e));
    return *this;
}

namespace {

Matrix single_spin_rotation(Axis axis, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const cplx mi(0.0, -1.0);
    switch (axis) {
        case Axis::X: return Matrix{{c, mi * s}, {mi * s, c}};
        case Axis::MinusX: return Matrix{{c, -mi * s}, {-mi * s, c}};
        case Axis::Y: return Matrix{{c, -s}, {s, c}};
        case Axis::MinusY: return Matrix{{c, s}, {-s, c}};
    }
    throw ValidationError("unknown axis");
}

// Delay propagators are diagonal in the computational basis.
Matrix delay_propagator(const SpinSystem& sys, std::size_t n, double seconds) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<cplx> diag(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        auto z = [&](std::size_t spin) { return ((b >> (n - 1 - spin)) & 1u) ? -1.0 : 1.0; };
        double energy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            energy -= std::numbers::pi * sys.offsets_hz[i] * z(i);
            for (std::size_t j = i + 1; j < n; ++j)
                energy += std::numbers::pi * sys.couplings_hz[i][j] / 2.0 * z(i) * z(j);
        }
        diag[b] = std::polar(1.0, -energy * seconds);
    }
    return Matrix::diagonal(std::span<const cplx>(diag));
}

}  // namespace

Matrix simulate_sequence(const PulseSequence& seq, const SpinSystem& sys, std::size_t n_spins) {
    sys.validate();
    if (n_spins > sys.size()) throw ValidationError("register larger than the spin system");
    Matrix u = Matrix::identity(std::size_t{1} << n_spins);
    auto check = [&](std::size_t spin) {
        if (spin >= n_spins) throw ValidationError("pulse addresses unknown spin " + spin_label(spin));
    };
    for (const auto& e : seq.elements()) {
        if (const auto* p = std::get_if<RfPulse>(&e)) {
            check(p->spin);
            u = pauli::on(single_spin_rotation(p->axis, p->angle), p->spin, n_spins) * u;
        } else if (const auto* z = std::get_if<ZRotation>(&e)) {
            check(z->spin);
            const Matrix rz = Matrix{{std::polar(1.0, -z->angle / 2.0), 0.0}, {0.0, std::polar(1.0, z->angle / 2.0)}};
            u = pauli::on(rz, z->spin, n_spins) * u;
        } else {
            u = delay_propagator(sys, n_spins, std::get<Delay>(e).seconds) * u;
        }
    }
    return u;
}

double verify(const PulseSequence& seq, const Matrix& target, const SpinSystem& sys) {
    if (!target.square()) throw ValidationError("verify: target must be square");
    std::size_t n = 0;
    while ((std::size_t{1} << n) < target.rows()) ++n;
    if ((std::size_t{1} << n) != target.rows()) throw ValidationError("verify: target dimension is not a power of two");
    return fidelity_unitary(simulate_sequence(seq, sys, n), target);
}

} // namespace xygp
