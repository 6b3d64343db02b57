#include "xygp/pulse_json.hpp"

#include "xygp/errors.hpp"

#include "json.hpp"

namespace xygp {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string pair_key(std::size_t i, std::size_t j) { return spin_label(i) + "-" + spin_label(j); }

ordered_json element_to_json(const PulseElement& e) {
    if (const auto* p = std::get_if<RfPulse>(&e)) {
        return {{"kind", "rf_pulse"}, {"spin", spin_label(p->spin)}, {"axis", to_string(p->axis)}, {"angle_rad", p->angle}};
    }
    if (const auto* z = std::get_if<ZRotation>(&e)) {
        return {{"kind", "z_rotation"}, {"spin", spin_label(z->spin)}, {"angle_rad", z->angle}};
    }
    return {{"kind", "delay"}, {"seconds", std::get<Delay>(e).seconds}};
}

template <class T>
T field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw SchemaError(where + ": field '" + key + "' has the wrong type");
    }
}

}  // namespace

std::string sequence_to_json(const PulseSequence& seq, const SpinSystem& sys, int indent) {
    sys.validate();
    ordered_json couplings = ordered_json::object();
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = i + 1; j < sys.size(); ++j) couplings[pair_key(i, j)] = sys.coupling(i, j);
    ordered_json elements = ordered_json::array();
    for (const auto& e : seq.elements()) elements.push_back(element_to_json(e));
    ordered_json doc = {{"spin_system", {{"offsets_hz", sys.offsets_hz}, {"couplings_hz", couplings}}},
                {"elements", elements},
                {"total_duration_s", seq.total_duration()}};
    return doc.dump(indent) + "\n";
}

SequenceFile sequence_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    SequenceFile out;
    const json spin_system = field<json>(doc, "spin_system", "document");
    out.system.offsets_hz = field<std::vector<double>>(spin_system, "offsets_hz", "spin_system");
    const std::size_t n = out.system.offsets_hz.size();
    out.system.couplings_hz.assign(n, std::vector<double>(n, 0.0));
    const json couplings = field<json>(spin_system, "couplings_hz", "spin_system");
    if (!couplings.is_object()) throw SchemaError("spin_system: couplings_hz must be an object");
    for (const auto& [key, value] : couplings.items()) {
        const auto dash = key.find('-');
        if (dash == std::string::npos || !value.is_number()) throw SchemaError("couplings_hz: bad entry '" + key + "'");
        std::size_t i = 0, j = 0;
        try {
            i = spin_from_label(key.substr(0, dash));
            j = spin_from_label(key.substr(dash + 1));
        } catch (const ValidationError& e) {
            throw SchemaError("couplings_hz: " + std::string(e.what()));
        }
        if (i >= n || j >= n || i == j) throw SchemaError("couplings_hz: pair '" + key + "' outside the register");
        out.system.set_coupling(i, j, value.get<double>());
    }

    const json elements = field<json>(doc, "elements", "document");
    if (!elements.is_array()) throw SchemaError("elements must be an array");
    for (std::size_t k = 0; k < elements.size(); ++k) {
        const json& e = elements[k];
        const std::string where = "element " + std::to_string(k);
        const auto kind = field<std::string>(e, "kind", where);
        try {
            if (kind == "rf_pulse") {
                out.sequence.rf(spin_from_label(field<std::string>(e, "spin", where)),
                                axis_from_string(field<std::string>(e, "axis", where)),
                                field<double>(e, "angle_rad", where));
            } else if (kind == "z_rotation") {
                out.sequence.push(
                    ZRotation{spin_from_label(field<std::string>(e, "spin", where)), field<double>(e, "angle_rad", where)});
            } else if (kind == "delay") {
                out.sequence.push(Delay{field<double>(e, "seconds", where)});
            } else {
                throw SchemaError(where + ": unknown kind '" + kind + "'");
            }
        } catch (const ValidationError& err) {
            throw SchemaError(where + ": " + err.what());
        }
    }
    return out;
}

} // namespace xygp
