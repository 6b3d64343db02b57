#pragma once

// Pulse sequence files. Layout:
//   {"spin_system": {"offsets_hz": [...], "couplings_hz": {"a-1": ..., "1-2": ..., "a-2": ...}},
//    "elements": [{"kind": "rf_pulse", "spin": "1", "axis": "x", "angle_rad": ...},
//                 {"kind": "z_rotation", "spin": "2", "angle_rad": ...},
//                 {"kind": "delay", "seconds": ...}],
//    "total_duration_s": ...}

#include "xygp/pulse.hpp"

#include <string>

namespace xygp {

struct SequenceFile {
    SpinSystem system;
    PulseSequence sequence;
};

std::string sequence_to_json(const PulseSequence& seq, const SpinSystem& sys, int indent = 2);

/// Throws SchemaError on missing or mistyped fields.
SequenceFile sequence_from_json(const std::string& text);

} // namespace xygp
