// File formats and preset strings: density matrices and pure states as JSON,
// settings files, report serialization, and locale-independent numeric
// formatting for the CLI.

#pragma once

#include <string>

#include <json.hpp>

#include "qbell/observables.hpp"
#include "qbell/optimize.hpp"
#include "qbell/shots.hpp"
#include "qbell/states.hpp"
#include "qbell/witness.hpp"

namespace qbell::io {

using nlohmann::json;

/// Formats with 12 significant digits, always with '.' as decimal separator.
std::string fmt12(double v);

// State files: {"re": [[4x4]], "im": [[4x4]]} for density matrices,
// {"vec_re": [4], "vec_im": [4]} for pure states.
json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const json& j);
json pure_to_json(const PureState& phi);
PureState pure_from_json(const json& j);

/// Loads a state from a preset string (singlet, phi+, phi-, psi+, psi-,
/// werner:<beta>, mixed:<seed>:<rank>) or from a JSON file path. Pure-state
/// files are converted to projectors.
DensityMatrix load_state(const std::string& spec);

// Settings files: {"A": [[a1],[a2],[a3]], "B": [[b1],[b2],[b3]]} with rows
// as unit vectors; nearly-orthonormal rows (drift <= 1e-6) are
// re-orthonormalized. Presets: aligned, flipped-b3.
json setting_to_json(const TestSetting& s);
TestSetting setting_from_json(const json& j);
TestSetting load_setting(const std::string& spec);

json witness_to_json(const WitnessReport& r);
WitnessReport witness_from_json(const json& j);

json opt_result_to_json(const OptResult& r);
OptResult opt_result_from_json(const json& j);

json shot_estimate_to_json(const ShotEstimate& e);

}  // namespace qbell::io
