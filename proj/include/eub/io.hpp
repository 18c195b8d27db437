#pragma once

#include <string>
#include <variant>

#include "eub/bounds.hpp"
#include "eub/families.hpp"
#include "eub/statelab.hpp"

namespace eub {

// Matrix JSON format, used repo-wide:
//   {"d": <int>, "rows": [[[re, im], ...], ...]} in row-major order.
// States mirror it with a "kind" field: densities carry "rows", pure
// states carry "amplitudes": [[re, im], ...].

Matrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const Matrix& m);

UnitaryMatrix load_unitary(const std::string& path, double tolerance = 1e-8);

using State = std::variant<PureState, DensityMatrix>;
State state_from_json(const std::string& text);
std::string state_to_json(const State& state);

/// JSON map id -> {nats, bits} plus metadata.
std::string report_to_json(const BoundReport& report, bool bits);

std::string profile_to_json(const SingularProfile& profile);

/// CSV with header param,D,MU,CP1,CP2,RPZ1,RPZ2,RPZ3,Maj1,Maj2[,Multi,OPT],
/// 9 significant digits.
std::string sweep_to_csv(const std::vector<SweepPoint>& points, bool bits);

/// Format with 9 significant digits (stable across runs and platforms).
std::string format_g9(double value);

/// Write via a temp file in the same directory plus rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace eub
