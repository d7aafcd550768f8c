// JSON and CSV encodings of the library's result types.
#pragma once

#include <nlohmann/json.hpp>
#include <ostream>
#include <string>

#include "kepler/conic.hpp"
#include "kepler/orbit.hpp"
#include "kepler/shell.hpp"
#include "kepler/simulator.hpp"

namespace kepler {

/// Keys: class, e, ell, aO, periapsis, apoapsis, semi_major, semi_minor, period, C, Q, m.
/// Absent optionals serialize as null.
nlohmann::json to_json(const OrbitSolution& solution);

nlohmann::json to_json(const DiagnosticsReport& report);

nlohmann::json to_json(const ResidualReport& report);

/// Keys: a, M, g, d, n_rings, computed, exact, rel_error, near_surface.
nlohmann::json to_json(const ShellCheck& check);

inline constexpr const char* kTrajectoryCsvHeader = "t,x,y,vx,vy,r,v,alpha";

/// One row per stored sample, 17 significant digits; alpha in degrees.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

/// printf-style %.17g, the fixed float format used for CSV output.
std::string format_g17(double value);

}  // namespace kepler
