#pragma once

// Internally everything is in geometric units (c = 1): lengths and times in
// metres, accelerations in 1/m. Public entry points that take physical input
// accept SI and convert with the helpers below.
namespace ccrsim::wigner {

// Speed of light used for every SI <-> geometric conversion (m/s).
inline constexpr double kSpeedOfLight = 3.0e8;

// g [m/s^2] -> g/c^2 [1/m].
constexpr double acceleration_to_geometric(double g_si) { return g_si / (kSpeedOfLight * kSpeedOfLight); }

// Lab time [s] -> c t [m].
constexpr double time_to_geometric(double t_si) { return t_si * kSpeedOfLight; }

// c t [m] -> t [s].
constexpr double time_to_si(double t_geometric) { return t_geometric / kSpeedOfLight; }

}  // namespace ccrsim::wigner
