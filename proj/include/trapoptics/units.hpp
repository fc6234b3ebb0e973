// Physical constants (SI) and the few unit conventions used throughout:
// lengths in mm on the optics side, SI in the trap/motion code, frequencies
// as ordinary Hz unless a variable is explicitly named "omega" (rad/s).
#pragma once

namespace trapoptics {

inline constexpr double pi = 3.14159265358979323846;

namespace constants {
inline constexpr double elementary_charge = 1.602176634e-19;   // C (exact)
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double hbar = 1.054571817e-34;                // J s
inline constexpr double speed_of_light = 299792458.0;          // m/s (exact)
}  // namespace constants

// isotope masses in u; the coarse integer mass numbers are used where a
// published scaling argument quotes them that way.
namespace masses {
inline constexpr double ba138_u = 137.905247;
inline constexpr double yb171_u = 170.936323;
}  // namespace masses

inline constexpr double mm = 1e-3;  // mm -> m
inline constexpr double um = 1e-6;  // um -> m
inline constexpr double nm = 1e-9;  // nm -> m

}  // namespace trapoptics
