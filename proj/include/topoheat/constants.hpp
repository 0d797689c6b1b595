#ifndef TOPOHEAT_CONSTANTS_HPP
#define TOPOHEAT_CONSTANTS_HPP

namespace topoheat {

// Natural units: hbar = v_f = 1. Energies, momenta and field potentials are
// in meV; per-area densities are in meV^3; temperatures in kelvin.
namespace constants {

// Boltzmann constant in meV/K (CODATA).
inline constexpr double k_B = 0.08617333262;

inline constexpr double pi = 3.14159265358979323846;

// Elementary charge in coulomb and hbar in J*s, used only for SI conversion.
inline constexpr double elementary_charge_C = 1.602176634e-19;
inline constexpr double hbar_J_s = 1.054571817e-34;

}  // namespace constants

}  // namespace topoheat

#endif
