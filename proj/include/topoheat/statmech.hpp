#ifndef TOPOHEAT_STATMECH_HPP
#define TOPOHEAT_STATMECH_HPP

#include <cmath>

#include "topoheat/material.hpp"
#include "topoheat/quadrature.hpp"

namespace topoheat {

// One corner of a thermodynamic cycle: bath temperature and field potential.
struct ThermoPoint {
  double temperature_K = 0.0;  // > 0
  double u_meV = 0.0;
};

// Per-area density in natural units (meV^3) with the quadrature error
// carried along.
struct DensityValue {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
};

// Fermi-Dirac occupation at energy E for a neutral system (E_F = 0).
// Throws std::invalid_argument for T <= 0 or non-finite input.
double fermi_occupation(double energy_meV, double temperature_K);

// Per-mode entropy integrand term -[(1-f)ln(1-f) + f ln f] expressed in the
// overflow-safe variable x = E/(k_B T) >= 0: ln(1+e^-x) + x f(x).
// Equals ln 2 at x = 0 (half occupation).
inline double entropy_term(double x) {
  const double e = std::exp(-x);
  return std::log1p(e) + x * e / (1.0 + e);
}

// Renormalized internal energy per area, U = (2/pi) int dk k sum_n E_n f_n.
// Only the two positive bands are integrated; the filled negative bands
// double the result after ground-state subtraction, so U -> 0 as T -> 0.
DensityValue internal_energy_density(const ThermoPoint& pt,
                                     const MaterialParams& p,
                                     const QuadratureSettings& q = {});

// Entropy per area, S = (2 k_B/pi) int dk k sum_n entropy_term(E_n/(k_B T)).
// Non-negative; vanishes as T -> 0 for a gapped spectrum.
DensityValue entropy_density(const ThermoPoint& pt, const MaterialParams& p,
                             const QuadratureSettings& q = {});

// Grand-potential term T*S - U computed directly as
// (2 k_B T/pi) int dk k sum_n ln(1 + e^{-E_n/(k_B T)}).
// Agrees with T*entropy_density - internal_energy_density to quadrature
// accuracy; the direct form avoids the cancellation of the two large terms.
DensityValue grand_term_density(const ThermoPoint& pt, const MaterialParams& p,
                                const QuadratureSettings& q = {});

// Slowest decay length of the k-integrands at this cycle point, used as the
// quadrature decay_scale: max(k_B T, lambda + |u|).
double density_decay_scale(const ThermoPoint& pt, const MaterialParams& p);

}  // namespace topoheat

#endif
