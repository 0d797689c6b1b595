#ifndef TOPOHEAT_CYCLES_HPP
#define TOPOHEAT_CYCLES_HPP

#include <optional>
#include <utility>

#include "topoheat/statmech.hpp"

namespace topoheat {

// Bath temperatures and the field potentials of the two constant-field
// strokes. t_hot > t_cold is NOT required structurally: sweeps explore both
// orderings, and the temperature ordering is validated only when an
// efficiency is reported.
struct CycleSpec {
  double t_hot_K = 40.0;
  double t_cold_K = 30.0;
  double u_hot_meV = 0.0;  // field on the hot-bath stroke
  double u_cold_meV = 0.0; // field on the cold-bath stroke
};

using OttoSpec = CycleSpec;
using StirlingSpec = CycleSpec;

enum class OperationMode { Engine, Refrigerator, Dissipator };

const char* mode_name(OperationMode mode);

// Engine iff work > 0; refrigerator iff work <= 0 and the system absorbs
// heat from the cold bath; dissipator otherwise.
OperationMode classify_mode(double work, double q_in, double q_cold_absorbed);

struct CycleNumerics {
  double error_estimate = 0.0;  // aggregated quadrature error
  bool converged = false;
  bool consistent = true;  // Stirling only: dual-route work agreement
};

// Per-stroke heats of the Stirling cycle with corners A=(T_h,u_hot),
// B=(T_h,u_cold), C=(T_c,u_cold), D=(T_c,u_hot):
//   q_ba = T_h (S(B)-S(A))   hot isotherm
//   q_cb = U(C)-U(B)         cold-field isoelectric stroke
//   q_dc = T_c (S(D)-S(C))   cold isotherm
//   q_ad = U(A)-U(D)         hot-field isoelectric stroke
struct StirlingHeats {
  double q_ba = 0.0;
  double q_cb = 0.0;
  double q_dc = 0.0;
  double q_ad = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
};

struct OttoReport {
  double q_in = 0.0;   // heat absorbed on the hot isochore
  double q_out = 0.0;  // heat absorbed on the cold isochore (< 0 when ejected)
  double work = 0.0;   // q_in + q_out, identically
  std::optional<double> efficiency;  // work/q_in for an engine with T_h > T_c
  OperationMode mode = OperationMode::Dissipator;
  CycleNumerics numerics;
};

struct StirlingReport {
  StirlingHeats heats;
  double q_in = 0.0;          // q_ba + q_ad
  double work = 0.0;          // grand-partition route (reported value)
  double work_heat_sum = 0.0; // sum of the four heats (cross-check route)
  std::optional<double> efficiency;
  OperationMode mode = OperationMode::Dissipator;
  CycleNumerics numerics;
};

// Otto isochore heats. Occupations are frozen on the adiabats, so the hot
// stroke weighs the hot-field bands with the occupation change between the
// two thermal states and the cold stroke does the reverse:
//   q_in  = (2/pi) int dk k sum_n E_n^hot  [f(E_n^hot,T_h) - f(E_n^cold,T_c)]
//   q_out = (2/pi) int dk k sum_n E_n^cold [f(E_n^cold,T_c) - f(E_n^hot,T_h)]
std::pair<DensityValue, DensityValue> otto_heats(
    const OttoSpec& spec, const MaterialParams& p,
    const QuadratureSettings& q = {});

OttoReport otto_report(const OttoSpec& spec, const MaterialParams& p,
                       const QuadratureSettings& q = {});

StirlingHeats stirling_heats(const StirlingSpec& spec, const MaterialParams& p,
                             const QuadratureSettings& q = {});

// The reported work is the grand-partition route
//   W = (2 k_B/pi) int dk k sum_n [ T_h ln(1+e^{-E_n^cold/k_B T_h})
//                                 - T_h ln(1+e^{-E_n^hot /k_B T_h})
//                                 + T_c ln(1+e^{-E_n^hot /k_B T_c})
//                                 - T_c ln(1+e^{-E_n^cold/k_B T_c}) ],
// cross-checked against the heat sum; disagreement beyond 10x the aggregated
// quadrature error clears numerics.consistent.
StirlingReport stirling_report(const StirlingSpec& spec,
                               const MaterialParams& p,
                               const QuadratureSettings& q = {});

}  // namespace topoheat

#endif
