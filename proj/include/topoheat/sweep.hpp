#ifndef TOPOHEAT_SWEEP_HPP
#define TOPOHEAT_SWEEP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "topoheat/cycles.hpp"

namespace topoheat {

// Uniform inclusive grid. node(steps-1) returns stop exactly.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;  // >= 2

  double spacing() const { return (stop - start) / (steps - 1); }
  double node(int i) const {
    return i == steps - 1 ? stop : start + spacing() * i;
  }
};

// Throws std::invalid_argument unless stop > start and steps >= 2.
void validate(const GridSpec& grid);

enum class CycleKind { Otto, Stirling };
enum class SweepQuantity { Work, Efficiency };
enum class SweepField { UCold, UHot, THot, TCold };

const char* cycle_name(CycleKind kind);
const char* quantity_name(SweepQuantity quantity);
const char* field_name(SweepField field);

// Fixed parameters attached to a sweep result, enough to reproduce it and to
// locate the critical field on the abscissa.
struct CurveMeta {
  CycleKind kind = CycleKind::Otto;
  SweepQuantity quantity = SweepQuantity::Work;
  SweepField swept = SweepField::UCold;
  CycleSpec base;  // swept field's value in here is ignored
  double lambda_so_meV = 30.0;
};

// 1D sweep output. Efficiency curves carry NaN where the cycle is not an
// engine. abscissa is strictly increasing.
struct Curve {
  std::vector<double> abscissa;
  std::vector<double> values;
  CurveMeta meta;
  bool all_converged = true;
};

// Work over a (u_cold, u_hot) grid at fixed bath temperatures. values and
// signs are row-major with u_hot as the slow index: entry(i_hot, j_cold).
// sign is '+' or '-' outside the per-node numerical zero band, '0' inside.
struct WorkMap {
  GridSpec axis_u_cold;
  GridSpec axis_u_hot;
  double t_hot_K = 0.0;
  double t_cold_K = 0.0;
  double lambda_so_meV = 30.0;
  std::vector<double> values;
  std::vector<char> signs;
  bool all_converged = true;

  std::size_t index(int i_hot, int j_cold) const {
    return static_cast<std::size_t>(i_hot) * axis_u_cold.steps + j_cold;
  }
  double value(int i_hot, int j_cold) const { return values[index(i_hot, j_cold)]; }
  char sign(int i_hot, int j_cold) const { return signs[index(i_hot, j_cold)]; }
};

struct ExtremumReport {
  double location = 0.0;  // abscissa value of the extremal node
  double value = 0.0;
  bool is_max = false;
  bool is_at_critical = false;  // within one grid step of the critical field
  std::size_t index = 0;
};

// Parallel sweeps. Nodes are independent tasks written to pre-sized storage
// by index; output is bit-identical for any thread count (threads <= 0 uses
// the OpenMP default).
WorkMap otto_work_map(const GridSpec& grid_u_cold, const GridSpec& grid_u_hot,
                      double t_hot_K, double t_cold_K, const MaterialParams& p,
                      const QuadratureSettings& q = {}, int threads = 0);

Curve work_curve(CycleKind kind, const CycleSpec& fixed, SweepField swept,
                 const GridSpec& axis, const MaterialParams& p,
                 const QuadratureSettings& q = {}, int threads = 0);

Curve efficiency_curve(CycleKind kind, const CycleSpec& fixed,
                       SweepField swept, const GridSpec& axis,
                       const MaterialParams& p,
                       const QuadratureSettings& q = {}, int threads = 0);

// Interior nodes that are strict local extrema versus both neighbors.
// NaN values never qualify. Curve length must be >= 3.
std::vector<ExtremumReport> locate_extrema(const Curve& curve);

// Serial reference implementations, kept for testing and benchmarking the
// parallel kernels against.
namespace reference {

WorkMap otto_work_map_serial(const GridSpec& grid_u_cold,
                             const GridSpec& grid_u_hot, double t_hot_K,
                             double t_cold_K, const MaterialParams& p,
                             const QuadratureSettings& q = {});

Curve work_curve_serial(CycleKind kind, const CycleSpec& fixed,
                        SweepField swept, const GridSpec& axis,
                        const MaterialParams& p,
                        const QuadratureSettings& q = {});

Curve efficiency_curve_serial(CycleKind kind, const CycleSpec& fixed,
                              SweepField swept, const GridSpec& axis,
                              const MaterialParams& p,
                              const QuadratureSettings& q = {});

}  // namespace reference

}  // namespace topoheat

#endif
