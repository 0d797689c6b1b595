#include "topoheat/sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <omp.h>

namespace topoheat {

namespace {

CycleSpec with_swept(const CycleSpec& base, SweepField field, double value) {
  CycleSpec spec = base;
  switch (field) {
    case SweepField::UCold: spec.u_cold_meV = value; break;
    case SweepField::UHot: spec.u_hot_meV = value; break;
    case SweepField::THot: spec.t_hot_K = value; break;
    case SweepField::TCold: spec.t_cold_K = value; break;
  }
  return spec;
}

struct NodeResult {
  double work = 0.0;
  double efficiency = std::numeric_limits<double>::quiet_NaN();
  double error_estimate = 0.0;
  bool converged = false;
};

NodeResult evaluate_node(CycleKind kind, const CycleSpec& spec,
                         const MaterialParams& p, const QuadratureSettings& q) {
  NodeResult node;
  if (kind == CycleKind::Otto) {
    const OttoReport r = otto_report(spec, p, q);
    node.work = r.work;
    if (r.efficiency) node.efficiency = *r.efficiency;
    node.error_estimate = r.numerics.error_estimate;
    node.converged = r.numerics.converged;
  } else {
    const StirlingReport r = stirling_report(spec, p, q);
    node.work = r.work;
    if (r.efficiency) node.efficiency = *r.efficiency;
    node.error_estimate = r.numerics.error_estimate;
    node.converged = r.numerics.converged && r.numerics.consistent;
  }
  return node;
}

int effective_threads(int threads) {
  return threads > 0 ? threads : omp_get_max_threads();
}

char work_sign(double work, double error_estimate) {
  if (std::fabs(work) < error_estimate) return '0';
  return work > 0.0 ? '+' : '-';
}

WorkMap map_skeleton(const GridSpec& grid_u_cold, const GridSpec& grid_u_hot,
                     double t_hot_K, double t_cold_K, const MaterialParams& p) {
  validate(grid_u_cold);
  validate(grid_u_hot);
  WorkMap map;
  map.axis_u_cold = grid_u_cold;
  map.axis_u_hot = grid_u_hot;
  map.t_hot_K = t_hot_K;
  map.t_cold_K = t_cold_K;
  map.lambda_so_meV = p.lambda_so_meV;
  const std::size_t n = static_cast<std::size_t>(grid_u_cold.steps) *
                        static_cast<std::size_t>(grid_u_hot.steps);
  map.values.resize(n);
  map.signs.resize(n);
  return map;
}

void fill_map_node(WorkMap& map, long flat, const MaterialParams& p,
                   const QuadratureSettings& q, bool& all_converged) {
  const int n_cold = map.axis_u_cold.steps;
  const int i_hot = static_cast<int>(flat) / n_cold;
  const int j_cold = static_cast<int>(flat) % n_cold;
  CycleSpec spec;
  spec.t_hot_K = map.t_hot_K;
  spec.t_cold_K = map.t_cold_K;
  spec.u_hot_meV = map.axis_u_hot.node(i_hot);
  spec.u_cold_meV = map.axis_u_cold.node(j_cold);
  const OttoReport r = otto_report(spec, p, q);
  map.values[flat] = r.work;
  map.signs[flat] = work_sign(r.work, r.numerics.error_estimate);
  if (!r.numerics.converged) all_converged = false;
}

Curve curve_skeleton(CycleKind kind, SweepQuantity quantity,
                     const CycleSpec& fixed, SweepField swept,
                     const GridSpec& axis, const MaterialParams& p) {
  validate(axis);
  Curve curve;
  curve.meta.kind = kind;
  curve.meta.quantity = quantity;
  curve.meta.swept = swept;
  curve.meta.base = fixed;
  curve.meta.lambda_so_meV = p.lambda_so_meV;
  curve.abscissa.resize(axis.steps);
  curve.values.resize(axis.steps);
  for (int i = 0; i < axis.steps; ++i) curve.abscissa[i] = axis.node(i);
  return curve;
}

void fill_curve_node(Curve& curve, long i, const MaterialParams& p,
                     const QuadratureSettings& q, bool& all_converged) {
  const CycleSpec spec =
      with_swept(curve.meta.base, curve.meta.swept, curve.abscissa[i]);
  const NodeResult node = evaluate_node(curve.meta.kind, spec, p, q);
  curve.values[i] = curve.meta.quantity == SweepQuantity::Work
                        ? node.work
                        : node.efficiency;
  if (!node.converged) all_converged = false;
}

Curve sweep_curve(CycleKind kind, SweepQuantity quantity,
                  const CycleSpec& fixed, SweepField swept,
                  const GridSpec& axis, const MaterialParams& p,
                  const QuadratureSettings& q, int threads) {
  Curve curve = curve_skeleton(kind, quantity, fixed, swept, axis, p);
  const long n = axis.steps;
  bool all_converged = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : all_converged) \
    num_threads(effective_threads(threads))
  for (long i = 0; i < n; ++i) {
    fill_curve_node(curve, i, p, q, all_converged);
  }
  curve.all_converged = all_converged;
  return curve;
}

Curve sweep_curve_serial(CycleKind kind, SweepQuantity quantity,
                         const CycleSpec& fixed, SweepField swept,
                         const GridSpec& axis, const MaterialParams& p,
                         const QuadratureSettings& q) {
  Curve curve = curve_skeleton(kind, quantity, fixed, swept, axis, p);
  bool all_converged = true;
  for (long i = 0; i < axis.steps; ++i) {
    fill_curve_node(curve, i, p, q, all_converged);
  }
  curve.all_converged = all_converged;
  return curve;
}

}  // namespace

void validate(const GridSpec& grid) {
  if (!std::isfinite(grid.start) || !std::isfinite(grid.stop)) {
    throw std::invalid_argument("grid bounds must be finite");
  }
  if (!(grid.stop > grid.start)) {
    throw std::invalid_argument("grid stop must exceed start");
  }
  if (grid.steps < 2) {
    throw std::invalid_argument("grid needs at least 2 steps");
  }
}

const char* cycle_name(CycleKind kind) {
  return kind == CycleKind::Otto ? "otto" : "stirling";
}

const char* quantity_name(SweepQuantity quantity) {
  return quantity == SweepQuantity::Work ? "work" : "efficiency";
}

const char* field_name(SweepField field) {
  switch (field) {
    case SweepField::UCold: return "u_cold";
    case SweepField::UHot: return "u_hot";
    case SweepField::THot: return "t_hot";
    case SweepField::TCold: return "t_cold";
  }
  return "unknown";
}

WorkMap otto_work_map(const GridSpec& grid_u_cold, const GridSpec& grid_u_hot,
                      double t_hot_K, double t_cold_K, const MaterialParams& p,
                      const QuadratureSettings& q, int threads) {
  WorkMap map = map_skeleton(grid_u_cold, grid_u_hot, t_hot_K, t_cold_K, p);
  const long n = static_cast<long>(map.values.size());
  bool all_converged = true;
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : all_converged) \
    num_threads(effective_threads(threads))
  for (long flat = 0; flat < n; ++flat) {
    fill_map_node(map, flat, p, q, all_converged);
  }
  map.all_converged = all_converged;
  return map;
}

Curve work_curve(CycleKind kind, const CycleSpec& fixed, SweepField swept,
                 const GridSpec& axis, const MaterialParams& p,
                 const QuadratureSettings& q, int threads) {
  return sweep_curve(kind, SweepQuantity::Work, fixed, swept, axis, p, q,
                     threads);
}

Curve efficiency_curve(CycleKind kind, const CycleSpec& fixed,
                       SweepField swept, const GridSpec& axis,
                       const MaterialParams& p, const QuadratureSettings& q,
                       int threads) {
  return sweep_curve(kind, SweepQuantity::Efficiency, fixed, swept, axis, p, q,
                     threads);
}

std::vector<ExtremumReport> locate_extrema(const Curve& curve) {
  if (curve.abscissa.size() < 3 || curve.abscissa.size() != curve.values.size()) {
    throw std::invalid_argument("curve needs at least 3 aligned nodes");
  }
  std::vector<ExtremumReport> extrema;
  for (std::size_t i = 1; i + 1 < curve.values.size(); ++i) {
    const double prev = curve.values[i - 1];
    const double here = curve.values[i];
    const double next = curve.values[i + 1];
    const bool is_max = here > prev && here > next;
    const bool is_min = here < prev && here < next;
    if (!is_max && !is_min) continue;  // NaN neighbours fail both
    ExtremumReport report;
    report.location = curve.abscissa[i];
    report.value = here;
    report.is_max = is_max;
    report.index = i;
    const double step = std::max(curve.abscissa[i] - curve.abscissa[i - 1],
                                 curve.abscissa[i + 1] - curve.abscissa[i]);
    report.is_at_critical =
        std::fabs(report.location - curve.meta.lambda_so_meV) <=
        step * (1.0 + 1e-12);
    extrema.push_back(report);
  }
  return extrema;
}

namespace reference {

WorkMap otto_work_map_serial(const GridSpec& grid_u_cold,
                             const GridSpec& grid_u_hot, double t_hot_K,
                             double t_cold_K, const MaterialParams& p,
                             const QuadratureSettings& q) {
  WorkMap map = map_skeleton(grid_u_cold, grid_u_hot, t_hot_K, t_cold_K, p);
  bool all_converged = true;
  for (long flat = 0; flat < static_cast<long>(map.values.size()); ++flat) {
    fill_map_node(map, flat, p, q, all_converged);
  }
  map.all_converged = all_converged;
  return map;
}

Curve work_curve_serial(CycleKind kind, const CycleSpec& fixed,
                        SweepField swept, const GridSpec& axis,
                        const MaterialParams& p, const QuadratureSettings& q) {
  return sweep_curve_serial(kind, SweepQuantity::Work, fixed, swept, axis, p, q);
}

Curve efficiency_curve_serial(CycleKind kind, const CycleSpec& fixed,
                              SweepField swept, const GridSpec& axis,
                              const MaterialParams& p,
                              const QuadratureSettings& q) {
  return sweep_curve_serial(kind, SweepQuantity::Efficiency, fixed, swept,
                            axis, p, q);
}

}  // namespace reference

}  // namespace topoheat
