#include "topoheat/cycles.hpp"

#include <cmath>
#include <stdexcept>

#include "topoheat/constants.hpp"

namespace topoheat {

namespace {

using constants::k_B;
using constants::pi;

void require_spec(const CycleSpec& spec) {
  if (!std::isfinite(spec.t_hot_K) || spec.t_hot_K <= 0.0 ||
      !std::isfinite(spec.t_cold_K) || spec.t_cold_K <= 0.0) {
    throw std::invalid_argument("bath temperatures must be positive");
  }
  if (!std::isfinite(spec.u_hot_meV) || !std::isfinite(spec.u_cold_meV)) {
    throw std::invalid_argument("field potentials must be finite");
  }
}

double cycle_decay_scale(const CycleSpec& spec, const MaterialParams& p) {
  const double t_max = std::max(spec.t_hot_K, spec.t_cold_K);
  const double u_max = std::max(std::fabs(spec.u_hot_meV), std::fabs(spec.u_cold_meV));
  return std::max(k_B * t_max, p.lambda_so_meV + u_max);
}

// Efficiency is reported only for an engine driven the right way around:
// positive work, positive intake, and a genuinely hotter hot bath.
std::optional<double> engine_efficiency(const CycleSpec& spec, double work,
                                        double q_in) {
  if (work > 0.0 && q_in > 0.0 && spec.t_hot_K > spec.t_cold_K) {
    return work / q_in;
  }
  return std::nullopt;
}

}  // namespace

const char* mode_name(OperationMode mode) {
  switch (mode) {
    case OperationMode::Engine: return "engine";
    case OperationMode::Refrigerator: return "refrigerator";
    case OperationMode::Dissipator: return "dissipator";
  }
  return "unknown";
}

OperationMode classify_mode(double work, double /*q_in*/,
                            double q_cold_absorbed) {
  if (work > 0.0) return OperationMode::Engine;
  if (q_cold_absorbed > 0.0) return OperationMode::Refrigerator;
  return OperationMode::Dissipator;
}

std::pair<DensityValue, DensityValue> otto_heats(const OttoSpec& spec,
                                                 const MaterialParams& p,
                                                 const QuadratureSettings& q) {
  require_spec(spec);
  const double decay = cycle_decay_scale(spec, p);

  const auto occupation_shift = [&](double k, BandPair& hot, BandPair& cold,
                                    double& d1, double& d2) {
    hot = band_energies(k, spec.u_hot_meV, p);
    cold = band_energies(k, spec.u_cold_meV, p);
    d1 = fermi_occupation(hot.e1_meV, spec.t_hot_K) -
         fermi_occupation(cold.e1_meV, spec.t_cold_K);
    d2 = fermi_occupation(hot.e2_meV, spec.t_hot_K) -
         fermi_occupation(cold.e2_meV, spec.t_cold_K);
  };

  const auto q_in_integrand = [&](double k) {
    BandPair hot, cold;
    double d1, d2;
    occupation_shift(k, hot, cold, d1, d2);
    return k * (hot.e1_meV * d1 + hot.e2_meV * d2);
  };
  const auto q_out_integrand = [&](double k) {
    BandPair hot, cold;
    double d1, d2;
    occupation_shift(k, hot, cold, d1, d2);
    return -(k * (cold.e1_meV * d1 + cold.e2_meV * d2));
  };

  const QuadratureResult r_in = integrate_decaying(q_in_integrand, decay, q);
  const QuadratureResult r_out = integrate_decaying(q_out_integrand, decay, q);

  const double prefactor = 2.0 / pi;
  DensityValue q_in{prefactor * r_in.value, prefactor * r_in.error_estimate,
                    r_in.converged};
  DensityValue q_out{prefactor * r_out.value, prefactor * r_out.error_estimate,
                     r_out.converged};
  return {q_in, q_out};
}

OttoReport otto_report(const OttoSpec& spec, const MaterialParams& p,
                       const QuadratureSettings& q) {
  const auto [q_in, q_out] = otto_heats(spec, p, q);

  OttoReport report;
  report.q_in = q_in.value;
  report.q_out = q_out.value;
  report.work = q_in.value + q_out.value;
  report.efficiency = engine_efficiency(spec, report.work, report.q_in);
  report.mode = classify_mode(report.work, report.q_in, report.q_out);
  report.numerics.error_estimate = q_in.error_estimate + q_out.error_estimate;
  report.numerics.converged = q_in.converged && q_out.converged;
  report.numerics.consistent = true;
  return report;
}

StirlingHeats stirling_heats(const StirlingSpec& spec, const MaterialParams& p,
                             const QuadratureSettings& q) {
  require_spec(spec);
  // Corners: A=(T_h,u_hot), B=(T_h,u_cold), C=(T_c,u_cold), D=(T_c,u_hot).
  const ThermoPoint a{spec.t_hot_K, spec.u_hot_meV};
  const ThermoPoint b{spec.t_hot_K, spec.u_cold_meV};
  const ThermoPoint c{spec.t_cold_K, spec.u_cold_meV};
  const ThermoPoint d{spec.t_cold_K, spec.u_hot_meV};

  const DensityValue s_a = entropy_density(a, p, q);
  const DensityValue s_b = entropy_density(b, p, q);
  const DensityValue s_c = entropy_density(c, p, q);
  const DensityValue s_d = entropy_density(d, p, q);
  const DensityValue u_a = internal_energy_density(a, p, q);
  const DensityValue u_b = internal_energy_density(b, p, q);
  const DensityValue u_c = internal_energy_density(c, p, q);
  const DensityValue u_d = internal_energy_density(d, p, q);

  StirlingHeats heats;
  heats.q_ba = spec.t_hot_K * (s_b.value - s_a.value);
  heats.q_cb = u_c.value - u_b.value;
  heats.q_dc = spec.t_cold_K * (s_d.value - s_c.value);
  heats.q_ad = u_a.value - u_d.value;
  heats.error_estimate =
      spec.t_hot_K * (s_b.error_estimate + s_a.error_estimate) +
      spec.t_cold_K * (s_d.error_estimate + s_c.error_estimate) +
      u_a.error_estimate + u_b.error_estimate + u_c.error_estimate +
      u_d.error_estimate;
  heats.converged = s_a.converged && s_b.converged && s_c.converged &&
                    s_d.converged && u_a.converged && u_b.converged &&
                    u_c.converged && u_d.converged;
  return heats;
}

StirlingReport stirling_report(const StirlingSpec& spec,
                               const MaterialParams& p,
                               const QuadratureSettings& q) {
  require_spec(spec);
  const StirlingHeats heats = stirling_heats(spec, p, q);

  // Grand-partition route: one integral whose integrand is already the
  // pointwise difference of the four corners' log terms, so the value
  // carries the full relative accuracy of the quadrature.
  const double beta_h = 1.0 / (k_B * spec.t_hot_K);
  const double beta_c = 1.0 / (k_B * spec.t_cold_K);
  const auto integrand = [&](double k) {
    const BandPair hot = band_energies(k, spec.u_hot_meV, p);
    const BandPair cold = band_energies(k, spec.u_cold_meV, p);
    const double at_hot_bath =
        spec.t_hot_K * (std::log1p(std::exp(-beta_h * cold.e1_meV)) +
                        std::log1p(std::exp(-beta_h * cold.e2_meV)) -
                        std::log1p(std::exp(-beta_h * hot.e1_meV)) -
                        std::log1p(std::exp(-beta_h * hot.e2_meV)));
    const double at_cold_bath =
        spec.t_cold_K * (std::log1p(std::exp(-beta_c * hot.e1_meV)) +
                         std::log1p(std::exp(-beta_c * hot.e2_meV)) -
                         std::log1p(std::exp(-beta_c * cold.e1_meV)) -
                         std::log1p(std::exp(-beta_c * cold.e2_meV)));
    return k * (at_hot_bath + at_cold_bath);
  };
  // At u_hot == u_cold the four log terms cancel identically and the
  // integrand is pure rounding noise; the telescoped integral is exactly 0.
  QuadratureResult r;
  if (spec.u_hot_meV == spec.u_cold_meV) {
    r.converged = true;
    r.cutoff_used = 60.0 * cycle_decay_scale(spec, p);
  } else {
    r = integrate_decaying(integrand, cycle_decay_scale(spec, p), q);
  }
  const double prefactor = 2.0 * k_B / pi;

  StirlingReport report;
  report.heats = heats;
  report.q_in = heats.q_ba + heats.q_ad;
  report.work = prefactor * r.value;
  report.work_heat_sum = heats.q_ba + heats.q_cb + heats.q_dc + heats.q_ad;
  report.efficiency = engine_efficiency(spec, report.work, report.q_in);
  // Cold-bath heat for mode classification is the cold isotherm's q_dc; the
  // isoelectric strokes have no bath attribution in this idealized cycle.
  report.mode = classify_mode(report.work, report.q_in, heats.q_dc);
  report.numerics.error_estimate =
      heats.error_estimate + prefactor * r.error_estimate;
  report.numerics.converged = heats.converged && r.converged;
  report.numerics.consistent =
      std::fabs(report.work - report.work_heat_sum) <=
      10.0 * std::max(report.numerics.error_estimate, 1e-300);
  return report;
}

}  // namespace topoheat
