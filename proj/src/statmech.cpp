#include "topoheat/statmech.hpp"

#include <cmath>
#include <stdexcept>

#include "topoheat/constants.hpp"

namespace topoheat {

namespace {

using constants::k_B;
using constants::pi;

void require_point(const ThermoPoint& pt) {
  if (!std::isfinite(pt.temperature_K) || pt.temperature_K <= 0.0) {
    throw std::invalid_argument("temperature must be positive");
  }
  if (!std::isfinite(pt.u_meV)) {
    throw std::invalid_argument("field potential must be finite");
  }
}

DensityValue from_quadrature(const QuadratureResult& r, double prefactor) {
  DensityValue d;
  d.value = prefactor * r.value;
  d.error_estimate = std::fabs(prefactor) * r.error_estimate;
  d.converged = r.converged;
  return d;
}

}  // namespace

double fermi_occupation(double energy_meV, double temperature_K) {
  if (!std::isfinite(temperature_K) || temperature_K <= 0.0) {
    throw std::invalid_argument("temperature must be positive");
  }
  if (!std::isfinite(energy_meV)) {
    throw std::invalid_argument("energy must be finite");
  }
  const double x = energy_meV / (k_B * temperature_K);
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

double density_decay_scale(const ThermoPoint& pt, const MaterialParams& p) {
  return std::max(k_B * pt.temperature_K,
                  p.lambda_so_meV + std::fabs(pt.u_meV));
}

DensityValue internal_energy_density(const ThermoPoint& pt,
                                     const MaterialParams& p,
                                     const QuadratureSettings& q) {
  require_point(pt);
  const double t = pt.temperature_K;
  const auto integrand = [&](double k) {
    const BandPair bands = band_energies(k, pt.u_meV, p);
    return k * (bands.e1_meV * fermi_occupation(bands.e1_meV, t) +
                bands.e2_meV * fermi_occupation(bands.e2_meV, t));
  };
  const QuadratureResult r =
      integrate_decaying(integrand, density_decay_scale(pt, p), q);
  return from_quadrature(r, 2.0 / pi);
}

DensityValue entropy_density(const ThermoPoint& pt, const MaterialParams& p,
                             const QuadratureSettings& q) {
  require_point(pt);
  const double beta = 1.0 / (k_B * pt.temperature_K);
  const auto integrand = [&](double k) {
    const BandPair bands = band_energies(k, pt.u_meV, p);
    return k * (entropy_term(beta * bands.e1_meV) +
                entropy_term(beta * bands.e2_meV));
  };
  const QuadratureResult r =
      integrate_decaying(integrand, density_decay_scale(pt, p), q);
  return from_quadrature(r, 2.0 * k_B / pi);
}

DensityValue grand_term_density(const ThermoPoint& pt, const MaterialParams& p,
                                const QuadratureSettings& q) {
  require_point(pt);
  const double beta = 1.0 / (k_B * pt.temperature_K);
  const auto integrand = [&](double k) {
    const BandPair bands = band_energies(k, pt.u_meV, p);
    return k * (std::log1p(std::exp(-beta * bands.e1_meV)) +
                std::log1p(std::exp(-beta * bands.e2_meV)));
  };
  const QuadratureResult r =
      integrate_decaying(integrand, density_decay_scale(pt, p), q);
  return from_quadrature(r, 2.0 * k_B * pt.temperature_K / pi);
}

}  // namespace topoheat
