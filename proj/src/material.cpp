#include "topoheat/material.hpp"

#include <cmath>
#include <stdexcept>

namespace topoheat {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

void require_material(const MaterialParams& p) {
  require_finite(p.lambda_so_meV, "lambda_so");
  if (p.lambda_so_meV <= 0.0) {
    throw std::invalid_argument("lambda_so must be positive");
  }
}

}  // namespace

BandPair band_energies(double k_meV, double u_meV, const MaterialParams& p) {
  require_finite(k_meV, "k");
  require_finite(u_meV, "u");
  require_material(p);
  if (k_meV < 0.0) {
    throw std::invalid_argument("k must be non-negative");
  }
  const double au = std::fabs(u_meV);  // spectrum is even in u
  const double m1 = au - p.lambda_so_meV;
  const double m2 = au + p.lambda_so_meV;
  return BandPair{std::sqrt(k_meV * k_meV + m1 * m1),
                  std::sqrt(k_meV * k_meV + m2 * m2)};
}

double band_gap(double u_meV, const MaterialParams& p) {
  require_finite(u_meV, "u");
  require_material(p);
  return 2.0 * std::fabs(p.lambda_so_meV - std::fabs(u_meV));
}

Phase classify_phase(double u_meV, const MaterialParams& p) {
  require_finite(u_meV, "u");
  require_material(p);
  const double au = std::fabs(u_meV);
  if (au < p.lambda_so_meV) return Phase::TopologicalInsulator;
  if (au > p.lambda_so_meV) return Phase::BandInsulator;
  return Phase::Critical;
}

const char* phase_name(Phase phase) {
  switch (phase) {
    case Phase::TopologicalInsulator: return "topological-insulator";
    case Phase::BandInsulator: return "band-insulator";
    case Phase::Critical: return "critical";
  }
  return "unknown";
}

HamiltonianMatrix hamiltonian_matrix(double kx_meV, double ky_meV, int eta,
                                     double u_meV, const MaterialParams& p) {
  require_finite(kx_meV, "kx");
  require_finite(ky_meV, "ky");
  require_finite(u_meV, "u");
  require_material(p);
  if (eta != 1 && eta != -1) {
    throw std::invalid_argument("eta must be +1 or -1");
  }

  const double lam = p.lambda_so_meV;
  const std::complex<double> upper(kx_meV, eta * ky_meV);
  const std::complex<double> lower = std::conj(upper);

  HamiltonianMatrix h{};
  h[0][0] = eta * lam + u_meV;
  h[1][1] = -eta * lam + u_meV;
  h[2][2] = -eta * lam - u_meV;
  h[3][3] = eta * lam - u_meV;
  h[0][2] = upper;
  h[1][3] = upper;
  h[2][0] = lower;
  h[3][1] = lower;
  return h;
}

}  // namespace topoheat
