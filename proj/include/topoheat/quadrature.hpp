#ifndef TOPOHEAT_QUADRATURE_HPP
#define TOPOHEAT_QUADRATURE_HPP

#include <functional>

namespace topoheat {

struct QuadratureSettings {
  double rel_tol = 1e-9;        // relative tolerance on the integral value
  double abs_tol = 1e-14;       // absolute floor, integrand units x meV
  double initial_cutoff = 0.0;  // meV; effective cutoff >= 60 * decay_scale
  int max_doublings = 20;       // cutoff doublings before giving up on the tail
  int panel_order = 15;         // Gauss-Legendre nodes per panel, 2..64
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // conservative, interior + tail
  double cutoff_used = 0.0;     // meV
  long evaluations = 0;
  bool converged = false;
};

// Integral of a smooth, exponentially decaying f over [0, inf).
//
// The integrand is truncated at K = max(initial_cutoff, 60 * decay_scale)
// and integrated by globally adaptive panel bisection (n-point Gauss-Legendre
// per panel, error from whole-vs-halves comparison). K doubles until the
// last-octave contribution |int_{K/2}^{K}| drops below
// max(abs_tol, rel_tol * |value|) or max_doublings is reached; in the latter
// case the result is flagged and error_estimate carries the last-octave bound.
//
// decay_scale (meV) must be positive and should bound the slowest decay
// length of f. Reentrant; f must be safe for concurrent invocation.
QuadratureResult integrate_decaying(const std::function<double(double)>& f,
                                    double decay_scale,
                                    const QuadratureSettings& settings = {});

}  // namespace topoheat

#endif
