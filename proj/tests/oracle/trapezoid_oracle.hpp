#ifndef TOPOHEAT_TESTS_TRAPEZOID_ORACLE_HPP
#define TOPOHEAT_TESTS_TRAPEZOID_ORACLE_HPP

// Independent reference implementation of every density and heat integral,
// used as the ground truth the adaptive quadrature engine is tested against.
// Everything here is written from the closed-form expressions directly: a
// uniform trapezoid rule on k in [0, K] with K = 60 * max(k_B T, lambda + |u|)
// and 2^20 panels by default, with Kahan-compensated summation. Nothing in
// this header may include or call library code.

#include <cmath>
#include <cstdint>

namespace trapezoid_oracle {

inline constexpr double kBoltzmann_meV_per_K = 0.08617333262;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr std::int64_t kDefaultPanels = 1 << 20;

struct Bands {
  double e1;
  double e2;
};

inline Bands bands(double k, double u, double lambda) {
  const double au = u < 0.0 ? -u : u;
  const double lo = au - lambda;
  const double hi = au + lambda;
  return {std::sqrt(k * k + lo * lo), std::sqrt(k * k + hi * hi)};
}

inline double fermi(double energy, double temperature) {
  const double x = energy / (kBoltzmann_meV_per_K * temperature);
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

// -[(1-f)ln(1-f) + f ln f] for x = E/(k_B T) >= 0.
inline double entropy_mode(double x) {
  const double e = std::exp(-x);
  return std::log1p(e) + x * e / (1.0 + e);
}

inline double log_occupancy(double x) { return std::log1p(std::exp(-x)); }

inline double cutoff(double temperature, double u, double lambda) {
  const double thermal = kBoltzmann_meV_per_K * temperature;
  const double band = lambda + (u < 0.0 ? -u : u);
  return 60.0 * (thermal > band ? thermal : band);
}

// Kahan-compensated uniform trapezoid rule on [0, K].
template <typename F>
double trapezoid(const F& f, double upper, std::int64_t panels) {
  const double h = upper / static_cast<double>(panels);
  double sum = 0.5 * (f(0.0) + f(upper));
  double carry = 0.0;
  for (std::int64_t i = 1; i < panels; ++i) {
    const double term = f(h * static_cast<double>(i)) - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return h * sum;
}

// Renormalized internal energy per area: (2/pi) int dk k sum_n E_n f_n.
inline double internal_energy(double temperature, double u, double lambda,
                              std::int64_t panels = kDefaultPanels) {
  const auto integrand = [&](double k) {
    const Bands b = bands(k, u, lambda);
    return k * (b.e1 * fermi(b.e1, temperature) + b.e2 * fermi(b.e2, temperature));
  };
  return (2.0 / kPi) * trapezoid(integrand, cutoff(temperature, u, lambda), panels);
}

// Entropy per area: (2 k_B/pi) int dk k sum_n entropy_mode(E_n/(k_B T)).
inline double entropy(double temperature, double u, double lambda,
                      std::int64_t panels = kDefaultPanels) {
  const double beta = 1.0 / (kBoltzmann_meV_per_K * temperature);
  const auto integrand = [&](double k) {
    const Bands b = bands(k, u, lambda);
    return k * (entropy_mode(beta * b.e1) + entropy_mode(beta * b.e2));
  };
  return (2.0 * kBoltzmann_meV_per_K / kPi) *
         trapezoid(integrand, cutoff(temperature, u, lambda), panels);
}

// Grand-potential term T S - U: (2 k_B T/pi) int dk k sum_n ln(1+e^-x_n).
inline double grand_term(double temperature, double u, double lambda,
                         std::int64_t panels = kDefaultPanels) {
  const double beta = 1.0 / (kBoltzmann_meV_per_K * temperature);
  const auto integrand = [&](double k) {
    const Bands b = bands(k, u, lambda);
    return k * (log_occupancy(beta * b.e1) + log_occupancy(beta * b.e2));
  };
  return (2.0 * kBoltzmann_meV_per_K * temperature / kPi) *
         trapezoid(integrand, cutoff(temperature, u, lambda), panels);
}

struct OttoHeats {
  double q_in;
  double q_out;
};

inline double cycle_cutoff(double t_hot, double t_cold, double u_hot,
                           double u_cold, double lambda) {
  const double c1 = cutoff(t_hot, u_hot, lambda);
  const double c2 = cutoff(t_cold, u_cold, lambda);
  const double c3 = cutoff(t_hot, u_cold, lambda);
  const double c4 = cutoff(t_cold, u_hot, lambda);
  double best = c1;
  if (c2 > best) best = c2;
  if (c3 > best) best = c3;
  if (c4 > best) best = c4;
  return best;
}

inline OttoHeats otto_heats(double t_hot, double t_cold, double u_hot,
                            double u_cold, double lambda,
                            std::int64_t panels = kDefaultPanels) {
  const double upper = cycle_cutoff(t_hot, t_cold, u_hot, u_cold, lambda);
  const auto q_in_integrand = [&](double k) {
    const Bands h = bands(k, u_hot, lambda);
    const Bands c = bands(k, u_cold, lambda);
    const double d1 = fermi(h.e1, t_hot) - fermi(c.e1, t_cold);
    const double d2 = fermi(h.e2, t_hot) - fermi(c.e2, t_cold);
    return k * (h.e1 * d1 + h.e2 * d2);
  };
  const auto q_out_integrand = [&](double k) {
    const Bands h = bands(k, u_hot, lambda);
    const Bands c = bands(k, u_cold, lambda);
    const double d1 = fermi(c.e1, t_cold) - fermi(h.e1, t_hot);
    const double d2 = fermi(c.e2, t_cold) - fermi(h.e2, t_hot);
    return k * (c.e1 * d1 + c.e2 * d2);
  };
  return {(2.0 / kPi) * trapezoid(q_in_integrand, upper, panels),
          (2.0 / kPi) * trapezoid(q_out_integrand, upper, panels)};
}

struct StirlingResult {
  double q_ba;
  double q_cb;
  double q_dc;
  double q_ad;
  double work_heat_sum;
  double work_partition;
};

// Corners: A=(T_h,u_hot), B=(T_h,u_cold), C=(T_c,u_cold), D=(T_c,u_hot).
inline StirlingResult stirling(double t_hot, double t_cold, double u_hot,
                               double u_cold, double lambda,
                               std::int64_t panels = kDefaultPanels) {
  StirlingResult r;
  r.q_ba = t_hot * (entropy(t_hot, u_cold, lambda, panels) -
                    entropy(t_hot, u_hot, lambda, panels));
  r.q_cb = internal_energy(t_cold, u_cold, lambda, panels) -
           internal_energy(t_hot, u_cold, lambda, panels);
  r.q_dc = t_cold * (entropy(t_cold, u_hot, lambda, panels) -
                     entropy(t_cold, u_cold, lambda, panels));
  r.q_ad = internal_energy(t_hot, u_hot, lambda, panels) -
           internal_energy(t_cold, u_hot, lambda, panels);
  r.work_heat_sum = r.q_ba + r.q_cb + r.q_dc + r.q_ad;

  const double beta_h = 1.0 / (kBoltzmann_meV_per_K * t_hot);
  const double beta_c = 1.0 / (kBoltzmann_meV_per_K * t_cold);
  const auto integrand = [&](double k) {
    const Bands h = bands(k, u_hot, lambda);
    const Bands c = bands(k, u_cold, lambda);
    const double hot_part =
        t_hot * (log_occupancy(beta_h * c.e1) + log_occupancy(beta_h * c.e2) -
                 log_occupancy(beta_h * h.e1) - log_occupancy(beta_h * h.e2));
    const double cold_part =
        t_cold * (log_occupancy(beta_c * h.e1) + log_occupancy(beta_c * h.e2) -
                  log_occupancy(beta_c * c.e1) - log_occupancy(beta_c * c.e2));
    return k * (hot_part + cold_part);
  };
  const double upper = cycle_cutoff(t_hot, t_cold, u_hot, u_cold, lambda);
  r.work_partition =
      (2.0 * kBoltzmann_meV_per_K / kPi) * trapezoid(integrand, upper, panels);
  return r;
}

}  // namespace trapezoid_oracle

#endif
