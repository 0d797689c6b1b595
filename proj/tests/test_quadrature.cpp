#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "topoheat/quadrature.hpp"

using namespace topoheat;

TEST_CASE("analytic integrals on [0, inf)") {
  // int k e^-k dk = Gamma(2) = 1
  const auto exp_decay = [](double k) { return k * std::exp(-k); };
  const QuadratureResult gamma2 = integrate_decaying(exp_decay, 1.0);
  CHECK(gamma2.converged);
  CHECK(gamma2.value == doctest::Approx(1.0).epsilon(1e-9));

  // int k/(e^k + 1) dk = pi^2/12 (Dirichlet eta(2))
  const auto fermi_like = [](double k) { return k / (std::exp(k) + 1.0); };
  const QuadratureResult eta2 = integrate_decaying(fermi_like, 1.0);
  CHECK(eta2.converged);
  CHECK(eta2.value == doctest::Approx(M_PI * M_PI / 12.0).epsilon(1e-9));

  // int e^-k^2 dk = sqrt(pi)/2
  const auto gaussian = [](double k) { return std::exp(-k * k); };
  const QuadratureResult half_gauss = integrate_decaying(gaussian, 1.0);
  CHECK(half_gauss.converged);
  CHECK(half_gauss.value == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-9));
}

TEST_CASE("reported error bounds the true error") {
  const auto f = [](double k) { return k * k * std::exp(-k / 3.0); };
  const QuadratureResult r = integrate_decaying(f, 3.0);
  const double exact = 2.0 * 27.0;  // Gamma(3) * 3^3
  CHECK(r.converged);
  CHECK(std::fabs(r.value - exact) <= std::max(10.0 * r.error_estimate, 1e-9 * exact));
}

TEST_CASE("doubling the initial cutoff moves the value within the estimate") {
  const auto f = [](double k) { return (k + 0.3) * std::exp(-0.7 * k); };
  QuadratureSettings base;
  const QuadratureResult r1 = integrate_decaying(f, 1.0 / 0.7, base);
  QuadratureSettings doubled = base;
  doubled.initial_cutoff = 2.0 * r1.cutoff_used;
  const QuadratureResult r2 = integrate_decaying(f, 1.0 / 0.7, doubled);
  CHECK(r1.converged);
  CHECK(r2.converged);
  CHECK(std::fabs(r1.value - r2.value) <=
        10.0 * std::max(r1.error_estimate, r2.error_estimate) + 1e-14);
}

TEST_CASE("linearity within combined error estimates") {
  const auto f = [](double k) { return std::exp(-k) * std::cos(k); };
  const auto g = [](double k) { return k * std::exp(-2.0 * k); };
  const double a = 3.25, b = -1.5;
  const auto combo = [&](double k) { return a * f(k) + b * g(k); };
  const QuadratureResult rf = integrate_decaying(f, 1.0);
  const QuadratureResult rg = integrate_decaying(g, 1.0);
  const QuadratureResult rc = integrate_decaying(combo, 1.0);
  CHECK(rc.converged);
  const double err = std::fabs(a) * rf.error_estimate +
                     std::fabs(b) * rg.error_estimate + rc.error_estimate;
  CHECK(std::fabs(rc.value - (a * rf.value + b * rg.value)) <=
        std::max(10.0 * err, 1e-12));
}

TEST_CASE("slowly decaying tails are flagged, not silently truncated") {
  // Polynomial decay never satisfies the last-octave test.
  const auto lorentzian = [](double k) { return 1.0 / (1.0 + k * k); };
  QuadratureSettings s;
  s.max_doublings = 3;
  const QuadratureResult r = integrate_decaying(lorentzian, 0.05, s);
  CHECK(!r.converged);
  // The last-octave bound on [K/2, K] is about 1/K, far above rel_tol*value.
  CHECK(r.error_estimate > 1e-9 * r.value);
  CHECK(r.cutoff_used == doctest::Approx(3.0 * 8.0).epsilon(1e-12));
}

TEST_CASE("zero integrand converges immediately") {
  const auto zero = [](double) { return 0.0; };
  const QuadratureResult r = integrate_decaying(zero, 5.0);
  CHECK(r.converged);
  CHECK(r.value == 0.0);
  CHECK(r.error_estimate == 0.0);
}

TEST_CASE("settings are validated") {
  const auto f = [](double k) { return std::exp(-k); };
  CHECK_THROWS_AS(integrate_decaying(f, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate_decaying(f, -1.0), std::invalid_argument);
  QuadratureSettings bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(integrate_decaying(f, 1.0, bad), std::invalid_argument);
  bad = QuadratureSettings{};
  bad.max_doublings = 0;
  CHECK_THROWS_AS(integrate_decaying(f, 1.0, bad), std::invalid_argument);
  bad = QuadratureSettings{};
  bad.panel_order = 1;
  CHECK_THROWS_AS(integrate_decaying(f, 1.0, bad), std::invalid_argument);
}

TEST_CASE("panel order is a real knob") {
  const auto f = [](double k) { return k * std::exp(-k); };
  for (int order : {6, 10, 15, 24}) {
    QuadratureSettings s;
    s.panel_order = order;
    const QuadratureResult r = integrate_decaying(f, 1.0, s);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
  }
}
