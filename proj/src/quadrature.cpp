#include "topoheat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace topoheat {

namespace {

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

// Gauss-Legendre nodes via Newton iteration on P_n. Deterministic; the cost
// is negligible next to the integrand evaluations.
GaussRule make_gauss_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(x) and P_{n-1}(x).
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

struct Evaluator {
  const std::function<double(double)>& f;
  const GaussRule& rule;
  long evaluations = 0;

  double gauss(double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    evaluations += static_cast<long>(rule.nodes.size());
    return half * sum;
  }
};

// A panel stores the Gauss estimates of its two halves so children reuse
// them as their whole-panel estimates when the panel is split.
struct Panel {
  double a = 0.0;
  double b = 0.0;
  double left = 0.0;   // Gauss over [a, mid]
  double right = 0.0;  // Gauss over [mid, b]
  double value = 0.0;  // left + right
  double error = 0.0;  // |whole - (left + right)|
};

Panel make_panel(Evaluator& ev, double a, double b, double whole) {
  Panel p;
  p.a = a;
  p.b = b;
  const double mid = 0.5 * (a + b);
  p.left = ev.gauss(a, mid);
  p.right = ev.gauss(mid, b);
  p.value = p.left + p.right;
  p.error = std::fabs(whole - p.value);
  return p;
}

// Max-heap on error; ties broken on the left endpoint so the refinement
// order, and with it the output, is deterministic.
bool panel_less(const Panel& x, const Panel& y) {
  if (x.error != y.error) return x.error < y.error;
  return x.a > y.a;
}

struct Workspace {
  std::vector<Panel> heap;
  double total = 0.0;
  double err_sum = 0.0;

  void push(const Panel& p) {
    total += p.value;
    err_sum += p.error;
    heap.push_back(p);
    std::push_heap(heap.begin(), heap.end(), panel_less);
  }
  Panel pop_worst() {
    std::pop_heap(heap.begin(), heap.end(), panel_less);
    Panel p = heap.back();
    heap.pop_back();
    total -= p.value;
    err_sum -= p.error;
    return p;
  }
  double tail_from(double a_min) const {
    double sum = 0.0;
    for (const Panel& p : heap) {
      if (p.a >= a_min) sum += p.value;
    }
    return sum;
  }
};

constexpr int kMaxPanels = 100000;

}  // namespace

QuadratureResult integrate_decaying(const std::function<double(double)>& f,
                                    double decay_scale,
                                    const QuadratureSettings& settings) {
  if (!(decay_scale > 0.0) || !std::isfinite(decay_scale)) {
    throw std::invalid_argument("decay_scale must be positive and finite");
  }
  if (!(settings.rel_tol > 0.0) || settings.abs_tol < 0.0) {
    throw std::invalid_argument("tolerances must satisfy rel_tol > 0, abs_tol >= 0");
  }
  if (settings.max_doublings < 1) {
    throw std::invalid_argument("max_doublings must be >= 1");
  }
  if (settings.panel_order < 2 || settings.panel_order > 64) {
    throw std::invalid_argument("panel_order must be in [2, 64]");
  }

  const GaussRule rule = make_gauss_rule(settings.panel_order);
  Evaluator ev{f, rule};
  Workspace ws;

  double cutoff = std::max(settings.initial_cutoff, 60.0 * decay_scale);

  // Seed with geometric octaves down to ~cutoff/256 so the integrand's
  // support near the origin starts out resolved.
  {
    const int seed_octaves = 8;
    double b = cutoff / (1 << seed_octaves);
    ws.push(make_panel(ev, 0.0, b, ev.gauss(0.0, b)));
    for (int i = 0; i < seed_octaves; ++i) {
      ws.push(make_panel(ev, b, 2.0 * b, ev.gauss(b, 2.0 * b)));
      b *= 2.0;
    }
  }

  const auto tolerance = [&]() {
    return std::max(settings.abs_tol, settings.rel_tol * std::fabs(ws.total));
  };

  bool interior_ok = true;
  const auto refine = [&]() {
    while (ws.err_sum > tolerance()) {
      if (static_cast<int>(ws.heap.size()) >= kMaxPanels) {
        interior_ok = false;
        return;
      }
      const Panel worst = ws.pop_worst();
      const double mid = 0.5 * (worst.a + worst.b);
      ws.push(make_panel(ev, worst.a, mid, worst.left));
      ws.push(make_panel(ev, mid, worst.b, worst.right));
    }
  };

  refine();

  // Double the cutoff until the last octave no longer matters.
  int doublings = 0;
  double tail = ws.tail_from(0.5 * cutoff);
  bool tail_ok = std::fabs(tail) < tolerance();
  while (!tail_ok && doublings < settings.max_doublings && interior_ok) {
    ws.push(make_panel(ev, cutoff, 2.0 * cutoff, ev.gauss(cutoff, 2.0 * cutoff)));
    cutoff *= 2.0;
    ++doublings;
    refine();
    tail = ws.tail_from(0.5 * cutoff);
    tail_ok = std::fabs(tail) < tolerance();
  }

  // Clean final pass over the converged panels, left to right, to shed the
  // rounding drift of the incremental bookkeeping.
  std::sort(ws.heap.begin(), ws.heap.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double value = 0.0;
  double err = 0.0;
  for (const Panel& p : ws.heap) {
    value += p.value;
    err += p.error;
  }

  QuadratureResult result;
  result.value = value;
  result.cutoff_used = cutoff;
  result.evaluations = ev.evaluations;
  result.converged = interior_ok && tail_ok && std::isfinite(value);
  result.error_estimate = err;
  if (!tail_ok) {
    result.error_estimate = std::max(result.error_estimate, std::fabs(tail));
  }
  return result;
}

}  // namespace topoheat
