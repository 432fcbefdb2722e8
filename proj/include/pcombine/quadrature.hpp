#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <span>
#include <vector>

#include "pcombine/errors.hpp"

namespace pcombine {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_intervals = 4000;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw DomainError("quadrature tolerances must be positive");
    if (max_intervals < 1) throw DomainError("max_intervals must be >= 1");
  }
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

namespace detail {

// QUADPACK qk15 constants: 15-point Kronrod with embedded 7-point Gauss.
inline constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <class F>
inline void gk15(F&& f, double a, double b, double& value, double& error) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kKronrodWeights[7];
  double resg = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double fsum = f(center - dx) + f(center + dx);
    resk += kKronrodWeights[j] * fsum;
    if (j % 2 == 1) resg += kGaussWeights[j / 2] * fsum;
  }
  value = resk * half;
  error = std::abs((resk - resg) * half);
}

}  // namespace detail

class KahanAccumulator {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Panel edges from a to b with bounded endpoint ratio, for integrands whose
// natural scale is logarithmic in x. Requires 0 < a < b.
inline std::vector<double> geometric_edges(double a, double b, double ratio = 2.0) {
  std::vector<double> edges{a};
  double x = a;
  while (x * ratio < b) {
    x *= ratio;
    edges.push_back(x);
  }
  edges.push_back(b);
  return edges;
}

// Globally adaptive Gauss-Kronrod over the panels defined by `edges`.
// Initial panels must be supplied wherever the integrand has features the
// root interval would miss; adaptivity only refines what it can see.
template <class F>
QuadResult integrate_adaptive(F&& f, std::span<const double> edges,
                              const QuadratureSpec& spec) {
  spec.validate();
  if (edges.size() < 2) throw DomainError("integrate_adaptive: need >= 2 edges");

  struct Panel {
    double error, a, b, value;
    bool operator<(const Panel& o) const { return error < o.error; }
  };
  std::priority_queue<Panel> queue;
  double total = 0.0, total_err = 0.0;
  int n = 0;
  auto push = [&](double a, double b) {
    double v, e;
    detail::gk15(f, a, b, v, e);
    total += v;
    total_err += e;
    queue.push({e, a, b, v});
    ++n;
  };
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) push(edges[i], edges[i + 1]);

  while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (n >= spec.max_intervals)
      throw NumericError("adaptive quadrature did not converge in " +
                             std::to_string(spec.max_intervals) + " intervals",
                         total_err);
    Panel worst = queue.top();
    queue.pop();
    total -= worst.value;
    total_err -= worst.error;
    --n;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw NumericError("adaptive quadrature interval underflow", total_err);
    push(worst.a, mid);
    push(mid, worst.b);
  }
  return {total, total_err, n};
}

template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, const QuadratureSpec& spec) {
  const double edges[2] = {a, b};
  return integrate_adaptive(std::forward<F>(f), std::span<const double>(edges, 2), spec);
}

// Euler-transformed sum of an alternating series. `term(j)` returns the j-th
// term including its sign; terms must alternate and decay eventually.
template <class TermFn>
double euler_alternating_sum(TermFn term, int max_terms, double tol) {
  std::vector<double> wksp;
  wksp.reserve(64);
  double sum = 0.0;
  std::size_t nterm = 0;
  for (int j = 0; j < max_terms; ++j) {
    const double t = term(j);
    if (j == 0) {
      wksp.push_back(t);
      nterm = 1;
      sum = 0.5 * t;
    } else {
      double tmp = wksp[0];
      wksp[0] = t;
      for (std::size_t k = 0; k + 1 < nterm; ++k) {
        const double dum = wksp[k + 1];
        wksp[k + 1] = 0.5 * (wksp[k] + tmp);
        tmp = dum;
      }
      const double next = 0.5 * (wksp[nterm - 1] + tmp);
      double contribution;
      if (std::abs(next) <= std::abs(wksp[nterm - 1])) {
        contribution = 0.5 * next;
        if (wksp.size() <= nterm) wksp.push_back(next);
        else wksp[nterm] = next;
        ++nterm;
      } else {
        contribution = next;
      }
      sum += contribution;
      if (std::abs(contribution) < tol) return sum;
    }
  }
  return sum;
}

}  // namespace pcombine
