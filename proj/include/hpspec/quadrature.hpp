#pragma once

// Gauss-Legendre rules and adaptive integration for real- and complex-valued
// integrands. All routines are reentrant.

#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <type_traits>
#include <vector>

namespace hpspec::quad {

struct Rule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule. Rules for n <= 128 are computed once and cached.
const Rule& gauss_legendre(int n);

template <class T>
struct Estimate {
  T value{};
  double error = 0.0;
  bool converged = true;
  int evaluations = 0;
};

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int order = 16;
  int max_intervals = 6000;
};

template <class Fn>
using result_t = std::invoke_result_t<Fn&, double>;

// Fixed rule on [a, b].
template <class Fn>
result_t<Fn> fixed(Fn& f, double a, double b, const Rule& rule) {
  using R = result_t<Fn>;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  R sum{};
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  }
  return sum * half;
}

// Globally adaptive bisection on a finite interval. The local error of an
// interval is |Q(I) - Q(I_left) - Q(I_right)|; the interval with the largest
// error is split until the summed error meets the tolerance.
template <class Fn>
Estimate<result_t<Fn>> adaptive(Fn&& f, double a, double b, const Options& opt = {}) {
  using R = result_t<Fn>;
  struct Piece {
    double a, b;
    R value;
    double error;
    bool operator<(const Piece& other) const { return error < other.error; }
  };
  const Rule& rule = gauss_legendre(opt.order);
  const int per_call = static_cast<int>(rule.nodes.size());
  Estimate<R> out;
  if (a == b) return out;

  auto make = [&](double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const R whole = fixed(f, lo, hi, rule);
    const R left = fixed(f, lo, mid, rule);
    const R right = fixed(f, mid, hi, rule);
    out.evaluations += 3 * per_call;
    return Piece{lo, hi, left + right, std::abs(whole - (left + right))};
  };

  std::priority_queue<Piece> heap;
  heap.push(make(a, b));
  R total = heap.top().value;
  double total_err = heap.top().error;
  int intervals = 1;
  while (true) {
    const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    if (total_err <= target) break;
    if (intervals >= opt.max_intervals) {
      out.converged = false;
      break;
    }
    Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // interval exhausted at machine resolution; keep its estimate
      out.converged = false;
      heap.push(Piece{worst.a, worst.b, worst.value, 0.0});
      total_err -= worst.error;
      continue;
    }
    Piece lp = make(worst.a, mid);
    Piece rp = make(mid, worst.b);
    total += (lp.value + rp.value) - worst.value;
    total_err += lp.error + rp.error - worst.error;
    heap.push(lp);
    heap.push(rp);
    ++intervals;
  }
  // resum to shed the drift of the running updates
  R sum{};
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = sum;
  out.error = err;
  return out;
}

// Integral over [a, inf) by doubling panels [a, a+h], [a+h, a+3h], ...
// Stops once two consecutive panels contribute less than the tolerance.
template <class Fn>
Estimate<result_t<Fn>> to_infinity(Fn&& f, double a, double first_width, const Options& opt = {},
                                   int max_panels = 256) {
  using R = result_t<Fn>;
  Estimate<R> out;
  double lo = a;
  double width = first_width;
  int quiet = 0;
  Options panel = opt;
  for (int p = 0; p < max_panels; ++p) {
    // later panels only need accuracy relative to what has been accumulated
    panel.abs_tol = std::max(opt.abs_tol, 0.1 * opt.rel_tol * std::abs(out.value));
    auto piece = adaptive(f, lo, lo + width, panel);
    out.value += piece.value;
    out.error += piece.error;
    out.evaluations += piece.evaluations;
    out.converged = out.converged && piece.converged;
    const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(out.value));
    quiet = (std::abs(piece.value) <= target) ? quiet + 1 : 0;
    if (quiet >= 2) return out;
    lo += width;
    width *= 2.0;
    if (!std::isfinite(lo)) break;
  }
  out.converged = false;
  return out;
}

// Integral of f over (a, b] with a >= 0 and b possibly infinite, split at t = 1.
// The part below 1 is integrated after t = exp(-u), which absorbs weights t^q
// with q > -1 near the origin; the part above 1 uses doubling panels.
template <class Fn>
Estimate<result_t<Fn>> half_line(Fn&& f, double a, double b, const Options& opt = {}) {
  using R = result_t<Fn>;
  Estimate<R> out;
  auto add = [&out](const Estimate<R>& e) {
    out.value += e.value;
    out.error += e.error;
    out.evaluations += e.evaluations;
    out.converged = out.converged && e.converged;
  };
  if (a < 1.0) {
    const double hi = std::min(b, 1.0);
    auto g = [&f](double u) { const double t = std::exp(-u); return f(t) * t; };
    const double u_hi = -std::log(hi);
    if (a == 0.0) {
      add(to_infinity(g, u_hi, 1.0, opt));
    } else {
      add(adaptive(g, u_hi, -std::log(a), opt));
    }
  }
  if (b > 1.0) {
    const double lo = std::max(a, 1.0);
    if (std::isinf(b)) {
      add(to_infinity(f, lo, 1.0, opt));
    } else {
      add(adaptive(f, lo, b, opt));
    }
  }
  return out;
}

}  // namespace hpspec::quad
