#include "hpspec/inner_product.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "hpspec/error.hpp"

namespace hpspec {

namespace {

void require_inverse_power(double need, cplx exponent) {
  if (!(exponent.real() > need)) {
    throw Error(ErrorCode::NonConvergent, "inverse power exponent too small for the space");
  }
}

// Real-axis centre of the singularities, used to place the x substitution.
double centre_of(const ClosedFormFunction& F, const ClosedFormFunction& G) {
  double sum = 0.0;
  int count = 0;
  for (const auto* f : {&F, &G}) {
    for (const auto& term : f->terms()) {
      if (const auto* p = std::get_if<InversePowerTerm>(&term)) {
        sum -= p->shift.real();
        ++count;
      }
    }
  }
  return count == 0 ? 0.0 : sum / count;
}

void accumulate(quad::Estimate<cplx>& into, const quad::Estimate<cplx>& e, cplx scale = 1.0) {
  into.value += scale * e.value;
  into.error += std::abs(scale) * e.error;
  into.evaluations += e.evaluations;
  into.converged = into.converged && e.converged;
}

// int_R F(x+iy) conj(G(x+iy)) dx with x = xc + L sinh(u); algebraic decay in x
// becomes exponential decay in u.
quad::Estimate<cplx> line_integral(const ClosedFormFunction& F, const ClosedFormFunction& G,
                                   double y, double xc, double margin, double rel_tol) {
  const double L = y + margin;
  auto side = [&](double sign) {
    return [&, sign](double u) {
      const cplx w{xc + sign * L * std::sinh(u), y};
      return F(w) * std::conj(G(w)) * (L * std::cosh(u));
    };
  };
  quad::Options opt;
  opt.rel_tol = rel_tol;
  opt.abs_tol = 1e-300;
  quad::Estimate<cplx> out;
  accumulate(out, quad::to_infinity(side(1.0), 0.0, 1.0, opt));
  accumulate(out, quad::to_infinity(side(-1.0), 0.0, 1.0, opt));
  return out;
}

// Polynomial extrapolation to y = 0 through (ys[i], vs[i]).
cplx neville_at_zero(const std::vector<double>& ys, const std::vector<cplx>& vs) {
  std::vector<cplx> p(vs);
  const std::size_t n = p.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      const double a = ys[i];
      const double b = ys[i + level];
      p[i] = (b * p[i] - a * p[i + 1]) / (b - a);
    }
  }
  return p[0];
}

quad::Estimate<cplx> hardy_halfplane(const ClosedFormFunction& F, const ClosedFormFunction& G,
                                     const InnerProductOptions& opt) {
  const double margin = std::min(F.singularity_margin(), G.singularity_margin());
  const double xc = centre_of(F, G);
  constexpr std::size_t kWindow = 6;
  std::vector<double> ys;
  std::vector<cplx> vs;
  quad::Estimate<cplx> out;
  cplx previous{};
  bool have_previous = false;
  double y = margin;
  for (int k = 0; k < 40; ++k, y *= 0.5) {
    auto line = line_integral(F, G, y, xc, margin, 0.01 * opt.rel_tol);
    out.evaluations += line.evaluations;
    out.converged = out.converged && line.converged;
    ys.push_back(y);
    vs.push_back(line.value);
    if (ys.size() > kWindow) {
      ys.erase(ys.begin());
      vs.erase(vs.begin());
    }
    if (ys.size() < 3) continue;
    const cplx current = neville_at_zero(ys, vs);
    if (have_previous) {
      const double diff = std::abs(current - previous);
      if (diff <= opt.rel_tol * std::abs(current) || diff == 0.0) {
        out.value = current;
        out.error = diff + line.error;
        return out;
      }
    }
    previous = current;
    have_previous = true;
  }
  throw Error(ErrorCode::NonConvergent, "Hardy line integrals did not stabilise as y -> 0");
}

quad::Estimate<cplx> bergman_halfplane(double alpha, const ClosedFormFunction& F,
                                       const ClosedFormFunction& G, const InnerProductOptions& opt) {
  const double margin = std::min(F.singularity_margin(), G.singularity_margin());
  const double xc = centre_of(F, G);
  const double inner_tol = 0.01 * opt.rel_tol;
  quad::Estimate<cplx> inner_total;
  auto inner = [&](double y) {
    auto e = line_integral(F, G, y, xc, margin, inner_tol);
    inner_total.evaluations += e.evaluations;
    inner_total.converged = inner_total.converged && e.converged;
    return e.value;
  };
  quad::Options outer;
  outer.rel_tol = opt.rel_tol;
  outer.abs_tol = 1e-300;
  outer.max_intervals = 400;

  const double y0 = margin;
  quad::Estimate<cplx> out;
  if (alpha < 0.0) {
    // y = y0 v^g, g = 1/(a+1): y^a dy = y0^{a+1} g dv
    const double g = 1.0 / (alpha + 1.0);
    auto low = [&](double v) { return inner(y0 * std::pow(v, g)); };
    accumulate(out, quad::adaptive(low, 0.0, 1.0, outer), std::pow(y0, alpha + 1.0) * g);
  } else {
    auto low = [&](double y) { return inner(y) * std::pow(y, alpha); };
    accumulate(out, quad::adaptive(low, 0.0, y0, outer));
  }
  // y = y0 e^u on [y0, inf)
  auto high = [&](double u) {
    const double y = y0 * std::exp(u);
    return inner(y) * std::pow(y, alpha) * y;
  };
  accumulate(out, quad::to_infinity(high, 0.0, 1.0, outer));
  out.evaluations += inner_total.evaluations;
  out.converged = out.converged && inner_total.converged;
  return out;
}

// int_0^{2 pi} u(theta) d theta with exponential grading towards theta = 0 and
// theta = 2 pi (evaluated as -theta), where every (1 - z)^s singularity sits.
quad::Estimate<cplx> circle_integral(const std::function<cplx(double)>& u, double rel_tol) {
  quad::Options opt;
  opt.rel_tol = rel_tol;
  opt.abs_tol = 1e-300;
  quad::Estimate<cplx> out;
  auto near_zero = [&](double s) {
    const double th = kPi * std::exp(-s);
    return u(th) * th;
  };
  auto near_two_pi = [&](double s) {
    const double th = kPi * std::exp(-s);
    return u(-th) * th;
  };
  accumulate(out, quad::to_infinity(near_zero, 0.0, 1.0, opt));
  accumulate(out, quad::to_infinity(near_two_pi, 0.0, 1.0, opt));
  return out;
}

void check_result(const quad::Estimate<cplx>& e, double rel_tol) {
  const double scale = std::max(std::abs(e.value), 1e-300);
  if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag()) ||
      (!e.converged && e.error > 1e3 * rel_tol * scale)) {
    throw Error(ErrorCode::NonConvergent, "quadrature did not meet its tolerance");
  }
}

}  // namespace

void require_convergent(const SpaceParams& space, const ClosedFormFunction& F) {
  const double alpha = space.alpha();
  const double need = space.kind() == SpaceKind::Dirichlet ? alpha / 2.0 : (alpha + 2.0) / 2.0;
  const double beta = space.fourier_weight_exponent();
  for (const auto& term : F.terms()) {
    if (const auto* p = std::get_if<InversePowerTerm>(&term)) {
      if (p->coeff != cplx{}) require_inverse_power(need, p->exponent);
    } else {
      const FourierSideFunction f({std::get<FourierImageTerm>(term).density});
      if (!f.in_weighted_l2(beta)) {
        throw Error(ErrorCode::NonConvergent, "Fourier density not in the weighted L^2 space");
      }
    }
  }
}

void require_convergent(const SpaceParams& space, const DiscFunction& f) {
  if (!space.has_kernel()) throw Error(ErrorCode::InvalidSpace, "disc Dirichlet spaces are not supported");
  const double need = -(space.alpha() + 2.0) / 2.0;
  for (const auto& t : f.terms()) {
    if (t.coeff == cplx{} || t.exponent == cplx{}) continue;
    if (std::abs(t.center) < 1.0) continue;
    if (t.center != cplx{1.0, 0.0}) {
      throw Error(ErrorCode::NonConvergent, "boundary singularity away from z = 1");
    }
    if (!(t.exponent.real() > need)) {
      throw Error(ErrorCode::NonConvergent, "(1 - z)^s is not in the space for this s");
    }
  }
}

quad::Estimate<cplx> inner_product_numeric(const SpaceParams& space, const ClosedFormFunction& F,
                                           const ClosedFormFunction& G,
                                           const InnerProductOptions& opt) {
  require_convergent(space, F);
  require_convergent(space, G);
  if (F.terms().empty() || G.terms().empty()) return {};
  quad::Estimate<cplx> out;
  switch (space.kind()) {
    case SpaceKind::Hardy:
      out = hardy_halfplane(F, G, opt);
      break;
    case SpaceKind::Bergman:
      out = bergman_halfplane(space.alpha(), F, G, opt);
      break;
    case SpaceKind::Dirichlet:
      out = bergman_halfplane(space.alpha(), F.derivative(), G.derivative(), opt);
      break;
  }
  check_result(out, opt.rel_tol);
  return out;
}

double norm_numeric(const SpaceParams& space, const ClosedFormFunction& F,
                    const InnerProductOptions& opt) {
  return std::sqrt(std::max(0.0, inner_product_numeric(space, F, F, opt).value.real()));
}

quad::Estimate<cplx> disc_inner_product_numeric(const SpaceParams& space, const DiscFunction& f,
                                                const DiscFunction& g,
                                                const InnerProductOptions& opt) {
  require_convergent(space, f);
  require_convergent(space, g);
  quad::Estimate<cplx> out;
  if (space.kind() == SpaceKind::Hardy) {
    auto u = [&](double th) { return f.at_polar(0.0, th) * std::conj(g.at_polar(0.0, th)); };
    accumulate(out, circle_integral(u, 0.01 * opt.rel_tol), 1.0 / (2.0 * kPi));
  } else {
    // rho = 1 - r^2 = v^gamma, gamma = 1/(a+1): (1-r^2)^a r dr = (gamma/2) dv
    const double gamma = 1.0 / (space.alpha() + 1.0);
    quad::Estimate<cplx> inner_total;
    auto radial = [&](double v) {
      const double rho = std::pow(v, gamma);
      const double delta = rho / (1.0 + std::sqrt(std::max(0.0, 1.0 - rho)));
      auto u = [&](double th) { return f.at_polar(delta, th) * std::conj(g.at_polar(delta, th)); };
      auto e = circle_integral(u, 0.01 * opt.rel_tol);
      inner_total.evaluations += e.evaluations;
      inner_total.converged = inner_total.converged && e.converged;
      return e.value;
    };
    quad::Options outer;
    outer.rel_tol = opt.rel_tol;
    outer.abs_tol = 1e-300;
    outer.max_intervals = 400;
    // v = e^{-u} turns the power-law behaviour at the boundary into exponential decay
    auto graded = [&](double u) {
      const double v = std::exp(-u);
      return radial(v) * v;
    };
    accumulate(out, quad::to_infinity(graded, 0.0, 1.0, outer), 0.5 * gamma);
    out.evaluations += inner_total.evaluations;
    out.converged = out.converged && inner_total.converged;
  }
  check_result(out, opt.rel_tol);
  return out;
}

double disc_norm_numeric(const SpaceParams& space, const DiscFunction& f,
                         const InnerProductOptions& opt) {
  return std::sqrt(std::max(0.0, disc_inner_product_numeric(space, f, f, opt).value.real()));
}

}  // namespace hpspec
