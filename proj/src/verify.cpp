#include "hpspec/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "hpspec/constants_oracle.hpp"
#include "hpspec/error.hpp"
#include "hpspec/inner_product.hpp"
#include "hpspec/kernels.hpp"
#include "hpspec/lft.hpp"
#include "hpspec/log_grid.hpp"
#include "hpspec/paley_wiener.hpp"
#include "hpspec/spectra.hpp"
#include "hpspec/truncation.hpp"
#include "hpspec/weyl.hpp"

namespace hpspec {

namespace {

using Rng = std::mt19937_64;

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

struct Collector {
  std::string suite;
  std::vector<CheckResult>& out;

  void check(std::string name, double value, double tol, bool passed, std::string detail = {}) {
    out.push_back({suite, std::move(name), value, tol, passed, false, std::move(detail)});
  }
  void below(std::string name, double value, double tol, std::string detail = {}) {
    check(std::move(name), value, tol, value <= tol, std::move(detail));
  }
  void skip(std::string name, std::string why) {
    out.push_back({suite, std::move(name), 0.0, 0.0, true, true, std::move(why)});
  }
};

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// A random member of the space: a short sum of inverse powers.
ClosedFormFunction random_member(const SpaceParams& space, Rng& rng) {
  const double need = space.kind() == SpaceKind::Dirichlet ? 0.5 * space.alpha() : 0.5 * space.kernel_exponent();
  ClosedFormFunction F;
  const int terms = 1 + static_cast<int>(rng() % 2);
  for (int k = 0; k < terms; ++k) {
    const cplx coeff{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    const cplx shift{uniform(rng, -1.0, 1.0), uniform(rng, 0.5, 2.0)};
    const cplx s{need + uniform(rng, 0.4, 1.5), uniform(rng, -0.5, 0.5)};
    F += ClosedFormFunction::inverse_power(coeff, shift, s);
  }
  return F;
}

void suite_constants(const VerifyOptions& opt, Collector& c) {
  if (!opt.space.has_kernel()) return c.skip("constants", "no kernel constants for Dirichlet spaces");
  const auto r = verify_constants(opt.space);
  const double worst = std::max(r.corrected.reproducing[0].relative_error, r.corrected.reproducing[1].relative_error);
  c.below("corrected set: reproducing", worst, opt.tol.reproducing);
  c.check("corrected set: diagonal positivity", r.corrected.diagonals[0].real(), 0.0, r.corrected.positivity_pass,
          fmt("K_i(i) = %.6e %+.3ei", r.corrected.diagonals[0].real(), r.corrected.diagonals[0].imag()));
  c.below("corrected set: c d = (2i)^(a+2)", rel_diff(r.corrected.cd, r.corrected.cd_target), 1e-12);
  // The printed set is consistent exactly when i^{a+2} = i, i.e. a = -1 mod 4.
  const bool printed_ok = std::remainder(opt.space.alpha() + 1.0, 4.0) == 0.0;
  c.check("printed set: round trip behaves as documented", rel_diff(r.printed.cd, r.printed.cd_target), 1e-12,
          r.printed.round_trip_pass == printed_ok,
          fmt("c d = %.6e %+.6ei", r.printed.cd.real(), r.printed.cd.imag()));
  c.check("printed set: positivity behaves as documented", r.printed.diagonals[0].imag(), 1e-12,
          r.printed.positivity_pass == printed_ok,
          fmt("K_i(i) = %.6e %+.6ei", r.printed.diagonals[0].real(), r.printed.diagonals[0].imag()));
}

void suite_reproducing(const VerifyOptions& opt, Collector& c) {
  if (!opt.space.has_kernel()) return c.skip("reproducing", "no reproducing kernel for Dirichlet spaces");
  Rng rng(opt.seed);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto F = random_member(opt.space, rng);
    const cplx w0{uniform(rng, -1.5, 1.5), uniform(rng, 0.3, 2.5)};
    const cplx got = inner_product_numeric(opt.space, F, kernel_function(opt.space, w0)).value;
    worst = std::max(worst, rel_diff(got, F(w0)));
  }
  c.below("<F, K_w0> = F(w0), 20 random cases", worst, opt.tol.reproducing);
}

void suite_isometry(const VerifyOptions& opt, Collector& c) {
  double worst = 0.0;
  for (const auto& pair : exact_pairs(opt.space)) {
    worst = std::max(worst, pw_isometry_check(opt.space, pair).relative_error);
  }
  c.below("Fourier-side norm = half-plane norm, exact pairs", worst, opt.tol.isometry);

  if (opt.space.has_kernel()) {
    const double need = -0.5 * opt.space.kernel_exponent();
    std::vector<DiscFunction> members = {DiscFunction::constant(1.0), DiscFunction::monomial(1),
                                         DiscFunction::monomial(3)};
    for (double p : {0.3, 0.8, 1.5}) members.push_back(DiscFunction::power_at_one({need + p, 0.0}));
    members.push_back(DiscFunction::power_at_one({need + 0.4, 2.0}));
    members.push_back(disc_kernel_function(opt.space, {0.3, -0.2}));
    members.push_back(disc_kernel_function(opt.space, {-0.5, 0.1}) + cplx{0.0, 2.0} * DiscFunction::monomial(2));
    members.push_back(DiscFunction::power_at_one({need + 1.0, -1.0}) + DiscFunction::constant({0.5, 0.5}));
    double worst_j = 0.0;
    for (const auto& f : members) {
      const double disc = disc_norm_numeric(opt.space, f);
      const double half = norm_numeric(opt.space, apply_J(opt.space, f));
      worst_j = std::max(worst_j, std::abs(disc - half) / disc);
    }
    c.below("||J f|| = ||f||, 10 disc members", worst_j, opt.tol.j_isometry);
  }

  Rng rng(opt.seed ^ 0x5bd1e995ULL);
  const double exponent = opt.space.kind() == SpaceKind::Dirichlet ? opt.space.alpha() : opt.space.kernel_exponent();
  double worst_s = 0.0;
  for (int k = 0; k < 10; ++k) {
    const auto F = random_member(opt.space, rng);
    const double mu = k % 2 == 0 ? uniform(rng, 0.3, 0.9) : uniform(rng, 1.2, 3.0);
    const auto map = LFTMap::make(mu, uniform(rng, -1.0, 1.0));
    const double lhs = std::pow(norm_numeric(opt.space, apply_composition(map, F)), 2);
    const double rhs = std::pow(mu, -exponent) * std::pow(norm_numeric(opt.space, F), 2);
    worst_s = std::max(worst_s, std::abs(lhs - rhs) / rhs);
  }
  c.below("||F o tau||^2 = mu^-(a+2) ||F||^2, automorphisms", worst_s, opt.tol.scaled_isometry);
}

void suite_parabolic(const VerifyOptions& opt, Collector& c) {
  const LogGrid grid(1e-3, 1.001, 9211);
  Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  for (cplx w0 : {cplx{1.0, 0.0}, cplx{0.0, 1.0}, cplx{1.0, 1.0}}) {
    const std::string tag = fmt("w0 = %g%+gi", w0.real(), w0.imag());
    const auto map = LFTMap::make(1.0, w0);
    const auto set = spectrum(opt.space, map);
    const auto op = build_truncation(fourier_descriptor(map, opt.space), opt.space, grid);
    const auto osc = oscillation_bounds(w0, grid);
    const auto d = op.diagonal_entries();
    double worst_margin = -kInf;
    for (std::size_t j = 0; j < d.size(); j += 7) {
      worst_margin = std::max(worst_margin, distance(set, d[j]) - osc[j]);
    }
    c.below(tag + ": diagonal within oscillation of the set", worst_margin, 0.0);

    const double max_osc = *std::max_element(osc.begin(), osc.end());
    std::vector<cplx> lambdas;
    std::vector<double> dists;
    while (lambdas.size() < 50) {
      const cplx l{uniform(rng, -1.6, 1.6), uniform(rng, -1.6, 1.6)};
      const double dist = distance(set, l);
      if (dist < 0.02) continue;
      lambdas.push_back(l);
      dists.push_back(dist);
    }
    const auto sig = min_singular_grid(op, lambdas);
    double worst = -kInf;
    for (std::size_t i = 0; i < sig.size(); ++i) worst = std::max(worst, (dists[i] - max_osc) - sig[i]);
    c.below(tag + ": sigma_min >= dist - oscillation, 50 points", worst, 0.0);

    bool monotone = true;
    bool under_sup = true;
    double prev = kInf;
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000}) {
      const double r = weyl_ratio_parabolic(opt.space, w0, 0.0, n);
      monotone = monotone && r < prev;
      under_sup = under_sup && r <= weyl_sup_bound_parabolic(w0, 0.0, n) * (1.0 + 1e-12);
      prev = r;
    }
    c.check(tag + ": Weyl ratios decrease and stay under the sup bound", prev, opt.tol.weyl_parabolic_final,
            monotone && under_sup && prev < opt.tol.weyl_parabolic_final, fmt("ratio(n=1e4) = %.3e", prev));
  }
}

void suite_hyperbolic(const VerifyOptions& opt, Collector& c) {
  const double weight_exponent = opt.space.kind() == SpaceKind::Dirichlet ? 0.5 * opt.space.alpha()
                                                                          : 0.5 * opt.space.kernel_exponent();
  for (double mu : {0.5, 0.25}) {
    const auto grid = LogGrid::for_dilation(mu);
    const auto map = LFTMap::make(mu, 0.0);
    const auto op = build_truncation(fourier_descriptor(map, opt.space), opt.space, grid);
    const double expected = std::pow(mu, -weight_exponent);
    const auto m = static_cast<Eigen::Index>(*grid.shift());
    double worst_entry = 0.0;
    for (Eigen::Index col = 0; col < op.matrix.cols(); ++col) {
      for (Eigen::Index row = 0; row < op.matrix.rows(); ++row) {
        const cplx want = row == col - m ? cplx{expected, 0.0} : cplx{};
        worst_entry = std::max(worst_entry, std::abs(op.matrix.coeff(row, col) - want));
      }
    }
    c.below(fmt("mu = %g: truncation = mu^-(a+2)/2 S^m entrywise", mu), worst_entry, 0.0);
    const double norm = operator_norm_estimate(op);
    c.below(fmt("mu = %g: operator norm estimate = spectral radius", mu),
            std::abs(norm - spectral_radius(opt.space, map)), opt.tol.norm);
    double worst_w = 0.0;
    for (int n : {2, 3, 10, 100, 400, 1000}) {
      if (!(n > -std::log(mu))) continue;
      worst_w = std::max(worst_w, std::abs(weyl_ratio_hyperbolic(opt.space, mu, 0.7, n) -
                                           weyl_ratio_hyperbolic_closed_form(opt.space, mu, n)));
    }
    c.below(fmt("mu = %g: Weyl ratio = sqrt(-2|lambda|^2 ln mu / n)", mu), worst_w, opt.tol.weyl_hyperbolic);

    const auto set = spectrum(opt.space, map);
    const auto inv_set = spectrum(opt.space, map.inverse());
    bool ok = true;
    for (const auto& l : sample_set(set, 100)) ok = ok && contains(inv_set, 1.0 / l, 1e-9);
    for (const auto& l : sample_set(inv_set, 100)) ok = ok && contains(set, 1.0 / l, 1e-9);
    c.check(fmt("mu = %g: inverse map spectrum is {1/lambda}", mu), 0.0, 1e-9, ok);
  }
}

void suite_nonauto(const VerifyOptions& opt, Collector& c) {
  const double base = opt.space.kind() == SpaceKind::Dirichlet ? opt.space.alpha() : opt.space.kernel_exponent();
  for (double mu : {0.5, 0.3}) {
    const auto disc = spectrum(opt.space, tau1(mu));
    double worst = 0.0;
    bool inside = true;
    for (int k = 0; k < 20; ++k) {
      const double p = -0.5 * base + 0.05 + 0.35 * (k % 10);
      const double q = -4.0 + 8.0 * (k / 10) + 0.7 * (k % 3);
      const auto r = eigen_residual(opt.space, mu, p, q);
      worst = std::max(worst, r.residual);
      inside = inside && contains(disc, r.eigenvalue, 1e-12);
    }
    c.below(fmt("mu = %g: eigenfunction residuals, 20 (p, q)", mu), worst, opt.tol.eigen_residual);
    c.check(fmt("mu = %g: eigenvalues lie in the spectral disc", mu), 0.0, 1e-12, inside);
  }
  if (!opt.space.has_kernel()) return c.skip("adjoint identity", "needs a kernel space");
  double worst = 0.0;
  for (double mu : {0.5, 0.25}) {
    const auto t2 = tau2(mu);
    const auto adj = adjoint_descriptor(t2, opt.space);
    for (auto [a, b] : {std::pair{cplx{0.0, 1.0}, cplx{0.5, 2.0}}, std::pair{cplx{-1.0, 0.7}, cplx{0.3, 0.4}}}) {
      const auto Ka = kernel_function(opt.space, a);
      const auto Kb = kernel_function(opt.space, b);
      const cplx lhs = inner_product_numeric(opt.space, apply_composition(t2, Ka), Kb).value;
      const cplx rhs = adj.scalar * inner_product_numeric(opt.space, Ka, apply_composition(adj.map, Kb)).value;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  c.below("<C_tau2 F, G> = mu^-(a+2) <F, C_tau1 G>, kernel pairs", worst, opt.tol.adjoint);
}

void suite_dirichlet(const VerifyOptions& opt, Collector& c) {
  const double alpha = opt.space.alpha() > -1.0 ? opt.space.alpha() : 0.0;
  const auto dir = SpaceParams::dirichlet(alpha);
  const auto berg = SpaceParams::bergman(alpha);
  const std::vector<std::pair<double, cplx>> maps = {
      {0.5, {0.0, 0.0}}, {4.0, {0.0, 1.0}}, {0.25, {1.0, 2.0}}, {3.0, {-2.0, 0.0}}, {1.0, {0.5, 1.0}}};
  bool ok = true;
  for (const auto& [mu, w0] : maps) {
    const auto map = LFTMap::make(mu, w0);
    const auto sd = spectrum(dir, map);
    const double s = map.is_parabolic() ? 1.0 : mu;
    const auto sb = spectrum(berg, map).scaled(s);
    for (const auto& l : sample_set(sd, 200)) ok = ok && contains(sb, l, opt.tol.set_identity);
    for (const auto& l : sample_set(sb, 200)) ok = ok && contains(sd, l, opt.tol.set_identity);
  }
  c.check(fmt("spectrum(D^2_a) = mu spectrum(A^2_a), a = %g, 5 maps", alpha), 0.0, opt.tol.set_identity, ok);
  double worst = 0.0;
  for (const auto& pair : exact_pairs(dir)) worst = std::max(worst, pw_isometry_check(dir, pair).relative_error);
  c.below(fmt("Dirichlet Fourier-side isometry, a = %g", alpha), worst, opt.tol.isometry);
}

void suite_radius(const VerifyOptions& opt, Collector& c) {
  Rng rng(opt.seed ^ 0xabcdef12345ULL);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double mu = k % 5 == 0 ? 1.0 : std::exp(uniform(rng, -2.5, 2.5));
    const cplx w0{uniform(rng, -3.0, 3.0), k % 3 == 0 ? 0.0 : uniform(rng, 0.0, 3.0)};
    const double alpha = uniform(rng, -0.9, 3.0);
    const SpaceParams spaces[3] = {SpaceParams::hardy(), SpaceParams::bergman(alpha), SpaceParams::dirichlet(alpha)};
    const auto& space = spaces[k % 3];
    const auto map = LFTMap::make(mu, w0);
    const auto pts = sample_set(spectrum(space, map), 64);
    double m = 0.0;
    for (const auto& p : pts) m = std::max(m, std::abs(p));
    const double r = spectral_radius(space, map);
    worst = std::max(worst, std::abs(m - r) / r);
  }
  c.below("max |sample| = spectral radius, 100 random maps", worst, opt.tol.radius);
}

void dispatch(const std::string& name, const VerifyOptions& opt, Collector& c) {
  if (name == "constants") suite_constants(opt, c);
  else if (name == "reproducing") suite_reproducing(opt, c);
  else if (name == "isometry") suite_isometry(opt, c);
  else if (name == "parabolic") suite_parabolic(opt, c);
  else if (name == "hyperbolic") suite_hyperbolic(opt, c);
  else if (name == "nonauto") suite_nonauto(opt, c);
  else if (name == "dirichlet") suite_dirichlet(opt, c);
  else if (name == "radius") suite_radius(opt, c);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"constants", "reproducing", "isometry", "parabolic",
                                                 "hyperbolic", "nonauto", "dirichlet", "radius"};
  return names;
}

std::vector<CheckResult> run_verification(const std::string& suite, const VerifyOptions& opt) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
  }
  std::vector<CheckResult> out;
  for (const auto& name : names) {
    if (suite != "all" && name != suite) continue;
    Collector c{name, out};
    try {
      dispatch(name, opt, c);
    } catch (const Error& e) {
      c.check("suite aborted", 0.0, 0.0, false, e.what());
    }
  }
  return out;
}

}  // namespace hpspec
