// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hpspec/constants_oracle.hpp"
#include "hpspec/error.hpp"
#include "hpspec/lft.hpp"
#include "hpspec/paley_wiener.hpp"
#include "hpspec/spectra.hpp"
#include "hpspec/verify.hpp"
#include "hpspec/weyl.hpp"

using namespace hpspec;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double a = 0.0, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Folds the results of a verification suite into the verdict.
void absorb(Verdict& v, const std::vector<CheckResult>& results, const std::string& tag) {
  for (const auto& r : results) {
    if (r.skipped) {
      v.require(false, tag + " skipped: " + r.name);
      continue;
    }
    v.require(r.passed, tag + " " + r.name + fmt(" (value %.3e, tol %.1e)", r.value, r.tolerance));
  }
}

VerifyOptions options_for(const SpaceParams& space) {
  VerifyOptions opt;
  opt.space = space;
  return opt;
}

SpaceParams space_for(double alpha) { return alpha == -1.0 ? SpaceParams::hardy() : SpaceParams::bergman(alpha); }

Verdict constants_oracle() {
  Verdict v;
  for (double a : {-0.5, 0.0, 1.0, 2.5}) {
    const auto r = verify_constants(SpaceParams::bergman(a));
    v.require(r.corrected.reproducing_pass, fmt("a = %g: corrected reproducing", a));
    v.require(r.corrected.positivity_pass, fmt("a = %g: corrected positivity", a));
    v.require(r.corrected.round_trip_pass, fmt("a = %g: corrected round trip", a));
  }
  const auto p = verify_constants(SpaceParams::bergman(0.0)).printed;
  v.require(!p.positivity_pass, "printed a = 0 set passes positivity");
  v.require(!p.round_trip_pass, "printed a = 0 set passes the round trip");
  v.require(std::abs(p.cd - cplx{0.0, 4.0}) <= 1e-12, "printed c d != 4i");
  v.require(std::abs(p.cd_target - cplx{-4.0, 0.0}) <= 1e-12, "(2i)^2 != -4");
  v.require(std::abs(p.diagonals.front() - cplx{0.0, -0.25}) <= 1e-12, "printed K_i(i) != -i/4");
  if (v.ok) v.detail = fmt("printed a = 0: c d = %gi, K_i(i) = %gi", p.cd.imag(), p.diagonals.front().imag());
  return v;
}

Verdict reproducing() {
  Verdict v;
  for (double a : {-1.0, 0.0, 1.0}) absorb(v, run_verification("reproducing", options_for(space_for(a))), fmt("a = %g:", a));
  return v;
}

Verdict isometry() {
  Verdict v;
  double worst = 0.0;
  for (double a : {-1.0, 0.0, 1.0, 2.5}) {
    const auto space = space_for(a);
    const auto pairs = exact_pairs(space);
    v.require(pairs.size() >= 10, fmt("a = %g: only %g exact pairs", a, static_cast<double>(pairs.size())));
    for (std::size_t k = 0; k < pairs.size() && k < 10; ++k) {
      const double e = pw_isometry_check(space, pairs[k]).relative_error;
      worst = std::max(worst, e);
      v.require(e <= 1e-5, fmt("a = %g: pair %g relative error %.3e", a, static_cast<double>(k), e));
    }
  }
  if (v.ok) v.detail = fmt("worst relative error %.3e", worst);
  return v;
}

Verdict parabolic() {
  Verdict v;
  absorb(v, run_verification("parabolic", options_for(SpaceParams::hardy())), "");
  const auto t0 = std::chrono::steady_clock::now();
  for (cplx w0 : {cplx{1.0, 0.0}, cplx{0.0, 1.0}, cplx{1.0, 1.0}}) {
    double prev = kInf;
    bool monotone = true;
    for (int n = 1; n <= 10000; ++n) {
      const double r = weyl_ratio_parabolic(SpaceParams::hardy(), w0, 0.0, n);
      monotone = monotone && r < prev;
      prev = r;
    }
    v.require(monotone, fmt("w0 = %g%+gi: Weyl ratios not monotone", w0.real(), w0.imag()));
    v.require(prev < 0.02, fmt("w0 = %g%+gi: Weyl ratio %.3e at n = 1e4", w0.real(), w0.imag(), prev));
  }
  const double weyl_time = seconds_since(t0);
  v.require(weyl_time < 1.0, fmt("Weyl ratios took %.2f s", weyl_time));
  if (v.ok) v.detail = fmt("Weyl ratios n = 1..1e4 in %.3f s", weyl_time);
  return v;
}

Verdict hyperbolic() {
  Verdict v;
  for (double a : {-1.0, 0.0, 1.0}) absorb(v, run_verification("hyperbolic", options_for(space_for(a))), fmt("a = %g:", a));
  const double r = weyl_ratio_hyperbolic(SpaceParams::hardy(), 0.5, 0.0, 100);
  v.require(std::abs(r - 0.16651) <= 1e-5, fmt("a = -1, mu = 1/2, n = 100: ratio %.6f", r));
  if (v.ok) v.detail = fmt("a = -1, mu = 1/2, n = 100: ratio %.6f", r);
  return v;
}

Verdict nonauto() {
  Verdict v;
  for (double a : {-1.0, 0.0, 1.0}) {
    const auto space = space_for(a);
    absorb(v, run_verification("nonauto", options_for(space)), fmt("a = %g:", a));
    // Eigenvalue moduli mu^{a+2+p} sweep (0, mu^{(a+2)/2}) as p runs over the admissible range.
    const double mu = 0.5;
    const double top = std::pow(mu, 0.5 * (a + 2.0));
    double lo = kInf;
    double hi = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double p = -0.5 * (a + 2.0) + std::pow(10.0, -6.0 + 0.4 * k);
      const double m = std::abs(eigen_residual(space, mu, p, 0.3 * k).eigenvalue);
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
    v.require(hi < top && hi > top * (1.0 - 1e-5), fmt("a = %g: sup of eigenvalue moduli %.6e vs %.6e", a, hi, top));
    v.require(lo > 0.0 && lo < 1e-3 * top, fmt("a = %g: inf of eigenvalue moduli %.3e", a, lo));
  }
  return v;
}

Verdict dirichlet_identity() {
  Verdict v;
  const std::vector<std::pair<double, cplx>> maps = {
      {0.5, {0.0, 0.0}}, {4.0, {0.0, 1.0}}, {0.25, {1.0, 2.0}}, {3.0, {-2.0, 0.0}}, {1.0, {0.5, 1.0}}};
  for (double a : {0.0, 1.0, 2.0}) {
    for (const auto& [mu, w0] : maps) {
      const auto map = LFTMap::make(mu, w0);
      const auto sd = spectrum(SpaceParams::dirichlet(a), map);
      const auto sb = spectrum(SpaceParams::bergman(a), map).scaled(map.is_parabolic() ? 1.0 : mu);
      bool ok = true;
      for (const auto& l : sample_set(sd, 200)) ok = ok && contains(sb, l, 1e-9);
      for (const auto& l : sample_set(sb, 200)) ok = ok && contains(sd, l, 1e-9);
      v.require(ok, fmt("a = %g, mu = %g, w0 = %g", a, mu, w0.real()) + fmt("%+gi", w0.imag()));
    }
  }
  return v;
}

Verdict radius_law() {
  Verdict v;
  absorb(v, run_verification("radius", options_for(SpaceParams::hardy())), "");
  return v;
}

struct Criterion {
  const char* name;
  double limit_s;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"constants oracle", 30.0, constants_oracle},
      {"reproducing property", 120.0, reproducing},
      {"Fourier-side isometry on exact pairs", 60.0, isometry},
      {"parabolic spectrum", 60.0, parabolic},
      {"hyperbolic automorphism", 60.0, hyperbolic},
      {"hyperbolic non-automorphism", 60.0, nonauto},
      {"Dirichlet set identity", 5.0, dirichlet_identity},
      {"radius law", 5.0, radius_law},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& c = criteria[k];
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const Error& e) {
      v.require(false, std::string("error: ") + e.what());
    }
    const double t = seconds_since(t0);
    v.require(t < c.limit_s, fmt("runtime %.2f s over the %.0f s limit", t, c.limit_s));
    failures += !v.ok;
    std::printf("%s  %zu. %s  [%.2f s]%s%s\n", v.ok ? "PASS" : "FAIL", k + 1, c.name, t, v.detail.empty() ? "" : "  ",
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
