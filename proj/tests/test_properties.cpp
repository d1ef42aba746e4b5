#include "doctest.h"

#include <cmath>
#include <random>

#include "hpspec/cayley.hpp"
#include "hpspec/error.hpp"
#include "hpspec/fourier_side.hpp"
#include "hpspec/kernels.hpp"
#include "hpspec/lft.hpp"
#include "hpspec/paley_wiener.hpp"
#include "hpspec/spectra.hpp"

using namespace hpspec;

namespace {

// Small generator kit over mt19937_64; each property draws from its own seed.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }
  bool coin() { return integer(0, 1) == 1; }
  cplx upper(double xr = 3.0, double y_lo = 0.05, double y_hi = 3.0) {
    return {uniform(-xr, xr), uniform(y_lo, y_hi)};
  }
  cplx disc_point(double r_max = 0.95) { return std::polar(r_max * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * kPi)); }
  cplx complex(double r) { return {uniform(-r, r), uniform(-r, r)}; }
  double slope() {
    for (;;) {
      const double mu = std::exp(uniform(-2.5, 2.5));
      if (std::abs(mu - 1.0) > 1e-3) return mu;
    }
  }
  LFTMap map() {
    const int kind = integer(0, 3);
    const double mu = kind < 2 ? 1.0 : slope();
    cplx w0 = (kind % 2 == 0) ? cplx{uniform(-3.0, 3.0), 0.0} : upper();
    if (mu == 1.0 && w0 == cplx{}) w0 = 1.0;
    return LFTMap::make(mu, w0);
  }
  SpaceParams space() {
    switch (integer(0, 2)) {
      case 0: return SpaceParams::hardy();
      case 1: return SpaceParams::bergman(uniform(-0.9, 3.0));
      default: return SpaceParams::dirichlet(uniform(-0.9, 3.0));
    }
  }
};

constexpr int kCases = 100;

}  // namespace

TEST_CASE("property: conjugation to canonical form round-trips") {
  Gen g(11);
  for (int k = 0; k < kCases; ++k) {
    const auto m = g.map();
    const auto c = normalize_conjugation(m);
    for (int j = 0; j < 3; ++j) {
      const cplx w = g.upper();
      const cplx lhs = c.conjugator(c.canonical(c.conjugator.inverse()(w)));
      CHECK(std::abs(lhs - m(w)) <= 1e-12 * std::max(1.0, std::abs(m(w))));
    }
    if (c.form == CanonicalForm::Tau1) CHECK(match_tau1(c.canonical).has_value());
    if (c.form == CanonicalForm::Tau2) CHECK(match_tau2(c.canonical).has_value());
  }
}

TEST_CASE("property: fixed points are fixed and multipliers match") {
  Gen g(12);
  for (int k = 0; k < kCases; ++k) {
    const auto m = g.map();
    const auto c = classify(m);
    CHECK(c.at_infinity.point.infinite);
    CHECK(c.at_infinity.multiplier == doctest::Approx(1.0 / m.mu()));
    CHECK(angular_derivative_infinity(m) == doctest::Approx(1.0 / m.mu()));
    if (m.is_parabolic()) {
      CHECK_FALSE(c.finite.has_value());
    } else {
      REQUIRE(c.finite.has_value());
      const cplx p = c.finite->point.value;
      CHECK(std::abs(m(p) - p) <= 1e-12 * std::max(1.0, std::abs(p)));
      CHECK((c.finite->role == FixedPointRole::Attractive) == (m.mu() < 1.0));
    }
  }
}

TEST_CASE("property: composition intertwines with the Fourier-side operator") {
  Gen g(13);
  for (int k = 0; k < kCases; ++k) {
    const auto s = g.space();
    const double beta = s.fourier_weight_exponent();
    const double p = std::max(0.5 * (beta - 1.0), -1.0) + g.uniform(0.1, 2.0);
    const cplx rate{-g.uniform(0.3, 2.0), g.uniform(-2.0, 2.0)};
    const auto f = g.uniform(0.5, 2.0) * FourierSideFunction::power_exp(p, rate);
    const auto F = density_to_function(f);
    const LFTMap m = g.coin() ? LFTMap::make(1.0, g.coin() ? cplx{g.uniform(-2.0, 2.0), 0.0} : g.upper())
                              : LFTMap::make(g.slope(), 0.0);
    const auto desc = fourier_descriptor(m, s);
    const auto lhs = apply_composition(m, F);
    const auto image = desc.apply(f);
    const cplx w = g.upper(2.0, 0.2, 2.0);
    const cplx a = lhs(w);
    const cplx b = synthesize(image, w).value;
    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("property: kernel density synthesizes the kernel on a lattice") {
  Gen g(14);
  for (int k = 0; k < 20; ++k) {
    const auto s = g.coin() ? SpaceParams::hardy() : SpaceParams::bergman(g.uniform(-0.9, 3.0));
    const cplx w0 = g.upper(2.0, 0.3, 2.0);
    const auto f = kernel_density(s, w0);
    for (int a = 0; a < 5; ++a) {
      for (int b = 0; b < 5; ++b) {
        const cplx w{-2.0 + a, 0.2 + 0.5 * b};
        const cplx K = kernel_halfplane(s, w0, w);
        CHECK(std::abs(synthesize(f, w).value - K) <= 1e-10 * std::max(1.0, std::abs(K)));
      }
    }
  }
}

TEST_CASE("property: J^{-1} J is the identity on the disc family") {
  Gen g(15);
  for (int k = 0; k < kCases; ++k) {
    const auto s = g.coin() ? SpaceParams::hardy() : SpaceParams::bergman(g.uniform(-0.9, 3.0));
    DiscFunction f = DiscFunction::power_at_one({g.uniform(-0.4, 3.0), g.uniform(-2.0, 2.0)}, g.complex(2.0));
    if (g.coin()) f += disc_kernel_function(s, g.disc_point(0.8));
    if (g.coin()) f += DiscFunction::monomial(g.integer(0, 4));
    const auto back = apply_J_inv(s, apply_J(s, f));
    const cplx z = g.disc_point(0.9);
    CHECK(std::abs(back(z) - f(z)) <= 1e-11 * std::max(1.0, std::abs(f(z))));
    const cplx w = g.upper();
    const cplx J = apply_J(s, f)(w);
    CHECK(std::abs(J - apply_J_pointwise(s, f, w)) <= 1e-11 * std::max(1.0, std::abs(J)));
  }
}

TEST_CASE("property: Fourier-side norm is homogeneous and J is linear") {
  Gen g(16);
  for (int k = 0; k < kCases; ++k) {
    const auto s = g.space();
    const double beta = s.fourier_weight_exponent();
    const double p = std::max(0.5 * (beta - 1.0), -1.0) + g.uniform(0.1, 2.0);
    const auto f = FourierSideFunction::power_exp(p, {-g.uniform(0.3, 2.0), g.uniform(-2.0, 2.0)});
    const cplx c = g.complex(3.0);
    CHECK(norm_fourier_side(s, c * f) == doctest::Approx(std::abs(c) * norm_fourier_side(s, f)).epsilon(1e-13));
  }
  for (int k = 0; k < kCases; ++k) {
    const auto s = SpaceParams::bergman(g.uniform(-0.9, 3.0));
    const auto a = DiscFunction::power_at_one({g.uniform(0.0, 2.0), 0.0});
    const auto b = disc_kernel_function(s, g.disc_point());
    const cplx c = g.complex(2.0);
    const cplx w = g.upper();
    const cplx lhs = apply_J(s, a + c * b)(w);
    const cplx rhs = apply_J(s, a)(w) + c * apply_J(s, b)(w);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("property: Cayley transform round-trips") {
  Gen g(17);
  for (int k = 0; k < kCases; ++k) {
    const cplx z = g.disc_point(0.99);
    const auto w = cayley_h(z);
    CHECK(w.value.imag() > 0.0);
    CHECK(std::abs(cayley_h_inv(w) - z) <= 1e-13);
  }
}

TEST_CASE("property: sampled spectra stay inside and attain the radius") {
  Gen g(18);
  for (int k = 0; k < kCases; ++k) {
    const auto s = g.space();
    const auto m = g.map();
    const auto set = spectrum(s, m);
    const auto pts = sample_set(set, 64);
    double top = 0.0;
    for (cplx z : pts) {
      CHECK(contains(set, z, 1e-9));
      top = std::max(top, std::abs(z));
    }
    CHECK(std::abs(top - spectral_radius(s, m)) <= 1e-12 * std::max(1.0, top));
    CHECK(set.max_modulus() == doctest::Approx(spectral_radius(s, m)).epsilon(1e-14));
  }
}
