#include "doctest.h"

#include <cmath>

#include <Eigen/Dense>

#include "hpspec/error.hpp"
#include "hpspec/lft.hpp"
#include "hpspec/spectra.hpp"
#include "hpspec/truncation.hpp"
#include "hpspec/weyl.hpp"

using namespace hpspec;

namespace {

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an hpspec::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("closed-form spectra") {
  const auto seg = spectrum(SpaceParams::hardy(), LFTMap::make(1.0, I));
  CHECK(seg.kind() == SpectralSet::Kind::ParabolicArcClosure);
  CHECK(contains(seg, 0.5, 1e-12));
  CHECK(contains(seg, 0.0, 1e-12));
  CHECK_FALSE(contains(seg, -0.5, 1e-6));

  const auto c = spectrum(SpaceParams::bergman(0.0), LFTMap::make(0.25, 0.0));
  CHECK(c.kind() == SpectralSet::Kind::Circle);
  CHECK(c.radius() == doctest::Approx(4.0));

  const auto d = spectrum(SpaceParams::bergman(0.0), LFTMap::make(2.0, I));
  CHECK(d.kind() == SpectralSet::Kind::ClosedDisc);
  CHECK(d.radius() == doctest::Approx(0.5));

  const auto dd = spectrum(SpaceParams::dirichlet(1.0), LFTMap::make(4.0, I));
  CHECK(dd.kind() == SpectralSet::Kind::ClosedDisc);
  CHECK(dd.radius() == doctest::Approx(0.5));

  const auto unit = spectrum(SpaceParams::bergman(1.0), LFTMap::make(1.0, 2.0));
  CHECK(contains(unit, std::polar(1.0, 2.0), 1e-12));
  CHECK(to_string(SpectralSet::Kind::ParabolicArcClosure) == "parabolic_arc_closure");
}

TEST_CASE("spectral radius") {
  CHECK(spectral_radius(SpaceParams::hardy(), LFTMap::make(1.0, {1.0, 1.0})) == doctest::Approx(1.0));
  CHECK(spectral_radius(SpaceParams::hardy(), LFTMap::make(0.25, 0.0)) == doctest::Approx(2.0));
  CHECK(spectral_radius(SpaceParams::bergman(2.0), LFTMap::make(2.0, I)) == doctest::Approx(0.25));
  CHECK(spectral_radius(SpaceParams::dirichlet(1.0), LFTMap::make(4.0, I)) == doctest::Approx(0.5));
}

TEST_CASE("membership and distance") {
  const auto spiral = SpectralSet::parabolic_arc_closure({1.0, 1.0});
  CHECK(contains(spiral, std::exp(cplx{-1.0, 1.0}), 1e-12));
  CHECK_FALSE(contains(SpectralSet::circle(2.0), 1.999, 1e-6));
  CHECK(distance(SpectralSet::circle(2.0), 0.5) == doctest::Approx(1.5));
  CHECK(distance(SpectralSet::closed_disc(1.0), 0.5) == 0.0);
  CHECK(distance(spiral, 0.0) == 0.0);
  // brute force along the curve
  for (cplx l : {cplx{-1.172, -1.163}, cplx{0.224, 0.433}, cplx{-0.57, -1.238}, cplx{1.5, 0.0}}) {
    double best = std::abs(l);
    for (double t = 0.0; t < 30.0; t += 1e-4) best = std::min(best, std::abs(std::exp(cplx{-t, t}) - l));
    CHECK(distance(spiral, l) <= best + 1e-12);
    CHECK(distance(spiral, l) >= best - 1e-6);
  }
}

TEST_CASE("sample sets") {
  const auto ring = sample_set(SpectralSet::circle(1.0), 4);
  REQUIRE(ring.size() == 4);
  CHECK(ring[0] == cplx{1.0, 0.0});
  CHECK(ring[1] == cplx{0.0, 1.0});
  CHECK(ring[2] == cplx{-1.0, 0.0});
  CHECK(ring[3] == cplx{0.0, -1.0});

  const auto seg = sample_set(SpectralSet::parabolic_arc_closure(I), 3);
  REQUIRE(seg.size() == 3);
  CHECK(seg[0] == cplx{1.0, 0.0});
  CHECK(std::abs(seg[1]) < 1.0);
  CHECK(seg[2] == cplx{0.0, 0.0});

  const auto disc = sample_set(SpectralSet::closed_disc(2.0), 10);
  bool has_zero = false;
  bool has_edge = false;
  for (cplx z : disc) {
    has_zero = has_zero || z == cplx{};
    has_edge = has_edge || std::abs(std::abs(z) - 2.0) < 1e-15;
    CHECK(std::abs(z) <= 2.0 + 1e-15);
  }
  CHECK(has_zero);
  CHECK(has_edge);
  CHECK(code_of([] { sample_set(SpectralSet::circle(1.0), 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("dilation truncation") {
  const auto s = SpaceParams::hardy();
  const LogGrid grid(1.0, 2.0, 4, 1);
  const auto op = build_truncation(fourier_descriptor(LFTMap::make(0.5, 0.0), s), s, grid);
  REQUIRE(op.size() == 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const cplx want = r == c - 1 ? cplx{std::sqrt(2.0), 0.0} : cplx{};
      CHECK(op.matrix.coeff(r, c) == want);
    }
  }
  CHECK(operator_norm_estimate(op) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(min_singular_grid(op, {0.0})[0] == doctest::Approx(0.0));

  const LogGrid big(1.0, 2.0, 64, 1);
  const auto op64 = build_truncation(fourier_descriptor(LFTMap::make(0.5, 0.0), s), s, big);
  CHECK(std::abs(operator_norm_estimate(op64) - std::sqrt(2.0)) <= 1e-10);

  // mu > 1 puts the weight below the diagonal
  const auto up = build_truncation(fourier_descriptor(LFTMap::make(2.0, 0.0), s), s, grid);
  CHECK(near(up.matrix.coeff(1, 0), std::sqrt(0.5), 1e-15));

  CHECK(code_of([&] { build_truncation(fourier_descriptor(LFTMap::make(0.3, 0.0), s), s, grid); }) ==
        ErrorCode::GridMismatch);
  CHECK(code_of([&] {
          build_truncation(fourier_descriptor(LFTMap::make(0.5, 0.0), s), s, LogGrid(1.0, 2.0, 4));
        }) == ErrorCode::GridMismatch);
}

TEST_CASE("dilation weights") {
  CHECK(dilation_weight(SpaceParams::bergman(0.0), 0.5) == doctest::Approx(2.0));
  CHECK(dilation_weight(SpaceParams::dirichlet(2.0), 0.5) == doctest::Approx(2.0));
  const auto grid = LogGrid::for_dilation(0.25);
  REQUIRE(grid.shift().has_value());
  CHECK(std::abs(*grid.shift() * grid.log_ratio() - std::log(4.0)) < 1e-12);
}

TEST_CASE("multiplication truncation") {
  const auto s = SpaceParams::hardy();
  const LogGrid grid(0.01, 1.05, 200);
  const auto op = build_truncation(fourier_descriptor(LFTMap::make(1.0, I), s), s, grid);
  CHECK(op.diagonal);
  const auto d = op.diagonal_entries();
  CHECK(std::abs(d.back()) < 1e-3);
  CHECK(std::abs(d.front()) <= 1.0);
  CHECK(operator_norm_estimate(op) <= 1.0);
  CHECK(operator_norm_estimate(op) == doctest::Approx(std::abs(d.front())).epsilon(1e-12));

  const auto unit = build_truncation(fourier_descriptor(LFTMap::make(1.0, 1.0), s), s, grid);
  for (cplx z : unit.diagonal_entries()) CHECK(std::abs(z) <= 1.0 + 1e-15);
  CHECK(min_singular_grid(unit, {2.0})[0] >= 1.0);
  const cplx on_curve = unit.diagonal_entries()[17];
  CHECK(min_singular_grid(unit, {on_curve})[0] == 0.0);

  // bin average against a nontrivial weight
  const double beta = 1.0;
  const cplx w0{1.0, 0.5};
  cplx num{};
  double den = 0.0;
  const int n = 100000;
  for (int j = 0; j < n; ++j) {
    const double t = 1.0 + (j + 0.5) / n;
    num += std::exp(I * w0 * t) / t;
    den += 1.0 / t;
  }
  CHECK(near(symbol_bin_average(w0, beta, 1.0, 2.0), num / den, 1e-9));
}

TEST_CASE("zero operator") {
  TruncatedOperator op;
  op.matrix.resize(5, 5);
  CHECK(operator_norm_estimate(op) == 0.0);
}

TEST_CASE("non-diagonal smallest singular value") {
  const auto s = SpaceParams::bergman(0.0);
  const auto op = build_truncation(fourier_descriptor(LFTMap::make(0.5, 0.0), s), s, LogGrid(1.0, 2.0, 30, 1));
  // 4 S - lambda I with |lambda| > 4 + margin is well conditioned
  const auto sig = min_singular_grid(op, {cplx{10.0, 0.0}, cplx{0.0, -7.0}});
  CHECK(sig[0] >= 6.0 - 1e-9);
  CHECK(sig[1] >= 3.0 - 1e-9);
  const Eigen::MatrixXcd dense = Eigen::MatrixXcd(op.matrix) - 10.0 * Eigen::MatrixXcd::Identity(30, 30);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense);
  CHECK(sig[0] == doctest::Approx(svd.singularValues().minCoeff()).epsilon(1e-8));
}

TEST_CASE("parabolic Weyl ratios") {
  const auto h = SpaceParams::hardy();
  CHECK(weyl_ratio_parabolic(h, I, 0.0, 10) <= 1.0 - std::exp(-0.1));
  CHECK(weyl_sup_bound_parabolic(I, 0.0, 10) == doctest::Approx(1.0 - std::exp(-0.1)));
  double prev = 1e300;
  for (int n : {1, 10, 100, 1000, 10000}) {
    const double r = weyl_ratio_parabolic(h, 1.0, 0.0, n);
    CHECK(r < prev);
    prev = r;
  }
  CHECK(prev < 1e-3);
  CHECK(weyl_ratio_parabolic(SpaceParams::bergman(0.0), I, 1.0, 10) <= 0.04);
}

TEST_CASE("hyperbolic Weyl ratios") {
  const auto h = SpaceParams::hardy();
  CHECK(weyl_ratio_hyperbolic(h, 0.5, 0.3, 100) == doctest::Approx(0.16651).epsilon(1e-4));
  CHECK(std::abs(weyl_ratio_hyperbolic(h, 0.5, 0.3, 100) - std::sqrt(4.0 * std::log(2.0) / 100.0)) < 1e-12);
  const auto b = SpaceParams::bergman(0.0);
  CHECK(std::abs(weyl_ratio_hyperbolic(b, 0.5, 1.0, 100) - std::sqrt(8.0 * std::log(2.0)) / 10.0) < 1e-12);
  CHECK(weyl_ratio_hyperbolic(b, 0.5, 0.0, 400) ==
        doctest::Approx(weyl_ratio_hyperbolic(b, 0.5, 0.0, 100) / 2.0).epsilon(1e-12));
  for (int n : {2, 5, 12}) {
    CHECK(weyl_ratio_hyperbolic_direct(b, 0.25, 0.7, n) ==
          doctest::Approx(weyl_ratio_hyperbolic(b, 0.25, 0.7, n)).epsilon(1e-8));
  }
  CHECK(code_of([&] { weyl_ratio_hyperbolic(h, 0.1, 0.0, 2); }) == ErrorCode::WindowViolation);
}

TEST_CASE("eigenfunctions of tau1") {
  const auto h = SpaceParams::hardy();
  auto r = eigen_residual(h, 0.5, 0.0, 0.0);
  CHECK(r.residual <= 1e-12);
  CHECK(near(r.eigenvalue, 0.5, 1e-15));
  const auto b = SpaceParams::bergman(0.0);
  r = eigen_residual(b, 0.5, 1.0, 0.0);
  CHECK(r.residual <= 1e-12);
  CHECK(near(r.eigenvalue, 0.125, 1e-15));
  r = eigen_residual(b, 0.5, 0.0, 5.0);
  CHECK(r.residual <= 1e-12);
  CHECK(std::abs(r.eigenvalue) == doctest::Approx(0.25));
  CHECK(contains(spectrum(b, tau1(0.5)), r.eigenvalue, 1e-12));
  CHECK(code_of([&] { eigen_residual(b, 0.5, -1.0, 0.0); }) == ErrorCode::MembershipViolation);
  CHECK(eigen_residual(SpaceParams::dirichlet(1.0), 0.5, 0.0, 2.0).residual <= 1e-12);
}
