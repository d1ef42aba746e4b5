#include "doctest.h"

#include <cmath>

#include "hpspec/cayley.hpp"
#include "hpspec/error.hpp"
#include "hpspec/inner_product.hpp"
#include "hpspec/kernels.hpp"
#include "hpspec/spaces.hpp"

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

TEST_CASE("space parameters") {
  CHECK(SpaceParams::hardy().alpha() == -1.0);
  CHECK(SpaceParams::hardy().fourier_weight_exponent() == 0.0);
  CHECK(SpaceParams::bergman(2.0).fourier_weight_exponent() == 3.0);
  CHECK(SpaceParams::dirichlet(1.0).fourier_weight_exponent() == 0.0);
  CHECK(SpaceParams::bergman(0.5).kernel_exponent() == 2.5);
  CHECK_FALSE(SpaceParams::dirichlet(0.0).has_kernel());
  CHECK(code_of([] { SpaceParams::bergman(-1.0); }) == ErrorCode::InvalidSpace);
  CHECK(code_of([] { SpaceParams::dirichlet(-2.0); }) == ErrorCode::InvalidSpace);
  CHECK(code_of([] { SpaceParams::bergman(std::nan("")); }) == ErrorCode::InvalidSpace);
}

TEST_CASE("cayley transform") {
  CHECK(near(cayley_h(0.0).value, I, 1e-15));
  CHECK(near(cayley_h(-1.0).value, 0.0, 1e-15));
  CHECK(near(cayley_h(I).value, -1.0, 1e-15));
  CHECK(cayley_h(1.0).infinite);
  CHECK(near(cayley_h_inv(I), 0.0, 1e-15));
  CHECK(near(cayley_h_inv(cplx{0.0}), -1.0, 1e-15));
  CHECK(cayley_h_inv(ExtendedPoint::infinity()) == cplx{1.0, 0.0});
  for (cplx z : {cplx{0.3, -0.4}, cplx{-0.9, 0.1}, cplx{0.0, 0.99}}) {
    const auto w = cayley_h(z);
    CHECK(w.value.imag() > 0.0);
    CHECK(near(cayley_h_inv(w), z, 1e-14));
  }
}

TEST_CASE("normalization constants") {
  const auto h = normalization_constants(SpaceParams::hardy());
  CHECK(near(h.c * h.d, 2.0 * I, 1e-15));
  CHECK(near(h.k, I / (2.0 * kPi), 1e-16));
  CHECK(h.b == doctest::Approx(2.0 * kPi));
  // the printed and corrected sets coincide for Hardy
  const auto hp = normalization_constants(SpaceParams::hardy(), ConstantSet::Printed);
  CHECK(hp.c == h.c);
  CHECK(hp.d == h.d);
  CHECK(hp.k == h.k);

  for (double a : {-0.5, 0.0, 1.0, 2.5}) {
    const auto c = normalization_constants(SpaceParams::bergman(a));
    CHECK(near(c.c * c.d, ppow(2.0 * I, a + 2.0), 1e-12));
    CHECK(c.nu == doctest::Approx((a + 1.0) / kPi));
  }
  const auto p0 = normalization_constants(SpaceParams::bergman(0.0), ConstantSet::Printed);
  CHECK(near(p0.c * p0.d, 4.0 * I, 1e-15));
  CHECK(fourier_norm_constant(SpaceParams::bergman(0.0)) == doctest::Approx(kPi));
  CHECK(fourier_norm_constant(SpaceParams::dirichlet(1.0)) == doctest::Approx(kPi / 2.0));
  CHECK(fourier_norm_constant(SpaceParams::dirichlet(1.0), ConstantSet::Printed) == doctest::Approx(0.5));
  CHECK(code_of([] { normalization_constants(SpaceParams::dirichlet(0.0)); }) == ErrorCode::InvalidSpace);
}

TEST_CASE("kernel diagonals") {
  CHECK(near(kernel_halfplane(SpaceParams::hardy(), I, I), 1.0 / (4.0 * kPi), 1e-15));
  CHECK(near(kernel_halfplane(SpaceParams::bergman(0.0), I, I), 1.0 / (4.0 * kPi), 1e-15));
  CHECK(near(kernel_halfplane(SpaceParams::bergman(2.0), I, I), 3.0 / (4.0 * kPi), 1e-15));
  CHECK(near(kernel_halfplane(SpaceParams::bergman(0.0), I, I, ConstantSet::Printed), -0.25 * I, 1e-15));
  CHECK(near(kernel_disc(SpaceParams::hardy(), 0.0, {0.3, 0.2}), 1.0, 1e-15));
  CHECK(near(kernel_disc(SpaceParams::bergman(0.0), 0.0, 0.0), 1.0 / kPi, 1e-15));
  CHECK(near(kernel_disc(SpaceParams::bergman(1.0), 0.0, 0.0), 2.0 / kPi, 1e-15));
  CHECK(code_of([] { kernel_halfplane(SpaceParams::dirichlet(0.0), I, I); }) == ErrorCode::InvalidSpace);
  CHECK(code_of([] { kernel_halfplane(SpaceParams::hardy(), -I, I); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { kernel_disc(SpaceParams::hardy(), 1.0, 0.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("kernel hermitian symmetry") {
  const auto s = SpaceParams::bergman(1.5);
  const cplx a{0.4, 1.2};
  const cplx b{-1.1, 0.3};
  CHECK(near(kernel_halfplane(s, a, b), std::conj(kernel_halfplane(s, b, a)), 1e-14));
  const cplx z{0.2, -0.5};
  const cplx u{-0.6, 0.1};
  CHECK(near(kernel_disc(s, z, u), std::conj(kernel_disc(s, u, z)), 1e-14));
}

TEST_CASE("J on constants") {
  const auto hardy = SpaceParams::hardy();
  const auto Jh = apply_J(hardy, DiscFunction::constant(1.0));
  const cplx w{0.7, 0.4};
  CHECK(near(Jh(w), 1.0 / (std::sqrt(kPi) * (w + I)), 1e-14));
  CHECK(norm_numeric(hardy, Jh) == doctest::Approx(1.0).epsilon(1e-8));

  const auto berg = SpaceParams::bergman(0.0);
  const auto Jb = apply_J(berg, DiscFunction::constant(1.0));
  CHECK(near(Jb(w), 2.0 / ((w + I) * (w + I)), 1e-14));
  CHECK(inner_product_numeric(berg, Jb, Jb).value.real() == doctest::Approx(kPi).epsilon(1e-8));
}

TEST_CASE("J on (1 - z)^s matches the pointwise definition") {
  const auto s = SpaceParams::bergman(0.0);
  const cplx e{0.5, 2.0};
  const auto f = DiscFunction::power_at_one(e);
  const auto F = apply_J(s, f);
  const auto c = normalization_constants(s).c;
  for (cplx w : {cplx{0.0, 1.0}, cplx{-2.0, 0.5}, cplx{3.0, 4.0}}) {
    const cplx expected = ppow(2.0 * I, e) * c * ppow(w + I, -(2.0 + e));
    CHECK(near(F(w), expected, 1e-13 * std::abs(expected)));
    CHECK(near(F(w), apply_J_pointwise(s, f, w), 1e-12 * std::abs(expected)));
  }
}

TEST_CASE("J round trip") {
  for (const auto& s : {SpaceParams::hardy(), SpaceParams::bergman(0.0), SpaceParams::bergman(2.5)}) {
    const auto f = DiscFunction::power_at_one({0.3, -1.0}, {2.0, 1.0}) + disc_kernel_function(s, {0.2, 0.5}) +
                   DiscFunction::monomial(2);
    const auto back = apply_J_inv(s, apply_J(s, f));
    for (cplx z : {cplx{0.0, 0.0}, cplx{0.5, -0.3}, cplx{-0.2, 0.9}}) {
      CHECK(near(back(z), f(z), 1e-12 * std::max(1.0, std::abs(f(z)))));
    }
    const auto F = kernel_function(s, {1.0, 2.0});
    CHECK(near(apply_J_inv_pointwise(s, F, {0.1, 0.1}), apply_J_inv(s, F)({0.1, 0.1}), 1e-12));
  }
}

TEST_CASE("J maps disc kernels to half-plane kernels up to a scalar") {
  const auto s = SpaceParams::bergman(1.0);
  const cplx w0{0.5, 1.5};
  const auto F = apply_J(s, disc_kernel_function(s, cayley_h_inv(w0)));
  const auto K = kernel_function(s, w0);
  const cplx ratio = F({0.0, 1.0}) / K({0.0, 1.0});
  for (cplx w : {cplx{-1.0, 0.2}, cplx{2.0, 3.0}}) CHECK(near(F(w), ratio * K(w), 1e-12 * std::abs(F(w))));
}

TEST_CASE("J rejects functions outside the family") {
  const auto s = SpaceParams::bergman(0.0);
  const DiscFunction f({DiscTerm{1.0, {0.5, 0.0}, {-1.0, 0.0}}});
  CHECK(code_of([&] { apply_J(s, f); }) == ErrorCode::OutsideFamily);
  const auto F = ClosedFormFunction::inverse_power(1.0, {1.0, 2.0}, 3.0);
  CHECK(code_of([&] { apply_J_inv(s, F); }) == ErrorCode::OutsideFamily);
}

TEST_CASE("reproducing property by quadrature") {
  const auto hardy = SpaceParams::hardy();
  const auto K = kernel_function(hardy, I);
  CHECK(inner_product_numeric(hardy, K, K).value.real() == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-5));

  const auto berg = SpaceParams::bergman(0.0);
  const auto F = ClosedFormFunction::inverse_power(1.0, I, 2.0);
  const cplx got = inner_product_numeric(berg, F, kernel_function(berg, 2.0 * I)).value;
  CHECK(std::abs(got - (-1.0 / 9.0)) <= 1e-5 / 9.0);
}

TEST_CASE("inner products reject non-members") {
  const auto berg = SpaceParams::bergman(0.0);
  // 1/(w+i) is in Hardy but not in the unweighted Bergman space
  const auto F = ClosedFormFunction::inverse_power(1.0, I, 1.0);
  CHECK(code_of([&] { norm_numeric(berg, F); }) == ErrorCode::NonConvergent);
  CHECK(norm_numeric(SpaceParams::hardy(), F) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-8));
  CHECK(code_of([&] { disc_norm_numeric(berg, DiscFunction::power_at_one(-1.0)); }) == ErrorCode::NonConvergent);
  CHECK(code_of([] { ClosedFormFunction::inverse_power(1.0, -I, 2.0); }) == ErrorCode::OutsideFamily);
}

TEST_CASE("disc norms") {
  const auto hardy = SpaceParams::hardy();
  CHECK(disc_norm_numeric(hardy, DiscFunction::monomial(3)) == doctest::Approx(1.0).epsilon(1e-9));
  // ||1 - z||^2 = 2 on the circle
  CHECK(disc_norm_numeric(hardy, DiscFunction::power_at_one(1.0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  const auto berg = SpaceParams::bergman(0.0);
  // ||z^n||^2 = pi / (n + 1) for area measure
  CHECK(disc_norm_numeric(berg, DiscFunction::monomial(2)) == doctest::Approx(std::sqrt(kPi / 3.0)).epsilon(1e-9));
  const auto g = disc_kernel_function(berg, {0.3, 0.4});
  CHECK(near(disc_inner_product_numeric(berg, DiscFunction::monomial(1), g).value, {0.3, 0.4}, 1e-8));
}
