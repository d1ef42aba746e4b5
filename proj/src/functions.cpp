#include "hpspec/functions.hpp"

#include <algorithm>

#include "hpspec/error.hpp"

namespace hpspec {

ClosedFormFunction::ClosedFormFunction(std::vector<HalfPlaneTerm> terms) : terms_(std::move(terms)) {
  for (const auto& term : terms_) {
    if (const auto* p = std::get_if<InversePowerTerm>(&term); p && !(p->shift.imag() > 0.0)) {
      throw Error(ErrorCode::OutsideFamily, "inverse power needs Im shift > 0");
    }
  }
}

ClosedFormFunction ClosedFormFunction::inverse_power(cplx coeff, cplx shift, cplx exponent) {
  return ClosedFormFunction({InversePowerTerm{coeff, shift, exponent}});
}

ClosedFormFunction ClosedFormFunction::fourier_image(const FourierSideFunction& density) {
  std::vector<HalfPlaneTerm> terms;
  for (const auto& t : density.terms()) terms.emplace_back(FourierImageTerm{t});
  return ClosedFormFunction(std::move(terms));
}

cplx ClosedFormFunction::operator()(cplx w) const {
  cplx sum{};
  for (const auto& term : terms_) {
    if (const auto* p = std::get_if<InversePowerTerm>(&term)) {
      sum += (*p)(w);
    } else {
      const auto& img = std::get<FourierImageTerm>(term);
      sum += synthesize(FourierSideFunction({img.density}), w).value;
    }
  }
  return sum;
}

ClosedFormFunction ClosedFormFunction::derivative() const {
  std::vector<HalfPlaneTerm> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    if (const auto* p = std::get_if<InversePowerTerm>(&term)) {
      out.emplace_back(InversePowerTerm{-p->exponent * p->coeff, p->shift, p->exponent + 1.0});
    } else {
      auto d = std::get<FourierImageTerm>(term).density;
      d.coeff *= I;
      d.power += 1.0;
      out.emplace_back(FourierImageTerm{d});
    }
  }
  return ClosedFormFunction(std::move(out));
}

double ClosedFormFunction::singularity_margin() const {
  double margin = kInf;
  for (const auto& term : terms_) {
    if (const auto* p = std::get_if<InversePowerTerm>(&term)) margin = std::min(margin, p->shift.imag());
  }
  return std::isinf(margin) ? 1.0 : margin;
}

ClosedFormFunction& ClosedFormFunction::operator+=(const ClosedFormFunction& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

ClosedFormFunction& ClosedFormFunction::operator*=(cplx s) {
  for (auto& term : terms_) {
    if (auto* p = std::get_if<InversePowerTerm>(&term)) {
      p->coeff *= s;
    } else {
      std::get<FourierImageTerm>(term).density.coeff *= s;
    }
  }
  return *this;
}

cplx DiscTerm::operator()(cplx z) const {
  if (exponent == cplx{}) return coeff;
  return coeff * ppow(1.0 - center * z, exponent);
}

cplx DiscTerm::at_polar(double delta, double theta) const {
  if (exponent == cplx{}) return coeff;
  const cplx e = std::polar(1.0, theta);
  if (center != cplx{1.0, 0.0}) return coeff * ppow(1.0 - center * (1.0 - delta) * e, exponent);
  // 1 - (1 - delta) e^{i theta} = -expm1(i theta) + delta e^{i theta}
  const double h = std::sin(0.5 * theta);
  const cplx one_minus_e{2.0 * h * h, -std::sin(theta)};
  return coeff * ppow(one_minus_e + delta * e, exponent);
}

DiscFunction::DiscFunction(std::vector<DiscTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (std::abs(t.center) > 1.0) throw Error(ErrorCode::OutsideFamily, "disc term needs |a| <= 1");
  }
}

DiscFunction DiscFunction::constant(cplx value) { return DiscFunction({DiscTerm{value, 1.0, 0.0}}); }

DiscFunction DiscFunction::power_at_one(cplx s, cplx coeff) {
  return DiscFunction({DiscTerm{coeff, 1.0, s}});
}

DiscFunction DiscFunction::monomial(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "monomial degree must be >= 0");
  // z^n = (1 - (1 - z))^n = sum_k C(n,k) (-1)^k (1 - z)^k
  std::vector<DiscTerm> terms;
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    terms.push_back({(k % 2 == 0 ? 1.0 : -1.0) * binom, 1.0, static_cast<double>(k)});
    binom = binom * (n - k) / (k + 1);
  }
  return DiscFunction(std::move(terms));
}

cplx DiscFunction::operator()(cplx z) const {
  cplx sum{};
  for (const auto& t : terms_) sum += t(z);
  return sum;
}

cplx DiscFunction::at_polar(double delta, double theta) const {
  cplx sum{};
  for (const auto& t : terms_) sum += t.at_polar(delta, theta);
  return sum;
}

DiscFunction& DiscFunction::operator+=(const DiscFunction& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

DiscFunction& DiscFunction::operator*=(cplx s) {
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

}  // namespace hpspec
