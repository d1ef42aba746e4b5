#include "hpspec/spectra.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>

#include "hpspec/error.hpp"

namespace hpspec {

SpectralSet SpectralSet::circle(double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  return {Kind::Circle, radius, cplx{}};
}

SpectralSet SpectralSet::closed_disc(double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  return {Kind::ClosedDisc, radius, cplx{}};
}

SpectralSet SpectralSet::parabolic_arc_closure(cplx w0) {
  if (w0.imag() < 0.0 || w0 == cplx{}) throw Error(ErrorCode::InvalidArgument, "need Im w0 >= 0, w0 != 0");
  return {Kind::ParabolicArcClosure, 1.0, w0};
}

SpectralSet SpectralSet::scaled(double s) const {
  if (kind_ == Kind::ParabolicArcClosure) {
    if (s != 1.0) throw Error(ErrorCode::InvalidArgument, "parabolic sets scale only by 1");
    return *this;
  }
  return {kind_, s * radius_, w0_};
}

std::string to_string(SpectralSet::Kind kind) {
  switch (kind) {
    case SpectralSet::Kind::Circle: return "circle";
    case SpectralSet::Kind::ClosedDisc: return "closed_disc";
    case SpectralSet::Kind::ParabolicArcClosure: return "parabolic_arc_closure";
  }
  return "unknown";
}

SpectralSet spectrum(const SpaceParams& space, const LFTMap& map, bool) {
  if (map.is_parabolic()) return SpectralSet::parabolic_arc_closure(map.w0());
  const double r = spectral_radius(space, map);
  return map.is_automorphism() ? SpectralSet::circle(r) : SpectralSet::closed_disc(r);
}

double spectral_radius(const SpaceParams& space, const LFTMap& map) {
  const double mu = map.mu();
  if (mu == 1.0) return 1.0;
  const double half = 0.5 * space.kernel_exponent();
  const double r = std::pow(mu, -half);
  return space.kind() == SpaceKind::Dirichlet ? mu * r : r;
}

bool contains(const SpectralSet& set, cplx lambda, double tol) {
  const double m = std::abs(lambda);
  switch (set.kind()) {
    case SpectralSet::Kind::Circle: return std::abs(m - set.radius()) <= tol;
    case SpectralSet::Kind::ClosedDisc: return m <= set.radius() + tol;
    case SpectralSet::Kind::ParabolicArcClosure: break;
  }
  const cplx w0 = set.w0();
  if (w0.imag() == 0.0) return std::abs(m - 1.0) <= tol;
  if (m <= tol) return true;
  const double t = -std::log(m) / w0.imag();
  if (t < -tol) return false;
  const double residual = std::remainder(std::arg(lambda) - w0.real() * std::max(t, 0.0), 2.0 * kPi);
  return std::abs(residual) <= tol * (1.0 + std::abs(w0));
}

namespace {

double spiral_distance(cplx w0, cplx lambda) {
  const double b = w0.imag();
  const double m = std::abs(lambda);
  auto d = [&](double t) { return std::abs(std::exp(I * w0 * t) - lambda); };
  double best = std::min(m, d(0.0));
  if (best == 0.0) return 0.0;
  // Only curve points with modulus within best of |lambda| can do better.
  const double t_lo = std::max(0.0, -std::log(m + best) / b);
  // below modulus 1e-17 m the gain over |lambda| is invisible in double
  const double r_floor = std::max(m - best, 1e-17 * m);
  const double t_hi = -std::log(r_floor) / b;
  const double speed0 = std::abs(w0);
  double t = t_lo;
  double prev = d(t);
  best = std::min(best, prev);
  double prev_t = t;
  bool descending = false;
  for (long step = 0; step < 4'000'000 && t < t_hi; ++step) {
    const double speed = speed0 * std::exp(-b * t);
    const double h = std::min(0.1 * std::max(best, 1e-3) / std::max(speed, 1e-300), 0.05 / speed0);
    const double next_t = std::min(t + h, t_hi);
    const double cur = d(next_t);
    best = std::min(best, cur);
    if (cur > prev && descending) {
      // local minimum bracketed in [prev_t - h, next_t]
      auto r = boost::math::tools::brent_find_minima(d, std::max(t_lo, prev_t - h), next_t, 52);
      best = std::min(best, r.second);
    }
    descending = cur < prev;
    prev = cur;
    prev_t = t = next_t;
  }
  return best;
}

}  // namespace

double distance(const SpectralSet& set, cplx lambda) {
  const double m = std::abs(lambda);
  switch (set.kind()) {
    case SpectralSet::Kind::Circle: return std::abs(m - set.radius());
    case SpectralSet::Kind::ClosedDisc: return std::max(0.0, m - set.radius());
    case SpectralSet::Kind::ParabolicArcClosure: break;
  }
  if (set.w0().imag() == 0.0) return std::abs(m - 1.0);
  return spiral_distance(set.w0(), lambda);
}

std::vector<cplx> sample_set(const SpectralSet& set, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample_set needs n >= 1");
  std::vector<cplx> out;
  out.reserve(n);
  auto ring = [&out](double r, std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      // exact quarter turns keep the cardinal points exact
      const std::size_t q = 4 * j;
      if (q % k == 0) {
        static const cplx units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        out.push_back(r * units[(q / k) % 4]);
      } else {
        out.push_back(std::polar(r, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(k)));
      }
    }
  };
  switch (set.kind()) {
    case SpectralSet::Kind::Circle:
      ring(set.radius(), n);
      return out;
    case SpectralSet::Kind::ClosedDisc: {
      const double r = set.radius();
      if (n == 1) return {cplx{r, 0.0}};
      const std::size_t boundary = std::max<std::size_t>(1, n / 2);
      ring(r, boundary);
      out.emplace_back(0.0, 0.0);
      const std::size_t interior = n - boundary - 1;
      const double golden = kPi * (3.0 - std::sqrt(5.0));
      for (std::size_t j = 1; j <= interior; ++j) {
        const double rho = r * std::sqrt(static_cast<double>(j) / static_cast<double>(interior + 1));
        out.push_back(std::polar(rho, golden * static_cast<double>(j)));
      }
      return out;
    }
    case SpectralSet::Kind::ParabolicArcClosure: break;
  }
  const cplx w0 = set.w0();
  if (w0.imag() == 0.0) {
    ring(1.0, n);
    return out;
  }
  if (n == 1) return {cplx{1.0, 0.0}};
  const double t_max = 28.0 / w0.imag();  // e^{-28} < 1e-12
  const std::size_t k = n - 1;
  for (std::size_t j = 0; j < k; ++j) {
    const double t = k == 1 ? 0.0 : t_max * static_cast<double>(j) / static_cast<double>(k - 1);
    out.push_back(std::exp(I * w0 * t));
  }
  out.emplace_back(0.0, 0.0);
  return out;
}

}  // namespace hpspec
