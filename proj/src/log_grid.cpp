#include "hpspec/log_grid.hpp"

#include <cmath>

#include "hpspec/error.hpp"

namespace hpspec {

LogGrid::LogGrid(double t_min, double ratio, std::size_t size, std::optional<int> shift)
    : t_min_(t_min), ratio_(ratio), log_ratio_(std::log(ratio)), size_(size), shift_(shift) {
  if (!(t_min > 0.0) || !std::isfinite(t_min)) {
    throw Error(ErrorCode::InvalidArgument, "LogGrid: t_min must be positive");
  }
  if (!(ratio > 1.0) || !std::isfinite(ratio)) {
    throw Error(ErrorCode::InvalidArgument, "LogGrid: ratio must exceed 1");
  }
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "LogGrid: size must be positive");
  if (shift && *shift < 1) throw Error(ErrorCode::InvalidArgument, "LogGrid: shift m must be >= 1");
}

LogGrid LogGrid::for_dilation(double mu, double t_min, std::size_t size, double r_target) {
  if (!(mu > 0.0) || mu == 1.0) {
    throw Error(ErrorCode::InvalidArgument, "LogGrid::for_dilation: need mu > 0, mu != 1");
  }
  const double span = std::abs(std::log(mu));
  const int m = std::max(1, static_cast<int>(std::lround(span / std::log(r_target))));
  LogGrid grid(t_min, std::exp(span / m), size, m);
  grid.log_ratio_ = span / m;
  return grid;
}

double LogGrid::node(std::size_t j) const {
  return t_min_ * std::exp(static_cast<double>(j) * log_ratio_);
}

std::vector<double> LogGrid::nodes() const {
  std::vector<double> out(size_ + 1);
  for (std::size_t j = 0; j <= size_; ++j) out[j] = node(j);
  return out;
}

}  // namespace hpspec
