#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace hpspec {

// Log-spaced grid on the half-line: nodes t_j = t_min r^j for j = 0..size,
// bins [t_j, t_{j+1}] for j = 0..size-1.
class LogGrid {
 public:
  LogGrid(double t_min, double ratio, std::size_t size, std::optional<int> shift = std::nullopt);

  // Grid whose ratio satisfies r^m = max(mu, 1/mu) exactly in log space, with
  // m = max(1, round(|ln mu| / ln r_target)).
  static LogGrid for_dilation(double mu, double t_min = 1e-4, std::size_t size = 2048,
                              double r_target = 1.01);

  double t_min() const noexcept { return t_min_; }
  double ratio() const noexcept { return ratio_; }
  double log_ratio() const noexcept { return log_ratio_; }
  std::size_t size() const noexcept { return size_; }
  std::optional<int> shift() const noexcept { return shift_; }

  double node(std::size_t j) const;
  double bin_lo(std::size_t j) const { return node(j); }
  double bin_hi(std::size_t j) const { return node(j + 1); }
  std::vector<double> nodes() const;

 private:
  double t_min_;
  double ratio_;
  double log_ratio_;
  std::size_t size_;
  std::optional<int> shift_;
};

}  // namespace hpspec
