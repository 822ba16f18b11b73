#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

namespace tftomo {

/// Uniform time axis: t_k = t_start + k*dt, k = 0..n-1.
struct TimeGrid {
  double t_start = 0.0;
  double dt = 1.0;
  std::size_t n = 2;

  double at(std::size_t k) const { return t_start + static_cast<double>(k) * dt; }
  double t_end() const { return at(n - 1); }
  double span() const { return static_cast<double>(n) * dt; }
  void validate() const;

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

/// Uniform angular-frequency axis (rad/time).
struct FrequencyGrid {
  double omega_start = 0.0;
  double d_omega = 1.0;
  std::size_t n = 2;

  double at(std::size_t j) const { return omega_start + static_cast<double>(j) * d_omega; }
  void validate() const;

  friend bool operator==(const FrequencyGrid&, const FrequencyGrid&) = default;
};

/// Uniform grid of the rotated quadrature X = t cos(theta) + omega sin(theta).
struct QuadratureGrid {
  double x_start = 0.0;
  double dx = 1.0;
  std::size_t n = 2;

  double at(std::size_t j) const { return x_start + static_cast<double>(j) * dx; }
  double x_end() const { return at(n - 1); }
  void validate() const;

  friend bool operator==(const QuadratureGrid&, const QuadratureGrid&) = default;
};

/// Strictly increasing angles in [0, pi]. The marginal angles 0 and pi/2 are
/// always present.
class AngleGrid {
 public:
  AngleGrid() = default;
  explicit AngleGrid(std::vector<double> values);

  /// count points k*pi/(count-1), k = 0..count-1. count = 181 gives a one
  /// degree step whose complements theta+pi/2 land on the grid.
  static AngleGrid uniform(std::size_t count);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Index of theta + pi/2 when it is on the grid.
  std::optional<std::size_t> complement_of(std::size_t i) const;
  std::optional<std::size_t> find(double theta, double tol = 1e-9) const;

  friend bool operator==(const AngleGrid&, const AngleGrid&) = default;

 private:
  std::vector<double> values_;
};

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace tftomo
