#pragma once

#include <span>
#include <string>
#include <vector>

#include "tftomo/analytic.hpp"
#include "tftomo/grid.hpp"

namespace tftomo {

/// Lag window; taps[(M-1)/2] multiplies zero lag.
struct Window {
  std::vector<double> taps;
  std::string id;

  std::size_t length() const { return taps.size(); }
  std::size_t half() const { return (taps.size() - 1) / 2; }
};

/// 0.54 - 0.46 cos(2 pi tau / (M-1)), tau = 0..M-1. M odd, M >= 3.
Window hamming_window(std::size_t M);
/// All-ones window of odd length M.
Window rectangular_window(std::size_t M);
/// Largest odd M <= n/4.
std::size_t default_window_length(std::size_t n);

enum class DistributionKind { Plain, Pseudo, Difference };

/// Real matrix over (time x frequency), row-major with one row per time sample.
struct TFDistribution {
  TimeGrid time;
  FrequencyGrid freq;
  std::vector<double> values;
  DistributionKind kind = DistributionKind::Plain;
  std::string window_id;
  /// max |Im| before discarding, relative to max |value|.
  double imag_residue = 0.0;

  double at(std::size_t k, std::size_t j) const { return values[k * freq.n + j]; }
  std::span<const double> row(std::size_t k) const {
    return {values.data() + k * freq.n, freq.n};
  }
  double max_abs() const;
};

/// Grid of the lag FFT: d_omega = pi / (n_fft dt). A FrequencyGrid is accepted
/// by wvd/pseudo_wvd when it is a contiguous run of such bins.
FrequencyGrid natural_frequency_grid(const TimeGrid& g, std::size_t n_fft);

/// Natural grid with n_fft = n (rounded up to even), cropped to the band that
/// holds the signal's spectrum (tail 1e-6) and clipped to [0, pi/dt).
FrequencyGrid default_frequency_grid(const AnalyticSignal& a);

/// W(t_k, omega_j) = 2dt sum_m a[k+m] conj(a[k-m]) exp(-2i omega_j m dt), lags
/// truncated symmetrically at the grid edges.
TFDistribution wvd(const AnalyticSignal& a, const FrequencyGrid& fg);

/// Same sum with the lag product weighted by the window taps.
TFDistribution pseudo_wvd(const AnalyticSignal& a, const Window& w, const FrequencyGrid& fg);

/// |a - b| on identical grids.
TFDistribution distribution_difference(const TFDistribution& a, const TFDistribution& b);

/// (1/2 pi) sum W dt d_omega
double distribution_mass(const TFDistribution& w);

/// (1/2 pi) sum_j W(t_k, omega_j) d_omega for every k.
std::vector<double> time_marginal(const TFDistribution& w);
/// sum_k W(t_k, omega_j) dt for every j.
std::vector<double> frequency_marginal(const TFDistribution& w);

}  // namespace tftomo
