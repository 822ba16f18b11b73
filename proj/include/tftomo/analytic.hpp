#pragma once

#include <vector>

#include "tftomo/fft.hpp"
#include "tftomo/grid.hpp"
#include "tftomo/signal.hpp"

namespace tftomo {

/// Complex signal s + iH[s] with no negative-frequency content.
struct AnalyticSignal {
  TimeGrid grid;
  std::vector<cplx> samples;
  bool normalized = false;

  /// sum |a_k|^2 dt
  double energy() const;
};

/// Discrete Hilbert transform: positive bins times -i, negative bins times +i,
/// DC and Nyquist zeroed.
SampledSignal hilbert(const SampledSignal& s);

/// Real part is the input bit for bit; imaginary part is hilbert(s).
AnalyticSignal to_analytic(const SampledSignal& s);

/// Scales to sum |a_k|^2 dt = 1. Throws DegenerateSignal on zero energy.
AnalyticSignal normalize_energy(const AnalyticSignal& a);

/// Samples of the unitary spectrum (1/sqrt(2 pi)) int a(t) exp(-i omega t) dt of
/// the sampled signal, on the grid omega_j = (j - N/2) * 2 pi / (N dt), N = pad*n,
/// which spans one period [-pi/dt, pi/dt). pad > 1 zero-pads in time.
struct Spectrum {
  FrequencyGrid grid;
  std::vector<cplx> values;
};
Spectrum unitary_spectrum(const AnalyticSignal& a, std::size_t pad = 1);

/// |S(omega)|^2 on the spectrum grid above; integrates to 1 for normalized input.
struct SpectralDensity {
  FrequencyGrid grid;
  std::vector<double> values;
};
SpectralDensity frequency_density(const AnalyticSignal& a, std::size_t pad = 1);

/// |a_k|^2 on the time grid.
std::vector<double> time_density(const AnalyticSignal& a);

/// Interval holding all but `tail` of the mass (tail/2 cut on each side).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};
Interval time_support(const AnalyticSignal& a, double tail);
Interval frequency_support(const AnalyticSignal& a, double tail);

}  // namespace tftomo
