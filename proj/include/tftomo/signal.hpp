#pragma once

#include <vector>

#include "tftomo/grid.hpp"

namespace tftomo {

/// Real waveform on a uniform time grid.
struct SampledSignal {
  TimeGrid grid;
  std::vector<double> samples;

  void validate() const;
};

/// A sin(omega t + phi0) exp(-alpha (t - t0)^2)
struct ChirpParams {
  double A = 1.0;
  double phi0 = 0.0;
  double alpha = 0.0;
  double t0 = 0.0;
  double omega = 1.0;
};

/// (1 + m cos(Omega t)) cos(omega t + phi0)
struct AMParams {
  double omega = 1.0;
  double phi0 = 0.0;
  double m = 0.0;
  double Omega = 1.0;

  /// |m| > 1 over-modulates; allowed, but callers may want to warn.
  bool overmodulated() const;
};

/// A cos(omega0 t + (omega_d / Omega) sin(Omega t) + phi0)
struct FMParams {
  double A = 1.0;
  double omega0 = 1.0;
  double omega_d = 0.0;
  double phi0 = 0.0;
  double Omega = 1.0;
};

/// exp(-(t - t0)^2 / (4 sigma^2)) cos(carrier (t - t0)). With carrier = 0 this
/// is the bare pulse; |pulse|^2 has standard deviation sigma.
struct GaussianParams {
  double t0 = 0.0;
  double sigma = 1.0;
  double carrier = 0.0;
};

SampledSignal gen_chirp(const ChirpParams& p, const TimeGrid& g);
SampledSignal gen_am(const AMParams& p, const TimeGrid& g);
SampledSignal gen_fm(const FMParams& p, const TimeGrid& g);
SampledSignal gen_gaussian(const GaussianParams& p, const TimeGrid& g);

/// Fig. 1 chirp set: A=0.166, phi0=0, alpha=0.03, t0=100, omega=pi.
ChirpParams figure1_chirp();
/// t in [0, 200), n = 2048.
TimeGrid reproduction_grid();

}  // namespace tftomo
