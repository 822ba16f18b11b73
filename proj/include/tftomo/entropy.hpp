#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tftomo/analytic.hpp"
#include "tftomo/grid.hpp"
#include "tftomo/signal.hpp"
#include "tftomo/tfdist.hpp"
#include "tftomo/tomography.hpp"

namespace tftomo {

/// ln(pi e), the time-frequency entropic bound.
inline const double kEntropyBound = 1.0 + 1.1447298858494002;  // 1 + ln(pi)

/// -sum p ln p * step in nats, 0 ln 0 = 0. The density must be non-negative
/// and integrate to 1 within 1e-2.
double differential_entropy(std::span<const double> density, double step);

struct EntropyPair {
  double time = 0.0;
  double frequency = 0.0;
  double slack() const { return time + frequency - kEntropyBound; }
};

/// S_t from |S(t)|^2, S_omega from the zero-padded spectral density.
EntropyPair entropy_pair(const AnalyticSignal& a, std::size_t spectral_pad = 8);

struct EntropyProfile {
  AngleGrid angles;
  std::vector<double> values;
  std::string source;
};
EntropyProfile tomographic_entropy(const Tomogram& t);

struct ComplementSum {
  double theta = 0.0;
  double sum = 0.0;  // S(theta) + S(theta + pi/2)
};
/// Every grid pair (theta, theta + pi/2).
std::vector<ComplementSum> complement_sums(const EntropyProfile& p);

enum class Family { AM, FM };
const char* family_name(Family f);

struct EntropySurface {
  Family family = Family::AM;
  AngleGrid angles;
  std::vector<double> parameters;  // m or omega_d
  std::vector<double> values;      // parameters.size() x angles.size(), row-major

  std::span<const double> row(std::size_t p) const {
    return {values.data() + p * angles.size(), angles.size()};
  }
};

struct SurfaceSpec {
  Family family = Family::AM;
  AMParams am;
  FMParams fm;
  std::vector<double> parameters;
  TimeGrid grid;
  AngleGrid angles;
  std::optional<QuadratureGrid> quad;  // default: union over the sweep
  std::size_t window_length = 0;       // 0: default_window_length(n)
};

/// Union of the default quadrature grids over the sweep (finest dX).
QuadratureGrid surface_quadrature_grid(const SurfaceSpec& spec);

/// Per parameter value: generate, normalize, pseudo-WVD (Hamming), Radon
/// tomogram, S(theta).
EntropySurface entropy_surface(const SurfaceSpec& spec);

/// Sweep values lo + k (hi - lo)/(count - 1).
std::vector<double> linear_sweep(double lo, double hi, std::size_t count);

}  // namespace tftomo
