#pragma once

#include <span>
#include <string>
#include <vector>

#include "tftomo/analytic.hpp"
#include "tftomo/grid.hpp"
#include "tftomo/tfdist.hpp"

namespace tftomo {

/// Below this |sin(theta)| the tomogram row is taken from the time marginal.
inline constexpr double kDegenerateAngle = 1e-3;

enum class TomogramSource { Direct, RadonPlain, RadonPseudo, Difference };
const char* source_name(TomogramSource s);

/// Rows are angles, columns quadrature values.
struct Tomogram {
  AngleGrid angles;
  QuadratureGrid quad;
  std::vector<double> values;
  TomogramSource source = TomogramSource::Direct;
  std::string window_id;
  /// Radon path: row mass before renormalization. Empty for direct tomograms.
  std::vector<double> raw_row_mass;
  /// Radon path: most negative raw value relative to the maximum, before clipping.
  double min_raw_ratio = 0.0;
  std::vector<std::string> warnings;

  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * quad.n, quad.n};
  }
  std::span<double> row(std::size_t i) { return {values.data() + i * quad.n, quad.n}; }
  double max_value() const;
};

enum class FrftMethod {
  Reference,  // direct O(n * n_X) quadrature
  Fast,       // Bluestein chirp-z transform, same sum
};

/// I(X, theta) = int S(t) exp(i t^2 cot/2 - i t X / sin) dt as a rectangle-rule
/// sum over the given samples (tau_k = grid.at(k)). Throws when
/// |sin theta| < kDegenerateAngle.
std::vector<cplx> frft_samples(std::span<const cplx> samples, const TimeGrid& grid,
                               double theta, const QuadratureGrid& qg,
                               FrftMethod method = FrftMethod::Fast);

/// frft_samples on the signal's own grid.
std::vector<cplx> frft(const AnalyticSignal& a, double theta, const QuadratureGrid& qg,
                       FrftMethod method = FrftMethod::Fast);

/// Unitary fractional Fourier transform of order theta:
/// sqrt((1 - i cot)/(2 pi)) exp(i X^2 cot/2) I(X, theta).
std::vector<cplx> unitary_frft(std::span<const cplx> samples, const TimeGrid& grid,
                               double theta, const QuadratureGrid& qg,
                               FrftMethod method = FrftMethod::Fast);

/// X range covering the projections of the signal's time/frequency support
/// (tail 1e-4) over all angles, padded 10%, with dX fine enough to resolve the
/// narrowest row and at least min_points samples.
QuadratureGrid default_quadrature_grid(const AnalyticSignal& a, std::size_t min_points);

/// Smallest grid covering both ranges with the finer step.
QuadratureGrid cover(const QuadratureGrid& a, const QuadratureGrid& b);

/// T(X, theta) = |I|^2 / (2 pi |sin|). Interior angles are evaluated in the
/// time domain for |cot| <= 1 and from the spectrum otherwise, resampling so
/// that quadrature aliases fall outside the X grid. |sin| < kDegenerateAngle
/// uses |S(X cos theta)|^2.
Tomogram tomogram_direct(const AnalyticSignal& a, const AngleGrid& ag, const QuadratureGrid& qg,
                         FrftMethod method = FrftMethod::Fast);

/// Radon projection (1/2 pi) int W dl along t cos + omega sin = X with bilinear
/// interpolation, each row rescaled to unit mass. Small negative interpolation
/// residue is clipped.
Tomogram tomogram_from_tfd(const TFDistribution& w, const AngleGrid& ag, const QuadratureGrid& qg);

/// |a - b| on identical grids; rows are not renormalized.
Tomogram tomogram_difference(const Tomogram& a, const Tomogram& b);

struct TomogramReport {
  double max_row_mass_error = 0.0;  // max_theta |sum row dX - 1|
  double min_value_ratio = 0.0;     // min value / max value
};
TomogramReport inspect(const Tomogram& t);

}  // namespace tftomo
