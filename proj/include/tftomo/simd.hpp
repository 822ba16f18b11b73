#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops. Each kernel has a scalar reference and, where the
// target supports it, an AVX2+FMA or NEON variant. The variant is chosen once
// at startup from the CPU features (TFTOMO_SIMD=scalar|avx2|neon overrides).
// Variants agree with the scalar kernels up to summation order.

namespace tftomo::simd {

using cplx = std::complex<double>;

enum class Level { Scalar, Avx2, Neon };

std::string_view level_name(Level l);
bool level_available(Level l);
Level active_level();
/// Switches the dispatch table; throws if the level is not available.
void set_level(Level l);

/// sum_k b_k * z0 * r^k
cplx geometric_dot(std::span<const cplx> b, cplx z0, cplx r);

/// a_k *= b_k
void cmul_inplace(std::span<cplx> a, std::span<const cplx> b);

/// out_k = scale * |z_k|^2
void abs2_scaled(std::span<const cplx> z, double scale, std::span<double> out);

/// sum_{s < count} bilinear(grid, r0 + s dr, c0 + s dc) over a row-major
/// rows x cols grid (rows, cols >= 2). Every sample point must lie in
/// [0, rows-1] x [0, cols-1].
double bilinear_line_sum(const double* grid, std::size_t rows, std::size_t cols, double r0,
                         double c0, double dr, double dc, std::size_t count);

/// Kernel table, one per level.
struct Kernels {
  cplx (*geometric_dot)(const cplx* b, std::size_t n, cplx z0, cplx r);
  void (*cmul_inplace)(cplx* a, const cplx* b, std::size_t n);
  void (*abs2_scaled)(const cplx* z, double scale, double* out, std::size_t n);
  double (*bilinear_line_sum)(const double* grid, std::size_t rows, std::size_t cols, double r0,
                              double c0, double dr, double dc, std::size_t count);
};

const Kernels& scalar_kernels();
#if defined(TFTOMO_HAVE_AVX2)
const Kernels& avx2_kernels();
#endif
#if defined(TFTOMO_HAVE_NEON)
const Kernels& neon_kernels();
#endif

}  // namespace tftomo::simd
