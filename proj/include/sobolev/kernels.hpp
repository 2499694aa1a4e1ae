#pragma once

// Elementwise kernels behind the diagonal operators and weighted norms.
//
// Every kernel has a scalar reference and, on x86-64, an AVX2 variant chosen
// at runtime. Variants use the same IEEE operations in the same order (no FMA),
// so they agree bit for bit; the equivalence tests pin that.

#include <cstddef>
#include <span>
#include <string_view>

namespace sobolev::kernels {

enum class Isa { Scalar, Avx2 };

/// Best instruction set supported by this CPU and build.
Isa detected_isa() noexcept;

/// Instruction set currently used for dispatch.
Isa active_isa() noexcept;

/// Pin dispatch to `isa`; falls back to Scalar when `isa` is unavailable.
/// Returns the instruction set actually selected.
Isa select_isa(Isa isa) noexcept;

std::string_view isa_name(Isa isa) noexcept;

/// (out_re, out_im) = (x_re, x_im) * (f_re, f_im), textbook complex product.
void complex_multiply(std::span<const double> x_re, std::span<const double> x_im, std::span<const double> f_re,
                      std::span<const double> f_im, std::span<double> out_re, std::span<double> out_im);

/// (out_re, out_im) = (x_re, x_im) / (d_re, d_im), Smith's algorithm.
void complex_divide(std::span<const double> x_re, std::span<const double> x_im, std::span<const double> d_re,
                    std::span<const double> d_im, std::span<double> out_re, std::span<double> out_im);

/// out_j = w_j * |re_j + i im_j|, without intermediate underflow or overflow.
void weighted_modulus(std::span<const double> w, std::span<const double> re, std::span<const double> im,
                      std::span<double> out);

/// out_j = (a_j * scale)^2. `scale` is a power of two in every caller.
void scaled_squares(std::span<const double> a, double scale, std::span<double> out);

/// max_j a_j, or 0 for an empty span. Inputs are finite and nonnegative.
double max_value(std::span<const double> a);

/// max_j |a_j - b_j| / max(|a_j|, |b_j|, floor) over complex coordinates.
double max_relative_difference(std::span<const double> a_re, std::span<const double> a_im,
                               std::span<const double> b_re, std::span<const double> b_im, double floor);

namespace scalar {
void complex_multiply(const double* xr, const double* xi, const double* fr, const double* fi, double* outr,
                      double* outi, std::size_t n) noexcept;
void complex_divide(const double* xr, const double* xi, const double* dr, const double* di, double* outr,
                    double* outi, std::size_t n) noexcept;
void weighted_modulus(const double* w, const double* re, const double* im, double* out, std::size_t n) noexcept;
void scaled_squares(const double* a, double scale, double* out, std::size_t n) noexcept;
double max_value(const double* a, std::size_t n) noexcept;
double max_relative_difference(const double* ar, const double* ai, const double* br, const double* bi, double floor,
                               std::size_t n) noexcept;
} // namespace scalar

#if defined(SOBOLEV_HAVE_AVX2)
namespace avx2 {
void complex_multiply(const double* xr, const double* xi, const double* fr, const double* fi, double* outr,
                      double* outi, std::size_t n) noexcept;
void complex_divide(const double* xr, const double* xi, const double* dr, const double* di, double* outr,
                    double* outi, std::size_t n) noexcept;
void weighted_modulus(const double* w, const double* re, const double* im, double* out, std::size_t n) noexcept;
void scaled_squares(const double* a, double scale, double* out, std::size_t n) noexcept;
double max_value(const double* a, std::size_t n) noexcept;
double max_relative_difference(const double* ar, const double* ai, const double* br, const double* bi, double floor,
                               std::size_t n) noexcept;
} // namespace avx2
#endif

} // namespace sobolev::kernels
