#pragma once

#include <cmath>
#include <complex>
#include <string_view>

#include "sobolev/errors.hpp"

namespace sobolev {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws ContractViolation naming `what` when z has a NaN or infinite part.
void require_finite(Complex z, std::string_view what);

/// Squared modulus re^2 + im^2, without FMA contraction.
inline double modulus_squared(Complex z) noexcept
{
    return z.real() * z.real() + z.imag() * z.imag();
}

inline double modulus(Complex z) noexcept { return std::sqrt(modulus_squared(z)); }

/// Textbook product (ar*br - ai*bi, ar*bi + ai*br). Matches the SIMD kernels bit for bit.
inline Complex multiply(Complex a, Complex b) noexcept
{
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

/// Smith's division. A purely real divisor reduces to two real divisions exactly.
Complex divide(Complex numerator, Complex divisor) noexcept;

/// z^k by binary exponentiation; negative k divides 1 by z^|k|.
Complex integer_power(Complex z, int k) noexcept;

/// e^{z} evaluated as e^{re}(cos im, sin im).
Complex exponential(Complex z) noexcept;

/// (e^{z} - 1) without cancellation for small |z|.
Complex exponential_minus_one(Complex z) noexcept;

} // namespace sobolev
