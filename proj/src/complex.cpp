#include "sobolev/complex.hpp"

#include <string>

namespace sobolev {

void require_finite(Complex z, std::string_view what)
{
    if (!is_finite(z)) {
        throw ContractViolation(std::string(what) + " must be finite");
    }
}

Complex divide(Complex numerator, Complex divisor) noexcept
{
    const double xr = numerator.real();
    const double xi = numerator.imag();
    const double dr = divisor.real();
    const double di = divisor.imag();
    if (std::fabs(dr) >= std::fabs(di)) {
        const double ratio = di / dr;
        const double den = dr + di * ratio;
        return {(xr + xi * ratio) / den, (xi - xr * ratio) / den};
    }
    const double ratio = dr / di;
    const double den = dr * ratio + di;
    return {(xr * ratio + xi) / den, (xi * ratio - xr) / den};
}

Complex integer_power(Complex z, int k) noexcept
{
    // long long so that k = INT_MIN negates safely
    long long e = k < 0 ? -static_cast<long long>(k) : k;
    Complex result{1.0, 0.0};
    Complex base = z;
    while (e > 0) {
        if (e & 1) {
            result = multiply(result, base);
        }
        e >>= 1;
        if (e > 0) {
            base = multiply(base, base);
        }
    }
    return k < 0 ? divide(Complex{1.0, 0.0}, result) : result;
}

Complex exponential(Complex z) noexcept
{
    const double scale = std::exp(z.real());
    if (z.imag() == 0.0) {
        return {scale, 0.0};
    }
    return {scale * std::cos(z.imag()), scale * std::sin(z.imag())};
}

Complex exponential_minus_one(Complex z) noexcept
{
    const double a = z.real();
    const double b = z.imag();
    const double em1 = std::expm1(a);
    if (b == 0.0) {
        return {em1, 0.0};
    }
    // e^a cos b - 1 = expm1(a) cos b + (cos b - 1), with cos b - 1 = -2 sin^2(b/2)
    const double half = std::sin(0.5 * b);
    const double cos_minus_one = -2.0 * half * half;
    return {em1 * std::cos(b) + cos_minus_one, std::exp(a) * std::sin(b)};
}

} // namespace sobolev
