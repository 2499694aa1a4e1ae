#include <algorithm>
#include <cmath>

#include "sobolev/kernels.hpp"

namespace sobolev::kernels::scalar {

namespace {

// hi * sqrt(1 + (lo/hi)^2) never squares a tiny or huge component and is exact when one part is zero.
// The AVX2 kernels evaluate the same expression in the same order.
inline double modulus(double re, double im)
{
    const double a = std::fabs(re);
    const double b = std::fabs(im);
    const double hi = a > b ? a : b;
    const double lo = a < b ? a : b;
    if (hi == 0.0) {
        return 0.0;
    }
    const double r = lo / hi;
    return hi * std::sqrt(1.0 + r * r);
}

} // namespace

void complex_multiply(const double* xr, const double* xi, const double* fr, const double* fi, double* outr,
                      double* outi, std::size_t n) noexcept
{
    for (std::size_t i = 0; i < n; ++i) {
        const double a = xr[i];
        const double b = xi[i];
        const double c = fr[i];
        const double d = fi[i];
        const double ac = a * c;
        const double bd = b * d;
        const double ad = a * d;
        const double bc = b * c;
        outr[i] = ac - bd;
        outi[i] = ad + bc;
    }
}

void complex_divide(const double* xr, const double* xi, const double* dr, const double* di, double* outr,
                    double* outi, std::size_t n) noexcept
{
    for (std::size_t i = 0; i < n; ++i) {
        const double a = xr[i];
        const double b = xi[i];
        const double c = dr[i];
        const double d = di[i];
        if (std::fabs(c) >= std::fabs(d)) {
            const double ratio = d / c;
            const double den = c + d * ratio;
            outr[i] = (a + b * ratio) / den;
            outi[i] = (b - a * ratio) / den;
        } else {
            const double ratio = c / d;
            const double den = c * ratio + d;
            outr[i] = (a * ratio + b) / den;
            outi[i] = (b * ratio - a) / den;
        }
    }
}

void weighted_modulus(const double* w, const double* re, const double* im, double* out, std::size_t n) noexcept
{
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = w[i] * modulus(re[i], im[i]);
    }
}

void scaled_squares(const double* a, double scale, double* out, std::size_t n) noexcept
{
    for (std::size_t i = 0; i < n; ++i) {
        const double v = a[i] * scale;
        out[i] = v * v;
    }
}

double max_value(const double* a, std::size_t n) noexcept
{
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        m = std::max(m, a[i]);
    }
    return m;
}

double max_relative_difference(const double* ar, const double* ai, const double* br, const double* bi, double floor,
                               std::size_t n) noexcept
{
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double diff = modulus(ar[i] - br[i], ai[i] - bi[i]);
        const double den = std::max(std::max(modulus(ar[i], ai[i]), modulus(br[i], bi[i])), floor);
        worst = std::max(worst, diff / den);
    }
    return worst;
}

} // namespace sobolev::kernels::scalar
