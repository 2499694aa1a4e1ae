#include <immintrin.h>

#include <algorithm>

#include "sobolev/kernels.hpp"

namespace sobolev::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d abs_pd(__m256d v)
{
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

// Lane-wise twin of the scalar modulus: hi * sqrt(1 + (lo/hi)^2), zero where hi == 0.
inline __m256d modulus_pd(__m256d re, __m256d im)
{
    const __m256d a = abs_pd(re);
    const __m256d b = abs_pd(im);
    const __m256d hi = _mm256_max_pd(a, b);
    const __m256d lo = _mm256_min_pd(a, b);
    const __m256d r = _mm256_div_pd(lo, hi);
    const __m256d v = _mm256_mul_pd(hi, _mm256_sqrt_pd(_mm256_add_pd(_mm256_set1_pd(1.0), _mm256_mul_pd(r, r))));
    return _mm256_blendv_pd(v, _mm256_setzero_pd(), _mm256_cmp_pd(hi, _mm256_setzero_pd(), _CMP_EQ_OQ));
}

inline double horizontal_max(__m256d v)
{
    alignas(32) double lanes[kLanes];
    _mm256_store_pd(lanes, v);
    return std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
}

} // namespace

void complex_multiply(const double* xr, const double* xi, const double* fr, const double* fi, double* outr,
                      double* outi, std::size_t n) noexcept
{
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d a = _mm256_loadu_pd(xr + i);
        const __m256d b = _mm256_loadu_pd(xi + i);
        const __m256d c = _mm256_loadu_pd(fr + i);
        const __m256d d = _mm256_loadu_pd(fi + i);
        const __m256d ac = _mm256_mul_pd(a, c);
        const __m256d bd = _mm256_mul_pd(b, d);
        const __m256d ad = _mm256_mul_pd(a, d);
        const __m256d bc = _mm256_mul_pd(b, c);
        _mm256_storeu_pd(outr + i, _mm256_sub_pd(ac, bd));
        _mm256_storeu_pd(outi + i, _mm256_add_pd(ad, bc));
    }
    scalar::complex_multiply(xr + i, xi + i, fr + i, fi + i, outr + i, outi + i, n - i);
}

void complex_divide(const double* xr, const double* xi, const double* dr, const double* di, double* outr,
                    double* outi, std::size_t n) noexcept
{
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d a = _mm256_loadu_pd(xr + i);
        const __m256d b = _mm256_loadu_pd(xi + i);
        const __m256d c = _mm256_loadu_pd(dr + i);
        const __m256d d = _mm256_loadu_pd(di + i);
        const __m256d real_dominant = _mm256_cmp_pd(abs_pd(c), abs_pd(d), _CMP_GE_OQ);

        // |c| >= |d|
        const __m256d r1 = _mm256_div_pd(d, c);
        const __m256d den1 = _mm256_add_pd(c, _mm256_mul_pd(d, r1));
        const __m256d re1 = _mm256_div_pd(_mm256_add_pd(a, _mm256_mul_pd(b, r1)), den1);
        const __m256d im1 = _mm256_div_pd(_mm256_sub_pd(b, _mm256_mul_pd(a, r1)), den1);

        // |c| < |d|
        const __m256d r2 = _mm256_div_pd(c, d);
        const __m256d den2 = _mm256_add_pd(_mm256_mul_pd(c, r2), d);
        const __m256d re2 = _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(a, r2), b), den2);
        const __m256d im2 = _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(b, r2), a), den2);

        _mm256_storeu_pd(outr + i, _mm256_blendv_pd(re2, re1, real_dominant));
        _mm256_storeu_pd(outi + i, _mm256_blendv_pd(im2, im1, real_dominant));
    }
    scalar::complex_divide(xr + i, xi + i, dr + i, di + i, outr + i, outi + i, n - i);
}

void weighted_modulus(const double* w, const double* re, const double* im, double* out, std::size_t n) noexcept
{
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d m = modulus_pd(_mm256_loadu_pd(re + i), _mm256_loadu_pd(im + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(w + i), m));
    }
    scalar::weighted_modulus(w + i, re + i, im + i, out + i, n - i);
}

void scaled_squares(const double* a, double scale, double* out, std::size_t n) noexcept
{
    const __m256d s = _mm256_set1_pd(scale);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d v = _mm256_mul_pd(_mm256_loadu_pd(a + i), s);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(v, v));
    }
    scalar::scaled_squares(a + i, scale, out + i, n - i);
}

double max_value(const double* a, std::size_t n) noexcept
{
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        m = _mm256_max_pd(m, _mm256_loadu_pd(a + i));
    }
    return std::max(horizontal_max(m), scalar::max_value(a + i, n - i));
}

double max_relative_difference(const double* ar, const double* ai, const double* br, const double* bi, double floor,
                               std::size_t n) noexcept
{
    const __m256d fl = _mm256_set1_pd(floor);
    __m256d worst = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d xr = _mm256_loadu_pd(ar + i);
        const __m256d xi = _mm256_loadu_pd(ai + i);
        const __m256d yr = _mm256_loadu_pd(br + i);
        const __m256d yi = _mm256_loadu_pd(bi + i);
        const __m256d diff = modulus_pd(_mm256_sub_pd(xr, yr), _mm256_sub_pd(xi, yi));
        const __m256d den = _mm256_max_pd(_mm256_max_pd(modulus_pd(xr, xi), modulus_pd(yr, yi)), fl);
        worst = _mm256_max_pd(_mm256_div_pd(diff, den), worst);
    }
    return std::max(horizontal_max(worst), scalar::max_relative_difference(ar + i, ai + i, br + i, bi + i, floor, n - i));
}

} // namespace sobolev::kernels::avx2
