#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "sobolev/kernels.hpp"
#include "sobolev/random.hpp"

namespace {

namespace k = sobolev::kernels;

// Mixed magnitudes, exact zeros and purely real entries exercise every branch.
std::vector<double> sample(sobolev::Rng& rng, std::size_t n)
{
    std::vector<double> v(n);
    for (auto& x : v) {
        const double pick = rng.uniform();
        if (pick < 0.1) {
            x = 0.0;
        } else if (pick < 0.2) {
            x = rng.uniform(-1.0, 1.0) * 1e-300;
        } else if (pick < 0.3) {
            x = rng.uniform(-1.0, 1.0) * 1e250;
        } else {
            x = rng.uniform(-4.0, 4.0);
        }
    }
    return v;
}

void expect_bitwise(const std::vector<double>& a, const std::vector<double>& b)
{
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(std::bit_cast<std::uint64_t>(a[i]), std::bit_cast<std::uint64_t>(b[i])) << "lane " << i;
    }
}

class IsaGuard {
public:
    IsaGuard() : saved_(k::active_isa()) {}
    ~IsaGuard() { k::select_isa(saved_); }

private:
    k::Isa saved_;
};

} // namespace

TEST(Kernels, ScalarSelectionIsHonoured)
{
    IsaGuard guard;
    EXPECT_EQ(k::select_isa(k::Isa::Scalar), k::Isa::Scalar);
    EXPECT_EQ(k::active_isa(), k::Isa::Scalar);
}

TEST(Kernels, RequestingUnavailableIsaFallsBackToDetected)
{
    IsaGuard guard;
    const k::Isa got = k::select_isa(k::Isa::Avx2);
    EXPECT_EQ(got, k::detected_isa() == k::Isa::Avx2 ? k::Isa::Avx2 : k::Isa::Scalar);
}

TEST(Kernels, WeightedModulusIsExactForRealInputs)
{
    const std::vector<double> w{1.0, 2.0, 0.5};
    const std::vector<double> re{-3.0, 1e-170, 0.0};
    const std::vector<double> im{0.0, 0.0, -7.0};
    std::vector<double> out(3);
    k::weighted_modulus(w, re, im, out);
    EXPECT_EQ(out[0], 3.0);
    EXPECT_EQ(out[1], 2e-170);
    EXPECT_EQ(out[2], 3.5);
}

TEST(Kernels, WeightedModulusSurvivesTinyAndHugeComponents)
{
    const std::vector<double> w{1.0, 1.0};
    const std::vector<double> re{3e-170, 3e200};
    const std::vector<double> im{4e-170, 4e200};
    std::vector<double> out(2);
    k::weighted_modulus(w, re, im, out);
    EXPECT_NEAR(out[0] / 5e-170, 1.0, 1e-15);
    EXPECT_NEAR(out[1] / 5e200, 1.0, 1e-15);
}

TEST(Kernels, MaxValueOfEmptySpanIsZero)
{
    EXPECT_EQ(k::max_value(std::span<const double>{}), 0.0);
}

TEST(Kernels, MaxRelativeDifferenceUsesFloorForZeros)
{
    const std::vector<double> a{0.0, 1.0};
    const std::vector<double> b{1e-300, 1.0};
    const std::vector<double> z{0.0, 0.0};
    EXPECT_DOUBLE_EQ(k::max_relative_difference(a, z, b, z, 1e-290), 1e-10);
}

#ifdef SOBOLEV_HAVE_AVX2
TEST(Kernels, Avx2MatchesScalarBitForBit)
{
    if (k::detected_isa() != k::Isa::Avx2) {
        GTEST_SKIP() << "CPU without AVX2";
    }
    sobolev::Rng rng(7);
    for (std::size_t n = 0; n <= 37; ++n) {
        const auto xr = sample(rng, n);
        const auto xi = sample(rng, n);
        auto yr = sample(rng, n);
        auto yi = sample(rng, n);
        for (std::size_t i = 0; i < n; i += 3) {
            yi[i] = 0.0; // purely real divisors take the exact Smith branch
        }
        for (auto& v : yr) {
            if (v == 0.0) {
                v = 1.5;
            }
        }
        std::vector<double> w(n);
        for (auto& v : w) {
            v = rng.uniform(0.0, 3.0);
        }
        std::vector<double> s_re(n), s_im(n), v_re(n), v_im(n);

        k::scalar::complex_multiply(xr.data(), xi.data(), yr.data(), yi.data(), s_re.data(), s_im.data(), n);
        k::avx2::complex_multiply(xr.data(), xi.data(), yr.data(), yi.data(), v_re.data(), v_im.data(), n);
        expect_bitwise(s_re, v_re);
        expect_bitwise(s_im, v_im);

        k::scalar::complex_divide(xr.data(), xi.data(), yr.data(), yi.data(), s_re.data(), s_im.data(), n);
        k::avx2::complex_divide(xr.data(), xi.data(), yr.data(), yi.data(), v_re.data(), v_im.data(), n);
        expect_bitwise(s_re, v_re);
        expect_bitwise(s_im, v_im);

        k::scalar::weighted_modulus(w.data(), xr.data(), xi.data(), s_re.data(), n);
        k::avx2::weighted_modulus(w.data(), xr.data(), xi.data(), v_re.data(), n);
        expect_bitwise(s_re, v_re);

        std::vector<double> mags(n);
        for (std::size_t i = 0; i < n; ++i) {
            mags[i] = std::fabs(xr[i]) * 1e-250;
        }
        k::scalar::scaled_squares(mags.data(), 0x1.0p+700, s_re.data(), n);
        k::avx2::scaled_squares(mags.data(), 0x1.0p+700, v_re.data(), n);
        expect_bitwise(s_re, v_re);

        EXPECT_EQ(k::scalar::max_value(mags.data(), n), k::avx2::max_value(mags.data(), n));
        const double floor = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
        EXPECT_EQ(k::scalar::max_relative_difference(xr.data(), xi.data(), yr.data(), yi.data(), floor, n),
                  k::avx2::max_relative_difference(xr.data(), xi.data(), yr.data(), yi.data(), floor, n));
    }
}

TEST(Kernels, DispatchedResultsDoNotDependOnIsa)
{
    if (k::detected_isa() != k::Isa::Avx2) {
        GTEST_SKIP() << "CPU without AVX2";
    }
    IsaGuard guard;
    sobolev::Rng rng(11);
    const auto re = sample(rng, 29);
    const auto im = sample(rng, 29);
    const std::vector<double> w(29, 1.25);
    std::vector<double> scalar_out(29), simd_out(29);
    k::select_isa(k::Isa::Scalar);
    k::weighted_modulus(w, re, im, scalar_out);
    k::select_isa(k::Isa::Avx2);
    k::weighted_modulus(w, re, im, simd_out);
    expect_bitwise(scalar_out, simd_out);
}
#endif
