#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sobolev/complex.hpp"

using sobolev::Complex;

TEST(Complex, DivisionByRealDivisorMatchesComponentDivision)
{
    const Complex z{0.7, -1.3};
    for (const double d : {-3.0, -7.0, 0.1, 1e-300, 1e300}) {
        const Complex q = sobolev::divide(z, {d, 0.0});
        EXPECT_EQ(q.real(), z.real() / d);
        EXPECT_EQ(q.imag(), z.imag() / d);
    }
}

TEST(Complex, DivisionInvertsMultiplication)
{
    const Complex a{0.3, 0.9};
    const Complex b{-2.0, 5.0};
    const Complex back = sobolev::divide(sobolev::multiply(a, b), b);
    EXPECT_NEAR(back.real(), a.real(), 1e-15);
    EXPECT_NEAR(back.imag(), a.imag(), 1e-15);
}

TEST(Complex, IntegerPowerOfRealIsExactForSmallIntegers)
{
    EXPECT_EQ(sobolev::integer_power({-3.0, 0.0}, 5), Complex(-243.0, 0.0));
    EXPECT_EQ(sobolev::integer_power({-2.0, 0.0}, -3), Complex(-0.125, 0.0));
    EXPECT_EQ(sobolev::integer_power({4.0, 1.0}, 0), Complex(1.0, 0.0));
    const Complex i2 = sobolev::integer_power({0.0, 1.0}, 2);
    EXPECT_EQ(i2.real(), -1.0);
    EXPECT_EQ(i2.imag(), 0.0);
}

TEST(Complex, ExponentialOfRealArgumentHasZeroImaginaryPart)
{
    const Complex e = sobolev::exponential({-2.0, 0.0});
    EXPECT_EQ(e.real(), std::exp(-2.0));
    EXPECT_EQ(e.imag(), 0.0);
}

TEST(Complex, ExponentialMinusOneIsAccurateForTinyArguments)
{
    const Complex z{-1e-10, 3e-10};
    const Complex e = sobolev::exponential_minus_one(z);
    // e^z - 1 = z + z^2/2 + ..., z^2/2 = (-4e-20, -3e-20)
    EXPECT_NEAR(e.real(), -1e-10 - 4e-20, 1e-26);
    EXPECT_NEAR(e.imag(), 3e-10 - 3e-20, 1e-26);
}

TEST(Complex, RequireFiniteRejectsNan)
{
    EXPECT_THROW(sobolev::require_finite({std::nan(""), 0.0}, "z"), sobolev::ContractViolation);
    EXPECT_NO_THROW(sobolev::require_finite({1.0, -1.0}, "z"));
}
