#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sobolev/decay.hpp"
#include "sobolev/norms.hpp"
#include "sobolev/random.hpp"

using namespace sobolev;

namespace {

const SpectrumSpec kMinusJ = SpectrumSpec::power_law(1.0, 1.0, 0.0);
const double kBasel = std::numbers::pi / std::sqrt(6.0);
// sqrt(sum_j j^4 4^{-j}) = sqrt(380/81)
const double kGeomP2 = 2.1659542988464364237;

double ulps_apart(double a, double b)
{
    return std::fabs(a - b) / (std::nextafter(std::fabs(b), INFINITY) - std::fabs(b));
}

} // namespace

TEST(Spectrum, PowerLawEigenvalues)
{
    EXPECT_EQ(kMinusJ.eigenvalue(3), Complex(-3.0, 0.0));
    const auto rotated = SpectrumSpec::power_law(1.0, 1.0, 1.0);
    EXPECT_EQ(rotated.eigenvalue(2), Complex(-2.0, 2.0));
    EXPECT_EQ(kMinusJ.growth_bound(), -1.0);
}

TEST(Spectrum, RejectsInvariantViolations)
{
    EXPECT_THROW(SpectrumSpec::power_law(0.5, 0.0, 0.0), InvalidSpectrum);
    EXPECT_THROW(SpectrumSpec::power_law(0.0, 1.0, 2.0), InvalidSpectrum);
    EXPECT_THROW(SpectrumSpec::power_law(1.0, -1.0, 0.0), InvalidSpectrum);
    EXPECT_THROW(SpectrumSpec::explicit_values({}), InvalidSpectrum);
    EXPECT_THROW(SpectrumSpec::explicit_values({{-1.0, 0.0}, {0.0, 2.0}}), InvalidSpectrum);
    EXPECT_THROW(SpectrumSpec::explicit_values({{-0.5, 0.0}}), InvalidSpectrum);
    EXPECT_NO_THROW(SpectrumSpec::power_law(0.5, 0.0, 1.0));
}

TEST(Spectrum, IndicesAreOneBased)
{
    const auto s = SpectrumSpec::explicit_values({{-1.0, 0.0}, {-2.0, 0.0}});
    EXPECT_THROW(s.eigenvalue(0), IndexError);
    EXPECT_THROW(s.eigenvalue(3), IndexError);
    EXPECT_EQ(s.eigenvalue(2), Complex(-2.0, 0.0));
    EXPECT_EQ(s.growth_bound(), -1.0);
}

TEST(Sequence, FiniteSupportDropsZerosAndRejectsDuplicates)
{
    const auto x = CoefficientSequence::finite({{4, {0.0, 0.0}}, {2, {1.0, -1.0}}});
    EXPECT_EQ(x.finite_support()->size(), 1U);
    EXPECT_EQ(x.coordinate(2), Complex(1.0, -1.0));
    EXPECT_EQ(x.coordinate(4), Complex(0.0, 0.0));
    EXPECT_THROW(CoefficientSequence::finite({{1, {1.0, 0.0}}, {1, {2.0, 0.0}}}), ContractViolation);
    EXPECT_THROW(CoefficientSequence::finite({{0, {1.0, 0.0}}}), IndexError);
}

TEST(Sequence, ClosedFormParameterChecks)
{
    EXPECT_THROW(CoefficientSequence::power_law({0.0, 0.0}, 1.0), ContractViolation);
    EXPECT_THROW(CoefficientSequence::geometric({1.0, 0.0}, 1.0), ContractViolation);
    EXPECT_THROW(CoefficientSequence::geometric({1.0, 0.0}, 0.0), ContractViolation);
    const auto g = CoefficientSequence::geometric({3.0, 0.0}, 0.5);
    EXPECT_EQ(g.coordinate(3), Complex(0.375, 0.0));
    const auto p = CoefficientSequence::power_law({2.0, 0.0}, -2.0);
    EXPECT_EQ(p.coordinate(4), Complex(0.125, 0.0));
}

TEST(Weights, LevelLaw)
{
    const TowerWeight w1 = tower_weight(kMinusJ, 1);
    const TowerWeight w0 = tower_weight(kMinusJ, 0);
    for (std::size_t j = 1; j <= 50; ++j) {
        EXPECT_EQ(w1.value(j), static_cast<double>(j));
        EXPECT_EQ(w0.value(j), 1.0);
    }
    const TowerWeight w2 = tower_weight(SpectrumSpec::power_law(1.0, 1.0, 1.0), 2);
    for (std::size_t j = 1; j <= 50; ++j) {
        EXPECT_EQ(w2.value(j), 2.0 * static_cast<double>(j * j));
    }
}

TEST(Weights, ReciprocityWithinOneUlp)
{
    const auto s = SpectrumSpec::power_law(1.3, 0.7, -0.4);
    for (int n = 1; n <= 5; ++n) {
        const TowerWeight up = tower_weight(s, n);
        const TowerWeight down = tower_weight(s, -n);
        for (std::size_t j = 1; j <= 200; ++j) {
            EXPECT_LE(ulps_apart(up.value(j) * down.value(j), 1.0), 1.0) << "n=" << n << " j=" << j;
        }
    }
}

TEST(Weights, KotheTableValidation)
{
    EXPECT_THROW(KotheMatrix::table({{1.0, -1.0}}), ContractViolation);
    EXPECT_THROW(KotheMatrix::table({{1.0, 2.0}, {0.0, 0.0}}), ContractViolation);
    const auto b = KotheMatrix::table({{1.0, 2.0}, {0.0, 3.0}});
    EXPECT_EQ(b.entry(2, 1), 3.0);
    EXPECT_THROW(b.entry(3, 0), IndexError);
    EXPECT_EQ(KotheMatrix::from_spectrum(kMinusJ).entry(2, 3), 8.0);
}

TEST(WeightedNorm, UnitVectors)
{
    const SeriesControl control;
    EXPECT_EQ(weighted_l2_norm(CoefficientSequence::unit(3), tower_weight(kMinusJ, 2), control).value, 9.0);
    EXPECT_EQ(weighted_l2_norm(CoefficientSequence::unit(5), tower_weight(kMinusJ, 0), control).value, 1.0);
    const auto explicit_s = SpectrumSpec::explicit_values({{-2.0, 0.0}});
    EXPECT_EQ(weighted_l2_norm(CoefficientSequence::unit(1), tower_weight(explicit_s, 1), control).value, 2.0);
    EXPECT_THROW(weighted_l2_norm(CoefficientSequence::unit(5), tower_weight(explicit_s, 0), control), IndexError);
}

TEST(WeightedNorm, BaselSum)
{
    const NormResult r = weighted_l2_norm(CoefficientSequence::power_law({1.0, 0.0}, 0.0), tower_weight(kMinusJ, -1),
                                          SeriesControl{});
    ASSERT_EQ(r.status, SeriesStatus::Ok);
    EXPECT_NEAR(r.value, kBasel, 1e-13);
}

TEST(WeightedNorm, GeometricClosedForm)
{
    const NormResult r = weighted_l2_norm(CoefficientSequence::geometric({1.0, 0.0}, 0.5), tower_weight(kMinusJ, 2),
                                          SeriesControl{});
    ASSERT_EQ(r.status, SeriesStatus::Ok);
    EXPECT_NEAR(r.value, kGeomP2, 1e-14);
}

TEST(WeightedNorm, DivergenceIsReportedNotInconclusive)
{
    const SeriesControl control;
    const auto ones = CoefficientSequence::power_law({1.0, 0.0}, 0.0);
    EXPECT_EQ(weighted_l2_norm(ones, tower_weight(kMinusJ, 0), control).status, SeriesStatus::Divergent);
    // sum j^{-1}: the boundary exponent itself
    const auto harmonic = CoefficientSequence::power_law({1.0, 0.0}, -0.5);
    EXPECT_EQ(weighted_l2_norm(harmonic, tower_weight(kMinusJ, 0), control).status, SeriesStatus::Divergent);
}

TEST(WeightedNorm, TinyToleranceIsInconclusiveForSlowTails)
{
    SeriesControl control;
    control.truncation = 10;
    control.tolerance = 1e-20;
    const auto x = CoefficientSequence::power_law({1.0, 0.0}, -0.75);
    EXPECT_EQ(weighted_l2_norm(x, tower_weight(kMinusJ, 0), control).status, SeriesStatus::Inconclusive);
}

TEST(WeightedNorm, ExplicitSpectrumRejectsSupportBeyondRange)
{
    const auto s = SpectrumSpec::explicit_values({{-1.0, 0.0}});
    EXPECT_THROW(weighted_l2_norm(CoefficientSequence::unit(2), tower_weight(s, 1), SeriesControl{}), IndexError);
    EXPECT_THROW(weighted_l2_norm(CoefficientSequence::geometric({1.0, 0.0}, 0.5), tower_weight(s, 1), SeriesControl{}),
                 IndexError);
}

TEST(WeightedNorm, ExtremeMagnitudesDoNotOverflowOrUnderflow)
{
    const SeriesControl control;
    const auto w = tower_weight(kMinusJ, 0);
    const auto tiny = CoefficientSequence::finite({{1, {3e-200, 0.0}}, {2, {0.0, 4e-200}}});
    const auto huge = CoefficientSequence::finite({{1, {3e200, 0.0}}, {2, {0.0, 4e200}}});
    EXPECT_NEAR(weighted_l2_norm(tiny, w, control).value / 5e-200, 1.0, 1e-15);
    EXPECT_NEAR(weighted_l2_norm(huge, w, control).value / 5e200, 1.0, 1e-15);
}

TEST(WeightedNorm, HomogeneityTriangleAndDeterminism)
{
    Rng rng(1);
    const SeriesControl control;
    const auto w = tower_weight(SpectrumSpec::power_law(1.0, 1.0, 0.5), 2);
    for (int i = 0; i < 200; ++i) {
        const auto x = random_finite_vector(rng, 20, 100);
        const auto y = random_finite_vector(rng, 20, 100);
        const Complex alpha{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        const double nx = weighted_l2_norm(x, w, control).value;
        const double ny = weighted_l2_norm(y, w, control).value;
        EXPECT_NEAR(weighted_l2_norm(scale(x, alpha), w, control).value, std::abs(alpha) * nx,
                    1e-14 * std::abs(alpha) * nx);
        EXPECT_LE(weighted_l2_norm(add(x, y), w, control).value, (nx + ny) * (1.0 + 1e-12));
        EXPECT_EQ(weighted_l2_norm(x, w, control).value, nx);
    }
}

TEST(WeightedNorm, PartialSumsAreMonotoneInTruncation)
{
    const auto x = CoefficientSequence::power_law({1.0, 1.0}, -1.0);
    const auto w = tower_weight(kMinusJ, 0);
    double previous = 0.0;
    for (std::size_t last = 1; last <= 4096; last *= 2) {
        const double v = partial_weighted_l2(x, w, last);
        EXPECT_GE(v, previous);
        previous = v;
    }
}

TEST(C0Seminorm, Examples)
{
    const SeriesControl control;
    const auto b = KotheMatrix::from_spectrum(kMinusJ);
    EXPECT_EQ(c0_seminorm(CoefficientSequence::unit(2), b, 3, control).value, 8.0);
    EXPECT_EQ(c0_seminorm(CoefficientSequence::zero(), b, 3, control).value, 0.0);
    const NormResult g = c0_seminorm(CoefficientSequence::geometric({1.0, 0.0}, 0.5), b, 0, control);
    EXPECT_EQ(g.status, SeriesStatus::Ok);
    EXPECT_EQ(g.value, 0.5);
}

TEST(C0Seminorm, SupremumPastTheMaximiser)
{
    // sup_j j^5 0.9^j is attained at j = 47
    SeriesControl control;
    control.truncation = 10;
    const NormResult r =
        c0_seminorm(CoefficientSequence::geometric({1.0, 0.0}, 0.9), KotheMatrix::from_spectrum(kMinusJ), 5, control);
    ASSERT_EQ(r.status, SeriesStatus::Ok);
    EXPECT_NEAR(r.value, 1621389.0411512472, 1e-8);
}

TEST(C0Seminorm, GrowingWeightsDiverge)
{
    const auto b = KotheMatrix::from_spectrum(kMinusJ);
    const auto x = CoefficientSequence::power_law({1.0, 0.0}, -1.0);
    EXPECT_EQ(c0_seminorm(x, b, 2, SeriesControl{}).status, SeriesStatus::Divergent);
    EXPECT_EQ(c0_seminorm(x, b, 0, SeriesControl{}).value, 1.0);
}

TEST(C0Seminorm, TowerLevelWeights)
{
    const auto b = KotheMatrix::table({{1.0}, {1.0}, {1.0}});
    const auto x = CoefficientSequence::unit(3, {2.0, 0.0});
    EXPECT_EQ(c0_tower_seminorm(x, b, 0, tower_weight(kMinusJ, 2), SeriesControl{}).value, 18.0);
}

TEST(TailEnclosure, PowerLawTailContainsTruth)
{
    // sum_{j > 10} j^{-2}
    DecayProfile g;
    g.power = -2.0;
    const TailEnclosure t = tail_enclosure(g, 10);
    EXPECT_LE(t.lower, 0.095166335681685746);
    EXPECT_GE(t.upper, 0.095166335681685746);
    // the Euler-Maclaurin bracket narrows like J^{-5}
    EXPECT_LT(t.width(), 2e-6);
    EXPECT_LT(tail_enclosure(g, 100).width(), 2e-11);
}

TEST(TailEnclosure, InexactPowerLawStillBrackets)
{
    // sum_{j > 100} j^{-3.5}
    DecayProfile g;
    g.power = -3.5;
    g.exact = false;
    const TailEnclosure t = tail_enclosure(g, 100);
    EXPECT_LE(t.lower, 3.9502755676301754e-6);
    EXPECT_GE(t.upper, 3.9502755676301754e-6);
}

TEST(TailEnclosure, HarmonicIsDivergent)
{
    DecayProfile g;
    g.power = -1.0;
    EXPECT_TRUE(tail_enclosure(g, 1000).divergent);
}
