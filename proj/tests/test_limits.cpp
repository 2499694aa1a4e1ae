#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sobolev/limits.hpp"
#include "sobolev/random.hpp"
#include "sobolev/verify.hpp"

using namespace sobolev;

namespace {

const DiagonalSemigroup kMinusJ(SpectrumSpec::power_law(1.0, 1.0, 0.0));
const double kGeomP2 = 2.1659542988464364237;

double max_ulps(const CoefficientSequence& a, const CoefficientSequence& b)
{
    double worst = 0.0;
    for (const std::size_t j : a.finite_support()->indices()) {
        worst = std::max(worst, ulp_distance(a.coordinate(j), b.coordinate(j)));
    }
    return worst;
}

} // namespace

TEST(Interpolation, SeminormExamples)
{
    const SeriesControl control;
    const NormResult g = interpolation_seminorm(kMinusJ, 2, CoefficientSequence::geometric({1.0, 0.0}, 0.5), control);
    ASSERT_TRUE(g.ok());
    EXPECT_NEAR(g.value, kGeomP2, 1e-12);
    EXPECT_EQ(interpolation_seminorm(kMinusJ, 0, CoefficientSequence::unit(1), control).value, 1.0);
    EXPECT_EQ(interpolation_seminorm(kMinusJ, 3, CoefficientSequence::unit(2), control).value, 8.0);
    EXPECT_THROW(interpolation_seminorm(kMinusJ, -1, CoefficientSequence::unit(2), control), ContractViolation);
}

TEST(Interpolation, LadderIsMonotone)
{
    const DiagonalSemigroup s(SpectrumSpec::power_law(0.7, 1.3, 1.0));
    Rng rng(37);
    for (int i = 0; i < 50; ++i) {
        const auto x = random_finite_vector(rng, 20, 100);
        for (int n = 0; n < 5; ++n) {
            EXPECT_LE(interpolation_seminorm(s, n, x, SeriesControl{}).value,
                      interpolation_seminorm(s, n + 1, x, SeriesControl{}).value);
        }
    }
}

TEST(Interpolation, Membership)
{
    EXPECT_EQ(interpolation_membership(kMinusJ, CoefficientSequence::geometric({3.0, 0.0}, 0.9), 5).status,
              MembershipStatus::MemberAllLevels);
    EXPECT_EQ(interpolation_membership(kMinusJ, CoefficientSequence::unit(1), 5).status,
              MembershipStatus::MemberAllLevels);
    const MembershipVerdict v =
        interpolation_membership(kMinusJ, CoefficientSequence::power_law({1.0, 0.0}, -10.0), 12);
    EXPECT_EQ(v.status, MembershipStatus::MemberUpTo);
    EXPECT_EQ(v.max_level, 9);
}

TEST(Interpolation, EmbedCertifiesLevels)
{
    const auto e = interpolation_embed(kMinusJ, CoefficientSequence::geometric({1.0, 0.0}, 0.5), 4, SeriesControl{});
    EXPECT_EQ(e.certified_levels, (std::set<int>{0, 1, 2, 3, 4}));
    const auto p = interpolation_embed(kMinusJ, CoefficientSequence::power_law({1.0, 0.0}, -2.0), 4, SeriesControl{});
    EXPECT_EQ(p.certified_levels, (std::set<int>{0, 1}));
}

TEST(Interpolation, TruncationResidualDecreases)
{
    const auto x = CoefficientSequence::geometric({1.0, 0.0}, 0.9);
    const double full = interpolation_seminorm(kMinusJ, 2, x, SeriesControl{}).value;
    double previous = INFINITY;
    for (std::size_t last = 8; last <= 1024; last *= 2) {
        const NormResult r = truncation_residual(kMinusJ, 2, x, last, SeriesControl{});
        ASSERT_TRUE(r.ok());
        EXPECT_LE(r.value, previous);
        previous = r.value;
    }
    EXPECT_LE(previous / full, 1e-12);
}

TEST(Extrapolation, EmbedExamples)
{
    const LevelRange window{-5, 5};
    const auto ones = extrapolation_embed(kMinusJ, CoefficientSequence::power_law({1.0, 0.0}, 0.0), window);
    EXPECT_EQ(ones.level, -1);
    EXPECT_EQ(ones.canonical_level, -1);

    const auto e5 = extrapolation_embed(kMinusJ, CoefficientSequence::unit(5), window);
    EXPECT_EQ(e5.level, 0);
    EXPECT_EQ(e5.canonical_level, 5);

    EXPECT_THROW(extrapolation_embed(kMinusJ, CoefficientSequence::power_law({1.0, 0.0}, 2.0), LevelRange{-2, 5}),
                 NotRepresentable);
}

TEST(Extrapolation, GeneratorMovesTheLevel)
{
    const auto ones = extrapolation_embed(kMinusJ, CoefficientSequence::power_law({1.0, 0.0}, 0.0), LevelRange{});
    const auto ax = limit_generator_apply(kMinusJ, ones);
    EXPECT_EQ(ax.level, -2);
    EXPECT_EQ(ax.canonical_level, -2);
    EXPECT_EQ(ax.x.coordinate(4), Complex(-4.0, 0.0));
    const NormResult r = tower_norm(kMinusJ, -2, ax.x, SeriesControl{});
    ASSERT_TRUE(r.ok());
    EXPECT_NEAR(r.value, std::numbers::pi / std::sqrt(6.0), 1e-13);

    const auto back = limit_generator_inverse_apply(kMinusJ, ax);
    EXPECT_EQ(back.level, ones.level);
    EXPECT_EQ(back.canonical_level, ones.canonical_level);

    const ExtrapolationElement zero{CoefficientSequence::zero(), -3, std::nullopt};
    EXPECT_TRUE(limit_semigroup_apply(kMinusJ, 1.0, zero).x.is_zero());
    EXPECT_EQ(limit_semigroup_apply(kMinusJ, 1.0, zero).level, -3);
}

TEST(Extrapolation, SemigroupContractsTheStoredLevel)
{
    const auto ones = extrapolation_embed(kMinusJ, CoefficientSequence::power_law({1.0, 0.0}, 0.0), LevelRange{});
    const auto moved = limit_semigroup_apply(kMinusJ, 1.0, ones);
    EXPECT_EQ(moved.level, ones.level);
    const double before = tower_norm(kMinusJ, -1, ones.x, SeriesControl{}).value;
    const double after = tower_norm(kMinusJ, -1, moved.x, SeriesControl{}).value;
    EXPECT_LE(after, std::exp(-1.0) * before * (1.0 + 1e-12));
    EXPECT_EQ(limit_semigroup_apply(kMinusJ, 0.0, ones).x.describe(), ones.x.describe());
}

TEST(Limits, RoundTripsWithinTwoUlps)
{
    const DiagonalSemigroup s(SpectrumSpec::power_law(1.0, 1.0, 0.5));
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const auto x = random_finite_vector(rng, 20, 100);
        const auto e = extrapolation_embed(s, x, LevelRange{});
        const auto ab = limit_generator_apply(s, limit_generator_inverse_apply(s, e));
        const auto ba = limit_generator_inverse_apply(s, limit_generator_apply(s, e));
        EXPECT_LE(max_ulps(x, ab.x), 2.0);
        EXPECT_LE(max_ulps(x, ba.x), 2.0);
        EXPECT_EQ(ab.level, e.level);
        EXPECT_EQ(ba.canonical_level, e.canonical_level);

        const auto ie = interpolation_embed(s, x, 3, SeriesControl{});
        const auto iab = limit_generator_inverse_apply(s, limit_generator_apply(s, ie));
        EXPECT_LE(max_ulps(x, iab.x), 2.0);
        EXPECT_EQ(iab.certified_levels.count(0), 1U);
        EXPECT_TRUE(std::includes(iab.certified_levels.begin(), iab.certified_levels.end(),
                                  ie.certified_levels.begin(), ie.certified_levels.end()));
    }
}
