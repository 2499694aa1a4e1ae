#include "sobolev/limits.hpp"

#include <algorithm>

namespace sobolev {

NormResult interpolation_seminorm(const DiagonalSemigroup& s, int n, const CoefficientSequence& x,
                                  const SeriesControl& control)
{
    if (n < 0) {
        throw ContractViolation("interpolation seminorms are indexed by n >= 0");
    }
    return tower_norm(s, n, x, control);
}

MembershipVerdict interpolation_membership(const DiagonalSemigroup& s, const CoefficientSequence& x, int n_max)
{
    if (n_max < 0) {
        throw ContractViolation("n_max must be nonnegative");
    }
    return membership_level(s, x, LevelRange{0, n_max});
}

InterpolationElement interpolation_embed(const DiagonalSemigroup& s, const CoefficientSequence& x, int n_max,
                                         const SeriesControl& control)
{
    if (n_max < 0) {
        throw ContractViolation("n_max must be nonnegative");
    }
    InterpolationElement e{x, {}};
    for (int n = 0; n <= n_max; ++n) {
        if (interpolation_seminorm(s, n, x, control).ok()) {
            e.certified_levels.insert(n);
        }
    }
    return e;
}

ExtrapolationElement extrapolation_embed(const DiagonalSemigroup& s, const CoefficientSequence& x, LevelRange range)
{
    const MembershipVerdict v = membership_level(s, x, range);
    switch (v.status) {
    case MembershipStatus::MemberAllLevels:
    case MembershipStatus::MemberUpTo:
        return ExtrapolationElement{x, std::min(v.max_level, 0), v.max_level};
    case MembershipStatus::NotMember:
        throw NotRepresentable("x lies in no X_n with n >= " + std::to_string(range.min) + ": " + v.evidence.detail);
    case MembershipStatus::Inconclusive:
        break;
    }
    throw NotRepresentable("membership could not be certified: " + v.evidence.detail);
}

NormResult truncation_residual(const DiagonalSemigroup& s, int n, const CoefficientSequence& x, std::size_t last,
                               const SeriesControl& control)
{
    return tower_norm(s, n, truncate_tail(x, last), control);
}

InterpolationElement limit_semigroup_apply(const DiagonalSemigroup& s, double t, const InterpolationElement& e)
{
    return InterpolationElement{semigroup_apply(s, t, e.x), e.certified_levels};
}

ExtrapolationElement limit_semigroup_apply(const DiagonalSemigroup& s, double t, const ExtrapolationElement& e)
{
    return ExtrapolationElement{semigroup_apply(s, t, e.x), e.level, e.canonical_level};
}

InterpolationElement limit_generator_apply(const DiagonalSemigroup& s, const InterpolationElement& e)
{
    // A maps X_{n+1} onto X_n
    std::set<int> levels;
    for (const int n : e.certified_levels) {
        if (n >= 1) {
            levels.insert(n - 1);
        }
    }
    return InterpolationElement{generator_apply(s, e.x), std::move(levels)};
}

ExtrapolationElement limit_generator_apply(const DiagonalSemigroup& s, const ExtrapolationElement& e)
{
    std::optional<int> canonical;
    if (e.canonical_level) {
        canonical = *e.canonical_level - 1;
    }
    return ExtrapolationElement{generator_apply(s, e.x), e.level - 1, canonical};
}

InterpolationElement limit_generator_inverse_apply(const DiagonalSemigroup& s, const InterpolationElement& e)
{
    std::set<int> levels{0};
    for (const int n : e.certified_levels) {
        levels.insert(n + 1);
    }
    return InterpolationElement{generator_inverse_apply(s, e.x), std::move(levels)};
}

ExtrapolationElement limit_generator_inverse_apply(const DiagonalSemigroup& s, const ExtrapolationElement& e)
{
    std::optional<int> canonical;
    if (e.canonical_level) {
        canonical = *e.canonical_level + 1;
    }
    return ExtrapolationElement{generator_inverse_apply(s, e.x), e.level + 1, canonical};
}

} // namespace sobolev
