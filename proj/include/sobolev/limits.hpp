#pragma once

#include <cstddef>
#include <optional>
#include <set>

#include "sobolev/tower.hpp"

namespace sobolev {

/// An element of X_inf = intersection of X_n (n >= 0), tagged with the levels
/// whose seminorm p_n(x) = ||x||_n was certified finite.
struct InterpolationElement {
    CoefficientSequence x;
    std::set<int> certified_levels;
};

/// An element of X_{-inf} = union of X_n, tagged with a level known to contain it.
///
/// `level` starts at min(canonical, 0) and then tracks the generator: A lowers
/// it by one, A^{-1} raises it by one, so after an inverse it may be positive.
/// `canonical_level` is the largest level found by the membership analysis,
/// clamped to the window it was embedded with.
struct ExtrapolationElement {
    CoefficientSequence x;
    int level = 0;
    std::optional<int> canonical_level;
};

/// p_n(x) = (sum_j (|q_j|^n |x_j|)^2)^{1/2}, n >= 0.
NormResult interpolation_seminorm(const DiagonalSemigroup& s, int n, const CoefficientSequence& x,
                                  const SeriesControl& control);

/// Membership in X_n for n in [0, n_max]. MemberAllLevels only when every level is finite.
MembershipVerdict interpolation_membership(const DiagonalSemigroup& s, const CoefficientSequence& x, int n_max);

/// Certifies p_n(x) for n in [0, n_max]; levels that are not Ok are left out of the tag.
InterpolationElement interpolation_embed(const DiagonalSemigroup& s, const CoefficientSequence& x, int n_max,
                                         const SeriesControl& control);

/// Tags x with its canonical level in [range.min, range.max].
/// Throws NotRepresentable when x lies in no X_n of the window.
ExtrapolationElement extrapolation_embed(const DiagonalSemigroup& s, const CoefficientSequence& x, LevelRange range);

/// p_n(x - x 1_{[1,last]}): the distance from x to its truncation in X_inf.
NormResult truncation_residual(const DiagonalSemigroup& s, int n, const CoefficientSequence& x, std::size_t last,
                               const SeriesControl& control);

InterpolationElement limit_semigroup_apply(const DiagonalSemigroup& s, double t, const InterpolationElement& e);
ExtrapolationElement limit_semigroup_apply(const DiagonalSemigroup& s, double t, const ExtrapolationElement& e);

InterpolationElement limit_generator_apply(const DiagonalSemigroup& s, const InterpolationElement& e);
ExtrapolationElement limit_generator_apply(const DiagonalSemigroup& s, const ExtrapolationElement& e);

InterpolationElement limit_generator_inverse_apply(const DiagonalSemigroup& s, const InterpolationElement& e);
ExtrapolationElement limit_generator_inverse_apply(const DiagonalSemigroup& s, const ExtrapolationElement& e);

} // namespace sobolev
