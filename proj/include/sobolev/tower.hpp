#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sobolev/norms.hpp"
#include "sobolev/semigroup.hpp"

namespace sobolev {

/// Window [min, max] of tower levels, min <= 0 <= max.
struct LevelRange {
    int min = -5;
    int max = 5;

    void validate() const;
    bool contains(int n) const noexcept { return n >= min && n <= max; }
};

/// ||x||_n = ||A^n x||_0 = (sum_j (|q_j|^n |x_j|)^2)^{1/2}, computed by the
/// weight route and cross-checked against the generator-power route.
/// Throws ConsistencyError if the two certified values disagree beyond rounding.
NormResult tower_norm(const DiagonalSemigroup& s, int n, const CoefficientSequence& x, const SeriesControl& control);

struct TwoPathNorm {
    NormResult by_weight;
    NormResult by_generator_power;
    /// |difference| / max(values), 0 when both vanish, NaN when either is not Ok.
    double relative_discrepancy;
};

TwoPathNorm tower_norm_two_path(const DiagonalSemigroup& s, int n, const CoefficientSequence& x,
                                const SeriesControl& control);

/// ||x||_n + ||Ax||_n, the graph norm of A_n on X_{n+1}. Throws NotInDomain when x is not in X_{n+1}.
NormResult graph_norm(const DiagonalSemigroup& s, int n, const CoefficientSequence& x, const SeriesControl& control);

enum class MembershipStatus { MemberAllLevels, MemberUpTo, NotMember, Inconclusive };
enum class EvidenceMethod { Analytic, NumericalPartialSum };

std::string_view to_string(MembershipStatus status) noexcept;
std::string_view to_string(EvidenceMethod method) noexcept;

struct MembershipEvidence {
    EvidenceMethod method = EvidenceMethod::Analytic;
    std::string detail;
    /// Real level n* with x in X_n iff n < n* (power-law analysis only).
    std::optional<double> boundary_exponent;
    /// False when the verdict holds for every integer level, not just the window it was asked about.
    bool window_bound = true;
};

/// MemberUpTo(m) means x in X_n for every n <= m (X_{n+1} is contained in X_n).
struct MembershipVerdict {
    MembershipStatus status = MembershipStatus::Inconclusive;
    int max_level = 0;
    MembershipEvidence evidence;

    bool member_at(int n) const noexcept;
};

/// Largest level n with x in X_n, decided from the analytic decay envelope:
/// finite support and exponential decay are in every level; |x_j| ~ C j^alpha
/// with |q_j| ~ m j^p is in X_n iff 2(np + alpha) < -1. The boundary is not a
/// member. Answers above range.max are clamped, with the analytic answer noted.
/// Falls back to partial sums when the envelope is not sharp.
MembershipVerdict membership_level(const DiagonalSemigroup& s, const CoefficientSequence& x, LevelRange range = {});

/// Default partial-sum schedule for numerical membership.
std::vector<std::size_t> default_membership_schedule();

/// Decides x in X_n from partial sums alone. With increments D_k over a
/// geometric schedule, log(D_k / D_{k-1}) / log(J_k / J_{k-1}) estimates the
/// summand exponent plus one: both of the last two estimates below -0.1
/// certify membership, both at or above 0 certify divergence.
MembershipVerdict numerical_membership(const DiagonalSemigroup& s, const CoefficientSequence& x, int n,
                                       std::span<const std::size_t> schedule);

struct SimilarityResult {
    double max_rel_error = 0.0;
    bool pass = true;
};

/// Compares T(t)x with A^{-1} T(t) A x coordinatewise (finite support only).
SimilarityResult similarity_check(const DiagonalSemigroup& s, int n, double t, const CoefficientSequence& x,
                                  double tol);

struct EquicontinuityConstants {
    double omega = 0.0;
    double m_observed = 0.0;
};

/// omega = sup Re q_j over the supports of x_set; M_observed = max ||T(t)x||_n / (e^{omega t} ||x||_n).
EquicontinuityConstants equicontinuity_constants(const DiagonalSemigroup& s, int n, std::span<const double> t_grid,
                                                 std::span<const CoefficientSequence> x_set);

struct RatioRange {
    double ratio_min = 0.0;
    double ratio_max = 0.0;
};

/// Level-n norm in the tower of A + lambda divided by the level-n norm in the tower of A.
RatioRange rescaled_tower_compare(const DiagonalSemigroup& s, Complex lambda, int n,
                                  std::span<const CoefficientSequence> x_set, const SeriesControl& control);

/// max_j |a_j - b_j| / max(|a_j|, |b_j|, floor) over the union of supports.
/// The floor sits at the bottom of the normal range so underflowing coordinates compare absolutely.
double coordinate_relative_error(const CoefficientSequence& a, const CoefficientSequence& b);

} // namespace sobolev
