#include "sobolev/tower.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sobolev/decay.hpp"
#include "sobolev/kernels.hpp"
#include "sobolev/summation.hpp"

namespace sobolev {

namespace {

constexpr double kRelativeFloor = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
// Routes differ only by rounding; anything above this is a bug.
constexpr double kTwoPathLimit = 1e-10;

SeriesStatus worst(SeriesStatus a, SeriesStatus b)
{
    return static_cast<int>(a) > static_cast<int>(b) ? a : b;
}

MembershipVerdict verdict(MembershipStatus status, int max_level, EvidenceMethod method, std::string detail,
                          std::optional<double> boundary = std::nullopt)
{
    return MembershipVerdict{status, max_level, MembershipEvidence{method, std::move(detail), boundary, true}};
}

MembershipVerdict every_level(MembershipStatus status, int max_level, std::string detail)
{
    MembershipVerdict v = verdict(status, max_level, EvidenceMethod::Analytic, std::move(detail));
    v.evidence.window_bound = false;
    return v;
}

std::string format(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

MembershipVerdict numerical_scan(const DiagonalSemigroup& s, const CoefficientSequence& x, LevelRange range)
{
    const auto schedule = default_membership_schedule();
    for (int n = range.max; n >= range.min; --n) {
        MembershipVerdict v = numerical_membership(s, x, n, schedule);
        if (v.status == MembershipStatus::Inconclusive) {
            return v;
        }
        if (v.status != MembershipStatus::NotMember) {
            v.status = MembershipStatus::MemberUpTo;
            v.max_level = n;
            return v;
        }
    }
    return verdict(MembershipStatus::NotMember, range.min, EvidenceMethod::NumericalPartialSum,
                   "partial sums diverge at every level in the window");
}

} // namespace

void LevelRange::validate() const
{
    if (!(min <= 0 && 0 <= max)) {
        throw ContractViolation("level range must satisfy n_min <= 0 <= n_max");
    }
}

TwoPathNorm tower_norm_two_path(const DiagonalSemigroup& s, int n, const CoefficientSequence& x,
                                const SeriesControl& control)
{
    TwoPathNorm out;
    out.by_weight = weighted_l2_norm(x, tower_weight(s.spectrum(), n), control);
    out.by_generator_power = weighted_l2_norm(generator_power(s, n, x), tower_weight(s.spectrum(), 0), control);
    if (!out.by_weight.ok() || !out.by_generator_power.ok()) {
        out.relative_discrepancy = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    const double a = out.by_weight.value;
    const double b = out.by_generator_power.value;
    const double scale = std::max(a, b);
    out.relative_discrepancy = scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
    return out;
}

NormResult tower_norm(const DiagonalSemigroup& s, int n, const CoefficientSequence& x, const SeriesControl& control)
{
    const TwoPathNorm two = tower_norm_two_path(s, n, x, control);
    if (two.relative_discrepancy > kTwoPathLimit) {
        throw ConsistencyError("weight and generator-power routes disagree at level " + std::to_string(n) + ": " +
                               format(two.by_weight.value) + " vs " + format(two.by_generator_power.value));
    }
    return two.by_weight;
}

NormResult graph_norm(const DiagonalSemigroup& s, int n, const CoefficientSequence& x, const SeriesControl& control)
{
    const MembershipVerdict v = membership_level(s, x, LevelRange{std::min(n + 1, 0), std::max(n + 1, 0)});
    if (!v.member_at(n + 1)) {
        throw NotInDomain("x is not in X_" + std::to_string(n + 1) + " = D(A_" + std::to_string(n) + ")");
    }
    const NormResult base = tower_norm(s, n, x, control);
    const NormResult image = tower_norm(s, n, generator_apply(s, x), control);
    NormResult r;
    r.status = worst(base.status, image.status);
    r.value = base.value + image.value;
    r.uncertainty = base.uncertainty + image.uncertainty;
    r.sum_of_squares = r.value * r.value;
    return r;
}

std::string_view to_string(MembershipStatus status) noexcept
{
    switch (status) {
    case MembershipStatus::MemberAllLevels:
        return "member_all_levels";
    case MembershipStatus::MemberUpTo:
        return "member_up_to";
    case MembershipStatus::NotMember:
        return "not_member";
    case MembershipStatus::Inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

std::string_view to_string(EvidenceMethod method) noexcept
{
    return method == EvidenceMethod::Analytic ? "analytic" : "numerical_partial_sum";
}

bool MembershipVerdict::member_at(int n) const noexcept
{
    switch (status) {
    case MembershipStatus::MemberAllLevels:
        return true;
    case MembershipStatus::MemberUpTo:
        return n <= max_level;
    default:
        return false;
    }
}

MembershipVerdict membership_level(const DiagonalSemigroup& s, const CoefficientSequence& x, LevelRange range)
{
    range.validate();
    if (const auto* fs = x.finite_support()) {
        if (const auto size = s.spectrum().size(); size && fs->max_index() > *size) {
            throw IndexError("support reaches index " + std::to_string(fs->max_index()) + " beyond explicit spectrum");
        }
        return every_level(MembershipStatus::MemberAllLevels, range.max, fs->empty() ? "zero vector" : "finite support");
    }
    const auto* pl = s.spectrum().as_power_law();
    if (pl == nullptr) {
        throw IndexError("closed-form sequences have infinite support; an explicit spectrum covers finitely many indices");
    }
    const DecayProfile profile = profile_of(*x.closed_form(), 1);
    if (profile.decays_exponentially()) {
        return every_level(MembershipStatus::MemberAllLevels, range.max,
                           "coordinates decay faster than every power of j");
    }
    if (!profile.sharp) {
        return numerical_scan(s, x, range);
    }

    const double alpha = profile.power;
    if (pl->p == 0.0) {
        // |q_j| is constant: the weight never changes the exponent
        const bool member = 2.0 * alpha < -1.0;
        return every_level(member ? MembershipStatus::MemberAllLevels : MembershipStatus::NotMember,
                           member ? range.max : range.min,
                           "degenerate spectrum p = 0: membership decided by the decay exponent " + format(alpha) +
                               " alone");
    }
    const double threshold = (-0.5 - alpha) / pl->p;
    const double top = std::ceil(threshold) - 1.0;
    std::string detail = "|x_j| ~ j^" + format(alpha) + ", |q_j| ~ j^" + format(pl->p) + ": x in X_n iff n < " +
                         format(threshold);
    if (top > static_cast<double>(range.max)) {
        detail += "; clamped to n_max = " + std::to_string(range.max) + ", analytic maximum " +
                  (std::isfinite(top) && top < 1e9 ? std::to_string(static_cast<long long>(top)) : format(top));
        return verdict(MembershipStatus::MemberUpTo, range.max, EvidenceMethod::Analytic, detail, threshold);
    }
    if (top < static_cast<double>(range.min)) {
        detail += "; no level in [" + std::to_string(range.min) + ", " + std::to_string(range.max) + "]";
        return verdict(MembershipStatus::NotMember, range.min, EvidenceMethod::Analytic, detail, threshold);
    }
    return verdict(MembershipStatus::MemberUpTo, static_cast<int>(top), EvidenceMethod::Analytic, detail, threshold);
}

std::vector<std::size_t> default_membership_schedule()
{
    return {10, 100, 1000, 10000};
}

MembershipVerdict numerical_membership(const DiagonalSemigroup& s, const CoefficientSequence& x, int n,
                                       std::span<const std::size_t> schedule)
{
    if (schedule.size() < 3) {
        throw ContractViolation("membership schedule needs at least three truncation points");
    }
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        if (schedule[i] <= schedule[i - 1] || schedule[0] == 0) {
            throw ContractViolation("membership schedule must be positive and increasing");
        }
    }
    const TowerWeight w = tower_weight(s.spectrum(), n);
    if (const auto* fs = x.finite_support()) {
        (void)weighted_l2_norm(x, w, SeriesControl{});
        return verdict(MembershipStatus::MemberUpTo, n, EvidenceMethod::NumericalPartialSum,
                       fs->empty() ? "zero vector" : "finite sum");
    }

    NeumaierSum acc;
    std::vector<double> partial;
    std::size_t next = 0;
    for (std::size_t j = 1; j <= schedule.back(); ++j) {
        const double a = w.value(j) * std::abs(x.coordinate(j));
        acc.add(a * a);
        if (j == schedule[next]) {
            partial.push_back(acc.value());
            ++next;
        }
    }
    const double total = partial.back();
    if (!std::isfinite(total)) {
        return verdict(MembershipStatus::NotMember, n, EvidenceMethod::NumericalPartialSum,
                       "partial sums overflow double precision");
    }
    std::vector<double> increments;
    for (std::size_t k = 1; k < partial.size(); ++k) {
        increments.push_back(partial[k] - partial[k - 1]);
    }
    const double last_increment = increments.back();
    if (last_increment <= total * 1e-17) {
        return verdict(MembershipStatus::MemberUpTo, n, EvidenceMethod::NumericalPartialSum,
                       "increments vanish at J = " + std::to_string(schedule.back()));
    }
    std::vector<double> slopes;
    for (std::size_t k = 1; k < increments.size(); ++k) {
        if (increments[k - 1] <= 0.0) {
            continue;
        }
        slopes.push_back(std::log(increments[k] / increments[k - 1]) /
                         std::log(static_cast<double>(schedule[k + 1]) / static_cast<double>(schedule[k])));
    }
    if (slopes.size() < 2) {
        return verdict(MembershipStatus::Inconclusive, n, EvidenceMethod::NumericalPartialSum,
                       "too few positive increments to estimate decay");
    }
    const double e1 = slopes[slopes.size() - 2];
    const double e2 = slopes.back();
    const std::string detail = "increment exponents " + format(e1) + ", " + format(e2) + " at J = " +
                               std::to_string(schedule.back()) + ", partial sum " + format(total);
    if (e1 < -0.1 && e2 < -0.1) {
        return verdict(MembershipStatus::MemberUpTo, n, EvidenceMethod::NumericalPartialSum, detail);
    }
    if (e1 >= 0.0 && e2 >= 0.0) {
        return verdict(MembershipStatus::NotMember, n, EvidenceMethod::NumericalPartialSum, detail);
    }
    return verdict(MembershipStatus::Inconclusive, n, EvidenceMethod::NumericalPartialSum, detail);
}

double coordinate_relative_error(const CoefficientSequence& a, const CoefficientSequence& b)
{
    const auto* fa = a.finite_support();
    const auto* fb = b.finite_support();
    if (fa == nullptr || fb == nullptr) {
        throw ContractViolation("coordinate comparison needs finite-support sequences");
    }
    std::vector<double> ar;
    std::vector<double> ai;
    std::vector<double> br;
    std::vector<double> bi;
    std::size_t i = 0;
    std::size_t k = 0;
    while (i < fa->size() || k < fb->size()) {
        const std::size_t ja = i < fa->size() ? fa->indices()[i] : SIZE_MAX;
        const std::size_t jb = k < fb->size() ? fb->indices()[k] : SIZE_MAX;
        const std::size_t j = std::min(ja, jb);
        const Complex va = ja == j ? fa->value_at(i++) : Complex{};
        const Complex vb = jb == j ? fb->value_at(k++) : Complex{};
        ar.push_back(va.real());
        ai.push_back(va.imag());
        br.push_back(vb.real());
        bi.push_back(vb.imag());
    }
    return kernels::max_relative_difference(ar, ai, br, bi, kRelativeFloor);
}

SimilarityResult similarity_check(const DiagonalSemigroup& s, int n, double t, const CoefficientSequence& x,
                                  double tol)
{
    (void)n; // diagonal operators act identically on every level; n only names the step being checked
    if (!x.is_finite_support()) {
        throw ContractViolation("similarity check needs a finite-support vector");
    }
    const CoefficientSequence direct = semigroup_apply(s, t, x);
    const CoefficientSequence conjugated =
        generator_inverse_apply(s, semigroup_apply(s, t, generator_apply(s, x)));
    SimilarityResult r;
    r.max_rel_error = coordinate_relative_error(direct, conjugated);
    r.pass = r.max_rel_error <= tol;
    return r;
}

EquicontinuityConstants equicontinuity_constants(const DiagonalSemigroup& s, int n, std::span<const double> t_grid,
                                                 std::span<const CoefficientSequence> x_set)
{
    if (t_grid.empty() || x_set.empty()) {
        throw ContractViolation("equicontinuity needs a nonempty time grid and vector set");
    }
    EquicontinuityConstants out;
    out.omega = -std::numeric_limits<double>::infinity();
    for (const auto& x : x_set) {
        const auto* fs = x.finite_support();
        if (fs == nullptr) {
            throw ContractViolation("equicontinuity constants need finite-support vectors");
        }
        for (const std::size_t j : fs->indices()) {
            out.omega = std::max(out.omega, s.spectrum().eigenvalue(j).real());
        }
    }
    if (!std::isfinite(out.omega)) {
        throw ContractViolation("equicontinuity constants need a nonzero vector");
    }
    const SeriesControl control{};
    for (const auto& x : x_set) {
        if (x.is_zero()) {
            continue;
        }
        const double base = tower_norm(s, n, x, control).value;
        for (const double t : t_grid) {
            const double evolved = tower_norm(s, n, semigroup_apply(s, t, x), control).value;
            out.m_observed = std::max(out.m_observed, evolved / (std::exp(out.omega * t) * base));
        }
    }
    return out;
}

RatioRange rescaled_tower_compare(const DiagonalSemigroup& s, Complex lambda, int n,
                                  std::span<const CoefficientSequence> x_set, const SeriesControl& control)
{
    const DiagonalSemigroup shifted = rescale(s, lambda);
    RatioRange out{std::numeric_limits<double>::infinity(), 0.0};
    bool any = false;
    for (const auto& x : x_set) {
        if (x.is_zero()) {
            continue;
        }
        const NormResult original = tower_norm(s, n, x, control);
        const NormResult rescaled = tower_norm(shifted, n, x, control);
        if (!original.ok() || !rescaled.ok()) {
            continue;
        }
        const double ratio = rescaled.value / original.value;
        out.ratio_min = std::min(out.ratio_min, ratio);
        out.ratio_max = std::max(out.ratio_max, ratio);
        any = true;
    }
    if (!any) {
        throw ContractViolation("no vector with certified norms in both towers");
    }
    return out;
}

} // namespace sobolev
