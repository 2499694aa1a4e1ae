#include "sobolev/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "sobolev/limits.hpp"
#include "sobolev/random.hpp"

namespace sobolev {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxFailWitnesses = 5;
constexpr double kOrderTolerance = 0.03;
constexpr double kErrorConstantTolerance = 0.1;
constexpr double kRoundTripUlps = 2.0;
constexpr double kUnderflowedError = 1e-15;
constexpr std::size_t kMembershipInstances = 50;
constexpr int kMembershipLevelSpan = 3;
// |2(np + s) + 1| below this is too close to the harmonic boundary for partial sums
constexpr double kBoundaryExclusion = 0.2;
// probes for the order checks keep h * |q_j| small enough for the leading Taylor term to dominate
constexpr double kProbeStepBound = 0.05;

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

class Tally {
public:
    Tally(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

    void observe(double error, const std::function<std::string()>& input)
    {
        ++evaluations_;
        if (std::isnan(error)) {
            inconclusive(input());
            return;
        }
        const bool failed = !(error <= tolerance_);
        if (failed) {
            ++failures_;
            if (fail_witnesses_.size() < kMaxFailWitnesses) {
                fail_witnesses_.push_back(Witness{input(), error});
            }
        }
        if (!worst_ || error > worst_->observed) {
            worst_ = Witness{input(), error};
        }
    }

    void fail(std::string input, std::string_view reason)
    {
        observe(kInf, [&] { return input + ": " + std::string(reason); });
    }

    void inconclusive(std::string input)
    {
        ++inconclusive_;
        if (inconclusive_witness_.empty()) {
            inconclusive_witness_ = std::move(input);
        }
    }

    void note(std::string text) { note_ = std::move(text); }

    CheckRecord finish()
    {
        CheckRecord r;
        r.name = name_;
        r.tolerance = tolerance_;
        r.evaluations = evaluations_;
        r.note = note_;
        r.max_error = worst_ ? worst_->observed : 0.0;
        if (failures_ > 0) {
            r.status = CheckStatus::Fail;
            r.witnesses = fail_witnesses_;
            if (r.note.empty()) {
                r.note = std::to_string(failures_) + " of " + std::to_string(evaluations_) + " cases exceed tolerance";
            }
        } else if (inconclusive_ > 0) {
            r.status = CheckStatus::Inconclusive;
            r.witnesses.push_back(Witness{inconclusive_witness_, std::numeric_limits<double>::quiet_NaN()});
            if (r.note.empty()) {
                r.note = std::to_string(inconclusive_) + " cases could not be certified";
            }
        } else if (worst_) {
            r.witnesses.push_back(*worst_);
        }
        return r;
    }

private:
    std::string name_;
    double tolerance_;
    std::size_t evaluations_ = 0;
    std::size_t failures_ = 0;
    std::size_t inconclusive_ = 0;
    std::optional<Witness> worst_;
    std::vector<Witness> fail_witnesses_;
    std::string inconclusive_witness_;
    std::string note_;
};

double relative_gap(double a, double b)
{
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

double max_ulp_distance(const CoefficientSequence& a, const CoefficientSequence& b)
{
    const auto& fa = *a.finite_support();
    const auto& fb = *b.finite_support();
    double worst = 0.0;
    for (const std::size_t j : fa.indices()) {
        worst = std::max(worst, ulp_distance(fa.coordinate(j), fb.coordinate(j)));
    }
    for (const std::size_t j : fb.indices()) {
        worst = std::max(worst, ulp_distance(fa.coordinate(j), fb.coordinate(j)));
    }
    return worst;
}

std::string at(const CoefficientSequence& x, std::initializer_list<std::pair<const char*, double>> params)
{
    std::string out = "x=" + x.describe();
    for (const auto& [key, value] : params) {
        out += std::string(" ") + key + "=" + fmt(value);
    }
    return out;
}

void validate(const DiagonalSemigroup& s, const CheckSpec& spec)
{
    if (!(spec.levels.min <= 0 && 0 <= spec.levels.max)) {
        throw ConfigurationError("levels must satisfy n_min <= 0 <= n_max");
    }
    if (spec.t_grid.empty()) {
        throw ConfigurationError("t_grid is empty");
    }
    for (const double t : spec.t_grid) {
        if (!std::isfinite(t) || t < 0.0) {
            throw ConfigurationError("t_grid entries must be finite and nonnegative");
        }
    }
    if (spec.h_grid.empty()) {
        throw ConfigurationError("h_grid is empty");
    }
    for (std::size_t i = 0; i < spec.h_grid.size(); ++i) {
        const double h = spec.h_grid[i];
        if (!std::isfinite(h) || h <= 0.0 || (i > 0 && h >= spec.h_grid[i - 1])) {
            throw ConfigurationError("h_grid must be positive and strictly decreasing");
        }
    }
    if (spec.vector_family.empty()) {
        throw ConfigurationError("vector family is empty");
    }
    if (!(spec.tol > 0.0) || !std::isfinite(spec.tol)) {
        throw ConfigurationError("tol must be positive and finite");
    }
    if (spec.control.truncation == 0 || !(spec.control.tolerance > 0.0)) {
        throw ConfigurationError("truncation and tolerance must be positive");
    }
    try {
        (void)rescale(s, spec.lambda);
    } catch (const InvalidRescaling& e) {
        throw ConfigurationError(std::string("rescaling parameter is not admissible: ") + e.what());
    }
}

struct Context {
    const DiagonalSemigroup& s;
    const CheckSpec& spec;
    std::vector<const CoefficientSequence*> finite;
    std::vector<const CoefficientSequence*> all;
};

// Runs body(tally); library errors thrown inside become failures with the given witness.
template <class Body>
void guarded(Tally& tally, const std::string& input, Body&& body)
{
    try {
        body();
    } catch (const Error& e) {
        tally.fail(input, e.what());
    }
}

CheckRecord semigroup_law(const Context& c)
{
    Tally tally("semigroup_law", c.spec.tol);
    for (const double t : c.spec.t_grid) {
        for (const double u : c.spec.t_grid) {
            for (const auto* x : c.finite) {
                const std::string input = at(*x, {{"t", t}, {"s", u}});
                guarded(tally, input, [&] {
                    const auto joint = semigroup_apply(c.s, t + u, *x);
                    const auto composed = semigroup_apply(c.s, t, semigroup_apply(c.s, u, *x));
                    tally.observe(coordinate_relative_error(joint, composed), [&] { return input; });
                });
            }
        }
    }
    return tally.finish();
}

CheckRecord identity_at_zero(const Context& c)
{
    Tally tally("identity_at_zero", 0.0);
    for (const auto* x : c.finite) {
        const std::string input = at(*x, {});
        guarded(tally, input, [&] {
            tally.observe(coordinate_relative_error(semigroup_apply(c.s, 0.0, *x), *x), [&] { return input; });
        });
    }
    return tally.finish();
}

CheckRecord growth_bound(const Context& c)
{
    // Observed value: ||T(t)x||_n / (e^{omega t} ||x||_n), at most 1 when M = 1.
    Tally tally("growth_bound", c.spec.tol);
    const double omega = c.s.growth_bound();
    tally.note("omega=" + fmt(omega) + " M=1");
    for (int n = c.spec.levels.min; n <= c.spec.levels.max; ++n) {
        for (const double t : c.spec.t_grid) {
            const double envelope = std::exp(omega * t);
            for (const auto* x : c.finite) {
                if (x->is_zero()) {
                    continue;
                }
                const std::string input = at(*x, {{"n", n}, {"t", t}});
                guarded(tally, input, [&] {
                    const double before = tower_norm(c.s, n, *x, c.spec.control).value;
                    const double after = tower_norm(c.s, n, semigroup_apply(c.s, t, *x), c.spec.control).value;
                    const double denominator = envelope * before;
                    if (!(denominator > 0.0) || !std::isfinite(denominator)) {
                        tally.inconclusive(input + ": envelope outside double range");
                        return;
                    }
                    const double ratio = after / denominator;
                    tally.observe(std::max(ratio - 1.0, 0.0),
                                  [&] { return input + " ratio=" + fmt(ratio); });
                });
            }
        }
    }
    return tally.finish();
}

CheckRecord norm_recursion(const Context& c)
{
    Tally tally("norm_recursion", c.spec.tol);
    for (int n = c.spec.levels.min + 1; n <= c.spec.levels.max; ++n) {
        for (const auto* x : c.all) {
            const std::string input = at(*x, {{"n", n}});
            guarded(tally, input, [&] {
                const NormResult direct = tower_norm(c.s, n, *x, c.spec.control);
                const NormResult shifted = tower_norm(c.s, n - 1, generator_apply(c.s, *x), c.spec.control);
                if (direct.ok() && shifted.ok()) {
                    tally.observe(relative_gap(direct.value, shifted.value), [&] { return input; });
                } else if (direct.status == SeriesStatus::Divergent && shifted.status == SeriesStatus::Divergent) {
                    tally.observe(0.0, [&] { return input; });
                } else if (direct.status == SeriesStatus::Divergent || shifted.status == SeriesStatus::Divergent) {
                    tally.fail(input, "one side diverges, the other does not");
                } else {
                    tally.inconclusive(input);
                }
            });
        }
    }
    return tally.finish();
}

CheckRecord two_path_consistency(const Context& c)
{
    Tally tally("two_path_consistency", c.spec.tol);
    for (int n = c.spec.levels.min; n <= c.spec.levels.max; ++n) {
        for (const auto* x : c.all) {
            const std::string input = at(*x, {{"n", n}});
            guarded(tally, input, [&] {
                const TwoPathNorm two = tower_norm_two_path(c.s, n, *x, c.spec.control);
                const auto a = two.by_weight.status;
                const auto b = two.by_generator_power.status;
                if (a == SeriesStatus::Ok && b == SeriesStatus::Ok) {
                    tally.observe(two.relative_discrepancy, [&] { return input; });
                } else if (a == b && a == SeriesStatus::Divergent) {
                    tally.observe(0.0, [&] { return input; });
                } else if (a == SeriesStatus::Divergent || b == SeriesStatus::Divergent) {
                    tally.fail(input, "one route diverges, the other does not");
                } else {
                    tally.inconclusive(input);
                }
            });
        }
    }
    return tally.finish();
}

CheckRecord similarity_diagram(const Context& c)
{
    Tally tally("similarity_diagram", c.spec.tol);
    for (int n = c.spec.levels.min; n <= c.spec.levels.max; ++n) {
        for (const double t : c.spec.t_grid) {
            for (const auto* x : c.finite) {
                const std::string input = at(*x, {{"n", n}, {"t", t}});
                guarded(tally, input, [&] {
                    tally.observe(similarity_check(c.s, n, t, *x, c.spec.tol).max_rel_error,
                                  [&] { return input; });
                });
            }
        }
    }
    return tally.finish();
}

std::vector<CoefficientSequence> order_probes(const Context& c)
{
    std::vector<CoefficientSequence> probes;
    const auto size = c.s.spectrum().size();
    if (!size || *size >= 3) {
        probes.push_back(CoefficientSequence::finite({{1, {1.0, 0.0}}, {2, {1.0, 0.0}}, {3, {1.0, 0.0}}}));
    }
    const double h_max = c.spec.h_grid.front();
    for (const auto* x : c.finite) {
        if (x->is_zero()) {
            continue;
        }
        double q_max = 0.0;
        for (const std::size_t j : x->finite_support()->indices()) {
            q_max = std::max(q_max, std::abs(c.s.spectrum().eigenvalue(j)));
        }
        if (q_max * h_max <= kProbeStepBound) {
            probes.push_back(*x);
        }
    }
    return probes;
}

CheckRecord generator_convergence_order(const Context& c, const std::vector<CoefficientSequence>& probes)
{
    // Observed value: |estimated order - 1|.
    Tally tally("generator_convergence_order", kOrderTolerance);
    if (probes.empty()) {
        tally.note("no probe vector with h*|q_j| <= " + fmt(kProbeStepBound));
        tally.inconclusive("empty probe set");
    }
    for (const auto& x : probes) {
        const std::string input = at(x, {});
        guarded(tally, input, [&] {
            const ConvergenceEstimate est = convergence_order(c.s, x, c.spec.h_grid);
            if (est.status != SeriesStatus::Ok) {
                tally.inconclusive(input + ": fewer than two usable grid points");
                return;
            }
            tally.observe(std::fabs(est.order - 1.0), [&] { return input + " order=" + fmt(est.order); });
        });
    }
    return tally.finish();
}

CheckRecord generator_error_constant(const Context& c, const std::vector<CoefficientSequence>& probes)
{
    // Observed value: error at the coarsest h relative to (h/2) ||A^2 x||_0, minus one.
    Tally tally("generator_error_constant", kErrorConstantTolerance);
    if (probes.empty()) {
        tally.inconclusive("empty probe set");
    }
    const double h = c.spec.h_grid.front();
    const SeriesControl control = c.spec.control;
    for (const auto& x : probes) {
        const std::string input = at(x, {{"h", h}});
        guarded(tally, input, [&] {
            const ConvergenceEstimate est = convergence_order(c.s, x, std::span<const double>(&h, 1));
            if (est.errors.empty()) {
                tally.inconclusive(input + ": error underflows");
                return;
            }
            const double predicted = 0.5 * h * tower_norm(c.s, 0, generator_power(c.s, 2, x), control).value;
            const double ratio = est.errors.front() / predicted;
            tally.observe(std::fabs(ratio - 1.0), [&] { return input + " error/predicted=" + fmt(ratio); });
        });
    }
    return tally.finish();
}

CheckRecord rescaling_identity(const Context& c)
{
    Tally tally("rescaling_identity", c.spec.tol);
    const DiagonalSemigroup shifted = rescale(c.s, c.spec.lambda);
    tally.note("lambda=" + fmt(c.spec.lambda.real()) + (c.spec.lambda.imag() != 0.0 ? "+" + fmt(c.spec.lambda.imag()) + "i" : ""));
    for (const double t : c.spec.t_grid) {
        const Complex factor = exponential(c.spec.lambda * t);
        for (const auto* x : c.finite) {
            const std::string input = at(*x, {{"t", t}});
            guarded(tally, input, [&] {
                const auto lhs = semigroup_apply(shifted, t, *x);
                const auto rhs = scale(semigroup_apply(c.s, t, *x), factor);
                tally.observe(coordinate_relative_error(lhs, rhs), [&] { return input; });
            });
        }
    }
    return tally.finish();
}

CheckRecord isomorphism_round_trip(const Context& c)
{
    // Observed value: ulps per coordinate; a changed level tag is an infinite error.
    Tally tally("isomorphism_round_trip", kRoundTripUlps);
    for (const auto* x : c.finite) {
        const std::string input = at(*x, {});
        guarded(tally, input, [&] {
            const ExtrapolationElement e = extrapolation_embed(c.s, *x, c.spec.levels);
            const ExtrapolationElement down_up = limit_generator_inverse_apply(c.s, limit_generator_apply(c.s, e));
            const ExtrapolationElement up_down = limit_generator_apply(c.s, limit_generator_inverse_apply(c.s, e));
            for (const auto* r : {&down_up, &up_down}) {
                if (r->level != e.level || r->canonical_level != e.canonical_level) {
                    tally.fail(input, "level tag not restored");
                    continue;
                }
                tally.observe(max_ulp_distance(e.x, r->x), [&] { return input; });
            }
        });
    }
    return tally.finish();
}

CheckRecord interpolation_truncation(const Context& c)
{
    // Observed value: residual at the last truncation relative to p_n(x), or
    // the relative increase when the residual sequence fails to decrease.
    Tally tally("interpolation_truncation", c.spec.tol);
    std::size_t elements = 0;
    for (const auto* x : c.all) {
        if (x->is_finite_support() || !c.s.spectrum().as_power_law()) {
            continue;
        }
        const MembershipVerdict v = interpolation_membership(c.s, *x, std::max(c.spec.levels.max, 0));
        if (v.status != MembershipStatus::MemberAllLevels) {
            continue; // not an element of the interpolation space
        }
        ++elements;
        for (int n = 0; n <= c.spec.levels.max; ++n) {
            const std::string input = at(*x, {{"n", n}});
            guarded(tally, input, [&] {
                const NormResult full = interpolation_seminorm(c.s, n, *x, c.spec.control);
                if (!full.ok()) {
                    tally.inconclusive(input);
                    return;
                }
                double previous = full.value;
                double residual = full.value;
                for (std::size_t last = 8; last <= std::min<std::size_t>(c.spec.control.truncation, 65536);
                     last *= 2) {
                    const NormResult r = truncation_residual(c.s, n, *x, last, c.spec.control);
                    if (!r.ok()) {
                        tally.inconclusive(input + " J=" + std::to_string(last));
                        return;
                    }
                    if (r.value > previous) {
                        tally.observe((r.value - previous) / previous,
                                      [&] { return input + " J=" + std::to_string(last) + " residual increased"; });
                        return;
                    }
                    previous = residual = r.value;
                }
                const double relative = full.value == 0.0 ? 0.0 : residual / full.value;
                tally.observe(relative, [&] { return input + " residual=" + fmt(residual); });
            });
        }
    }
    if (elements == 0) {
        tally.note("no closed-form element of the interpolation space in the family");
    }
    return tally.finish();
}

CheckRecord seminorm_ladder(const Context& c)
{
    // Observed value: (p_n - p_{n+1}) / p_{n+1}, clipped at zero.
    Tally tally("seminorm_ladder", c.spec.tol);
    for (int n = 0; n < c.spec.levels.max; ++n) {
        for (const auto* x : c.all) {
            const std::string input = at(*x, {{"n", n}});
            guarded(tally, input, [&] {
                const NormResult lower = interpolation_seminorm(c.s, n, *x, c.spec.control);
                const NormResult upper = interpolation_seminorm(c.s, n + 1, *x, c.spec.control);
                if (lower.ok() && upper.ok()) {
                    const double gap = upper.value == 0.0 ? (lower.value == 0.0 ? 0.0 : kInf)
                                                          : std::max(0.0, (lower.value - upper.value) / upper.value);
                    tally.observe(gap, [&] { return input; });
                } else if (upper.status == SeriesStatus::Divergent) {
                    tally.observe(0.0, [&] { return input; });
                } else if (lower.status == SeriesStatus::Divergent) {
                    tally.fail(input, "p_n diverges while p_{n+1} is finite");
                } else {
                    tally.inconclusive(input);
                }
            });
        }
    }
    return tally.finish();
}

CheckRecord membership_agreement(const Context& c)
{
    // Observed value: number of disagreeing (instance, level) pairs.
    Tally tally("membership_agreement", 0.0);
    const auto* pl = c.s.spectrum().as_power_law();
    if (pl == nullptr) {
        tally.note("not applicable: closed-form vectors need a power-law spectrum");
        return tally.finish();
    }
    Rng rng(c.spec.seed);
    const auto schedule = default_membership_schedule();
    const double p = pl->p;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < kMembershipInstances; ++i) {
        // the analytic boundary level u = (-1/2 - s)/p is spread over [-3.5, 3.5]
        const double u = rng.uniform(-kMembershipLevelSpan - 0.5, kMembershipLevelSpan + 0.5);
        const double s = p > 0.0 ? -0.5 - p * u : -0.5 - u;
        const Complex coefficient{rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0)};
        const CoefficientSequence x = CoefficientSequence::power_law(coefficient, s);
        const MembershipVerdict analytic =
            membership_level(c.s, x, LevelRange{-kMembershipLevelSpan, kMembershipLevelSpan});
        for (int n = -kMembershipLevelSpan; n <= kMembershipLevelSpan; ++n) {
            if (std::fabs(2.0 * (n * p + s) + 1.0) < kBoundaryExclusion) {
                ++skipped;
                continue;
            }
            const std::string input = at(x, {{"n", n}});
            guarded(tally, input, [&] {
                const MembershipVerdict numeric = brute_force_membership(c.s, x, n, schedule);
                if (numeric.status == MembershipStatus::Inconclusive) {
                    tally.inconclusive(input + ": " + numeric.evidence.detail);
                    return;
                }
                const bool expected = analytic.member_at(n);
                const bool observed = numeric.status != MembershipStatus::NotMember;
                tally.observe(expected == observed ? 0.0 : 1.0, [&] {
                    return input + " analytic=" + std::string(expected ? "member" : "not_member") +
                           " numerical=" + std::string(to_string(numeric.status)) + " (" + numeric.evidence.detail +
                           ")";
                });
            });
        }
    }
    tally.note(std::to_string(skipped) + " boundary pairs excluded");
    return tally.finish();
}

} // namespace

std::string_view to_string(CheckStatus status) noexcept
{
    switch (status) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

CheckStatus InvariantReport::overall() const noexcept
{
    bool inconclusive = false;
    for (const auto& r : checks) {
        if (r.status == CheckStatus::Fail) {
            return CheckStatus::Fail;
        }
        inconclusive = inconclusive || r.status == CheckStatus::Inconclusive;
    }
    return inconclusive ? CheckStatus::Inconclusive : CheckStatus::Pass;
}

const std::vector<std::string>& suite_check_names()
{
    static const std::vector<std::string> names{
        "semigroup_law",          "identity_at_zero",          "growth_bound",
        "norm_recursion",         "two_path_consistency",      "similarity_diagram",
        "generator_convergence_order", "generator_error_constant", "rescaling_identity",
        "isomorphism_round_trip", "interpolation_truncation",  "seminorm_ladder",
        "membership_agreement",
    };
    return names;
}

std::vector<CoefficientSequence> default_vector_family(const SpectrumSpec& spectrum, std::uint64_t seed)
{
    constexpr std::size_t kRandomVectors = 200;
    constexpr std::size_t kMaxSupport = 20;
    constexpr std::size_t kMaxIndex = 100;
    Rng rng(seed);
    const std::size_t max_index = std::min(kMaxIndex, spectrum.size().value_or(kMaxIndex));
    std::vector<CoefficientSequence> family;
    family.reserve(kRandomVectors + 3);
    for (std::size_t i = 0; i < kRandomVectors; ++i) {
        family.push_back(random_finite_vector(rng, kMaxSupport, max_index));
    }
    if (!spectrum.is_explicit()) {
        family.push_back(CoefficientSequence::geometric({1.0, 0.0}, 0.5));
        family.push_back(CoefficientSequence::geometric({3.0, 0.0}, 0.9));
        family.push_back(CoefficientSequence::power_law({1.0, 0.0}, -3.0));
    }
    return family;
}

InvariantReport run_suite(const DiagonalSemigroup& s, const CheckSpec& spec)
{
    validate(s, spec);
    Context c{s, spec, {}, {}};
    for (const auto& x : spec.vector_family) {
        c.all.push_back(&x);
        if (x.is_finite_support()) {
            c.finite.push_back(&x);
        }
    }
    const auto probes = order_probes(c);

    InvariantReport report;
    report.name = spec.name;
    report.seed = spec.seed;
    report.checks.push_back(semigroup_law(c));
    report.checks.push_back(identity_at_zero(c));
    report.checks.push_back(growth_bound(c));
    report.checks.push_back(norm_recursion(c));
    report.checks.push_back(two_path_consistency(c));
    report.checks.push_back(similarity_diagram(c));
    report.checks.push_back(generator_convergence_order(c, probes));
    report.checks.push_back(generator_error_constant(c, probes));
    report.checks.push_back(rescaling_identity(c));
    report.checks.push_back(isomorphism_round_trip(c));
    report.checks.push_back(interpolation_truncation(c));
    report.checks.push_back(seminorm_ladder(c));
    report.checks.push_back(membership_agreement(c));
    return report;
}

std::string report_json(const InvariantReport& report)
{
    using nlohmann::ordered_json;
    ordered_json root;
    root["name"] = report.name;
    root["seed"] = report.seed;
    root["overall"] = to_string(report.overall());
    ordered_json checks = ordered_json::array();
    for (const auto& r : report.checks) {
        ordered_json entry;
        entry["name"] = r.name;
        entry["status"] = to_string(r.status);
        entry["max_error"] = r.max_error;
        entry["tolerance"] = r.tolerance;
        entry["evaluations"] = r.evaluations;
        entry["note"] = r.note;
        ordered_json witnesses = ordered_json::array();
        for (const auto& w : r.witnesses) {
            witnesses.push_back(ordered_json{{"input", w.input}, {"observed", w.observed}});
        }
        entry["witnesses"] = std::move(witnesses);
        checks.push_back(std::move(entry));
    }
    root["checks"] = std::move(checks);
    return root.dump(2) + "\n";
}

std::string report_text(const InvariantReport& report)
{
    std::string out;
    char line[256];
    for (const auto& r : report.checks) {
        std::snprintf(line, sizeof line, "%-28s %-12s max_error=%-11.4g tol=%-9.3g cases=%zu", r.name.c_str(),
                      std::string(to_string(r.status)).c_str(), r.max_error, r.tolerance, r.evaluations);
        out += line;
        if (!r.note.empty()) {
            out += "  (" + r.note + ")";
        }
        out += '\n';
        if (r.status != CheckStatus::Pass) {
            for (const auto& w : r.witnesses) {
                out += "    witness: " + w.input + " observed=" + fmt(w.observed) + "\n";
            }
        }
    }
    out += "overall: " + std::string(to_string(report.overall())) + "\n";
    return out;
}

MembershipVerdict brute_force_membership(const DiagonalSemigroup& s, const CoefficientSequence& x, int n,
                                         std::span<const std::size_t> j_schedule)
{
    return numerical_membership(s, x, n, j_schedule);
}

ConvergenceEstimate convergence_order(const DiagonalSemigroup& s, const CoefficientSequence& x,
                                      std::span<const double> h_grid)
{
    if (!x.is_finite_support()) {
        throw ContractViolation("convergence order needs a finite-support vector");
    }
    ConvergenceEstimate est;
    if (x.is_zero()) {
        est.status = SeriesStatus::Inconclusive;
        return est;
    }
    const CoefficientSequence ax = generator_apply(s, x);
    const TowerWeight unit = tower_weight(s.spectrum(), 0);
    for (const double h : h_grid) {
        const double error = weighted_l2_norm(subtract(difference_quotient(s, h, x), ax), unit, SeriesControl{}).value;
        if (error >= kUnderflowedError) {
            est.h.push_back(h);
            est.errors.push_back(error);
        }
    }
    if (est.h.size() < 2) {
        est.status = SeriesStatus::Inconclusive;
        return est;
    }
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < est.h.size(); ++i) {
        mean_x += std::log(est.h[i]);
        mean_y += std::log(est.errors[i]);
    }
    mean_x /= static_cast<double>(est.h.size());
    mean_y /= static_cast<double>(est.h.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < est.h.size(); ++i) {
        const double dx = std::log(est.h[i]) - mean_x;
        sxy += dx * (std::log(est.errors[i]) - mean_y);
        sxx += dx * dx;
    }
    est.order = sxy / sxx;
    return est;
}

double ulp_distance(Complex a, Complex b)
{
    if (a == b) {
        return 0.0;
    }
    const double scale = std::max({std::fabs(a.real()), std::fabs(a.imag()), std::fabs(b.real()), std::fabs(b.imag())});
    const double ulp = std::nextafter(scale, kInf) - scale;
    return std::max(std::fabs(a.real() - b.real()), std::fabs(a.imag() - b.imag())) / ulp;
}

} // namespace sobolev
