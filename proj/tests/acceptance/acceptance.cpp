// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "sobolev/cli/commands.hpp"
#include "sobolev/limits.hpp"
#include "sobolev/random.hpp"
#include "sobolev/verify.hpp"
#include "sobolev/weights.hpp"

using namespace sobolev;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

const DiagonalSemigroup kMinusJ(SpectrumSpec::power_law(1.0, 1.0, 0.0));
const SeriesControl kControl{};
const double kBasel = std::numbers::pi / std::sqrt(6.0);

std::string fmt(const char* format, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::vector<CoefficientSequence> random_family(std::uint64_t seed, std::size_t count)
{
    Rng rng(seed);
    std::vector<CoefficientSequence> xs;
    for (std::size_t i = 0; i < count; ++i) {
        xs.push_back(random_finite_vector(rng, 20, 100));
    }
    return xs;
}

Outcome weight_law()
{
    double worst = 0.0;
    for (int n = -5; n <= 5; ++n) {
        for (std::size_t j = 1; j <= 50; ++j) {
            const double expected = std::pow(static_cast<double>(j), n);
            const double got = tower_norm(kMinusJ, n, CoefficientSequence::unit(j), kControl).value;
            worst = std::max(worst, std::fabs(got - expected) / (std::nextafter(expected, INFINITY) - expected));
        }
    }
    return {worst <= 1.0, "max deviation " + fmt("%.1f", worst) + " ulp"};
}

Outcome norm_recursion()
{
    double worst = 0.0;
    for (const auto& x : random_family(1, 1000)) {
        const auto ax = generator_apply(kMinusJ, x);
        for (int n = -4; n <= 5; ++n) {
            const double a = tower_norm(kMinusJ, n, x, kControl).value;
            const double b = tower_norm(kMinusJ, n - 1, ax, kControl).value;
            worst = std::max(worst, std::fabs(a - b) / a);
        }
    }
    return {worst <= 1e-13, "max relative error " + fmt("%.3g", worst)};
}

Outcome similarity()
{
    double worst = 0.0;
    for (const auto& x : random_family(2, 200)) {
        for (const double t : {0.0, 0.1, 1.0, 10.0}) {
            for (int n = -3; n <= 3; ++n) {
                worst = std::max(worst, similarity_check(kMinusJ, n, t, x, 1e-12).max_rel_error);
            }
        }
    }
    return {worst <= 1e-12, "max relative error " + fmt("%.3g", worst)};
}

Outcome semigroup_law()
{
    const double grid[] = {0.0, 0.1, 0.5, 1.0, 10.0};
    double worst = 0.0;
    double identity = 0.0;
    for (const auto& x : random_family(3, 200)) {
        identity = std::max(identity, coordinate_relative_error(semigroup_apply(kMinusJ, 0.0, x), x));
        for (const double t : grid) {
            for (const double u : grid) {
                worst = std::max(worst, coordinate_relative_error(semigroup_apply(kMinusJ, t + u, x),
                                                                  semigroup_apply(kMinusJ, t, semigroup_apply(kMinusJ, u, x))));
            }
        }
    }
    return {worst <= 1e-12 && identity == 0.0,
            "law " + fmt("%.3g", worst) + ", T(0) deviation " + fmt("%.3g", identity)};
}

Outcome growth_bound()
{
    const double omega = kMinusJ.growth_bound();
    auto xs = default_vector_family(kMinusJ.spectrum(), 42);
    double worst = 0.0;
    for (const auto& x : xs) {
        for (const double t : {0.0, 0.1, 1.0, 10.0}) {
            const auto y = semigroup_apply(kMinusJ, t, x);
            for (int n = -5; n <= 5; ++n) {
                const NormResult before = tower_norm(kMinusJ, n, x, kControl);
                if (!before.ok() || before.value == 0.0) {
                    continue;
                }
                const NormResult after = tower_norm(kMinusJ, n, y, kControl);
                if (!after.ok()) {
                    return {false, "norm of T(t)x not certified at level " + std::to_string(n)};
                }
                worst = std::max(worst, after.value / (std::exp(t * omega) * before.value));
            }
        }
    }
    return {worst <= 1.0 + 1e-12, "max ||T(t)x||_n / (e^{wt}||x||_n) = " + fmt("%.17g", worst)};
}

Outcome generator_order()
{
    const auto x = CoefficientSequence::finite({{1, {1.0, 0.0}}, {2, {1.0, 0.0}}, {3, {1.0, 0.0}}});
    const std::vector<double> h{1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4};
    const ConvergenceEstimate c = convergence_order(kMinusJ, x, h);
    if (c.status != SeriesStatus::Ok || c.h.front() != 1e-2) {
        return {false, "convergence estimate inconclusive"};
    }
    const double lead = 0.5 * 1e-2 * tower_norm(kMinusJ, 0, generator_power(kMinusJ, 2, x), kControl).value;
    const double ratio = c.errors.front() / lead;
    return {c.order >= 0.97 && c.order <= 1.03 && std::fabs(ratio - 1.0) <= 0.1,
            "order " + fmt("%.4f", c.order) + ", error/(h/2 ||A^2x||) " + fmt("%.4f", ratio)};
}

Outcome membership_agreement()
{
    Rng rng(42);
    const auto schedule = default_membership_schedule();
    int compared = 0;
    int disagreements = 0;
    for (int i = 0; i < 50; ++i) {
        const double s = -0.5 - rng.uniform(-3.5, 3.5);
        const auto x = CoefficientSequence::power_law({1.0, 0.0}, s);
        const MembershipVerdict analytic = membership_level(kMinusJ, x, LevelRange{-3, 3});
        for (int n = -3; n <= 3; ++n) {
            if (std::fabs(2.0 * (n + s) + 1.0) < 0.2) {
                continue;
            }
            const MembershipVerdict brute = brute_force_membership(kMinusJ, x, n, schedule);
            ++compared;
            if (brute.status == MembershipStatus::Inconclusive ||
                (brute.status == MembershipStatus::MemberUpTo) != analytic.member_at(n)) {
                ++disagreements;
            }
        }
    }
    const auto ones = CoefficientSequence::power_law({1.0, 0.0}, 0.0);
    const MembershipVerdict v = membership_level(kMinusJ, ones);
    const NormResult basel = tower_norm(kMinusJ, -1, ones, kControl);
    const bool examples = v.status == MembershipStatus::MemberUpTo && v.max_level == -1 && basel.ok() &&
                          std::fabs(basel.value - kBasel) <= 1e-9;
    return {disagreements == 0 && examples,
            std::to_string(disagreements) + "/" + std::to_string(compared) + " disagreements, ||(1,1,...)||_-1 = " +
                fmt("%.17g", basel.value)};
}

Outcome interpolation_ladder()
{
    std::vector<CoefficientSequence> xs = random_family(8, 100);
    xs.push_back(CoefficientSequence::geometric({1.0, 0.0}, 0.5));
    xs.push_back(CoefficientSequence::geometric({3.0, 0.0}, 0.9));
    bool monotone = true;
    for (const auto& x : xs) {
        for (int n = 0; n < 5; ++n) {
            monotone = monotone && interpolation_seminorm(kMinusJ, n, x, kControl).value <=
                                       interpolation_seminorm(kMinusJ, n + 1, x, kControl).value;
        }
    }
    bool truncation = true;
    for (const auto& x : {xs[xs.size() - 2], xs.back()}) {
        for (int n = 0; n <= 5; ++n) {
            double previous = INFINITY;
            for (std::size_t last = 8; last <= 2048; last *= 2) {
                const NormResult r = truncation_residual(kMinusJ, n, x, last, kControl);
                truncation = truncation && r.ok() && r.value <= previous;
                previous = r.value;
            }
            truncation = truncation && previous <= 1e-12 * interpolation_seminorm(kMinusJ, n, x, kControl).value;
        }
    }
    const double p2 = interpolation_seminorm(kMinusJ, 2, CoefficientSequence::geometric({1.0, 0.0}, 0.5), kControl).value;
    const bool value = std::fabs(p2 - std::sqrt(380.0 / 81.0)) <= 1e-9;
    return {monotone && truncation && value, std::string("monotone ") + (monotone ? "yes" : "no") + ", truncation " +
                                                 (truncation ? "converges" : "fails") + ", p_2 = " + fmt("%.17g", p2)};
}

Outcome round_trips()
{
    const DiagonalSemigroup s(SpectrumSpec::power_law(1.0, 1.0, 0.5));
    double worst = 0.0;
    bool tags = true;
    for (const auto& x : random_family(9, 100)) {
        const auto e = extrapolation_embed(s, x, LevelRange{});
        for (const auto& r : {limit_generator_apply(s, limit_generator_inverse_apply(s, e)),
                              limit_generator_inverse_apply(s, limit_generator_apply(s, e))}) {
            tags = tags && r.level == e.level && r.canonical_level == e.canonical_level;
            for (const std::size_t j : x.finite_support()->indices()) {
                worst = std::max(worst, ulp_distance(x.coordinate(j), r.x.coordinate(j)));
            }
        }
    }
    return {worst <= 2.0 && tags, "max " + fmt("%.0f", worst) + " ulp, tags " + (tags ? "restored" : "lost")};
}

Outcome rescaling()
{
    const Complex lambda{-1.0, 0.0};
    const DiagonalSemigroup r = rescale(kMinusJ, lambda);
    double worst = 0.0;
    for (const auto& x : random_family(10, 200)) {
        for (const double t : {0.0, 0.1, 1.0, 10.0}) {
            worst = std::max(worst, coordinate_relative_error(semigroup_apply(r, t, x),
                                                              scale(semigroup_apply(kMinusJ, t, x), exponential(lambda * t))));
        }
    }
    std::vector<CoefficientSequence> units;
    for (std::size_t j = 1; j <= 1000; ++j) {
        units.push_back(CoefficientSequence::unit(j));
    }
    const RatioRange ratio = rescaled_tower_compare(kMinusJ, lambda, 1, units, kControl);
    return {worst <= 1e-12 && ratio.ratio_min > 1.0 && ratio.ratio_max <= 2.0,
            "identity " + fmt("%.3g", worst) + ", ratio in [" + fmt("%.6f", ratio.ratio_min) + ", " +
                fmt("%.6f", ratio.ratio_max) + "]"};
}

Outcome determinism()
{
    const std::string config = std::string(SOBOLEV_SOURCE_DIR) + "/configs/default.toml";
    const auto dir = std::filesystem::temp_directory_path();
    std::string reports[2];
    for (int run = 0; run < 2; ++run) {
        const auto path = dir / ("sobolev_acceptance_" + std::to_string(run) + ".json");
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run_cli({"check", "--config", config, "--seed", "42", "--out", path.string()}, out, err);
        if (code != cli::kExitOk) {
            return {false, "check exited with " + std::to_string(code)};
        }
        std::ifstream in(path, std::ios::binary);
        reports[run].assign(std::istreambuf_iterator<char>(in), {});
    }
    return {!reports[0].empty() && reports[0] == reports[1],
            std::to_string(reports[0].size()) + " byte report, runs " + (reports[0] == reports[1] ? "identical" : "differ")};
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double budget_s;
    };
    const Criterion criteria[] = {
        {"weight_law", weight_law, 1.0},
        {"norm_recursion", norm_recursion, 5.0},
        {"similarity_diagram", similarity, 5.0},
        {"semigroup_law", semigroup_law, 0.0},
        {"growth_bound", growth_bound, 0.0},
        {"generator_order", generator_order, 0.0},
        {"membership_agreement", membership_agreement, 10.0},
        {"interpolation_ladder", interpolation_ladder, 0.0},
        {"isomorphism_round_trips", round_trips, 0.0},
        {"rescaling", rescaling, 0.0},
        {"determinism", determinism, 0.0},
    };
    int failures = 0;
    int index = 1;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0.0 && elapsed > c.budget_s) {
            o.pass = false;
            o.detail += ", over the " + fmt("%.0f", c.budget_s) + " s budget";
        }
        std::printf("%s %2d %-24s %7.3fs  %s\n", o.pass ? "PASS" : "FAIL", index++, c.name, elapsed, o.detail.c_str());
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", index - 1 - failures, index - 1);
    return failures == 0 ? 0 : 1;
}
