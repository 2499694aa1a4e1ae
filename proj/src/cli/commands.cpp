#include "sobolev/cli/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>

#include "sobolev/cli/config.hpp"
#include "sobolev/cli/literal.hpp"
#include "sobolev/limits.hpp"
#include "sobolev/verify.hpp"

namespace sobolev::cli {

namespace {

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

LevelRange parse_levels(std::string_view text)
{
    const auto parse = [&](std::string_view token, int& out) {
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
        return ec == std::errc{} && ptr == token.data() + token.size() && !token.empty();
    };
    LevelRange range;
    const auto dots = text.find("..");
    const bool ok = dots == std::string_view::npos
                        ? parse(text, range.min) && parse(text, range.max)
                        : parse(text.substr(0, dots), range.min) && parse(text.substr(dots + 2), range.max);
    if (!ok || range.min > range.max) {
        throw ConfigurationError("--levels expects <a>..<b> with integers a <= b, got '" + std::string(text) + "'");
    }
    return range;
}

struct Options {
    std::string config;
    std::string vector;
    std::string levels;
    std::string out;
    double t = 0.0;
    std::optional<std::uint64_t> seed;
};

int cmd_norm(const Options& o, std::ostream& out)
{
    const RunConfig config = parse_config(o.config);
    const CoefficientSequence x = parse_vector_literal(o.vector);
    const LevelRange range = o.levels.empty() ? config.levels : parse_levels(o.levels);
    const DiagonalSemigroup s(config.spectrum);
    std::string csv = "level,norm,status\n";
    for (int n = range.min; n <= range.max; ++n) {
        const NormResult r = tower_norm(s, n, x, config.control);
        csv += std::to_string(n) + "," + (r.status == SeriesStatus::Divergent ? "" : fmt17(r.value)) + "," +
               std::string(to_string(r.status)) + "\n";
    }
    out << csv;
    return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out)
{
    const RunConfig config = parse_config(o.config);
    const CoefficientSequence x = parse_vector_literal(o.vector);
    const DiagonalSemigroup s(config.spectrum);
    const CoefficientSequence y = semigroup_apply(s, o.t, x);
    std::string csv = "j,re,im\n";
    const auto row = [&](std::size_t j) {
        const Complex v = y.coordinate(j);
        csv += std::to_string(j) + "," + fmt17(v.real()) + "," + fmt17(v.imag()) + "\n";
    };
    if (const auto* fs = x.finite_support()) {
        for (const std::size_t j : fs->indices()) {
            row(j);
        }
    } else {
        for (std::size_t j = 1; j <= config.control.truncation; ++j) {
            row(j);
        }
    }
    out << csv;
    return kExitOk;
}

int cmd_membership(const Options& o, std::ostream& out)
{
    const RunConfig config = parse_config(o.config);
    const CoefficientSequence x = parse_vector_literal(o.vector);
    const DiagonalSemigroup s(config.spectrum);
    const MembershipVerdict v = membership_level(s, x, config.levels);

    std::string line;
    int code = kExitOk;
    switch (v.status) {
    case MembershipStatus::MemberAllLevels:
    case MembershipStatus::MemberUpTo: {
        const ExtrapolationElement e = extrapolation_embed(s, x, config.levels);
        line = "status=" + std::string(to_string(v.status)) + " max_level=" + std::to_string(v.max_level) +
               " method=" + std::string(to_string(v.evidence.method)) + " level=" + std::to_string(e.level) +
               " canonical_level=" + std::to_string(*e.canonical_level);
        break;
    }
    case MembershipStatus::NotMember:
        // a window-bound verdict only rules out levels >= n_min
        line = std::string("status=") + (v.evidence.window_bound ? "not_representable" : "not_member") +
               " max_level=none method=" + std::string(to_string(v.evidence.method)) +
               " n_min=" + std::to_string(config.levels.min);
        break;
    case MembershipStatus::Inconclusive:
        line = "status=inconclusive max_level=none method=" + std::string(to_string(v.evidence.method));
        code = kExitInconclusive;
        break;
    }
    if (v.evidence.boundary_exponent) {
        line += " boundary_exponent=" + fmt17(*v.evidence.boundary_exponent);
    }
    line += " detail=\"" + v.evidence.detail + "\"\n";
    out << line;
    return code;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err)
{
    const RunConfig config = parse_config(o.config);
    const DiagonalSemigroup s(config.spectrum);
    CheckSpec spec;
    spec.name = std::filesystem::path(o.config).filename().string();
    spec.levels = config.levels;
    spec.t_grid = config.t_grid;
    spec.h_grid = config.h_grid;
    spec.tol = config.control.tolerance;
    spec.seed = o.seed.value_or(config.seed);
    spec.lambda = config.rescale;
    spec.control = config.control;
    spec.vector_family = default_vector_family(config.spectrum, spec.seed);

    const InvariantReport report = run_suite(s, spec);
    out << report_text(report);
    if (!o.out.empty()) {
        std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
        file << report_json(report);
        if (!file.flush()) {
            err << "error: cannot write report to '" << o.out << "'\n";
            return kExitUsage;
        }
    }
    switch (report.overall()) {
    case CheckStatus::Pass:
        return kExitOk;
    case CheckStatus::Fail:
        return kExitFail;
    case CheckStatus::Inconclusive:
        break;
    }
    return kExitInconclusive;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Sobolev towers of diagonal semigroups on weighted sequence spaces", "sobolev"};
    app.require_subcommand(1);
    Options o;

    auto* norm = app.add_subcommand("norm", "Print ||x||_n for each level as CSV");
    norm->add_option("--config", o.config, "Run configuration file")->required();
    norm->add_option("--vector", o.vector, "Vector literal")->required();
    norm->add_option("--levels", o.levels, "Level range <a>..<b> (default: n_min..n_max from the config)");

    auto* eval = app.add_subcommand("eval", "Print the coordinates of T(t)x as CSV");
    eval->add_option("--config", o.config, "Run configuration file")->required();
    eval->add_option("--vector", o.vector, "Vector literal")->required();
    eval->add_option("--t", o.t, "Time t >= 0")->required();

    auto* membership = app.add_subcommand("membership", "Locate x in the tower");
    membership->add_option("--config", o.config, "Run configuration file")->required();
    membership->add_option("--vector", o.vector, "Vector literal")->required();

    auto* check = app.add_subcommand("check", "Run the invariant suite");
    check->add_option("--config", o.config, "Run configuration file")->required();
    check->add_option("--out", o.out, "Write the JSON report here");
    check->add_option("--seed", o.seed, "Override the configured seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (norm->parsed()) {
            return cmd_norm(o, out);
        }
        if (eval->parsed()) {
            return cmd_eval(o, out);
        }
        if (membership->parsed()) {
            return cmd_membership(o, out);
        }
        return cmd_check(o, out, err);
    } catch (const ConsistencyError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitFail;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace sobolev::cli
