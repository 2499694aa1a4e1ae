#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sobolev/tower.hpp"

namespace sobolev {

/// Configuration of one verification run.
///
/// `tol` is the relative tolerance of the algebraic identities. The
/// generator-order checks use their own fixed tolerances: 0.03 on the
/// estimated order and 10% on the leading error constant.
struct CheckSpec {
    std::string name = "suite";
    LevelRange levels{};
    std::vector<double> t_grid{0.0, 0.1, 1.0, 10.0};
    std::vector<double> h_grid{1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4};
    std::vector<CoefficientSequence> vector_family;
    double tol = 1e-12;
    std::uint64_t seed = 42;
    Complex lambda{-1.0, 0.0};
    SeriesControl control{};
};

/// Random finite vectors plus, for power-law spectra, closed-form members of the interpolation space.
std::vector<CoefficientSequence> default_vector_family(const SpectrumSpec& spectrum, std::uint64_t seed);

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string_view to_string(CheckStatus status) noexcept;

struct Witness {
    std::string input;
    double observed = 0.0;
};

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::size_t evaluations = 0;
    std::string note;
    /// The worst case found, plus every failing case up to a cap.
    std::vector<Witness> witnesses;
};

struct InvariantReport {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;

    CheckStatus overall() const noexcept;
};

/// Names of the suite's checks in execution order.
const std::vector<std::string>& suite_check_names();

/// Runs every check in fixed order. Deterministic given the spec.
/// Throws ConfigurationError for an invalid spec.
InvariantReport run_suite(const DiagonalSemigroup& s, const CheckSpec& spec);

/// Stable JSON serialisation: fixed key order, no timestamps.
std::string report_json(const InvariantReport& report);
/// One line per check, then the overall verdict.
std::string report_text(const InvariantReport& report);

/// Partial-sum oracle for membership_level (see numerical_membership).
MembershipVerdict brute_force_membership(const DiagonalSemigroup& s, const CoefficientSequence& x, int n,
                                         std::span<const std::size_t> j_schedule);

struct ConvergenceEstimate {
    SeriesStatus status = SeriesStatus::Ok;
    double order = 0.0;
    std::vector<double> h;      ///< grid points kept after dropping underflowed errors
    std::vector<double> errors; ///< ||D_h x - Ax||_0 at those points
};

/// Least-squares slope of log ||D_h x - Ax||_0 against log h. Errors below
/// 1e-15 are dropped; fewer than two remaining points, or x = 0, is Inconclusive.
ConvergenceEstimate convergence_order(const DiagonalSemigroup& s, const CoefficientSequence& x,
                                      std::span<const double> h_grid);

/// max(|re a - re b|, |im a - im b|) in units in the last place of the largest component of a and b.
double ulp_distance(Complex a, Complex b);

} // namespace sobolev
