#pragma once

#include <cstddef>
#include <string_view>

#include "sobolev/sequence.hpp"
#include "sobolev/weights.hpp"

namespace sobolev {

enum class SeriesStatus { Ok, Inconclusive, Divergent };

std::string_view to_string(SeriesStatus status) noexcept;

/// Truncation and certification tolerance for infinite series.
struct SeriesControl {
    std::size_t truncation = 100000;
    double tolerance = 1e-12;
};

/// Result of a norm or seminorm evaluation.
///
/// `value` is the best estimate (+inf when divergent). For l2 norms,
/// `sum_of_squares` is value^2 and `uncertainty` bounds the error of
/// sum_of_squares; for sup seminorms it bounds the error of value.
struct NormResult {
    SeriesStatus status = SeriesStatus::Ok;
    double value = 0.0;
    double sum_of_squares = 0.0;
    double uncertainty = 0.0;

    bool ok() const noexcept { return status == SeriesStatus::Ok; }
};

/// (sum_j (v_{n,j} |x_j|)^2)^{1/2}.
///
/// Finite support: exact finite sum. Closed forms: Neumaier partial sum over
/// j <= truncation in ascending order plus a certified tail enclosure; Ok when
/// the enclosure width is at most tolerance * total, Inconclusive otherwise,
/// Divergent when the summand decays no faster than j^{-1}.
NormResult weighted_l2_norm(const CoefficientSequence& x, const TowerWeight& w, const SeriesControl& control);

/// Square root of the partial sum of squares over j <= last, no tail.
double partial_weighted_l2(const CoefficientSequence& x, const TowerWeight& w, std::size_t last);

/// p_k(x) = sup_j b_{j,k} |x_j|.
///
/// Finite support: exact. Closed forms (spectrum weights only): the scan runs
/// past the analytic maximiser of b_{j,k}|x_j| so the truncated sup is the
/// true sup. Divergent when b_{j,k}|x_j| does not tend to zero.
NormResult c0_seminorm(const CoefficientSequence& x, const KotheMatrix& b, std::size_t k,
                       const SeriesControl& control);

/// Seminorm of X_n = c0(B_n) with B_n = (b_{j,k} |q_j|^n).
NormResult c0_tower_seminorm(const CoefficientSequence& x, const KotheMatrix& b, std::size_t k,
                             const TowerWeight& level_weight, const SeriesControl& control);

} // namespace sobolev
