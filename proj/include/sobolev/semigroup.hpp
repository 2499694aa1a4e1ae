#pragma once

#include "sobolev/sequence.hpp"
#include "sobolev/spectrum.hpp"

namespace sobolev {

/// T(t)x = (e^{t q_j} x_j)_j with generator Ax = (q_j x_j)_j.
///
/// The spectrum invariants put 0 in the resolvent set: A^{-1}x = (x_j / q_j)_j
/// is bounded on every level.
class DiagonalSemigroup {
public:
    explicit DiagonalSemigroup(SpectrumSpec spectrum) : spectrum_(std::move(spectrum)) {}

    const SpectrumSpec& spectrum() const noexcept { return spectrum_; }
    /// omega = sup_j Re q_j < 0.
    double growth_bound() const noexcept { return spectrum_.growth_bound(); }

private:
    SpectrumSpec spectrum_;
};

/// Carrier for an evaluation T(t)x.
struct OrbitSample {
    double t;
    CoefficientSequence value;
};

/// T(t)x. Finite support stays finite (coordinates that underflow to zero are
/// dropped); closed forms gain a pending e^{t q_j} factor. Throws ContractViolation for t < 0.
CoefficientSequence semigroup_apply(const DiagonalSemigroup& s, double t, const CoefficientSequence& x);

OrbitSample orbit_sample(const DiagonalSemigroup& s, double t, const CoefficientSequence& x);

/// Ax = (q_j x_j).
CoefficientSequence generator_apply(const DiagonalSemigroup& s, const CoefficientSequence& x);

/// A^{-1}x = (x_j / q_j).
CoefficientSequence generator_inverse_apply(const DiagonalSemigroup& s, const CoefficientSequence& x);

/// A^k x = (q_j^k x_j) for any integer k, by direct multiplication (k > 0) or
/// division (k < 0) with q_j^|k|.
CoefficientSequence generator_power(const DiagonalSemigroup& s, int k, const CoefficientSequence& x);

/// The semigroup e^{lambda t} T(t) with generator A + lambda. Throws
/// InvalidRescaling unless q_j + lambda keeps sup Re < 0 and |q_j + lambda| >= 1.
DiagonalSemigroup rescale(const DiagonalSemigroup& s, Complex lambda);

/// (T(h)x - x) / h, evaluated through expm1 so small h does not cancel.
CoefficientSequence difference_quotient(const DiagonalSemigroup& s, double h, const CoefficientSequence& x);

} // namespace sobolev
