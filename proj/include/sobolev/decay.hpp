#pragma once

// Analytic envelopes of closed-form sequences and certified tail sums.
//
// A DecayProfile describes |x_j| (or a bound on it) for j >= valid_from as
//
//     exp(log_scale) * j^power * exp(log_ratio * j) * prod_i exp(-beta_i * j^gamma_i)
//
// which covers power laws, geometric decay, generator powers of power-law
// spectra and semigroup factors e^{t q_j}.

#include <cstddef>
#include <optional>
#include <vector>

#include "sobolev/sequence.hpp"
#include "sobolev/spectrum.hpp"

namespace sobolev {

struct StretchedDecay {
    double beta;  // > 0
    double gamma; // > 0, != 1
};

struct DecayProfile {
    double log_scale = 0.0;
    double power = 0.0;
    double log_ratio = 0.0; // <= 0
    std::vector<StretchedDecay> stretched;
    /// Profile equals |x_j| for every j >= valid_from (otherwise an upper bound).
    bool exact = true;
    /// Bound and |x_j| have a positive finite ratio as j -> infinity.
    bool sharp = true;
    std::size_t valid_from = 1;

    double log_value(double j) const noexcept;
    /// Decays faster than every power of j.
    bool decays_exponentially() const noexcept;

    DecayProfile& operator*=(const DecayProfile& other);
    DecayProfile squared() const;
};

/// Envelope of |q_j|^k for a power-law spectrum, valid from index `from` on
/// (possibly later, when a shift forces it).
DecayProfile modulus_power_profile(const PowerLawSpectrum& spectrum, int k, std::size_t from);

/// Envelope of |x_j| for a closed form, valid from max(from, first_index) on.
DecayProfile profile_of(const ClosedForm& form, std::size_t from);

/// Bounds on sum_{j > last} g(j) for the summand envelope g.
struct TailEnclosure {
    double lower = 0.0;
    double upper = 0.0;
    bool divergent = false;

    bool bounded() const noexcept;
    double center() const noexcept { return 0.5 * (lower + upper); }
    double width() const noexcept { return upper - lower; }
};

/// Requires last + 1 >= g.valid_from.
///
/// Geometric-type decay: ratio test from the first tail term. Stretched decay
/// exp(-beta j^gamma), gamma < 1: e^{-y} <= (kappa/e)^kappa y^{-kappa}, optimised
/// over kappa. Pure powers: Euler-Maclaurin with remainder bound when exact,
/// integral comparison otherwise; exponent >= -1 is divergent.
TailEnclosure tail_enclosure(const DecayProfile& g, std::size_t last);

} // namespace sobolev
