#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "sobolev/complex.hpp"

namespace sobolev {

/// q_j = (-a + i b) j^p + shift for j >= 1.
///
/// `shift` is zero for every spectrum built from configuration; it becomes
/// nonzero only through rescaling.
struct PowerLawSpectrum {
    double a = 1.0;
    double p = 1.0;
    double b = 0.0;
    Complex shift{0.0, 0.0};

    /// |-a + i b|, the modulus of the unshifted prefactor.
    double prefactor_modulus() const noexcept;
    friend bool operator==(const PowerLawSpectrum&, const PowerLawSpectrum&) = default;
};

/// Finitely many eigenvalues q_1..q_J. Only finite-support vectors inside 1..J may meet it.
struct ExplicitSpectrum {
    std::vector<Complex> values;
    friend bool operator==(const ExplicitSpectrum&, const ExplicitSpectrum&) = default;
};

/// Eigenvalue sequence of a diagonal generator. Construction validates
/// sup_j Re q_j < 0 and |q_j| >= 1 for every j.
class SpectrumSpec {
public:
    static SpectrumSpec power_law(double a, double p, double b);
    static SpectrumSpec power_law(const PowerLawSpectrum& spec);
    static SpectrumSpec explicit_values(std::vector<Complex> values);

    /// q_j, 1-based. Throws IndexError outside an explicit spectrum.
    Complex eigenvalue(std::size_t j) const;

    /// omega = sup_j Re q_j.
    double growth_bound() const noexcept;

    /// The spectrum q_j + lambda, validated; throws InvalidSpectrum when inadmissible.
    SpectrumSpec shifted(Complex lambda) const;

    bool is_explicit() const noexcept { return std::holds_alternative<ExplicitSpectrum>(rep_); }
    const PowerLawSpectrum* as_power_law() const noexcept { return std::get_if<PowerLawSpectrum>(&rep_); }
    const ExplicitSpectrum* as_explicit() const noexcept { return std::get_if<ExplicitSpectrum>(&rep_); }

    /// Number of eigenvalues for explicit spectra, nullopt for infinite families.
    std::optional<std::size_t> size() const noexcept;

    friend bool operator==(const SpectrumSpec&, const SpectrumSpec&) = default;

private:
    explicit SpectrumSpec(std::variant<PowerLawSpectrum, ExplicitSpectrum> rep);
    void validate() const;

    std::variant<PowerLawSpectrum, ExplicitSpectrum> rep_;
};

/// Eigenvalue of a power-law family without validation (used on hot paths).
Complex power_law_eigenvalue(const PowerLawSpectrum& spec, std::size_t j) noexcept;

} // namespace sobolev
