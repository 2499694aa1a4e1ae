#include "sobolev/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sobolev {

namespace {

// Largest index the admissibility scan of a shifted power law will visit.
constexpr double kMaxAdmissibilityScan = 1.0e7;

std::string describe(Complex z)
{
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

} // namespace

double PowerLawSpectrum::prefactor_modulus() const noexcept
{
    return std::hypot(a, b);
}

Complex power_law_eigenvalue(const PowerLawSpectrum& spec, std::size_t j) noexcept
{
    const double growth = spec.p == 0.0 ? 1.0 : std::pow(static_cast<double>(j), spec.p);
    return {-spec.a * growth + spec.shift.real(), spec.b * growth + spec.shift.imag()};
}

SpectrumSpec::SpectrumSpec(std::variant<PowerLawSpectrum, ExplicitSpectrum> rep) : rep_(std::move(rep))
{
    validate();
}

SpectrumSpec SpectrumSpec::power_law(double a, double p, double b)
{
    return SpectrumSpec(PowerLawSpectrum{a, p, b, Complex{0.0, 0.0}});
}

SpectrumSpec SpectrumSpec::power_law(const PowerLawSpectrum& spec)
{
    return SpectrumSpec(spec);
}

SpectrumSpec SpectrumSpec::explicit_values(std::vector<Complex> values)
{
    return SpectrumSpec(ExplicitSpectrum{std::move(values)});
}

void SpectrumSpec::validate() const
{
    if (const auto* ex = as_explicit()) {
        if (ex->values.empty()) {
            throw InvalidSpectrum("explicit spectrum must contain at least one eigenvalue");
        }
        for (std::size_t i = 0; i < ex->values.size(); ++i) {
            const Complex q = ex->values[i];
            require_finite(q, "eigenvalue");
            if (!(q.real() < 0.0)) {
                throw InvalidSpectrum("Re q_" + std::to_string(i + 1) + " must be negative, got " + describe(q));
            }
            if (modulus_squared(q) < 1.0) {
                throw InvalidSpectrum("|q_" + std::to_string(i + 1) + "| must be at least 1, got " + describe(q));
            }
        }
        return;
    }

    const auto& pl = std::get<PowerLawSpectrum>(rep_);
    if (!std::isfinite(pl.a) || !std::isfinite(pl.p) || !std::isfinite(pl.b)) {
        throw InvalidSpectrum("power-law spectrum parameters must be finite");
    }
    require_finite(pl.shift, "spectrum shift");
    if (!(pl.a > 0.0)) {
        throw InvalidSpectrum("power-law spectrum needs a > 0");
    }
    if (!(pl.p >= 0.0)) {
        throw InvalidSpectrum("power-law spectrum needs p >= 0");
    }
    if (!(growth_bound() < 0.0)) {
        throw InvalidSpectrum("sup Re q_j = " + std::to_string(growth_bound()) + " must be negative");
    }

    const double m = pl.prefactor_modulus();
    const double lam = std::abs(pl.shift);
    if (lam == 0.0) {
        if (m < 1.0) {
            throw InvalidSpectrum("|q_j| >= 1 requires sqrt(a^2 + b^2) >= 1, got " + std::to_string(m));
        }
        return;
    }
    // |q_j| >= m j^p - |shift| >= 1 once j^p >= (1 + |shift|) / m; below that, check directly.
    std::size_t last = 1;
    if (pl.p > 0.0 && m < 1.0 + lam) {
        const double bound = std::ceil(std::pow((1.0 + lam) / m, 1.0 / pl.p));
        if (bound > kMaxAdmissibilityScan) {
            throw InvalidSpectrum("cannot certify |q_j| >= 1 for the shifted spectrum");
        }
        last = static_cast<std::size_t>(bound);
    }
    for (std::size_t j = 1; j <= last; ++j) {
        if (modulus_squared(power_law_eigenvalue(pl, j)) < 1.0) {
            throw InvalidSpectrum("|q_" + std::to_string(j) + "| must be at least 1");
        }
    }
}

Complex SpectrumSpec::eigenvalue(std::size_t j) const
{
    if (j == 0) {
        throw IndexError("coordinate indices are 1-based");
    }
    if (const auto* ex = as_explicit()) {
        if (j > ex->values.size()) {
            throw IndexError("index " + std::to_string(j) + " outside explicit spectrum of size " +
                             std::to_string(ex->values.size()));
        }
        return ex->values[j - 1];
    }
    return power_law_eigenvalue(std::get<PowerLawSpectrum>(rep_), j);
}

double SpectrumSpec::growth_bound() const noexcept
{
    if (const auto* ex = as_explicit()) {
        double omega = -INFINITY;
        for (const Complex q : ex->values) {
            omega = std::max(omega, q.real());
        }
        return omega;
    }
    // -a j^p is largest at j = 1 for every p >= 0
    const auto& pl = std::get<PowerLawSpectrum>(rep_);
    return -pl.a + pl.shift.real();
}

SpectrumSpec SpectrumSpec::shifted(Complex lambda) const
{
    require_finite(lambda, "rescaling shift");
    if (const auto* ex = as_explicit()) {
        std::vector<Complex> values = ex->values;
        for (Complex& q : values) {
            q += lambda;
        }
        return SpectrumSpec(ExplicitSpectrum{std::move(values)});
    }
    PowerLawSpectrum pl = std::get<PowerLawSpectrum>(rep_);
    pl.shift += lambda;
    return SpectrumSpec(pl);
}

std::optional<std::size_t> SpectrumSpec::size() const noexcept
{
    if (const auto* ex = as_explicit()) {
        return ex->values.size();
    }
    return std::nullopt;
}

} // namespace sobolev
