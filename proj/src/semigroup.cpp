#include "sobolev/semigroup.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "sobolev/kernels.hpp"

namespace sobolev {

namespace {

enum class Combine { Multiply, Divide };

void require_support_in_spectrum(const DiagonalSemigroup& s, const FiniteSupport& fs)
{
    if (const auto n = s.spectrum().size(); n && fs.max_index() > *n) {
        throw IndexError("support reaches index " + std::to_string(fs.max_index()) +
                         " beyond explicit spectrum of size " + std::to_string(*n));
    }
}

const PowerLawSpectrum& closed_form_spectrum(const DiagonalSemigroup& s)
{
    const auto* pl = s.spectrum().as_power_law();
    if (pl == nullptr) {
        throw IndexError("closed-form sequences have infinite support; an explicit spectrum covers finitely many indices");
    }
    return *pl;
}

/// Coordinatewise x_j * f(q_j) or x_j / f(q_j) on a finite support.
template <typename Factor>
CoefficientSequence apply_finite(const DiagonalSemigroup& s, const FiniteSupport& fs, Combine mode, Factor factor)
{
    require_support_in_spectrum(s, fs);
    const std::size_t n = fs.size();
    std::vector<double> fr(n);
    std::vector<double> fi(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex f = factor(s.spectrum().eigenvalue(fs.indices()[i]));
        fr[i] = f.real();
        fi[i] = f.imag();
    }
    std::vector<double> re(n);
    std::vector<double> im(n);
    if (mode == Combine::Multiply) {
        kernels::complex_multiply(fs.real(), fs.imag(), fr, fi, re, im);
    } else {
        kernels::complex_divide(fs.real(), fs.imag(), fr, fi, re, im);
    }
    std::vector<std::size_t> index(fs.indices().begin(), fs.indices().end());
    return FiniteSupport::from_arrays(std::move(index), std::move(re), std::move(im));
}

CoefficientSequence apply_closed(const DiagonalSemigroup& s, const ClosedForm& cf, FactorKind kind)
{
    return with_factor(cf, DiagonalFactor{closed_form_spectrum(s), kind});
}

} // namespace

CoefficientSequence semigroup_apply(const DiagonalSemigroup& s, double t, const CoefficientSequence& x)
{
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw ContractViolation("semigroup time must be finite and nonnegative");
    }
    if (t == 0.0) {
        return x;
    }
    if (const auto* fs = x.finite_support()) {
        return apply_finite(s, *fs, Combine::Multiply, [t](Complex q) {
            return exponential(Complex{t * q.real(), t * q.imag()});
        });
    }
    return apply_closed(s, *x.closed_form(), EvolutionFactor{t});
}

OrbitSample orbit_sample(const DiagonalSemigroup& s, double t, const CoefficientSequence& x)
{
    return OrbitSample{t, semigroup_apply(s, t, x)};
}

CoefficientSequence generator_apply(const DiagonalSemigroup& s, const CoefficientSequence& x)
{
    return generator_power(s, 1, x);
}

CoefficientSequence generator_inverse_apply(const DiagonalSemigroup& s, const CoefficientSequence& x)
{
    return generator_power(s, -1, x);
}

CoefficientSequence generator_power(const DiagonalSemigroup& s, int k, const CoefficientSequence& x)
{
    if (k == 0) {
        if (const auto* fs = x.finite_support()) {
            require_support_in_spectrum(s, *fs);
        }
        return x;
    }
    if (const auto* fs = x.finite_support()) {
        const int magnitude = k < 0 ? -k : k;
        const auto power = [magnitude](Complex q) { return integer_power(q, magnitude); };
        return apply_finite(s, *fs, k > 0 ? Combine::Multiply : Combine::Divide, power);
    }
    return apply_closed(s, *x.closed_form(), GeneratorPowerFactor{k});
}

DiagonalSemigroup rescale(const DiagonalSemigroup& s, Complex lambda)
{
    if (lambda == Complex{0.0, 0.0}) {
        return s;
    }
    try {
        return DiagonalSemigroup(s.spectrum().shifted(lambda));
    } catch (const InvalidSpectrum& e) {
        throw InvalidRescaling(std::string("A + lambda is not admissible: ") + e.what());
    } catch (const ContractViolation& e) {
        throw InvalidRescaling(std::string("A + lambda is not admissible: ") + e.what());
    }
}

CoefficientSequence difference_quotient(const DiagonalSemigroup& s, double h, const CoefficientSequence& x)
{
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw ContractViolation("difference-quotient step must be finite and positive");
    }
    if (const auto* fs = x.finite_support()) {
        return apply_finite(s, *fs, Combine::Multiply, [h](Complex q) {
            return factor_value(DifferenceQuotientFactor{h}, q);
        });
    }
    return apply_closed(s, *x.closed_form(), DifferenceQuotientFactor{h});
}

} // namespace sobolev
