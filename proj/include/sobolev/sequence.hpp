#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sobolev/complex.hpp"
#include "sobolev/spectrum.hpp"

namespace sobolev {

/// x_j = c j^s for every j >= 1.
struct PowerLaw {
    Complex c;
    double s;
    friend bool operator==(const PowerLaw&, const PowerLaw&) = default;
};

/// x_j = c r^j for every j >= 1, 0 < r < 1.
struct GeomDecay {
    Complex c;
    double r;
    friend bool operator==(const GeomDecay&, const GeomDecay&) = default;
};

/// Multiplication by q_j^k.
struct GeneratorPowerFactor {
    int k;
    friend bool operator==(const GeneratorPowerFactor&, const GeneratorPowerFactor&) = default;
};

/// Multiplication by e^{t q_j}.
struct EvolutionFactor {
    double t;
    friend bool operator==(const EvolutionFactor&, const EvolutionFactor&) = default;
};

/// Multiplication by (e^{h q_j} - 1) / h.
struct DifferenceQuotientFactor {
    double h;
    friend bool operator==(const DifferenceQuotientFactor&, const DifferenceQuotientFactor&) = default;
};

using FactorKind = std::variant<GeneratorPowerFactor, EvolutionFactor, DifferenceQuotientFactor>;

/// One pending coordinatewise multiplier of a closed-form sequence.
struct DiagonalFactor {
    PowerLawSpectrum spectrum;
    FactorKind kind;

    Complex value(std::size_t j) const noexcept;
    friend bool operator==(const DiagonalFactor&, const DiagonalFactor&) = default;
};

/// Multiplier of a diagonal factor kind at eigenvalue q.
Complex factor_value(const FactorKind& kind, Complex q) noexcept;

/// Sorted structure-of-arrays storage of finitely many nonzero coordinates.
class FiniteSupport {
public:
    FiniteSupport() = default;

    /// Validates positivity and uniqueness of indices; drops zero values.
    static FiniteSupport from_entries(std::vector<std::pair<std::size_t, Complex>> entries);

    /// Builds from already sorted, unique indices; zeros are dropped.
    static FiniteSupport from_arrays(std::vector<std::size_t> index, std::vector<double> re, std::vector<double> im);

    std::span<const std::size_t> indices() const noexcept { return index_; }
    std::span<const double> real() const noexcept { return re_; }
    std::span<const double> imag() const noexcept { return im_; }
    std::size_t size() const noexcept { return index_.size(); }
    bool empty() const noexcept { return index_.empty(); }
    std::size_t max_index() const noexcept { return index_.empty() ? 0 : index_.back(); }

    Complex value_at(std::size_t position) const noexcept { return {re_[position], im_[position]}; }
    Complex coordinate(std::size_t j) const noexcept;

    friend bool operator==(const FiniteSupport&, const FiniteSupport&) = default;

private:
    std::vector<std::size_t> index_;
    std::vector<double> re_;
    std::vector<double> im_;
};

/// A closed-form family, possibly restricted to j >= first_index and carrying
/// pending diagonal multipliers. Coordinates are evaluated on demand.
struct ClosedForm {
    std::variant<PowerLaw, GeomDecay> family;
    std::size_t first_index = 1;
    std::vector<DiagonalFactor> factors;

    Complex coordinate(std::size_t j) const noexcept;
    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

class CoefficientSequence {
public:
    static CoefficientSequence zero();
    static CoefficientSequence unit(std::size_t j, Complex value = {1.0, 0.0});
    static CoefficientSequence finite(std::vector<std::pair<std::size_t, Complex>> entries);
    static CoefficientSequence power_law(Complex c, double s);
    static CoefficientSequence geometric(Complex c, double r);

    CoefficientSequence(FiniteSupport support);
    CoefficientSequence(ClosedForm form);

    bool is_finite_support() const noexcept { return std::holds_alternative<FiniteSupport>(rep_); }
    const FiniteSupport* finite_support() const noexcept { return std::get_if<FiniteSupport>(&rep_); }
    const ClosedForm* closed_form() const noexcept { return std::get_if<ClosedForm>(&rep_); }

    bool is_zero() const noexcept;

    /// x_j for j >= 1.
    Complex coordinate(std::size_t j) const;

    /// Human-readable description for reports.
    std::string describe() const;

    friend bool operator==(const CoefficientSequence&, const CoefficientSequence&) = default;

private:
    std::variant<FiniteSupport, ClosedForm> rep_;
};

/// alpha * x. Closed forms fold alpha into the prefactor.
CoefficientSequence scale(const CoefficientSequence& x, Complex alpha);

/// x + y and x - y, finite support only.
CoefficientSequence add(const CoefficientSequence& x, const CoefficientSequence& y);
CoefficientSequence subtract(const CoefficientSequence& x, const CoefficientSequence& y);

/// x * 1_{[1, last]}, always finite support.
CoefficientSequence truncate_head(const CoefficientSequence& x, std::size_t last);

/// x - x * 1_{[1, last]}: the coordinates with j > last.
CoefficientSequence truncate_tail(const CoefficientSequence& x, std::size_t last);

/// Appends a pending factor, merging it with an existing one of the same kind and spectrum.
ClosedForm with_factor(ClosedForm form, DiagonalFactor factor);

} // namespace sobolev
