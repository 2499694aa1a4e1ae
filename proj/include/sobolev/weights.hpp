#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "sobolev/spectrum.hpp"

namespace sobolev {

/// v_n = (|q_j|^n)_j, the weight of tower level n.
class TowerWeight {
public:
    TowerWeight(SpectrumSpec spectrum, int level) : spectrum_(std::move(spectrum)), level_(level) {}

    const SpectrumSpec& spectrum() const noexcept { return spectrum_; }
    int level() const noexcept { return level_; }

    /// |q_j|^n computed as (|q_j|^2)^{n/2}, exact whenever |q_j|^2 and the power are representable.
    double value(std::size_t j) const;

private:
    SpectrumSpec spectrum_;
    int level_;
};

TowerWeight tower_weight(const SpectrumSpec& spectrum, int n);

/// |q|^n for a single eigenvalue, the formula behind TowerWeight::value.
double modulus_power(Complex q, int n) noexcept;

/// Weights b_{j,k} >= 0 of a Koethe echelon space. Columns k are 0-based.
///
/// FromSpectrum realises b_{j,k} = |q_j|^k; an explicit table covers rows
/// j = 1..rows only. Every row must have a positive entry.
class KotheMatrix {
public:
    static KotheMatrix from_spectrum(SpectrumSpec spectrum);
    /// table[j-1][k] = b_{j,k}
    static KotheMatrix table(std::vector<std::vector<double>> table);

    double entry(std::size_t j, std::size_t k) const;

    /// Number of columns, nullopt when unbounded.
    std::optional<std::size_t> columns() const noexcept;
    /// Number of rows, nullopt when unbounded.
    std::optional<std::size_t> rows() const noexcept;

    const SpectrumSpec* spectrum() const noexcept { return std::get_if<SpectrumSpec>(&rep_); }

private:
    explicit KotheMatrix(std::variant<SpectrumSpec, std::vector<std::vector<double>>> rep) : rep_(std::move(rep)) {}

    std::variant<SpectrumSpec, std::vector<std::vector<double>>> rep_;
};

} // namespace sobolev
