#include "sobolev/weights.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sobolev {

double modulus_power(Complex q, int n) noexcept
{
    if (n == 0) {
        return 1.0;
    }
    return std::pow(modulus_squared(q), 0.5 * static_cast<double>(n));
}

double TowerWeight::value(std::size_t j) const
{
    if (level_ == 0) {
        // level 0 is defined for every index, explicit spectrum or not
        if (j == 0) {
            throw IndexError("coordinate indices are 1-based");
        }
        return 1.0;
    }
    return modulus_power(spectrum_.eigenvalue(j), level_);
}

TowerWeight tower_weight(const SpectrumSpec& spectrum, int n)
{
    return TowerWeight(spectrum, n);
}

KotheMatrix KotheMatrix::from_spectrum(SpectrumSpec spectrum)
{
    return KotheMatrix(std::move(spectrum));
}

KotheMatrix KotheMatrix::table(std::vector<std::vector<double>> table)
{
    if (table.empty() || table.front().empty()) {
        throw ContractViolation("Koethe table must be nonempty");
    }
    const std::size_t cols = table.front().size();
    for (std::size_t j = 0; j < table.size(); ++j) {
        const auto& row = table[j];
        if (row.size() != cols) {
            throw ContractViolation("Koethe table rows differ in length");
        }
        bool positive = false;
        for (const double b : row) {
            if (!std::isfinite(b) || b < 0.0) {
                throw ContractViolation("Koethe weights must be finite and nonnegative");
            }
            positive = positive || b > 0.0;
        }
        if (!positive) {
            throw ContractViolation("Koethe row " + std::to_string(j + 1) + " has no positive weight");
        }
    }
    return KotheMatrix(std::move(table));
}

double KotheMatrix::entry(std::size_t j, std::size_t k) const
{
    if (j == 0) {
        throw IndexError("coordinate indices are 1-based");
    }
    if (const auto* spec = spectrum()) {
        return modulus_power(spec->eigenvalue(j), static_cast<int>(k));
    }
    const auto& t = std::get<std::vector<std::vector<double>>>(rep_);
    if (j > t.size() || k >= t.front().size()) {
        throw IndexError("Koethe entry (" + std::to_string(j) + ", " + std::to_string(k) + ") outside table");
    }
    return t[j - 1][k];
}

std::optional<std::size_t> KotheMatrix::columns() const noexcept
{
    if (spectrum() != nullptr) {
        return std::nullopt;
    }
    return std::get<std::vector<std::vector<double>>>(rep_).front().size();
}

std::optional<std::size_t> KotheMatrix::rows() const noexcept
{
    if (const auto* spec = spectrum()) {
        return spec->size();
    }
    return std::get<std::vector<std::vector<double>>>(rep_).size();
}

} // namespace sobolev
