#include "sobolev/random.hpp"

#include <algorithm>
#include <set>

namespace sobolev {

CoefficientSequence random_finite_vector(Rng& rng, std::size_t max_support, std::size_t max_index)
{
    if (max_support == 0 || max_index == 0) {
        throw ContractViolation("random vectors need a positive support and index bound");
    }
    const std::size_t count = rng.index(1, std::min(max_support, max_index));
    std::set<std::size_t> chosen;
    while (chosen.size() < count) {
        chosen.insert(rng.index(1, max_index));
    }
    std::vector<std::pair<std::size_t, Complex>> entries;
    for (const std::size_t j : chosen) {
        const double re = rng.uniform(-1.0, 1.0);
        const double im = rng.uniform(-1.0, 1.0);
        entries.emplace_back(j, Complex{re, im});
    }
    return CoefficientSequence::finite(std::move(entries));
}

} // namespace sobolev
