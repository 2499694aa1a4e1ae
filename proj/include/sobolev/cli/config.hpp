#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "sobolev/norms.hpp"
#include "sobolev/spectrum.hpp"
#include "sobolev/tower.hpp"

namespace sobolev::cli {

/// Everything a run needs, after validation.
struct RunConfig {
    SpectrumSpec spectrum;
    SeriesControl control{};
    LevelRange levels{};
    std::vector<double> t_grid{0.0, 0.1, 1.0, 10.0};
    std::vector<double> h_grid{1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4};
    std::uint64_t seed = 42;
    Complex rescale{-1.0, 0.0};
};

/// Parses the strict TOML subset used for run configuration:
///
///   [spectrum]  kind = "power_law" (a, p, b) | "explicit" (re, im arrays)
///   [numerics]  truncation, tolerance, n_min, n_max, seed, rescale, rescale_im
///   [grids]     t, h
///
/// Scalars are numbers or double-quoted strings, arrays are single-line
/// lists of numbers, `#` starts a comment. Unknown sections or keys,
/// duplicates and invariant violations throw ConfigurationError naming the
/// offending key and its line.
RunConfig parse_config_text(std::string_view text, std::string_view source = "<config>");
RunConfig parse_config(const std::filesystem::path& path);

} // namespace sobolev::cli
