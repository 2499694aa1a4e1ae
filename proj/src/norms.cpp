#include "sobolev/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "sobolev/decay.hpp"
#include "sobolev/kernels.hpp"
#include "sobolev/summation.hpp"

namespace sobolev {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Largest index a sup scan may visit before giving up.
constexpr std::size_t kMaxSupScan = 50'000'000;

struct Coordinates {
    std::vector<double> weight;
    std::vector<double> re;
    std::vector<double> im;
};

void require_in_spectrum(const SpectrumSpec& spectrum, std::size_t max_index)
{
    if (const auto n = spectrum.size(); n && max_index > *n) {
        throw IndexError("support reaches index " + std::to_string(max_index) + " beyond explicit spectrum of size " +
                         std::to_string(*n));
    }
}

const PowerLawSpectrum& require_power_law(const SpectrumSpec& spectrum)
{
    const auto* pl = spectrum.as_power_law();
    if (pl == nullptr) {
        throw IndexError("closed-form sequences have infinite support; an explicit spectrum covers finitely many indices");
    }
    return *pl;
}

Coordinates gather_finite(const FiniteSupport& fs, const TowerWeight& w)
{
    Coordinates c;
    c.weight.resize(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        c.weight[i] = w.value(fs.indices()[i]);
    }
    c.re.assign(fs.real().begin(), fs.real().end());
    c.im.assign(fs.imag().begin(), fs.imag().end());
    return c;
}

Coordinates gather_range(const ClosedForm& cf, std::size_t first, std::size_t last, const TowerWeight& w)
{
    Coordinates c;
    if (first > last) {
        return c;
    }
    const std::size_t n = last - first + 1;
    c.weight.resize(n);
    c.re.resize(n);
    c.im.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = first + i;
        const Complex v = cf.coordinate(j);
        c.weight[i] = w.value(j);
        c.re[i] = v.real();
        c.im[i] = v.imag();
    }
    return c;
}

/// Scaled partial sum: returns sum of (a_j * scale)^2 with scale = 2^{-e}, a_max * scale in [0.5, 1).
struct ScaledSum {
    double sum = 0.0;
    int exponent = 0; // value = sqrt(sum) * 2^exponent
};

ScaledSum scaled_sum_of_squares(const Coordinates& c)
{
    ScaledSum out;
    if (c.weight.empty()) {
        return out;
    }
    std::vector<double> a(c.weight.size());
    kernels::weighted_modulus(c.weight, c.re, c.im, a);
    const double amax = kernels::max_value(a);
    if (!std::isfinite(amax)) {
        throw ContractViolation("weighted coordinates overflow double precision");
    }
    if (amax == 0.0) {
        return out;
    }
    std::frexp(amax, &out.exponent);
    if (out.exponent < -1000) {
        // 2^{-exponent} would overflow; lift the subnormal range first (exact for powers of two)
        constexpr int kLift = 600;
        for (double& v : a) {
            v = std::ldexp(v, kLift);
        }
        std::frexp(std::ldexp(amax, kLift), &out.exponent);
        kernels::scaled_squares(a, std::ldexp(1.0, -out.exponent), a);
        out.exponent -= kLift;
        out.sum = neumaier_sum(a);
        return out;
    }
    kernels::scaled_squares(a, std::ldexp(1.0, -out.exponent), a);
    out.sum = neumaier_sum(a);
    return out;
}

double sup_of(const Coordinates& c)
{
    if (c.weight.empty()) {
        return 0.0;
    }
    std::vector<double> a(c.weight.size());
    kernels::weighted_modulus(c.weight, c.re, c.im, a);
    return kernels::max_value(a);
}

// `tail` is expressed in units of 2^{2 partial.exponent}, like partial.sum.
NormResult finish_l2(ScaledSum partial, const TailEnclosure& tail, const SeriesControl& control)
{
    NormResult r;
    if (tail.divergent) {
        r.status = SeriesStatus::Divergent;
        r.value = kInf;
        r.sum_of_squares = kInf;
        r.uncertainty = kInf;
        return r;
    }
    const double total_scaled = partial.sum + tail.center();
    const double width_scaled = tail.width();
    r.value = std::ldexp(std::sqrt(total_scaled), partial.exponent);
    r.sum_of_squares = std::ldexp(total_scaled, 2 * partial.exponent);
    r.uncertainty = std::ldexp(width_scaled, 2 * partial.exponent);
    const bool certified = tail.bounded() && width_scaled <= control.tolerance * total_scaled;
    r.status = certified && std::isfinite(r.value) ? SeriesStatus::Ok : SeriesStatus::Inconclusive;
    return r;
}

void validate_control(const SeriesControl& control)
{
    if (control.truncation == 0) {
        throw ContractViolation("truncation must be positive");
    }
    if (!(control.tolerance > 0.0)) {
        throw ContractViolation("tolerance must be positive");
    }
}

NormResult sup_seminorm(const CoefficientSequence& x, const KotheMatrix& b, std::size_t k, const TowerWeight* level,
                        const SeriesControl& control)
{
    validate_control(control);
    if (const auto cols = b.columns(); cols && k >= *cols) {
        throw IndexError("seminorm index k = " + std::to_string(k) + " outside Koethe table");
    }
    auto entry = [&](std::size_t j) {
        const double base = b.entry(j, k);
        return level != nullptr ? base * level->value(j) : base;
    };

    if (const auto* fs = x.finite_support()) {
        if (const auto rows = b.rows(); rows && fs->max_index() > *rows) {
            throw IndexError("support reaches index " + std::to_string(fs->max_index()) + " beyond Koethe rows");
        }
        if (level != nullptr) {
            require_in_spectrum(level->spectrum(), fs->max_index());
        }
        Coordinates c;
        c.weight.resize(fs->size());
        for (std::size_t i = 0; i < fs->size(); ++i) {
            c.weight[i] = entry(fs->indices()[i]);
        }
        c.re.assign(fs->real().begin(), fs->real().end());
        c.im.assign(fs->imag().begin(), fs->imag().end());
        NormResult r;
        r.value = sup_of(c);
        return r;
    }

    const auto* spec = b.spectrum();
    if (spec == nullptr) {
        throw IndexError("closed-form sequences need spectrum-generated Koethe weights");
    }
    const auto& cf = *x.closed_form();
    const auto& pl = require_power_law(*spec);
    DecayProfile h = profile_of(cf, control.truncation);
    h *= modulus_power_profile(pl, static_cast<int>(k), h.valid_from);
    if (level != nullptr) {
        h *= modulus_power_profile(require_power_law(level->spectrum()), level->level(), h.valid_from);
    }

    NormResult r;
    if (!h.decays_exponentially() && h.power >= 0.0) {
        if (h.sharp) {
            r.status = SeriesStatus::Divergent;
            r.value = kInf;
            r.uncertainty = kInf;
            return r;
        }
        r.status = SeriesStatus::Inconclusive;
    }

    // j * d/dj log h(j) = power + j log_ratio - sum beta gamma j^gamma is decreasing in j
    auto slope = [&h](double j) {
        double v = h.power + j * h.log_ratio;
        for (const auto& s : h.stretched) {
            v -= s.beta * s.gamma * std::pow(j, s.gamma);
        }
        return v;
    };
    double peak = static_cast<double>(h.valid_from);
    if (slope(peak) > 0.0) {
        double hi = 2.0 * peak;
        while (slope(hi) > 0.0 && hi < 1e15) {
            hi *= 2.0;
        }
        if (slope(hi) > 0.0) {
            r.status = SeriesStatus::Inconclusive;
            r.value = kInf;
            r.uncertainty = kInf;
            return r;
        }
        double lo = peak;
        for (int it = 0; it < 200 && hi - lo > 0.5; ++it) {
            const double mid = 0.5 * (lo + hi);
            (slope(mid) > 0.0 ? lo : hi) = mid;
        }
        peak = hi;
    }
    std::size_t scan_end = std::max({control.truncation, h.valid_from, static_cast<std::size_t>(std::ceil(peak)) + 1});
    if (scan_end > kMaxSupScan) {
        r.status = SeriesStatus::Inconclusive;
        r.value = kInf;
        r.uncertainty = kInf;
        return r;
    }

    const TowerWeight kw(*spec, static_cast<int>(k));
    Coordinates c = gather_range(cf, cf.first_index, scan_end, kw);
    if (level != nullptr) {
        for (std::size_t i = 0; i < c.weight.size(); ++i) {
            c.weight[i] *= level->value(cf.first_index + i);
        }
    }
    r.value = sup_of(c);
    // beyond scan_end the envelope decreases, so an exact envelope cannot beat the scanned maximum
    const double beyond = std::exp(h.log_value(static_cast<double>(scan_end + 1)));
    if (!h.exact && beyond > r.value) {
        r.status = SeriesStatus::Inconclusive;
        r.uncertainty = beyond - r.value;
    }
    return r;
}

} // namespace

std::string_view to_string(SeriesStatus status) noexcept
{
    switch (status) {
    case SeriesStatus::Ok:
        return "ok";
    case SeriesStatus::Inconclusive:
        return "inconclusive";
    case SeriesStatus::Divergent:
        return "divergent";
    }
    return "unknown";
}

NormResult weighted_l2_norm(const CoefficientSequence& x, const TowerWeight& w, const SeriesControl& control)
{
    validate_control(control);
    if (const auto* fs = x.finite_support()) {
        require_in_spectrum(w.spectrum(), fs->max_index());
        return finish_l2(scaled_sum_of_squares(gather_finite(*fs, w)), TailEnclosure{}, control);
    }

    const auto& cf = *x.closed_form();
    const auto& pl = require_power_law(w.spectrum());
    DecayProfile g = profile_of(cf, control.truncation);
    g *= modulus_power_profile(pl, w.level(), g.valid_from);
    g = g.squared();
    // partial sum over [first_index, last], tail beyond
    const std::size_t last = std::max(control.truncation, g.valid_from - 1);
    TailEnclosure tail = tail_enclosure(g, last);
    if (tail.divergent) {
        return finish_l2({}, tail, control);
    }
    ScaledSum partial = scaled_sum_of_squares(gather_range(cf, cf.first_index, last, w));
    if (partial.sum == 0.0 && tail.center() > 0.0) {
        std::frexp(std::sqrt(tail.center()), &partial.exponent);
    }
    if (partial.exponent != 0) {
        // re-enclose the tail in the units of the partial sum so tiny or huge norms keep full precision
        g.log_scale -= 2.0 * partial.exponent * std::numbers::ln2;
        tail = tail_enclosure(g, last);
    }
    return finish_l2(partial, tail, control);
}

double partial_weighted_l2(const CoefficientSequence& x, const TowerWeight& w, std::size_t last)
{
    ScaledSum s;
    if (x.is_finite_support()) {
        const CoefficientSequence head = truncate_head(x, last);
        require_in_spectrum(w.spectrum(), head.finite_support()->max_index());
        s = scaled_sum_of_squares(gather_finite(*head.finite_support(), w));
    } else {
        const auto& cf = *x.closed_form();
        s = scaled_sum_of_squares(gather_range(cf, cf.first_index, last, w));
    }
    return std::ldexp(std::sqrt(s.sum), s.exponent);
}

NormResult c0_seminorm(const CoefficientSequence& x, const KotheMatrix& b, std::size_t k, const SeriesControl& control)
{
    return sup_seminorm(x, b, k, nullptr, control);
}

NormResult c0_tower_seminorm(const CoefficientSequence& x, const KotheMatrix& b, std::size_t k,
                             const TowerWeight& level_weight, const SeriesControl& control)
{
    return sup_seminorm(x, b, k, &level_weight, control);
}

} // namespace sobolev
