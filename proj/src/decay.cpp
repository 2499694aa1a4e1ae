#include "sobolev/decay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sobolev {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2.0;

void add_evolution(DecayProfile& profile, const PowerLawSpectrum& spectrum, double t)
{
    // |e^{t q_j}| = e^{t Re shift} e^{-t a j^p}
    profile.log_scale += t * spectrum.shift.real();
    const double rate = t * spectrum.a;
    if (rate == 0.0) {
        return;
    }
    if (spectrum.p == 0.0) {
        profile.log_scale -= rate;
    } else if (spectrum.p == 1.0) {
        profile.log_ratio -= rate;
    } else {
        profile.stretched.push_back({rate, spectrum.p});
    }
}

double stretched_tail_log_bound(double log_scale, double alpha, double beta, double gamma, double last)
{
    // sum_{j>L} S j^alpha e^{-beta j^gamma} <= S (kappa/(e beta))^kappa L^{alpha+1-gamma kappa} / (gamma kappa - alpha - 1)
    const double kappa_min = std::max(alpha + 1.0, 0.0) / gamma;
    const double kappa_max = kappa_min + 10.0 * (beta * std::pow(last, gamma) + 10.0);
    const double log_l = std::log(last);
    double best = std::numeric_limits<double>::infinity();
    constexpr int kSteps = 400;
    for (int i = 1; i <= kSteps; ++i) {
        const double frac = static_cast<double>(i) / kSteps;
        const double kappa = kappa_min + 1e-3 + (kappa_max - kappa_min) * frac * frac;
        const double excess = gamma * kappa - alpha - 1.0;
        if (!(excess > 0.0)) {
            continue;
        }
        const double v = log_scale + kappa * (std::log(kappa) - 1.0 - std::log(beta)) +
                         (alpha + 1.0 - gamma * kappa) * log_l - std::log(excess);
        best = std::min(best, v);
    }
    return best;
}

} // namespace

double DecayProfile::log_value(double j) const noexcept
{
    double v = log_scale + power * std::log(j) + log_ratio * j;
    for (const auto& s : stretched) {
        v -= s.beta * std::pow(j, s.gamma);
    }
    return v;
}

bool DecayProfile::decays_exponentially() const noexcept
{
    return log_ratio < 0.0 || !stretched.empty();
}

DecayProfile& DecayProfile::operator*=(const DecayProfile& other)
{
    log_scale += other.log_scale;
    power += other.power;
    log_ratio += other.log_ratio;
    for (const auto& s : other.stretched) {
        auto it = std::find_if(stretched.begin(), stretched.end(), [&](const auto& e) { return e.gamma == s.gamma; });
        if (it != stretched.end()) {
            it->beta += s.beta;
        } else {
            stretched.push_back(s);
        }
    }
    exact = exact && other.exact;
    sharp = sharp && other.sharp;
    valid_from = std::max(valid_from, other.valid_from);
    return *this;
}

DecayProfile DecayProfile::squared() const
{
    DecayProfile out = *this;
    out.log_scale *= 2.0;
    out.power *= 2.0;
    out.log_ratio *= 2.0;
    for (auto& s : out.stretched) {
        s.beta *= 2.0;
    }
    return out;
}

DecayProfile modulus_power_profile(const PowerLawSpectrum& spectrum, int k, std::size_t from)
{
    DecayProfile out;
    out.valid_from = std::max<std::size_t>(from, 1);
    if (k == 0) {
        return out;
    }
    const double dk = static_cast<double>(k);
    const double m = spectrum.prefactor_modulus();
    const double lam = std::abs(spectrum.shift);
    if (spectrum.p == 0.0) {
        out.log_scale = dk * std::log(modulus(Complex{-spectrum.a, spectrum.b} + spectrum.shift));
        return out;
    }
    out.log_scale = dk * std::log(m);
    out.power = spectrum.p * dk;
    if (lam == 0.0) {
        return out;
    }
    // m j^p - |shift| <= |q_j| <= m j^p + |shift|; keep eps = |shift| / (m j^p) <= 1/2
    const double start = std::ceil(std::pow(2.0 * lam / m, 1.0 / spectrum.p));
    if (start > static_cast<double>(out.valid_from)) {
        out.valid_from = static_cast<std::size_t>(start);
    }
    const double eps = lam / (m * std::pow(static_cast<double>(out.valid_from), spectrum.p));
    out.log_scale += k > 0 ? dk * std::log1p(eps) : dk * std::log1p(-eps);
    out.exact = false;
    return out;
}

DecayProfile profile_of(const ClosedForm& form, std::size_t from)
{
    DecayProfile out;
    out.valid_from = std::max({from, form.first_index, std::size_t{1}});
    if (const auto* pl = std::get_if<PowerLaw>(&form.family)) {
        out.log_scale = std::log(std::abs(pl->c));
        out.power = pl->s;
    } else {
        const auto& g = std::get<GeomDecay>(form.family);
        out.log_scale = std::log(std::abs(g.c));
        out.log_ratio = std::log(g.r);
    }
    for (const auto& factor : form.factors) {
        std::visit(
            [&](const auto& f) {
                using F = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<F, GeneratorPowerFactor>) {
                    out *= modulus_power_profile(factor.spectrum, f.k, out.valid_from);
                } else if constexpr (std::is_same_v<F, EvolutionFactor>) {
                    add_evolution(out, factor.spectrum, f.t);
                } else {
                    // |e^{hq} - 1| / h <= |q| when Re q <= 0; only an upper bound
                    DecayProfile bound = modulus_power_profile(factor.spectrum, 1, out.valid_from);
                    bound.exact = false;
                    bound.sharp = false;
                    out *= bound;
                }
            },
            factor.kind);
    }
    return out;
}

bool TailEnclosure::bounded() const noexcept
{
    return !divergent && std::isfinite(upper);
}

TailEnclosure tail_enclosure(const DecayProfile& g, std::size_t last)
{
    TailEnclosure out;
    const double L = static_cast<double>(last);
    const double first = L + 1.0;

    // geometric-type: bound the ratio g(j+1)/g(j) uniformly for j >= L + 1
    bool has_fast_stretch = false;
    double log_theta = std::max(g.power, 0.0) * std::log((L + 2.0) / (L + 1.0)) + g.log_ratio;
    for (const auto& s : g.stretched) {
        if (s.gamma > 1.0) {
            has_fast_stretch = true;
            log_theta -= s.beta * (std::pow(L + 2.0, s.gamma) - std::pow(L + 1.0, s.gamma));
        }
    }
    if ((g.log_ratio < 0.0 || has_fast_stretch) && log_theta < 0.0) {
        const double head = std::exp(g.log_value(first));
        out.upper = head / -std::expm1(log_theta);
        out.lower = g.exact ? head : 0.0;
        return out;
    }

    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : g.stretched) {
        if (s.gamma < 1.0 && last >= 1) {
            best = std::min(best, stretched_tail_log_bound(g.log_scale, g.power, s.beta, s.gamma, L));
        }
    }
    if (std::isfinite(best)) {
        out.upper = std::exp(best);
        out.lower = g.exact ? std::exp(g.log_value(first)) : 0.0;
        out.lower = std::min(out.lower, out.upper);
        return out;
    }
    if (g.decays_exponentially()) {
        // decay present but the ratio bound does not yet apply at this truncation
        out.upper = std::numeric_limits<double>::infinity();
        return out;
    }

    const double alpha = g.power;
    if (alpha >= -1.0) {
        out.divergent = g.sharp;
        out.upper = std::numeric_limits<double>::infinity();
        return out;
    }
    if (last == 0) {
        out.upper = std::numeric_limits<double>::infinity();
        return out;
    }
    const double scale = std::exp(g.log_scale);
    const double integral = scale * std::pow(L, alpha + 1.0) / (-alpha - 1.0);
    if (!g.exact) {
        out.upper = integral;
        return out;
    }
    // sum_{j>L} f(j) = int_L^inf f - f(L)/2 - f'(L)/12 + R, |R| <= |f'''(L)|/720 for completely monotone f
    const double f0 = scale * std::pow(L, alpha);
    const double f1 = scale * alpha * std::pow(L, alpha - 1.0);
    const double f3 = scale * alpha * (alpha - 1.0) * (alpha - 2.0) * std::pow(L, alpha - 3.0);
    const double center = integral - 0.5 * f0 - f1 / 12.0;
    const double half_width = 2.0 * std::fabs(f3) / 720.0 + 8.0 * kUnitRoundoff * integral;
    out.lower = std::max(0.0, center - half_width);
    out.upper = center + half_width;
    return out;
}

} // namespace sobolev
