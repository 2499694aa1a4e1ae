#include "sobolev/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sobolev {

namespace {

void validate_family(const PowerLaw& f)
{
    require_finite(f.c, "power-law prefactor");
    if (f.c == Complex{0.0, 0.0}) {
        throw ContractViolation("power-law prefactor must be nonzero");
    }
    if (!std::isfinite(f.s)) {
        throw ContractViolation("power-law exponent must be finite");
    }
}

void validate_family(const GeomDecay& f)
{
    require_finite(f.c, "geometric prefactor");
    if (f.c == Complex{0.0, 0.0}) {
        throw ContractViolation("geometric prefactor must be nonzero");
    }
    if (!(f.r > 0.0 && f.r < 1.0)) {
        throw ContractViolation("geometric ratio must lie in (0, 1)");
    }
}

} // namespace

Complex factor_value(const FactorKind& kind, Complex q) noexcept
{
    return std::visit(
        [q](const auto& f) -> Complex {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, GeneratorPowerFactor>) {
                return integer_power(q, f.k);
            } else if constexpr (std::is_same_v<F, EvolutionFactor>) {
                return exponential(Complex{f.t * q.real(), f.t * q.imag()});
            } else {
                const Complex em1 = exponential_minus_one(Complex{f.h * q.real(), f.h * q.imag()});
                return {em1.real() / f.h, em1.imag() / f.h};
            }
        },
        kind);
}

Complex DiagonalFactor::value(std::size_t j) const noexcept
{
    return factor_value(kind, power_law_eigenvalue(spectrum, j));
}

FiniteSupport FiniteSupport::from_entries(std::vector<std::pair<std::size_t, Complex>> entries)
{
    std::sort(entries.begin(), entries.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    FiniteSupport out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& [j, v] = entries[i];
        if (j == 0) {
            throw IndexError("coordinate indices are 1-based");
        }
        if (i > 0 && entries[i - 1].first == j) {
            throw ContractViolation("duplicate index " + std::to_string(j));
        }
        require_finite(v, "coordinate value");
        if (v == Complex{0.0, 0.0}) {
            continue;
        }
        out.index_.push_back(j);
        out.re_.push_back(v.real());
        out.im_.push_back(v.imag());
    }
    return out;
}

FiniteSupport FiniteSupport::from_arrays(std::vector<std::size_t> index, std::vector<double> re, std::vector<double> im)
{
    if (index.size() != re.size() || index.size() != im.size()) {
        throw ContractViolation("finite-support arrays differ in length");
    }
    FiniteSupport out;
    out.index_.reserve(index.size());
    out.re_.reserve(index.size());
    out.im_.reserve(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (index[i] == 0 || (i > 0 && index[i] <= index[i - 1])) {
            throw ContractViolation("finite-support indices must be positive and strictly increasing");
        }
        require_finite(Complex{re[i], im[i]}, "coordinate value");
        if (re[i] == 0.0 && im[i] == 0.0) {
            continue;
        }
        out.index_.push_back(index[i]);
        out.re_.push_back(re[i]);
        out.im_.push_back(im[i]);
    }
    return out;
}

Complex FiniteSupport::coordinate(std::size_t j) const noexcept
{
    const auto it = std::lower_bound(index_.begin(), index_.end(), j);
    if (it == index_.end() || *it != j) {
        return {0.0, 0.0};
    }
    const auto pos = static_cast<std::size_t>(it - index_.begin());
    return {re_[pos], im_[pos]};
}

Complex ClosedForm::coordinate(std::size_t j) const noexcept
{
    if (j < first_index) {
        return {0.0, 0.0};
    }
    const double dj = static_cast<double>(j);
    Complex value = std::visit(
        [dj](const auto& f) -> Complex {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, PowerLaw>) {
                const double m = f.s == 0.0 ? 1.0 : std::pow(dj, f.s);
                return {f.c.real() * m, f.c.imag() * m};
            } else {
                const double m = std::pow(f.r, dj);
                return {f.c.real() * m, f.c.imag() * m};
            }
        },
        family);
    for (const auto& factor : factors) {
        value = multiply(value, factor.value(j));
    }
    return value;
}

CoefficientSequence::CoefficientSequence(FiniteSupport support) : rep_(std::move(support)) {}

CoefficientSequence::CoefficientSequence(ClosedForm form) : rep_(std::move(form))
{
    const auto& cf = std::get<ClosedForm>(rep_);
    std::visit([](const auto& f) { validate_family(f); }, cf.family);
    if (cf.first_index == 0) {
        throw IndexError("coordinate indices are 1-based");
    }
}

CoefficientSequence CoefficientSequence::zero()
{
    return CoefficientSequence(FiniteSupport{});
}

CoefficientSequence CoefficientSequence::unit(std::size_t j, Complex value)
{
    return finite({{j, value}});
}

CoefficientSequence CoefficientSequence::finite(std::vector<std::pair<std::size_t, Complex>> entries)
{
    return CoefficientSequence(FiniteSupport::from_entries(std::move(entries)));
}

CoefficientSequence CoefficientSequence::power_law(Complex c, double s)
{
    return CoefficientSequence(ClosedForm{PowerLaw{c, s}, 1, {}});
}

CoefficientSequence CoefficientSequence::geometric(Complex c, double r)
{
    return CoefficientSequence(ClosedForm{GeomDecay{c, r}, 1, {}});
}

bool CoefficientSequence::is_zero() const noexcept
{
    const auto* fs = finite_support();
    return fs != nullptr && fs->empty();
}

Complex CoefficientSequence::coordinate(std::size_t j) const
{
    if (j == 0) {
        throw IndexError("coordinate indices are 1-based");
    }
    return std::visit([j](const auto& rep) { return rep.coordinate(j); }, rep_);
}

std::string CoefficientSequence::describe() const
{
    std::ostringstream os;
    os.precision(17);
    if (const auto* fs = finite_support()) {
        os << "fin:";
        for (std::size_t i = 0; i < fs->size(); ++i) {
            os << (i ? "," : "") << fs->indices()[i] << "=" << fs->real()[i];
            if (fs->imag()[i] != 0.0) {
                os << (fs->imag()[i] < 0 ? "" : "+") << fs->imag()[i] << "i";
            }
        }
        return os.str();
    }
    const auto& cf = *closed_form();
    if (const auto* pl = std::get_if<PowerLaw>(&cf.family)) {
        os << "pow:c=" << pl->c.real();
        if (pl->c.imag() != 0.0) {
            os << (pl->c.imag() < 0 ? "" : "+") << pl->c.imag() << "i";
        }
        os << ",s=" << pl->s;
    } else {
        const auto& g = std::get<GeomDecay>(cf.family);
        os << "geom:c=" << g.c.real();
        if (g.c.imag() != 0.0) {
            os << (g.c.imag() < 0 ? "" : "+") << g.c.imag() << "i";
        }
        os << ",r=" << g.r;
    }
    if (cf.first_index > 1) {
        os << " [j>=" << cf.first_index << "]";
    }
    for (const auto& f : cf.factors) {
        std::visit(
            [&os](const auto& k) {
                using F = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<F, GeneratorPowerFactor>) {
                    os << " *A^" << k.k;
                } else if constexpr (std::is_same_v<F, EvolutionFactor>) {
                    os << " *T(" << k.t << ")";
                } else {
                    os << " *D(" << k.h << ")";
                }
            },
            f.kind);
    }
    return os.str();
}

CoefficientSequence scale(const CoefficientSequence& x, Complex alpha)
{
    require_finite(alpha, "scalar");
    if (alpha == Complex{0.0, 0.0}) {
        return CoefficientSequence::zero();
    }
    if (const auto* fs = x.finite_support()) {
        std::vector<std::size_t> index(fs->indices().begin(), fs->indices().end());
        std::vector<double> re(fs->size());
        std::vector<double> im(fs->size());
        for (std::size_t i = 0; i < fs->size(); ++i) {
            const Complex v = multiply(fs->value_at(i), alpha);
            require_finite(v, "scaled coordinate");
            re[i] = v.real();
            im[i] = v.imag();
        }
        return FiniteSupport::from_arrays(std::move(index), std::move(re), std::move(im));
    }
    ClosedForm cf = *x.closed_form();
    std::visit([alpha](auto& f) { f.c = multiply(f.c, alpha); }, cf.family);
    return cf;
}

namespace {

CoefficientSequence combine(const CoefficientSequence& x, const CoefficientSequence& y, double sign)
{
    const auto* fx = x.finite_support();
    const auto* fy = y.finite_support();
    if (fx == nullptr || fy == nullptr) {
        throw ContractViolation("sequence addition is defined for finite support only");
    }
    std::vector<std::size_t> index;
    std::vector<double> re;
    std::vector<double> im;
    std::size_t i = 0;
    std::size_t k = 0;
    while (i < fx->size() || k < fy->size()) {
        const std::size_t jx = i < fx->size() ? fx->indices()[i] : SIZE_MAX;
        const std::size_t jy = k < fy->size() ? fy->indices()[k] : SIZE_MAX;
        const std::size_t j = std::min(jx, jy);
        double r = 0.0;
        double m = 0.0;
        if (jx == j) {
            r += fx->real()[i];
            m += fx->imag()[i];
            ++i;
        }
        if (jy == j) {
            r += sign * fy->real()[k];
            m += sign * fy->imag()[k];
            ++k;
        }
        index.push_back(j);
        re.push_back(r);
        im.push_back(m);
    }
    return FiniteSupport::from_arrays(std::move(index), std::move(re), std::move(im));
}

} // namespace

CoefficientSequence add(const CoefficientSequence& x, const CoefficientSequence& y)
{
    return combine(x, y, 1.0);
}

CoefficientSequence subtract(const CoefficientSequence& x, const CoefficientSequence& y)
{
    return combine(x, y, -1.0);
}

CoefficientSequence truncate_head(const CoefficientSequence& x, std::size_t last)
{
    std::vector<std::size_t> index;
    std::vector<double> re;
    std::vector<double> im;
    if (const auto* fs = x.finite_support()) {
        for (std::size_t i = 0; i < fs->size() && fs->indices()[i] <= last; ++i) {
            index.push_back(fs->indices()[i]);
            re.push_back(fs->real()[i]);
            im.push_back(fs->imag()[i]);
        }
    } else {
        const auto& cf = *x.closed_form();
        for (std::size_t j = cf.first_index; j <= last; ++j) {
            const Complex v = cf.coordinate(j);
            index.push_back(j);
            re.push_back(v.real());
            im.push_back(v.imag());
        }
    }
    return FiniteSupport::from_arrays(std::move(index), std::move(re), std::move(im));
}

CoefficientSequence truncate_tail(const CoefficientSequence& x, std::size_t last)
{
    if (const auto* fs = x.finite_support()) {
        const auto begin = std::upper_bound(fs->indices().begin(), fs->indices().end(), last);
        const auto offset = static_cast<std::size_t>(begin - fs->indices().begin());
        std::vector<std::size_t> index(begin, fs->indices().end());
        std::vector<double> re(fs->real().begin() + static_cast<std::ptrdiff_t>(offset), fs->real().end());
        std::vector<double> im(fs->imag().begin() + static_cast<std::ptrdiff_t>(offset), fs->imag().end());
        return FiniteSupport::from_arrays(std::move(index), std::move(re), std::move(im));
    }
    ClosedForm cf = *x.closed_form();
    cf.first_index = std::max(cf.first_index, last + 1);
    return cf;
}

ClosedForm with_factor(ClosedForm form, DiagonalFactor factor)
{
    for (auto it = form.factors.begin(); it != form.factors.end(); ++it) {
        if (it->spectrum != factor.spectrum || it->kind.index() != factor.kind.index()) {
            continue;
        }
        if (auto* p = std::get_if<GeneratorPowerFactor>(&it->kind)) {
            p->k += std::get<GeneratorPowerFactor>(factor.kind).k;
            if (p->k == 0) {
                form.factors.erase(it);
            }
            return form;
        }
        if (auto* e = std::get_if<EvolutionFactor>(&it->kind)) {
            e->t += std::get<EvolutionFactor>(factor.kind).t;
            return form;
        }
    }
    const bool trivial = (std::holds_alternative<GeneratorPowerFactor>(factor.kind) &&
                          std::get<GeneratorPowerFactor>(factor.kind).k == 0) ||
                         (std::holds_alternative<EvolutionFactor>(factor.kind) &&
                          std::get<EvolutionFactor>(factor.kind).t == 0.0);
    if (!trivial) {
        form.factors.push_back(std::move(factor));
    }
    return form;
}

} // namespace sobolev
