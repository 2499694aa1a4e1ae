#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "sobolev/errors.hpp"
#include "sobolev/kernels.hpp"

namespace sobolev::kernels {

namespace {

Isa probe() noexcept
{
#if defined(SOBOLEV_HAVE_AVX2)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2")) {
        return Isa::Avx2;
    }
#endif
    return Isa::Scalar;
}

Isa initial() noexcept
{
    if (const char* force = std::getenv("SOBOLEV_FORCE_SCALAR"); force != nullptr && *force != '\0' && *force != '0') {
        return Isa::Scalar;
    }
    return probe();
}

std::atomic<Isa>& current() noexcept
{
    static std::atomic<Isa> isa{initial()};
    return isa;
}

void require_same_size(std::size_t expected, std::size_t actual)
{
    if (expected != actual) {
        throw ContractViolation("kernel operands differ in length");
    }
}

} // namespace

Isa detected_isa() noexcept
{
    return probe();
}

Isa active_isa() noexcept
{
    return current().load(std::memory_order_relaxed);
}

Isa select_isa(Isa isa) noexcept
{
    const Isa chosen = (isa == Isa::Avx2 && probe() != Isa::Avx2) ? Isa::Scalar : isa;
    current().store(chosen, std::memory_order_relaxed);
    return chosen;
}

std::string_view isa_name(Isa isa) noexcept
{
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

#if defined(SOBOLEV_HAVE_AVX2)
#define SOBOLEV_DISPATCH(fn, ...)                                                                                     \
    (active_isa() == Isa::Avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define SOBOLEV_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void complex_multiply(std::span<const double> x_re, std::span<const double> x_im, std::span<const double> f_re,
                      std::span<const double> f_im, std::span<double> out_re, std::span<double> out_im)
{
    const std::size_t n = x_re.size();
    for (std::size_t len : {x_im.size(), f_re.size(), f_im.size(), out_re.size(), out_im.size()}) {
        require_same_size(n, len);
    }
    SOBOLEV_DISPATCH(complex_multiply, x_re.data(), x_im.data(), f_re.data(), f_im.data(), out_re.data(),
                     out_im.data(), n);
}

void complex_divide(std::span<const double> x_re, std::span<const double> x_im, std::span<const double> d_re,
                    std::span<const double> d_im, std::span<double> out_re, std::span<double> out_im)
{
    const std::size_t n = x_re.size();
    for (std::size_t len : {x_im.size(), d_re.size(), d_im.size(), out_re.size(), out_im.size()}) {
        require_same_size(n, len);
    }
    SOBOLEV_DISPATCH(complex_divide, x_re.data(), x_im.data(), d_re.data(), d_im.data(), out_re.data(),
                     out_im.data(), n);
}

void weighted_modulus(std::span<const double> w, std::span<const double> re, std::span<const double> im,
                      std::span<double> out)
{
    const std::size_t n = w.size();
    for (std::size_t len : {re.size(), im.size(), out.size()}) {
        require_same_size(n, len);
    }
    SOBOLEV_DISPATCH(weighted_modulus, w.data(), re.data(), im.data(), out.data(), n);
}

void scaled_squares(std::span<const double> a, double scale, std::span<double> out)
{
    require_same_size(a.size(), out.size());
    SOBOLEV_DISPATCH(scaled_squares, a.data(), scale, out.data(), a.size());
}

double max_value(std::span<const double> a)
{
    return SOBOLEV_DISPATCH(max_value, a.data(), a.size());
}

double max_relative_difference(std::span<const double> a_re, std::span<const double> a_im,
                               std::span<const double> b_re, std::span<const double> b_im, double floor)
{
    const std::size_t n = a_re.size();
    for (std::size_t len : {a_im.size(), b_re.size(), b_im.size()}) {
        require_same_size(n, len);
    }
    return SOBOLEV_DISPATCH(max_relative_difference, a_re.data(), a_im.data(), b_re.data(), b_im.data(), floor, n);
}

#undef SOBOLEV_DISPATCH

} // namespace sobolev::kernels
