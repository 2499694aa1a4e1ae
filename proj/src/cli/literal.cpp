#include "sobolev/cli/literal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "sobolev/errors.hpp"

namespace sobolev::cli {

namespace {

[[noreturn]] void reject(std::string_view text, const std::string& why)
{
    throw ConfigurationError("bad vector literal '" + std::string(text) + "': " + why);
}

bool parse_real(std::string_view token, double& out)
{
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size() && std::isfinite(out) && !token.empty();
}

bool parse_index(std::string_view token, std::size_t& out)
{
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size() && !token.empty() && out >= 1;
}

// <re>, <re>+<im>i or <re>-<im>i
bool parse_complex(std::string_view token, Complex& out)
{
    double re = 0.0;
    if (token.empty() || token.back() != 'i') {
        if (!parse_real(token, re)) {
            return false;
        }
        out = {re, 0.0};
        return true;
    }
    const std::string_view body = token.substr(0, token.size() - 1);
    // the sign that separates the parts is not the leading one and not an exponent sign
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
        }
    }
    double im = 0.0;
    if (split == std::string_view::npos || !parse_real(body.substr(0, split), re) ||
        !parse_real(body.substr(split), im)) {
        return false;
    }
    out = {re, im};
    return true;
}

// Splits "c=<z>,<key>=<real>" into its two values.
void closed_form_params(std::string_view text, std::string_view body, char key, Complex& c, double& param)
{
    const auto comma = body.find(',');
    if (!body.starts_with("c=") || comma == std::string_view::npos) {
        reject(text, std::string("expected c=<value>,") + key + "=<value>");
    }
    const std::string_view second = body.substr(comma + 1);
    if (second.size() < 2 || second[0] != key || second[1] != '=') {
        reject(text, std::string("expected ") + key + "=<value> after the coefficient");
    }
    if (!parse_complex(body.substr(2, comma - 2), c)) {
        reject(text, "coefficient is not a complex number");
    }
    if (!parse_real(second.substr(2), param)) {
        reject(text, std::string(1, key) + " is not a finite real number");
    }
}

} // namespace

CoefficientSequence parse_vector_literal(std::string_view text)
{
    try {
        if (text.size() > 1 && text.front() == 'e' && std::isdigit(static_cast<unsigned char>(text[1]))) {
            std::size_t j = 0;
            if (!parse_index(text.substr(1), j)) {
                reject(text, "unit vector index must be a positive integer");
            }
            return CoefficientSequence::unit(j);
        }
        if (text.starts_with("fin:")) {
            std::string_view body = text.substr(4);
            std::vector<std::pair<std::size_t, Complex>> entries;
            while (!body.empty()) {
                const auto comma = body.find(',');
                const std::string_view item = body.substr(0, comma);
                const auto eq = item.find('=');
                std::size_t j = 0;
                Complex v;
                if (eq == std::string_view::npos || !parse_index(item.substr(0, eq), j) ||
                    !parse_complex(item.substr(eq + 1), v)) {
                    reject(text, "entries look like <j>=<re>[+<im>i]");
                }
                entries.emplace_back(j, v);
                if (comma == std::string_view::npos) {
                    break;
                }
                body = body.substr(comma + 1);
                if (body.empty()) {
                    reject(text, "trailing comma");
                }
            }
            return CoefficientSequence::finite(std::move(entries));
        }
        if (text.starts_with("pow:")) {
            Complex c;
            double s = 0.0;
            closed_form_params(text, text.substr(4), 's', c, s);
            return CoefficientSequence::power_law(c, s);
        }
        if (text.starts_with("geom:")) {
            Complex c;
            double r = 0.0;
            closed_form_params(text, text.substr(5), 'r', c, r);
            return CoefficientSequence::geometric(c, r);
        }
    } catch (const ConfigurationError&) {
        throw;
    } catch (const Error& e) {
        reject(text, e.what());
    }
    reject(text, "expected e<j>, fin:..., pow:... or geom:...");
}

} // namespace sobolev::cli
