#include "sobolev/cli/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "sobolev/errors.hpp"

namespace sobolev::cli {

namespace {

struct Value {
    enum class Kind { Number, String, Array } kind = Kind::Number;
    std::string raw;
    double number = 0.0;
    std::string text;
    std::vector<double> array;
};

struct Entry {
    Value value;
    int line = 0;
};

struct Section {
    int line = 0;
    std::map<std::string, Entry> entries;
};

const std::map<std::string, std::set<std::string>>& known_keys()
{
    static const std::map<std::string, std::set<std::string>> keys{
        {"spectrum", {"kind", "a", "p", "b", "re", "im"}},
        {"numerics", {"truncation", "tolerance", "n_min", "n_max", "seed", "rescale", "rescale_im"}},
        {"grids", {"t", "h"}},
    };
    return keys;
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

class Parser {
public:
    explicit Parser(std::string_view source) : source_(source) {}

    [[noreturn]] void fail(int line, const std::string& message) const
    {
        std::ostringstream os;
        os << source_;
        if (line > 0) {
            os << ":" << line;
        }
        os << ": " << message;
        throw ConfigurationError(os.str());
    }

    std::map<std::string, Section> parse(std::string_view text)
    {
        std::map<std::string, Section> sections;
        Section* current = nullptr;
        std::string current_name;
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t end = std::min(text.find('\n', pos), text.size());
            std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            line = trim(strip_comment(line, line_no));
            if (line.empty()) {
                continue;
            }
            if (line.front() == '[') {
                if (line.back() != ']') {
                    fail(line_no, "malformed section header '" + std::string(line) + "'");
                }
                current_name = std::string(trim(line.substr(1, line.size() - 2)));
                if (!known_keys().contains(current_name)) {
                    fail(line_no, "unknown section [" + current_name + "]");
                }
                if (sections.contains(current_name)) {
                    fail(line_no, "duplicate section [" + current_name + "]");
                }
                current = &sections[current_name];
                current->line = line_no;
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string_view::npos) {
                fail(line_no, "expected 'key = value', got '" + std::string(line) + "'");
            }
            const std::string key(trim(line.substr(0, eq)));
            if (!valid_key(key)) {
                fail(line_no, "malformed key '" + key + "'");
            }
            if (current == nullptr) {
                fail(line_no, "key '" + key + "' appears before any section");
            }
            if (!known_keys().at(current_name).contains(key)) {
                fail(line_no, "unknown key '" + key + "' in [" + current_name + "]");
            }
            if (current->entries.contains(key)) {
                fail(line_no, "duplicate key '" + key + "' in [" + current_name + "]");
            }
            current->entries[key] = Entry{parse_value(trim(line.substr(eq + 1)), key, line_no), line_no};
        }
        return sections;
    }

private:
    std::string_view strip_comment(std::string_view line, int line_no) const
    {
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') {
                quoted = !quoted;
            } else if (line[i] == '#' && !quoted) {
                return line.substr(0, i);
            }
        }
        if (quoted) {
            fail(line_no, "unterminated string");
        }
        return line;
    }

    static bool valid_key(const std::string& key)
    {
        if (key.empty() || std::isdigit(static_cast<unsigned char>(key.front()))) {
            return false;
        }
        for (const char ch : key) {
            if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
                return false;
            }
        }
        return true;
    }

    double parse_number(std::string_view token, const std::string& key, int line_no) const
    {
        token = trim(token);
        if (!token.empty() && token.front() == '+') {
            token.remove_prefix(1);
        }
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(v)) {
            fail(line_no, "key '" + key + "': '" + std::string(token) + "' is not a finite number");
        }
        return v;
    }

    Value parse_value(std::string_view token, const std::string& key, int line_no) const
    {
        Value v;
        v.raw = std::string(token);
        if (token.empty()) {
            fail(line_no, "key '" + key + "' has no value");
        }
        if (token.front() == '"') {
            if (token.size() < 2 || token.back() != '"' || token.substr(1, token.size() - 2).find('"') != std::string_view::npos) {
                fail(line_no, "key '" + key + "': malformed string");
            }
            v.kind = Value::Kind::String;
            v.text = std::string(token.substr(1, token.size() - 2));
            return v;
        }
        if (token.front() == '[') {
            if (token.back() != ']') {
                fail(line_no, "key '" + key + "': arrays must close on the same line");
            }
            v.kind = Value::Kind::Array;
            std::string_view body = trim(token.substr(1, token.size() - 2));
            while (!body.empty()) {
                const auto comma = body.find(',');
                v.array.push_back(parse_number(body.substr(0, comma), key, line_no));
                if (comma == std::string_view::npos) {
                    break;
                }
                body = trim(body.substr(comma + 1));
            }
            return v;
        }
        v.number = parse_number(token, key, line_no);
        return v;
    }

    std::string_view source_;
};

class Reader {
public:
    Reader(const Parser& parser, const std::map<std::string, Section>& sections) : parser_(parser), sections_(sections)
    {
    }

    const Entry* find(const std::string& section, const std::string& key) const
    {
        const auto s = sections_.find(section);
        if (s == sections_.end()) {
            return nullptr;
        }
        const auto e = s->second.entries.find(key);
        return e == s->second.entries.end() ? nullptr : &e->second;
    }

    double number(const Entry& e, const std::string& key) const
    {
        if (e.value.kind != Value::Kind::Number) {
            parser_.fail(e.line, "key '" + key + "' must be a number");
        }
        return e.value.number;
    }

    long long integer(const Entry& e, const std::string& key) const
    {
        const std::string& raw = e.value.raw;
        long long v = 0;
        const char* begin = raw.data() + (raw.starts_with('+') ? 1 : 0);
        const auto [ptr, ec] = std::from_chars(begin, raw.data() + raw.size(), v);
        if (e.value.kind != Value::Kind::Number || ec != std::errc{} || ptr != raw.data() + raw.size()) {
            parser_.fail(e.line, "key '" + key + "' must be an integer");
        }
        return v;
    }

    std::uint64_t unsigned_integer(const Entry& e, const std::string& key) const
    {
        const std::string& raw = e.value.raw;
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
        if (e.value.kind != Value::Kind::Number || ec != std::errc{} || ptr != raw.data() + raw.size()) {
            parser_.fail(e.line, "key '" + key + "' must be an unsigned integer");
        }
        return v;
    }

    const std::vector<double>& array(const Entry& e, const std::string& key) const
    {
        if (e.value.kind != Value::Kind::Array) {
            parser_.fail(e.line, "key '" + key + "' must be an array of numbers");
        }
        return e.value.array;
    }

    const std::string& string(const Entry& e, const std::string& key) const
    {
        if (e.value.kind != Value::Kind::String) {
            parser_.fail(e.line, "key '" + key + "' must be a quoted string");
        }
        return e.value.text;
    }

private:
    const Parser& parser_;
    const std::map<std::string, Section>& sections_;
};

SpectrumSpec read_spectrum(const Parser& parser, const Reader& r, const Section& section)
{
    const Entry* kind_entry = r.find("spectrum", "kind");
    if (kind_entry == nullptr) {
        parser.fail(section.line, "[spectrum] needs key 'kind'");
    }
    const std::string& kind = r.string(*kind_entry, "kind");
    const auto forbid = [&](std::initializer_list<const char*> keys) {
        for (const char* key : keys) {
            if (const Entry* e = r.find("spectrum", key)) {
                parser.fail(e->line, "key '" + std::string(key) + "' does not apply to kind \"" + kind + "\"");
            }
        }
    };
    try {
        if (kind == "power_law") {
            forbid({"re", "im"});
            const Entry* a = r.find("spectrum", "a");
            const Entry* p = r.find("spectrum", "p");
            const Entry* b = r.find("spectrum", "b");
            if (a == nullptr || p == nullptr) {
                parser.fail(section.line, std::string("power_law spectrum needs key '") + (a ? "p" : "a") + "'");
            }
            const double av = r.number(*a, "a");
            const double pv = r.number(*p, "p");
            const double bv = b ? r.number(*b, "b") : 0.0;
            if (!(av > 0.0)) {
                parser.fail(a->line, "key 'a' must be positive (Re q_j = -a j^p < 0)");
            }
            if (!(pv >= 0.0)) {
                parser.fail(p->line, "key 'p' must be nonnegative");
            }
            if (std::hypot(av, bv) < 1.0) {
                std::ostringstream os;
                os.precision(17);
                os << "keys 'a', 'b': |q_1| = sqrt(a^2 + b^2) = " << std::hypot(av, bv) << " < 1";
                parser.fail(a->line, os.str());
            }
            return SpectrumSpec::power_law(av, pv, bv);
        }
        if (kind == "explicit") {
            forbid({"a", "p", "b"});
            const Entry* re = r.find("spectrum", "re");
            if (re == nullptr) {
                parser.fail(section.line, "explicit spectrum needs key 're'");
            }
            const auto& re_values = r.array(*re, "re");
            std::vector<double> im_values(re_values.size(), 0.0);
            if (const Entry* im = r.find("spectrum", "im")) {
                im_values = r.array(*im, "im");
                if (im_values.size() != re_values.size()) {
                    parser.fail(im->line, "keys 're' and 'im' must have the same length");
                }
            }
            std::vector<Complex> values;
            for (std::size_t i = 0; i < re_values.size(); ++i) {
                values.emplace_back(re_values[i], im_values[i]);
            }
            return SpectrumSpec::explicit_values(std::move(values));
        }
    } catch (const ContractViolation& e) {
        parser.fail(section.line, std::string("invalid [spectrum]: ") + e.what());
    }
    parser.fail(kind_entry->line, "key 'kind' must be \"power_law\" or \"explicit\", got \"" + kind + "\"");
}

} // namespace

RunConfig parse_config_text(std::string_view text, std::string_view source)
{
    Parser parser(source);
    const auto sections = parser.parse(text);
    const Reader r(parser, sections);
    const auto spectrum_section = sections.find("spectrum");
    if (spectrum_section == sections.end()) {
        parser.fail(0, "missing section [spectrum]");
    }
    RunConfig config{read_spectrum(parser, r, spectrum_section->second)};

    if (const Entry* e = r.find("numerics", "truncation")) {
        const long long v = r.integer(*e, "truncation");
        if (v < 1) {
            parser.fail(e->line, "key 'truncation' must be a positive integer");
        }
        config.control.truncation = static_cast<std::size_t>(v);
    }
    if (const Entry* e = r.find("numerics", "tolerance")) {
        config.control.tolerance = r.number(*e, "tolerance");
        if (!(config.control.tolerance > 0.0)) {
            parser.fail(e->line, "key 'tolerance' must be positive");
        }
    }
    if (const Entry* e = r.find("numerics", "n_min")) {
        const long long v = r.integer(*e, "n_min");
        if (v > 0 || v < -1000) {
            parser.fail(e->line, "key 'n_min' must lie in [-1000, 0]");
        }
        config.levels.min = static_cast<int>(v);
    }
    if (const Entry* e = r.find("numerics", "n_max")) {
        const long long v = r.integer(*e, "n_max");
        if (v < 0 || v > 1000) {
            parser.fail(e->line, "key 'n_max' must lie in [0, 1000]");
        }
        config.levels.max = static_cast<int>(v);
    }
    if (const Entry* e = r.find("numerics", "seed")) {
        config.seed = r.unsigned_integer(*e, "seed");
    }
    if (const Entry* e = r.find("numerics", "rescale")) {
        config.rescale.real(r.number(*e, "rescale"));
    }
    if (const Entry* e = r.find("numerics", "rescale_im")) {
        config.rescale.imag(r.number(*e, "rescale_im"));
    }
    if (const Entry* e = r.find("grids", "t")) {
        config.t_grid = r.array(*e, "t");
        if (config.t_grid.empty()) {
            parser.fail(e->line, "key 't' must not be empty");
        }
        for (const double t : config.t_grid) {
            if (t < 0.0) {
                parser.fail(e->line, "key 't' must contain only nonnegative times");
            }
        }
    }
    if (const Entry* e = r.find("grids", "h")) {
        config.h_grid = r.array(*e, "h");
        if (config.h_grid.empty()) {
            parser.fail(e->line, "key 'h' must not be empty");
        }
        for (std::size_t i = 0; i < config.h_grid.size(); ++i) {
            if (!(config.h_grid[i] > 0.0) || (i > 0 && config.h_grid[i] >= config.h_grid[i - 1])) {
                parser.fail(e->line, "key 'h' must be positive and strictly decreasing");
            }
        }
    }
    return config;
}

RunConfig parse_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigurationError("cannot read config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path.string());
}

} // namespace sobolev::cli
