#include "gfkpp/model_io.hpp"

#include "gfkpp/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace gfkpp {

namespace {

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

double parse_number(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc() || ptr != last)
        fail(ErrorCode::parse, "not a number: '" + std::string(text) + "'");
    return v;
}

std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> out;
    std::string token;
    auto flush = [&] {
        if (!trim(token).empty()) out.push_back(parse_number(token));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\t') flush();
        else token.push_back(ch);
    }
    flush();
    return out;
}

std::string format_exact(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string format_sig(double v, int digits) {
    if (v == 0.0) v = 0.0;
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, digits);
    std::string s(buf.data(), ptr);
    if (std::isfinite(v) && s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

KeyValueConfig KeyValueConfig::parse(std::string_view text) {
    KeyValueConfig cfg;
    std::string section;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": expected key = value");
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": empty key");
        std::string full = section.empty() ? std::string(key) : section + "." + std::string(key);
        cfg.values_[full] = std::string(trim(line.substr(eq + 1)));
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io, "cannot open config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

std::optional<double> KeyValueConfig::get_number(const std::string& key) const {
    const auto v = get(key);
    if (!v) return std::nullopt;
    return parse_number(*v);
}

GfkppModel model_from_config(const KeyValueConfig& cfg) {
    auto num = [&](const char* key, double fallback) { return cfg.get_number(key).value_or(fallback); };
    const std::string kind = cfg.get("reaction.kind").value_or("quadratic");

    ReactionFn f = [&] {
        if (kind == "quadratic") return ReactionFn::quadratic(num("reaction.k", 1.0));
        if (kind == "cubic") {
            const auto p0 = cfg.get_number("reaction.p0");
            if (!p0) fail(ErrorCode::parse, "reaction.kind = cubic requires reaction.p0");
            return ReactionFn::cubic(num("reaction.k", 1.0), *p0);
        }
        if (kind == "polynomial") {
            const auto coeffs = cfg.get("reaction.coeffs");
            if (!coeffs) fail(ErrorCode::parse, "reaction.kind = polynomial requires reaction.coeffs");
            return ReactionFn::polynomial(parse_number_list(*coeffs));
        }
        fail(ErrorCode::parse, "unknown reaction.kind '" + kind + "'");
    }();
    return make_model(num("d1", 1.0), num("d2", 1.0), num("m1", 0.0), num("m2", 0.0), std::move(f));
}

std::string model_to_config(const GfkppModel& m) {
    std::ostringstream os;
    os << "d1 = " << format_exact(m.d1) << '\n'
       << "d2 = " << format_exact(m.d2) << '\n'
       << "m1 = " << format_exact(m.m1) << '\n'
       << "m2 = " << format_exact(m.m2) << '\n'
       << "reaction.kind = " << to_string(m.reaction.kind()) << '\n';
    switch (m.reaction.kind()) {
        case ReactionKind::cubic:
            os << "reaction.p0 = " << format_exact(m.reaction.p0()) << '\n';
            [[fallthrough]];
        case ReactionKind::quadratic:
            os << "reaction.k = " << format_exact(m.reaction.k()) << '\n';
            break;
        case ReactionKind::polynomial: {
            os << "reaction.coeffs = ";
            const auto& c = m.reaction.poly().coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << format_exact(c[i]);
            os << '\n';
            break;
        }
    }
    return os.str();
}

}  // namespace gfkpp
