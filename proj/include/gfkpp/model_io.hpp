#pragma once

#include "gfkpp/model.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gfkpp {

/// Flat `key = value` configuration. `[section]` headers prefix the keys that
/// follow them with `section.`; `#` starts a comment.
class KeyValueConfig {
public:
    static KeyValueConfig parse(std::string_view text);
    static KeyValueConfig load(const std::string& path);

    bool contains(const std::string& key) const { return values_.count(key) != 0; }
    std::optional<std::string> get(const std::string& key) const;
    std::optional<double> get_number(const std::string& key) const;
    void set(const std::string& key, std::string value) { values_[key] = std::move(value); }

    const std::map<std::string, std::string>& values() const noexcept { return values_; }

private:
    std::map<std::string, std::string> values_;
};

/// Locale-independent decimal parse of the whole string; throws ErrorCode::parse.
double parse_number(std::string_view text);
/// Comma- or whitespace-separated list of numbers.
std::vector<double> parse_number_list(std::string_view text);
/// Shortest decimal text that parses back to the same double.
std::string format_exact(double v);
/// `digits` significant digits, general notation, no locale. Integral values
/// keep a trailing ".0" and negative zero prints as 0.
std::string format_sig(double v, int digits);

/// Reads keys d1, d2, m1, m2, reaction.kind, reaction.k, reaction.p0, reaction.coeffs.
GfkppModel model_from_config(const KeyValueConfig& cfg);
std::string model_to_config(const GfkppModel& m);

}  // namespace gfkpp
