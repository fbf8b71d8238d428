#pragma once
//
// TOML-style key = value files and the small arithmetic expressions they carry.
//
// Supported values: bare tokens (numbers or expressions), "quoted strings",
// and one-line [a, b, c] arrays of either. '#' starts a comment outside quotes.
// Expressions: + - * / ^, parentheses, unary minus, numbers, and names bound
// by the caller (pi is always bound).
//

#include <map>
#include <string>
#include <vector>

namespace dlra {

struct ConfigValue
{
    std::vector<std::string> items;  ///< one entry for a scalar
    bool                     is_array = false;
    int                      line     = 0;
};

class KeyValueConfig
{
public:
    static KeyValueConfig parse(const std::string& text, const std::string& source = "<config>");
    static KeyValueConfig load(const std::string& path);

    bool has(const std::string& key) const { return m_values.count(key) != 0; }

    /// scalar text; throws ConfigError if missing or an array
    std::string get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    std::vector<std::string> get_list(const std::string& key) const;

    int line_of(const std::string& key) const;
    const std::string& source() const { return m_source; }

    /// keys that were never read through get / get_or / get_list
    std::vector<std::string> unused_keys() const;

    void set(const std::string& key, const std::string& value);

private:
    std::map<std::string, ConfigValue> m_values;
    mutable std::map<std::string, bool> m_used;
    std::string m_source;
};

/// Evaluate an arithmetic expression; throws ConfigError on syntax errors,
/// unknown names or non-finite results.
double evaluate_expression(const std::string& expr,
                           const std::map<std::string, double>& names = {});

}  // namespace dlra
