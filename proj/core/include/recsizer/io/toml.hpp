#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace recsizer::toml {

/// Minimal TOML subset used by the config format: tables, arrays of tables,
/// bare keys, strings, numbers, booleans and flat arrays. No dotted keys,
/// no inline tables, no multi-line strings.
struct Value {
    enum class Kind { String, Number, Boolean, Array, Table };
    Kind kind = Kind::Table;

    std::string str;
    double number = 0.0;
    bool boolean = false;
    std::vector<Value> array;
    std::map<std::string, Value> table;
    std::vector<std::string> key_order; // tables keep insertion order for writing

    bool has(const std::string& key) const { return table.count(key) != 0; }
    const Value& at(const std::string& key) const;
    const Value* find(const std::string& key) const;

    const std::string& as_string(const std::string& context) const;
    double as_number(const std::string& context) const;
    bool as_boolean(const std::string& context) const;
    int as_int(const std::string& context) const;

    void set(const std::string& key, Value v);
    static Value make_string(std::string s);
    static Value make_number(double v);
    static Value make_boolean(bool v);
    static Value make_array();
    static Value make_table();
};

Value parse(const std::string& text);
std::string write(const Value& root);

} // namespace recsizer::toml
