#include "recsizer/io/toml.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "recsizer/errors.hpp"

namespace recsizer::toml {

const Value& Value::at(const std::string& key) const {
    const auto it = table.find(key);
    if (it == table.end()) throw ParseError("missing key: " + key);
    return it->second;
}

const Value* Value::find(const std::string& key) const {
    const auto it = table.find(key);
    return it == table.end() ? nullptr : &it->second;
}

const std::string& Value::as_string(const std::string& context) const {
    if (kind != Kind::String) throw ParseError(context + ": expected a string");
    return str;
}

double Value::as_number(const std::string& context) const {
    if (kind != Kind::Number) throw ParseError(context + ": expected a number");
    return number;
}

bool Value::as_boolean(const std::string& context) const {
    if (kind != Kind::Boolean) throw ParseError(context + ": expected a boolean");
    return boolean;
}

int Value::as_int(const std::string& context) const {
    const double v = as_number(context);
    if (v != std::floor(v)) throw ParseError(context + ": expected an integer");
    return static_cast<int>(v);
}

void Value::set(const std::string& key, Value v) {
    if (table.find(key) == table.end()) key_order.push_back(key);
    table[key] = std::move(v);
}

Value Value::make_string(std::string s) {
    Value v;
    v.kind = Kind::String;
    v.str = std::move(s);
    return v;
}
Value Value::make_number(double x) {
    Value v;
    v.kind = Kind::Number;
    v.number = x;
    return v;
}
Value Value::make_boolean(bool b) {
    Value v;
    v.kind = Kind::Boolean;
    v.boolean = b;
    return v;
}
Value Value::make_array() {
    Value v;
    v.kind = Kind::Array;
    return v;
}
Value Value::make_table() {
    Value v;
    v.kind = Kind::Table;
    return v;
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Removes a trailing comment that is not inside a string literal.
std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_string = !in_string;
        if (line[i] == '#' && !in_string) return line.substr(0, i);
    }
    return line;
}

bool valid_bare_key(const std::string& key) {
    if (key.empty()) return false;
    for (char c : key)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
    return true;
}

Value parse_scalar(const std::string& text, int lineno) {
    const std::string t = strip(text);
    if (t.empty()) throw ParseError("toml line " + std::to_string(lineno) + ": empty value");
    if (t.front() == '"') {
        if (t.size() < 2 || t.back() != '"')
            throw ParseError("toml line " + std::to_string(lineno) + ": unterminated string");
        std::string out;
        for (std::size_t i = 1; i + 1 < t.size(); ++i) {
            if (t[i] == '\\' && i + 2 < t.size()) {
                ++i;
                switch (t[i]) {
                    case 'n': out.push_back('\n'); break;
                    case 't': out.push_back('\t'); break;
                    case '"': out.push_back('"'); break;
                    case '\\': out.push_back('\\'); break;
                    default:
                        throw ParseError("toml line " + std::to_string(lineno) +
                                         ": unsupported escape");
                }
            } else {
                out.push_back(t[i]);
            }
        }
        return Value::make_string(out);
    }
    if (t == "true") return Value::make_boolean(true);
    if (t == "false") return Value::make_boolean(false);
    try {
        std::size_t used = 0;
        const double v = std::stod(t, &used);
        if (used == t.size()) return Value::make_number(v);
    } catch (const std::exception&) {
    }
    throw ParseError("toml line " + std::to_string(lineno) + ": cannot parse value '" + t + "'");
}

Value parse_value(const std::string& text, int lineno) {
    const std::string t = strip(text);
    if (!t.empty() && t.front() == '[') {
        if (t.back() != ']')
            throw ParseError("toml line " + std::to_string(lineno) + ": unterminated array");
        Value arr = Value::make_array();
        std::string inner = t.substr(1, t.size() - 2);
        // Split on commas outside strings.
        std::vector<std::string> items;
        std::string cur;
        bool in_string = false;
        for (char c : inner) {
            if (c == '"') in_string = !in_string;
            if (c == ',' && !in_string) {
                items.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!strip(cur).empty()) items.push_back(cur);
        for (const std::string& item : items) arr.array.push_back(parse_scalar(item, lineno));
        return arr;
    }
    return parse_scalar(text, lineno);
}

} // namespace

Value parse(const std::string& text) {
    Value root = Value::make_table();
    Value* current = &root;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip(strip_comment(raw));
        if (line.empty()) continue;

        if (line.front() == '[') {
            const bool array_of_tables = line.size() > 1 && line[1] == '[';
            const std::size_t close = line.find(array_of_tables ? "]]" : "]");
            if (close == std::string::npos)
                throw ParseError("toml line " + std::to_string(lineno) + ": bad table header");
            const std::string name = strip(line.substr(array_of_tables ? 2 : 1,
                                                       close - (array_of_tables ? 2 : 1)));
            if (!valid_bare_key(name))
                throw ParseError("toml line " + std::to_string(lineno) + ": bad table name '" +
                                 name + "'");
            if (array_of_tables) {
                if (!root.has(name)) root.set(name, Value::make_array());
                Value& arr = root.table[name];
                if (arr.kind != Value::Kind::Array)
                    throw ParseError("toml line " + std::to_string(lineno) + ": '" + name +
                                     "' is not an array of tables");
                arr.array.push_back(Value::make_table());
                current = &arr.array.back();
            } else {
                if (root.has(name))
                    throw ParseError("toml line " + std::to_string(lineno) +
                                     ": duplicate table '" + name + "'");
                root.set(name, Value::make_table());
                current = &root.table[name];
            }
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("toml line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = strip(line.substr(0, eq));
        if (!valid_bare_key(key))
            throw ParseError("toml line " + std::to_string(lineno) + ": bad key '" + key + "'");
        if (current->has(key))
            throw ParseError("toml line " + std::to_string(lineno) + ": duplicate key '" + key +
                             "'");
        current->set(key, parse_value(line.substr(eq + 1), lineno));
    }
    return root;
}

namespace {

void write_scalar(std::ostringstream& os, const Value& v) {
    switch (v.kind) {
        case Value::Kind::String: {
            os << '"';
            for (char c : v.str) {
                if (c == '"' || c == '\\') os << '\\';
                os << c;
            }
            os << '"';
            break;
        }
        case Value::Kind::Number: {
            char buf[32];
            if (v.number == std::floor(v.number) && std::abs(v.number) < 1e15)
                std::snprintf(buf, sizeof buf, "%.1f", v.number);
            else
                std::snprintf(buf, sizeof buf, "%.17g", v.number);
            os << buf;
            break;
        }
        case Value::Kind::Boolean: os << (v.boolean ? "true" : "false"); break;
        default: throw StructureError("toml write: nested structure where scalar expected");
    }
}

void write_pairs(std::ostringstream& os, const Value& table) {
    for (const std::string& key : table.key_order) {
        const Value& v = table.table.at(key);
        if (v.kind == Value::Kind::Table || (v.kind == Value::Kind::Array && !v.array.empty() &&
                                             v.array.front().kind == Value::Kind::Table))
            continue; // nested tables handled by the caller
        os << key << " = ";
        if (v.kind == Value::Kind::Array) {
            os << '[';
            for (std::size_t i = 0; i < v.array.size(); ++i) {
                if (i) os << ", ";
                write_scalar(os, v.array[i]);
            }
            os << ']';
        } else {
            write_scalar(os, v);
        }
        os << "\n";
    }
}

} // namespace

std::string write(const Value& root) {
    if (root.kind != Value::Kind::Table) throw StructureError("toml write: root must be a table");
    std::ostringstream os;
    write_pairs(os, root);
    for (const std::string& key : root.key_order) {
        const Value& v = root.table.at(key);
        if (v.kind == Value::Kind::Table) {
            os << "\n[" << key << "]\n";
            write_pairs(os, v);
        } else if (v.kind == Value::Kind::Array && !v.array.empty() &&
                   v.array.front().kind == Value::Kind::Table) {
            for (const Value& item : v.array) {
                os << "\n[[" << key << "]]\n";
                write_pairs(os, item);
            }
        }
    }
    return os.str();
}

} // namespace recsizer::toml
