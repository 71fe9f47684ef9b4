#pragma once

#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace conescale {

/// Insertion-ordered JSON value with deterministic serialization: doubles
/// are printed with 17 significant digits (round-trip exact), so identical
/// inputs yield byte-identical output.
class JsonValue {
public:
    JsonValue() : v_(nullptr) {}
    JsonValue(std::nullptr_t) : v_(nullptr) {}
    JsonValue(bool b) : v_(b) {}
    JsonValue(double d) : v_(d) {}
    JsonValue(int i) : v_(static_cast<long long>(i)) {}
    JsonValue(long long i) : v_(i) {}
    JsonValue(unsigned long long i) : v_(static_cast<long long>(i)) {}
    JsonValue(const char* s) : v_(std::string(s)) {}
    JsonValue(std::string s) : v_(std::move(s)) {}

    static JsonValue array() {
        JsonValue v;
        v.v_ = Array{};
        return v;
    }

    static JsonValue object() {
        JsonValue v;
        v.v_ = Object{};
        return v;
    }

    JsonValue& push(JsonValue item) {
        std::get<Array>(v_).push_back(std::move(item));
        return *this;
    }

    JsonValue& set(std::string key, JsonValue value) {
        std::get<Object>(v_).emplace_back(std::move(key), std::move(value));
        return *this;
    }

    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

    static std::string format_double(double d);

private:
    using Array = std::vector<JsonValue>;
    using Object = std::vector<std::pair<std::string, JsonValue>>;

    void write(std::string& out) const;
    static void write_string(std::string& out, const std::string& s);

    std::variant<std::nullptr_t, bool, long long, double, std::string, Array, Object> v_;
};

inline std::string JsonValue::format_double(double d) {
    if (d != d) return "null";  // NaN has no JSON representation
    if (d > 1.7976931348623157e308) return "null";
    if (d < -1.7976931348623157e308) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    std::string s = buf;
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

inline void JsonValue::write_string(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

inline void JsonValue::write(std::string& out) const {
    struct Visitor {
        std::string& out;
        void operator()(std::nullptr_t) const { out += "null"; }
        void operator()(bool b) const { out += b ? "true" : "false"; }
        void operator()(long long i) const { out += std::to_string(i); }
        void operator()(double d) const { out += format_double(d); }
        void operator()(const std::string& s) const { write_string(out, s); }
        void operator()(const Array& a) const {
            out += '[';
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (i) out += ',';
                a[i].write(out);
            }
            out += ']';
        }
        void operator()(const Object& o) const {
            out += '{';
            for (std::size_t i = 0; i < o.size(); ++i) {
                if (i) out += ',';
                write_string(out, o[i].first);
                out += ':';
                o[i].second.write(out);
            }
            out += '}';
        }
    };
    std::visit(Visitor{out}, v_);
}

}  // namespace conescale
