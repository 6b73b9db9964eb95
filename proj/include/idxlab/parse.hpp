#ifndef IDXLAB_PARSE_HPP
#define IDXLAB_PARSE_HPP

// Text-to-object layer: a recursive-descent parser for polynomial
// expressions (explicit '*' required, '^' with nonnegative integer
// exponents, unary minus, 'g' naming the extension generator) and readers
// for the JSON descriptors consumed by the command-line tool.

#include <cctype>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fields.hpp"
#include "model.hpp"
#include "poly.hpp"
#include "variety.hpp"

namespace idxlab {

using json = nlohmann::json;

namespace detail {

struct Token {
    enum Kind { End, Int, Ident, Plus, Minus, Star, Caret, LParen, RParen } kind = End;
    std::string text;
    std::uint64_t value = 0;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& tok() const { return t_; }

    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        t_ = Token{};
        t_.pos = i_;
        if (i_ >= s_.size()) return;
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            if (j - i_ > 9) fail(errc::parse_error, "integer literal too long at offset " + std::to_string(i_));
            t_.kind = Token::Int;
            t_.text = s_.substr(i_, j - i_);
            t_.value = std::stoull(t_.text);
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            t_.kind = Token::Ident;
            t_.text = s_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        switch (c) {
            case '+': t_.kind = Token::Plus; break;
            case '-': t_.kind = Token::Minus; break;
            case '*': t_.kind = Token::Star; break;
            case '^': t_.kind = Token::Caret; break;
            case '(': t_.kind = Token::LParen; break;
            case ')': t_.kind = Token::RParen; break;
            default:
                fail(errc::parse_error,
                     std::string("unexpected character '") + c + "' at offset " + std::to_string(i_));
        }
        t_.text = std::string(1, c);
        ++i_;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
    Token t_;
};

inline constexpr unsigned kMaxParsedExponent = 4096;

class PolyParser {
public:
    PolyParser(const std::string& src, const std::vector<std::string>& vars, FieldPtr field)
        : lex_(src), vars_(vars), field_(std::move(field)) {}

    Poly<Fq> parse() {
        Poly<Fq> p = expr();
        if (lex_.tok().kind != Token::End)
            fail(errc::parse_error, "unexpected '" + lex_.tok().text + "' at offset " +
                                        std::to_string(lex_.tok().pos) +
                                        " (products need an explicit '*')");
        return p;
    }

private:
    Poly<Fq> expr() {
        Poly<Fq> p = term();
        while (lex_.tok().kind == Token::Plus || lex_.tok().kind == Token::Minus) {
            bool minus = lex_.tok().kind == Token::Minus;
            lex_.advance();
            Poly<Fq> r = term();
            p = minus ? p - r : p + r;
        }
        return p;
    }

    Poly<Fq> term() {
        Poly<Fq> p = factor();
        while (lex_.tok().kind == Token::Star) {
            lex_.advance();
            p = p * factor();
        }
        return p;
    }

    Poly<Fq> factor() {
        Poly<Fq> p = atom();
        while (lex_.tok().kind == Token::Caret) {
            lex_.advance();
            if (lex_.tok().kind != Token::Int)
                fail(errc::parse_error,
                     "exponent must be a nonnegative integer at offset " + std::to_string(lex_.tok().pos));
            std::uint64_t e = lex_.tok().value;
            if (e > kMaxParsedExponent)
                fail(errc::parse_error, "exponent too large at offset " + std::to_string(lex_.tok().pos));
            lex_.advance();
            p = p.pow(static_cast<unsigned>(e));
        }
        return p;
    }

    Poly<Fq> atom() {
        const Token& t = lex_.tok();
        switch (t.kind) {
            case Token::Int: {
                Fq c = field_->from_int(static_cast<long long>(t.value));
                lex_.advance();
                return Poly<Fq>::constant(vars_, c);
            }
            case Token::Ident: {
                for (std::size_t i = 0; i < vars_.size(); ++i)
                    if (vars_[i] == t.text) {
                        lex_.advance();
                        return Poly<Fq>::variable(vars_, i, field_->one());
                    }
                if (t.text == "g" && !field_->is_prime_field()) {
                    lex_.advance();
                    return Poly<Fq>::constant(vars_, field_->generator());
                }
                fail(errc::parse_error,
                     "unknown identifier '" + t.text + "' at offset " + std::to_string(t.pos));
            }
            case Token::Minus: {
                lex_.advance();
                Poly<Fq> p = factor();
                return Poly<Fq>::constant(vars_, field_->zero()) - p;
            }
            case Token::LParen: {
                lex_.advance();
                Poly<Fq> p = expr();
                if (lex_.tok().kind != Token::RParen)
                    fail(errc::parse_error, "expected ')' at offset " + std::to_string(lex_.tok().pos));
                lex_.advance();
                return p;
            }
            default:
                fail(errc::parse_error,
                     "expected a value at offset " + std::to_string(t.pos));
        }
    }

    Lexer lex_;
    std::vector<std::string> vars_;
    FieldPtr field_;
};

inline bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace detail

inline Poly<Fq> parse_poly(const std::string& src, const std::vector<std::string>& vars,
                           const FieldPtr& field) {
    return detail::PolyParser(src, vars, field).parse();
}

// a variable-free expression: "2", "g+1", "-1"
inline Fq parse_element(const std::string& src, const FieldPtr& field) {
    Poly<Fq> p = parse_poly(src, {}, field);
    return p.is_zero() ? field->zero() : p.eval({});
}

// --- JSON descriptors -------------------------------------------------------

inline constexpr const char* kSchemaName = "idxlab/1";

namespace detail {

inline const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(errc::schema_error, std::string("missing key '") + key + "'");
    return *it;
}

inline std::string need_str(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_string()) fail(errc::schema_error, std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

inline std::uint64_t need_uint(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_unsigned()) fail(errc::schema_error, std::string("key '") + key + "' must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

inline const json& need_array(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_array()) fail(errc::schema_error, std::string("key '") + key + "' must be an array");
    return v;
}

// "kind" is optional: the subcommand (or shape dispatch) fixes the target
// type, and an explicit tag must then agree
inline void check_kind(const json& j, const char* kind) {
    if (!j.is_object()) fail(errc::schema_error, "descriptor must be a JSON object");
    if (j.contains("schema") && j["schema"] != kSchemaName)
        fail(errc::schema_error, std::string("schema must be '") + kSchemaName + "'");
    if (j.contains("kind") && need_str(j, "kind") != kind)
        fail(errc::schema_error, std::string("descriptor kind must be '") + kind + "'");
}

inline std::vector<std::string> parse_vars(const json& j, const char* key = "vars") {
    std::vector<std::string> vars;
    for (const auto& v : need_array(j, key)) {
        if (!v.is_string() || !valid_identifier(v.get<std::string>()))
            fail(errc::schema_error, "variable names must be identifiers");
        std::string name = v.get<std::string>();
        if (name == "g") fail(errc::schema_error, "'g' is reserved for the field generator");
        for (const auto& seen : vars)
            if (seen == name) fail(errc::schema_error, "duplicate variable '" + name + "'");
        vars.push_back(std::move(name));
    }
    if (vars.empty()) fail(errc::schema_error, "variable list is empty");
    return vars;
}

} // namespace detail

inline FieldPtr parse_field(const json& j) {
    if (!j.is_object()) fail(errc::schema_error, "field descriptor must be an object");
    std::uint64_t p = detail::need_uint(j, "p");
    std::uint64_t k = j.contains("k") ? detail::need_uint(j, "k") : 1;
    FieldPtr base = make_prime_field(p);
    if (k == 1) return base;
    if (k > kMaxExtensionDegree) fail(errc::degree_too_large, "extension degree out of range");
    return make_extension(base, static_cast<unsigned>(k));
}

inline Variety parse_variety(const json& j) {
    detail::check_kind(j, "variety");
    Variety v;
    v.field = parse_field(detail::need(j, "field"));
    if (j.contains("ambient")) {
        std::string a = detail::need_str(j, "ambient");
        if (a != "affine" && a != "projective")
            fail(errc::schema_error, "ambient must be 'affine' or 'projective'");
        v.projective = a == "projective";
    } else if (j.contains("projective") && j["projective"].is_boolean()) {
        v.projective = j["projective"].get<bool>();
    } else {
        fail(errc::schema_error, "need 'ambient' (\"affine\"|\"projective\") or boolean 'projective'");
    }
    v.vars = detail::parse_vars(j);
    for (const auto& s : detail::need_array(j, "ideal")) {
        if (!s.is_string()) fail(errc::schema_error, "ideal entries must be strings");
        v.ideal.push_back(parse_poly(s.get<std::string>(), v.vars, v.field));
    }
    if (j.contains("codim")) v.declared_codim = static_cast<int>(detail::need_uint(j, "codim"));
    validate_variety(v);
    return v;
}

inline LocalRingSpec parse_local(const json& j) {
    detail::check_kind(j, "local");
    LocalRingSpec s;
    s.field = parse_field(detail::need(j, "field"));
    s.vars = detail::parse_vars(j);
    for (const auto& g : detail::need_array(j, "ideal")) {
        if (!g.is_string()) fail(errc::schema_error, "ideal entries must be strings");
        s.ideal.push_back(parse_poly(g.get<std::string>(), s.vars, s.field));
    }
    if (j.contains("dim")) s.declared_dim = static_cast<int>(detail::need_uint(j, "dim"));
    validate_local(s);
    return s;
}

inline std::pair<FieldPtr, Poly<Fq>> parse_germ(const json& j) {
    detail::check_kind(j, "germ");
    FieldPtr f = parse_field(detail::need(j, "field"));
    auto vars = detail::parse_vars(j);
    if (vars.size() != 2) fail(errc::schema_error, "germ descriptors need exactly two variables");
    return {f, parse_poly(detail::need_str(j, "f"), vars, f)};
}

inline Model parse_model(const json& j) {
    detail::check_kind(j, "model");
    Model m;
    m.field = parse_field(detail::need(j, "field"));
    m.fiber_vars = detail::parse_vars(j);
    if (m.fiber_vars.size() != 2) fail(errc::schema_error, "model descriptors need two fiber variables");
    m.param = j.contains("param") ? detail::need_str(j, "param") : "t";
    if (!detail::valid_identifier(m.param) || m.param == "g")
        fail(errc::schema_error, "parameter name must be an identifier other than 'g'");
    for (const auto& v : m.fiber_vars)
        if (v == m.param) fail(errc::schema_error, "parameter clashes with a fiber variable");
    std::vector<std::string> vars3 = m.fiber_vars;
    vars3.push_back(m.param);
    m.f = parse_poly(detail::need_str(j, "f"), vars3, m.field);
    for (const auto& c : detail::need_array(j, "components")) {
        if (!c.is_object()) fail(errc::schema_error, "components must be objects");
        ModelComponent mc;
        mc.g = parse_poly(detail::need_str(c, "g"), m.fiber_vars, m.field);
        mc.r = static_cast<long long>(detail::need_uint(c, "r"));
        m.components.push_back(std::move(mc));
    }
    validate_model(m); // irreducibility warnings are re-collected by callers that report them
    return m;
}

using Descriptor = std::variant<Variety, Model, LocalRingSpec>;

// shape dispatch for untagged descriptors: a model carries "components",
// a variety names its ambient space, a local ring has neither
inline Descriptor parse_descriptor(const json& j) {
    if (!j.is_object()) fail(errc::schema_error, "descriptor must be a JSON object");
    std::string kind;
    if (j.contains("kind")) kind = detail::need_str(j, "kind");
    else if (j.contains("components")) kind = "model";
    else if (j.contains("ambient") || j.contains("projective")) kind = "variety";
    else if (j.contains("ideal")) kind = "local";
    if (kind == "model") return parse_model(j);
    if (kind == "variety") return parse_variety(j);
    if (kind == "local") return parse_local(j);
    fail(errc::schema_error, "descriptor shape matches no known kind");
}

// coordinates over an extension of the descriptor's base field
inline std::vector<Fq> parse_point(const json& j, const FieldPtr& base) {
    if (!j.is_array()) fail(errc::schema_error, "a point is an array of coordinate strings");
    std::vector<Fq> pt;
    for (const auto& c : j) {
        if (!c.is_string()) fail(errc::schema_error, "point coordinates must be strings");
        pt.push_back(parse_element(c.get<std::string>(), base));
    }
    return pt;
}

} // namespace idxlab

#endif
