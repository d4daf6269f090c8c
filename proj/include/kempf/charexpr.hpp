#pragma once

// Character expression mini-language for the CLI:
//
//   std                     defining representation V(omega_1)
//   adj                     adjoint representation V(highest root)
//   irrep[a,b,...]          irreducible with highest weight sum a_i omega_i
//   ext(i, E)               i-th exterior power
//   sym(m, E)               m-th symmetric power
//   tensor(E1, E2)          tensor product (same ambient)
//   box(E1@A2, E2@A3, ...)  external tensor across a product group
//
// Expressions are evaluated against an ambient type; inside box(...) each
// argument carries its own ambient after '@'.

#include "kempf/character.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace kempf {

namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& text, const Ambient& amb) : text_(text), amb_(amb) {}

    Character parse() {
        Character c = expression(amb_);
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return c;
    }

private:
    Character expression(const Ambient& amb) {
        std::string head = identifier();
        if (head == "std" || head == "adj") {
            if (amb.factors().size() != 1)
                fail("'" + head + "' needs a simple type; use box(...) for products");
            const RootSystem& rs = amb.factors().front();
            return head == "std" ? standard_character(rs) : adjoint_character(rs);
        }
        if (head == "irrep") {
            expect('[');
            Vec coords;
            coords.push_back(Rat(integer()));
            while (peek() == ',') {
                ++pos_;
                coords.push_back(Rat(integer()));
            }
            expect(']');
            if (coords.size() != amb.rank()) fail("irrep coordinate count does not match rank of " + amb.name());
            return irreducible_character(amb, Weight(std::move(coords)));
        }
        if (head == "ext" || head == "sym") {
            expect('(');
            long k = integer();
            if (k < 0) fail("power index must be non-negative");
            expect(',');
            Character inner = expression(amb);
            expect(')');
            return head == "ext" ? exterior_char(inner, static_cast<std::size_t>(k))
                                 : sym_char(inner, static_cast<std::size_t>(k));
        }
        if (head == "tensor") {
            expect('(');
            Character a = expression(amb);
            expect(',');
            Character b = expression(amb);
            expect(')');
            return tensor_char(a, b);
        }
        if (head == "box") {
            expect('(');
            Character acc = box_argument();
            while (peek() == ',') {
                ++pos_;
                acc = external_tensor(acc, box_argument());
            }
            expect(')');
            return acc;
        }
        fail("unknown expression '" + head + "'");
    }

    Character box_argument() {
        // expression text up to the matching '@', then its ambient
        skip_ws();
        std::size_t start = pos_, depth = 0;
        while (pos_ < text_.size()) {
            char ch = text_[pos_];
            if (ch == '(' || ch == '[') ++depth;
            if (ch == ')' || ch == ']') --depth;
            if (ch == '@' && depth == 0) break;
            ++pos_;
        }
        if (pos_ >= text_.size()) fail("box argument needs '@type'");
        std::string sub = text_.substr(start, pos_ - start);
        ++pos_;  // '@'
        Ambient amb = parse_ambient(type_name());
        return ExprParser(sub, amb).parse();
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an identifier");
        return text_.substr(start, pos_ - start);
    }

    std::string type_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])))) ++pos_;
        if (start == pos_) fail("expected a type name after '@'");
        return text_.substr(start, pos_ - start);
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stol(text_.substr(start, pos_ - start));
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char ch) {
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("character expression: " + msg + " (at offset " + std::to_string(pos_) + ")");
    }

    const std::string& text_;
    Ambient amb_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Character parse_character_expression(const std::string& text, const Ambient& amb) {
    return detail::ExprParser(text, amb).parse();
}

}  // namespace kempf
