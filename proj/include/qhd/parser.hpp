#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "qhd/ratfunc.hpp"

namespace qhd {

// Pratt parser for the expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' integer)*
//   atom   := integer | symbol | '(' expr ')'
// Integers are arbitrary precision; exponents must be nonnegative integer
// literals; symbols must be declared up front.
class ExprParser {
  public:
    ExprParser(const std::string& text, const std::vector<Symbol>& params) : text_(text) {
        for (Symbol s : params) params_.emplace(s.name(), s);
    }

    RatFunc parse() {
        skip_ws();
        RatFunc v = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error(pos_, "unexpected trailing input");
        return v;
    }

  private:
    RatFunc parse_expr() {
        RatFunc v = parse_term();
        while (true) {
            skip_ws();
            if (accept('+'))
                v += parse_term();
            else if (accept('-'))
                v -= parse_term();
            else
                return v;
        }
    }

    RatFunc parse_term() {
        RatFunc v = parse_factor();
        while (true) {
            skip_ws();
            if (accept('*')) {
                v *= parse_factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RatFunc d = parse_factor();
                if (d.is_zero())
                    throw parse_error(at, "division by identically zero subexpression");
                v /= d;
            } else {
                return v;
            }
        }
    }

    RatFunc parse_factor() {
        skip_ws();
        if (accept('-')) return -parse_factor();
        return parse_power();
    }

    RatFunc parse_power() {
        RatFunc base = parse_atom();
        while (true) {
            skip_ws();
            if (!accept('^')) return base;
            skip_ws();
            if (accept('-')) throw parse_error(pos_ - 1, "negative exponent (use division)");
            std::size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(uc(text_[pos_])))
                throw parse_error(at, "expected nonnegative integer exponent");
            Int e = parse_integer();
            if (e > 0x7fffffff) throw parse_error(at, "exponent exceeds 32-bit range");
            base = base.pow(e.convert_to<uint32_t>());
        }
    }

    RatFunc parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error(pos_, "unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(uc(c))) return RatFunc(Polynomial(parse_integer()));
        if (std::isalpha(uc(c))) {
            std::size_t at = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(uc(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            auto it = params_.find(name);
            if (it == params_.end()) throw parse_error(at, "undeclared symbol '" + name + "'");
            return RatFunc(it->second);
        }
        if (accept('(')) {
            RatFunc v = parse_expr();
            skip_ws();
            if (!accept(')')) throw parse_error(pos_, "expected ')'");
            return v;
        }
        throw parse_error(pos_, std::string("unexpected character '") + c + "'");
    }

    Int parse_integer() {
        Int v = 0;
        while (pos_ < text_.size() && std::isdigit(uc(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    static int uc(char c) { return static_cast<unsigned char>(c); }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(uc(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string text_;
    std::map<std::string, Symbol> params_;
    std::size_t pos_ = 0;
};

inline RatFunc parse_expr(const std::string& text, const std::vector<Symbol>& params) {
    return ExprParser(text, params).parse();
}

} // namespace qhd
