// Recursive-descent parser for coefficient expressions:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | ident | '(' expr ')'
//   rational := int ('/' posint)?
// Implicit multiplication is rejected. Canonical printing goes through
// ParamPoly, so parse -> print -> parse is a fixed point.
#pragma once

#include <cctype>
#include <memory>
#include <string>

#include "poly.hpp"

namespace ccd {

struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

class CoeffExpr {
  public:
    CoeffExpr() : poly_(ParamPoly::constant(Rational(0))) {}
    explicit CoeffExpr(ParamPoly p) : poly_(std::move(p)) {}

    static CoeffExpr parse(const std::string& text) { return CoeffExpr(Parser(text).run()); }

    const ParamPoly& poly() const { return poly_; }
    std::string print() const { return poly_.str(); }

    template <class F>
    typename F::Elem bind(const F& f, const std::map<std::string, typename F::Elem>& assign) const {
        return poly_.eval(f, assign);
    }

  private:
    ParamPoly poly_;

    class Parser {
      public:
        explicit Parser(const std::string& s) : s_(s) {}
        ParamPoly run() {
            ParamPoly p = expr();
            skip_ws();
            if (pos_ != s_.size()) throw parse_error("trailing input", pos_);
            return p;
        }

      private:
        const std::string& s_;
        std::size_t pos_ = 0;

        void skip_ws() {
            while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        char peek() {
            skip_ws();
            return pos_ < s_.size() ? s_[pos_] : '\0';
        }

        ParamPoly expr() {
            ParamPoly acc = term();
            for (;;) {
                char c = peek();
                if (c == '+') { ++pos_; acc = acc + term(); }
                else if (c == '-') { ++pos_; acc = acc - term(); }
                else break;
            }
            return acc;
        }
        ParamPoly term() {
            ParamPoly acc = factor();
            while (peek() == '*') { ++pos_; acc = acc * factor(); }
            return acc;
        }
        ParamPoly factor() {
            ParamPoly base = atom();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                std::size_t start = pos_;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw parse_error("expected nonnegative integer exponent", pos_);
                unsigned e = 0;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    e = e * 10 + unsigned(s_[pos_] - '0');
                    if (e > 64) throw parse_error("exponent too large", start);
                    ++pos_;
                }
                base = base.pow(e);
            }
            return base;
        }
        ParamPoly atom() {
            char c = peek();
            if (c == '(') {
                ++pos_;
                ParamPoly p = expr();
                if (peek() != ')') throw parse_error("expected ')'", pos_);
                ++pos_;
                return p;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
            if (std::isdigit(static_cast<unsigned char>(c)) ||
                (c == '-' && pos_ + 1 < s_.size() &&
                 std::isdigit(static_cast<unsigned char>(next_nonspace_after_minus()))))
                return rational();
            throw parse_error("expected rational, identifier or '('", pos_);
        }
        char next_nonspace_after_minus() {
            // the '-' sign of a literal must be directly followed by digits
            return s_[pos_ + 1];
        }
        ParamPoly ident() {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            return ParamPoly::variable(name);
        }
        ParamPoly rational() {
            skip_ws();
            std::string num;
            if (s_[pos_] == '-') num += s_[pos_++];
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                num += s_[pos_++];
            if (num.empty() || num == "-") throw parse_error("expected integer", start);
            std::string den = "1";
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                den.clear();
                std::size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    den += s_[pos_++];
                if (den.empty()) throw parse_error("expected positive denominator", dstart);
                if (den.find_first_not_of('0') == std::string::npos)
                    throw parse_error("zero denominator", dstart);
            }
            return ParamPoly::constant(rat_from_string(num + "/" + den));
        }
    };
};

} // namespace ccd
