// Multivariate polynomials with rational coefficients in named parameters.
// Canonical form: sorted monomial map, no zero coefficients. Used for symbolic
// structure constants and for exact generic-rank computation (Bareiss).
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fields.hpp"

namespace ccd {

struct unknown_parameter : std::runtime_error {
    explicit unknown_parameter(const std::string& what) : std::runtime_error(what) {}
};

// Monomial: variable -> exponent, exponents > 0 only.
using Monomial = std::map<std::string, unsigned>;

// Lexicographic order by variable name then exponent; total and multiplicative.
struct MonomialLess {
    bool operator()(const Monomial& x, const Monomial& y) const {
        auto ix = x.begin(), iy = y.begin();
        while (ix != x.end() && iy != y.end()) {
            if (ix->first != iy->first) {
                // the earlier variable name with positive exponent is "larger" in lex
                return ix->first > iy->first;
            }
            if (ix->second != iy->second) return ix->second < iy->second;
            ++ix; ++iy;
        }
        if (ix == x.end() && iy == y.end()) return false;
        return ix == x.end(); // shorter (fewer vars left) is smaller
    }
};

class ParamPoly {
  public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;

    ParamPoly() = default;
    explicit ParamPoly(const Rational& c) { if (c != 0) terms_[Monomial{}] = c; }
    static ParamPoly constant(const Rational& c) { return ParamPoly(c); }
    static ParamPoly variable(const std::string& name) {
        ParamPoly p;
        p.terms_[Monomial{{name, 1}}] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    const Terms& terms() const { return terms_; }

    std::set<std::string> variables() const {
        std::set<std::string> vs;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m) vs.insert(v);
        return vs;
    }

    ParamPoly operator-() const {
        ParamPoly r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    ParamPoly operator+(const ParamPoly& o) const {
        ParamPoly r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    ParamPoly operator-(const ParamPoly& o) const {
        ParamPoly r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    ParamPoly operator*(const ParamPoly& o) const {
        ParamPoly r;
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) r.add_term(mul_mono(m1, m2), c1 * c2);
        return r;
    }
    ParamPoly operator*(const Rational& c) const {
        ParamPoly r;
        if (c == 0) return r;
        for (auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

    ParamPoly pow(unsigned e) const {
        ParamPoly r = constant(1);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// Substitute each parameter by a polynomial; unmentioned parameters stay.
    ParamPoly substitute(const std::map<std::string, ParamPoly>& subst) const {
        ParamPoly r;
        for (auto& [m, c] : terms_) {
            ParamPoly t = constant(c);
            for (auto& [v, e] : m) {
                auto it = subst.find(v);
                ParamPoly base = it != subst.end() ? it->second : variable(v);
                t = t * base.pow(e);
            }
            r = r + t;
        }
        return r;
    }

    /// Full evaluation into a field element; every variable must be assigned.
    template <class F>
    typename F::Elem eval(const F& f, const std::map<std::string, typename F::Elem>& assign) const {
        typename F::Elem acc = f.zero();
        for (auto& [m, c] : terms_) {
            typename F::Elem t = rational_to_field(f, c);
            for (auto& [v, e] : m) {
                auto it = assign.find(v);
                if (it == assign.end()) throw unknown_parameter("unbound parameter: " + v);
                for (unsigned k = 0; k < e; ++k) t = f.mul(t, it->second);
            }
            acc = f.add(acc, t);
        }
        return acc;
    }

    /// Exact division (throws if the divisor does not divide exactly).
    ParamPoly divide_exact(const ParamPoly& d) const {
        if (d.is_zero()) throw std::domain_error("ParamPoly: division by zero poly");
        ParamPoly rem = *this, quot;
        auto lead = [](const ParamPoly& p) { return *p.terms_.rbegin(); };
        auto [dm, dc] = lead(d);
        while (!rem.is_zero()) {
            auto [rm, rc] = lead(rem);
            Monomial qm;
            if (!divide_mono(rm, dm, qm))
                throw std::domain_error("ParamPoly: not exactly divisible");
            ParamPoly qt;
            qt.terms_[qm] = rc / dc;
            quot = quot + qt;
            rem = rem - qt * d;
        }
        return quot;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        // print highest term first for readability
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational ac = c < 0 ? Rational(-c) : c;
            std::string mono;
            for (auto& [v, e] : m) {
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e > 1) mono += "^" + std::to_string(e);
            }
            std::string coef;
            if (mono.empty()) coef = ac.get_str();
            else if (ac == 1) coef = "";
            else coef = ac.get_str();
            std::string term = coef;
            if (!mono.empty()) {
                if (!term.empty()) term += "*";
                term += mono;
            }
            if (first) {
                if (c < 0) {
                    // grammar has no unary minus; emit an explicit coefficient
                    if (mono.empty()) term = "-" + ac.get_str();
                    else term = "-" + (coef.empty() ? "1" : coef) + "*" + mono;
                }
                out += term;
                first = false;
            } else {
                out += (c < 0 ? " - " : " + ") + term;
            }
        }
        return out;
    }

  private:
    Terms terms_;

    void add_term(const Monomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    static Monomial mul_mono(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (auto& [v, e] : b) r[v] += e;
        return r;
    }
    static bool divide_mono(const Monomial& num, const Monomial& den, Monomial& out) {
        out = num;
        for (auto& [v, e] : den) {
            auto it = out.find(v);
            if (it == out.end() || it->second < e) return false;
            if (it->second == e) out.erase(it);
            else it->second -= e;
        }
        return true;
    }
};

template <class F>
typename F::Elem rational_to_field(const F& f, const Rational& r);

template <>
inline RatField::Elem rational_to_field<RatField>(const RatField&, const Rational& r) {
    return r;
}
template <>
inline GFpField::Elem rational_to_field<GFpField>(const GFpField& f, const Rational& r) {
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class p(f.p);
    mpz_class dm = den % p;
    if (dm == 0) throw std::domain_error("rational has denominator divisible by p");
    mpz_class nm = num % p;
    if (nm < 0) nm += p;
    GFpField::Elem n = static_cast<GFpField::Elem>(nm.get_ui());
    GFpField::Elem d = f.from_int(dm.get_si());
    return f.div(n, d);
}
template <>
inline QOmegaField::Elem rational_to_field<QOmegaField>(const QOmegaField&, const Rational& r) {
    return {r, Rational(0)};
}

} // namespace ccd
