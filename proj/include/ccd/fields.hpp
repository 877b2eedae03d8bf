// Exact coefficient fields: arbitrary-precision rationals, prime fields GF(p),
// and Q(w) with w^2 + w + 1 = 0 (primitive cube root of unity).
// No floating point anywhere; every operation is exact.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace ccd {

struct field_mismatch : std::runtime_error {
    explicit field_mismatch(const std::string& what) : std::runtime_error(what) {}
};
struct dimension_mismatch : std::runtime_error {
    explicit dimension_mismatch(const std::string& what) : std::runtime_error(what) {}
};
struct singular_matrix : std::runtime_error {
    explicit singular_matrix(const std::string& what) : std::runtime_error(what) {}
};
struct guard_exceeded : std::runtime_error {
    explicit guard_exceeded(const std::string& what) : std::runtime_error(what) {}
};

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

/// Field of rationals. Element type is mpq_class (always stored canonically:
/// lowest terms, positive denominator).
struct RatField {
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_int(long v) const { return Rational(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("RatField: inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.get_str(); }
    bool same_as(const RatField&) const { return true; }
    std::string name() const { return "Q"; }

  private:
    Elem inv_guard(const Elem& b) const {
        if (b == 0) throw std::domain_error("RatField: division by zero");
        return b;
    }
};

/// Prime field GF(p), p prime, p < 2^31. Residues live in [0, p).
struct GFpField {
    using Elem = std::uint32_t;
    std::uint32_t p = 2;

    GFpField() = default;
    explicit GFpField(std::uint32_t prime) : p(prime) {
        if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("GF(p): p out of range");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("GF(p): p is not prime");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        long m = v % static_cast<long>(p);
        if (m < 0) m += p;
        return static_cast<Elem>(m);
    }
    Elem add(Elem a, Elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Elem>(s >= p ? s - p : s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t(a) * b) % p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("GF(p): inverse of zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string str(Elem a) const { return std::to_string(a); }
    bool same_as(const GFpField& o) const { return p == o.p; }
    std::string name() const { return "GF(" + std::to_string(p) + ")"; }
};

/// Element a + b*w of Q(w), w^2 = -1 - w.  w is a primitive cube root of unity.
struct OmegaElem {
    Rational a, b;
    bool operator==(const OmegaElem& o) const { return a == o.a && b == o.b; }
};

struct QOmegaField {
    using Elem = OmegaElem;

    Elem zero() const { return {Rational(0), Rational(0)}; }
    Elem one() const { return {Rational(1), Rational(0)}; }
    Elem omega() const { return {Rational(0), Rational(1)}; }
    Elem from_int(long v) const { return {Rational(v), Rational(0)}; }
    Elem add(const Elem& x, const Elem& y) const { return {x.a + y.a, x.b + y.b}; }
    Elem sub(const Elem& x, const Elem& y) const { return {x.a - y.a, x.b - y.b}; }
    Elem neg(const Elem& x) const { return {-x.a, -x.b}; }
    Elem mul(const Elem& x, const Elem& y) const {
        // (a+bw)(c+dw) = ac + (ad+bc)w + bd w^2,  w^2 = -1-w
        Rational bd = x.b * y.b;
        return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
    }
    Elem inv(const Elem& x) const {
        // conjugate is a + b*w^2 = (a-b) - b*w; norm = a^2 - a*b + b^2
        Rational n = x.a * x.a - x.a * x.b + x.b * x.b;
        if (n == 0) throw std::domain_error("Q(w): inverse of zero");
        return {(x.a - x.b) / n, -x.b / n};
    }
    Elem div(const Elem& x, const Elem& y) const { return mul(x, inv(y)); }
    bool is_zero(const Elem& x) const { return x.a == 0 && x.b == 0; }
    bool eq(const Elem& x, const Elem& y) const { return x == y; }
    std::string str(const Elem& x) const {
        if (x.b == 0) return x.a.get_str();
        return x.a.get_str() + "+" + x.b.get_str() + "w";
    }
    bool same_as(const QOmegaField&) const { return true; }
    std::string name() const { return "Q(w)"; }
};

/// Runtime field selector used by the CLI and catalog front ends.
struct FieldDesc {
    enum class Kind { Q, GFp, QOmega } kind = Kind::Q;
    std::uint32_t p = 0;

    static FieldDesc q() { return {Kind::Q, 0}; }
    static FieldDesc gfp(std::uint32_t p) { return {Kind::GFp, p}; }
    static FieldDesc qomega() { return {Kind::QOmega, 0}; }
    std::string name() const {
        switch (kind) {
            case Kind::Q: return "Q";
            case Kind::GFp: return "GF(" + std::to_string(p) + ")";
            default: return "Q(w)";
        }
    }
};

} // namespace ccd
