#pragma once

#include <complex>
#include <map>
#include <string>

#include "qhd/polynomial.hpp"

namespace qhd {

// Canonical rational function num/den over the integers: den != 0,
// gcd(num, den) = 1, leading coefficient of den positive. Equal values have
// identical representations, so operator== is a plain member comparison.
class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int v) : num_(v), den_(1) {}
    RatFunc(const Int& v) : num_(v), den_(1) {}
    RatFunc(const Polynomial& p) : num_(p), den_(1) {}
    explicit RatFunc(Symbol s) : num_(Polynomial(s)), den_(1) {}
    RatFunc(Polynomial num, Polynomial den) { assign(std::move(num), std::move(den)); }

    static RatFunc fraction(const Int& num, const Int& den) {
        return RatFunc(Polynomial(num), Polynomial(den));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const {
        return den_ == Polynomial(1) && num_ == Polynomial(1);
    }
    bool is_polynomial() const { return den_ == Polynomial(1); }

    std::set<Symbol> symbols() const {
        std::set<Symbol> s = num_.symbols();
        for (Symbol v : den_.symbols()) s.insert(v);
        return s;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw domain_error("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const {
        if (is_zero()) throw domain_error("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc pow(uint32_t e) const {
        RatFunc base = *this, acc = 1;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Simultaneous substitution; unbound symbols are left alone.
    RatFunc substitute(const std::map<Symbol, RatFunc>& bindings) const {
        RatFunc n = substitute_poly(num_, bindings);
        RatFunc d = substitute_poly(den_, bindings);
        if (d.is_zero())
            throw domain_error("substitution makes the denominator vanish identically");
        return n / d;
    }

    std::complex<double> eval(const std::map<Symbol, std::complex<double>>& point,
                              double den_epsilon = 1e-12) const {
        std::complex<double> d = den_.eval(point);
        if (std::abs(d) <= den_epsilon)
            throw domain_error("eval: denominator within epsilon of zero");
        return num_.eval(point) / d;
    }

    // Canonical printing; round-trips through parse_expr.
    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    // Total order for use as a map key; refines equality.
    static int cmp(const RatFunc& a, const RatFunc& b) {
        int c = Polynomial::cmp(a.num_, b.num_);
        if (c != 0) return c;
        return Polynomial::cmp(a.den_, b.den_);
    }

  private:
    static RatFunc substitute_poly(const Polynomial& p,
                                   const std::map<Symbol, RatFunc>& bindings) {
        RatFunc acc = 0;
        for (const auto& [m, c] : p.terms()) {
            RatFunc t = RatFunc(Polynomial(c));
            for (std::size_t i = 0; i < m.width(); ++i) {
                uint32_t e = m.exp(i);
                if (!e) continue;
                Symbol s = Symbol::intern_index(i);
                auto it = bindings.find(s);
                if (it == bindings.end())
                    t *= RatFunc(Polynomial::monomial(Monomial::var(s, e), 1));
                else
                    t *= it->second.pow(e);
            }
            acc += t;
        }
        return acc;
    }

    void assign(Polynomial num, Polynomial den) {
        if (den.is_zero()) throw domain_error("zero denominator");
        if (num.is_zero()) {
            num_ = Polynomial();
            den_ = Polynomial(1);
            return;
        }
        Polynomial g = gcd(num, den);
        num_ = divexact(num, g);
        den_ = divexact(den, g);
        if (den_.leading_coefficient() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    Polynomial num_, den_;
};

enum class ArithOp { add, sub, mul, div };

inline RatFunc arith(ArithOp op, const RatFunc& f, const RatFunc& g) {
    switch (op) {
        case ArithOp::add: return f + g;
        case ArithOp::sub: return f - g;
        case ArithOp::mul: return f * g;
        case ArithOp::div: return f / g;
    }
    throw error("unknown arithmetic op");
}

// Univariate division of f by g in v over the field of the remaining symbols:
// f = q*g + r with deg_v(r) < deg_v(g). Computed by pseudo-division, then the
// leading-coefficient power is divided back out.
inline std::pair<RatFunc, RatFunc> divmod_univar(const Polynomial& f, const Polynomial& g,
                                                 Symbol v) {
    uint32_t dg = g.degree_in(v);
    if (dg == 0) throw domain_error("divmod_univar: divisor independent of '" + v.name() + "'");
    auto gc = coeffs_in(g, v);
    Polynomial lcg = gc.rbegin()->second;
    Polynomial r = f, q;
    uint32_t scale_pow = 0; // q and r are implicitly divided by lcg^scale_pow
    while (!r.is_zero() && r.degree_in(v) >= dg) {
        auto rc = coeffs_in(r, v);
        uint32_t dr = rc.rbegin()->first;
        Polynomial lcr = rc.rbegin()->second;
        Polynomial shift = Polynomial::monomial(Monomial::var(v, dr - dg), 1);
        q = q * lcg + lcr * shift;
        r = r * lcg - g * (lcr * shift);
        ++scale_pow;
    }
    RatFunc denom = RatFunc(lcg).pow(scale_pow);
    return {RatFunc(q) / denom, RatFunc(r) / denom};
}

} // namespace qhd
