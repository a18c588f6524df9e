#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qhd/errors.hpp"
#include "qhd/symbol.hpp"

namespace qhd {

using Int = boost::multiprecision::cpp_int;

// Exponent vector indexed by global symbol index, trailing zeros trimmed.
class Monomial {
  public:
    Monomial() = default;

    static Monomial var(Symbol s, uint32_t e = 1) {
        Monomial m;
        if (e) {
            m.exps_.resize(s.index() + 1, 0);
            m.exps_[s.index()] = e;
        }
        return m;
    }

    uint32_t exp(std::size_t sym_index) const {
        return sym_index < exps_.size() ? exps_[sym_index] : 0;
    }
    uint64_t degree() const {
        uint64_t d = 0;
        for (uint32_t e : exps_) d += e;
        return d;
    }
    bool is_one() const { return exps_.empty(); }
    std::size_t width() const { return exps_.size(); }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.exps_.resize(std::max(exps_.size(), o.exps_.size()), 0);
        for (std::size_t i = 0; i < r.exps_.size(); ++i) {
            uint64_t e = uint64_t(exp(i)) + uint64_t(o.exp(i));
            if (e > 0x7fffffffu) throw error("monomial exponent overflow");
            r.exps_[i] = uint32_t(e);
        }
        return r;
    }

    // Componentwise quotient; false if not divisible.
    bool divide(const Monomial& o, Monomial& out) const {
        if (o.exps_.size() > exps_.size()) {
            for (std::size_t i = exps_.size(); i < o.exps_.size(); ++i)
                if (o.exps_[i]) return false;
        }
        Monomial r;
        r.exps_ = exps_;
        for (std::size_t i = 0; i < o.exps_.size(); ++i) {
            if (o.exps_[i] > r.exps_[i]) return false;
            r.exps_[i] -= o.exps_[i];
        }
        r.trim();
        out = std::move(r);
        return true;
    }

    void trim() {
        while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    // Degree-lexicographic: higher total degree first; ties broken by the
    // exponent of the earliest registered symbol.
    static int cmp(const Monomial& a, const Monomial& b) {
        uint64_t da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        std::size_t w = std::max(a.exps_.size(), b.exps_.size());
        for (std::size_t i = 0; i < w; ++i) {
            uint32_t ea = a.exp(i), eb = b.exp(i);
            if (ea != eb) return ea < eb ? -1 : 1;
        }
        return 0;
    }

    const std::vector<uint32_t>& exps() const { return exps_; }

  private:
    std::vector<uint32_t> exps_;
};

struct MonomialDegLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) > 0; }
};

// Sparse multivariate polynomial over arbitrary-precision integers. Terms are
// kept in descending degree-lex order with no zero coefficients, so equal
// values have identical representations.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Int, MonomialDegLexGreater>;

    Polynomial() = default;
    Polynomial(int v) { *this = Polynomial(Int(v)); }
    Polynomial(const Int& v) {
        if (v != 0) terms_[Monomial()] = v;
    }
    explicit Polynomial(Symbol s) { terms_[Monomial::var(s)] = 1; }
    static Polynomial monomial(const Monomial& m, const Int& c) {
        Polynomial p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Int constant_value() const {
        if (terms_.empty()) return 0;
        auto it = terms_.find(Monomial());
        return it == terms_.end() ? Int(0) : it->second;
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    uint64_t total_degree() const {
        return terms_.empty() ? 0 : terms_.begin()->first.degree();
    }
    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw error("leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const Int& leading_coefficient() const {
        if (terms_.empty()) throw error("leading term of zero polynomial");
        return terms_.begin()->second;
    }

    std::set<Symbol> symbols() const {
        std::set<Symbol> out;
        for (const auto& [m, c] : terms_)
            for (std::size_t i = 0; i < m.width(); ++i)
                if (m.exp(i)) out.insert(Symbol::intern_index(i));
        return out;
    }

    uint32_t degree_in(Symbol v) const {
        uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exp(v.index()));
        return d;
    }
    bool depends_on(Symbol v) const { return degree_in(v) > 0; }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const Polynomial& a, const Int& c) {
        Polynomial r;
        if (c != 0)
            for (const auto& [m, cc] : a.terms_) r.terms_[m] = cc * c;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Total order compatible with the term order; used to normalize signs.
    static int cmp(const Polynomial& a, const Polynomial& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            int c = Monomial::cmp(ia->first, ib->first);
            if (c != 0) return c;
            if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        }
        if (ia != a.terms_.end()) return 1;
        if (ib != b.terms_.end()) return -1;
        return 0;
    }

    std::complex<double> eval(const std::map<Symbol, std::complex<double>>& point) const;
    std::string str() const;

  private:
    void add_term(const Monomial& m, const Int& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline Polynomial operator*(Symbol s, const Polynomial& p) { return Polynomial(s) * p; }

// ---------------------------------------------------------------------------
// integer content, exact division, gcd
// ---------------------------------------------------------------------------

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int int_content(const Polynomial& p) {
    Int g = 0;
    for (const auto& [m, c] : p.terms()) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

// Exact division; throws if the division leaves a remainder.
inline Polynomial divexact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw domain_error("polynomial division by zero");
    Polynomial r = f, q;
    while (!r.is_zero()) {
        Monomial mq;
        if (!r.leading_monomial().divide(g.leading_monomial(), mq))
            throw error("divexact: not divisible (monomial)");
        Int cq = r.leading_coefficient() / g.leading_coefficient();
        if (cq * g.leading_coefficient() != r.leading_coefficient())
            throw error("divexact: not divisible (coefficient)");
        Polynomial t = Polynomial::monomial(mq, cq);
        q += t;
        r -= t * g;
    }
    return q;
}

// View of a polynomial as univariate in v with polynomial coefficients.
inline std::map<uint32_t, Polynomial> coeffs_in(const Polynomial& f, Symbol v) {
    std::map<uint32_t, Polynomial> out;
    for (const auto& [m, c] : f.terms()) {
        uint32_t e = m.exp(v.index());
        Monomial rest = m;
        Monomial ve = Monomial::var(v, e);
        Monomial q;
        rest.divide(ve, q);
        out[e] += Polynomial::monomial(q, c);
    }
    return out;
}

inline Polynomial from_coeffs_in(const std::map<uint32_t, Polynomial>& cs, Symbol v) {
    Polynomial out;
    for (const auto& [e, p] : cs) out += p * Polynomial::monomial(Monomial::var(v, e), 1);
    return out;
}

inline Polynomial gcd(const Polynomial& f, const Polynomial& g);

// gcd of the univariate-in-v coefficients.
inline Polynomial content_in(const Polynomial& f, Symbol v) {
    Polynomial c;
    for (const auto& [e, p] : coeffs_in(f, v)) {
        c = gcd(c, p);
        if (c.is_constant() && c.constant_value() == 1) break;
    }
    return c;
}

// Pseudo-remainder of f by g in v, up to sign and content (sufficient for the
// primitive PRS below).
inline Polynomial pseudo_rem(const Polynomial& f, const Polynomial& g, Symbol v) {
    auto gc = coeffs_in(g, v);
    uint32_t dg = gc.rbegin()->first;
    Polynomial lcg = gc.rbegin()->second;
    Polynomial r = f;
    while (!r.is_zero()) {
        auto rc = coeffs_in(r, v);
        uint32_t dr = rc.rbegin()->first;
        if (rc.rbegin()->second.is_zero()) throw error("pseudo_rem: internal");
        if (dr < dg) break;
        Polynomial lcr = rc.rbegin()->second;
        Polynomial shift = Polynomial::monomial(Monomial::var(v, dr - dg), 1);
        r = r * lcg - g * (lcr * shift);
    }
    return r;
}

inline Polynomial normalize_sign(Polynomial p) {
    if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
    return p;
}

inline Polynomial primitive_part_in(const Polynomial& f, Symbol v) {
    if (f.is_zero()) return f;
    Polynomial c = content_in(f, v);
    return divexact(f, c);
}

// Multivariate gcd over the integers by the primitive PRS, recursing on the
// content with respect to the earliest symbol present.
inline Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return normalize_sign(g);
    if (g.is_zero()) return normalize_sign(f);
    if (f.is_constant() && g.is_constant())
        return Polynomial(int_gcd(f.constant_value(), g.constant_value()));

    std::size_t vi = SIZE_MAX;
    for (Symbol s : f.symbols()) vi = std::min(vi, s.index());
    for (Symbol s : g.symbols()) vi = std::min(vi, s.index());
    Symbol v = Symbol::intern_index(vi);

    uint32_t df = f.degree_in(v), dg = g.degree_in(v);
    if (df == 0) return gcd(f, content_in(g, v));
    if (dg == 0) return gcd(content_in(f, v), g);

    Polynomial cf = content_in(f, v), cg = content_in(g, v);
    Polynomial c = gcd(cf, cg);
    Polynomial a = divexact(f, cf), b = divexact(g, cg);
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (true) {
        Polynomial r = pseudo_rem(a, b, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            b = Polynomial(1);
            break;
        }
        a = b;
        b = primitive_part_in(r, v);
    }
    return normalize_sign(c * primitive_part_in(b, v));
}

inline std::complex<double> Polynomial::eval(
    const std::map<Symbol, std::complex<double>>& point) const {
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.convert_to<double>();
        for (std::size_t i = 0; i < m.width(); ++i) {
            uint32_t e = m.exp(i);
            if (!e) continue;
            auto it = point.find(Symbol::intern_index(i));
            if (it == point.end())
                throw domain_error("eval: unbound symbol '" + Symbol::intern_index(i).name() + "'");
            std::complex<double> base = it->second, pw = 1.0;
            for (uint32_t k = 0; k < e; ++k) pw *= base;
            t *= pw;
        }
        acc += t;
    }
    return acc;
}

inline std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (a != 1 || m.is_one()) {
            os << a.str();
            printed = true;
        }
        for (std::size_t i = 0; i < m.width(); ++i) {
            uint32_t e = m.exp(i);
            if (!e) continue;
            if (printed) os << "*";
            os << Symbol::intern_index(i).name();
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

} // namespace qhd
