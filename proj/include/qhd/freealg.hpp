#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qhd/matrix.hpp"

namespace qhd {

// Words in the generators a,b,c,d of the quantized function algebra, stored as
// strings over 'a'..'d'. The empty word is the unit.
using Word = std::string;

inline constexpr std::array<char, 4> kGenerators{'a', 'b', 'c', 'd'};

inline int gen_index(char g) {
    if (g < 'a' || g > 'd') throw error(std::string("unknown generator '") + g + "'");
    return g - 'a';
}

// Total order on the generators; rank[g] higher means g is larger.
struct GenOrder {
    std::array<int, 4> rank{0, 1, 2, 3};

    // "d>a>b>c" or "d,a,b,c": first listed is largest.
    static GenOrder parse(const std::string& text) {
        GenOrder o;
        std::string letters;
        for (char c : text)
            if (c != '>' && c != ',' && c != ' ') letters += c;
        if (letters.size() != 4) throw error("generator order must list a,b,c,d once each");
        std::array<bool, 4> seen{};
        for (std::size_t i = 0; i < 4; ++i) {
            int g = gen_index(letters[i]);
            if (seen[g]) throw error("generator order repeats '" + std::string(1, letters[i]) + "'");
            seen[g] = true;
            o.rank[g] = 3 - int(i);
        }
        return o;
    }
};

// Word comparison used for orienting relations. Both modes compare total
// degree first. DegLex then goes letter by letter. DegAscLex ranks words with
// more ascending adjacent pairs higher, breaks ties by weight, then letters;
// this reproduces straightening orientations (ordered products on one side,
// squares and reversed products on the other) that no plain lexicographic
// order can express.
class WordOrder {
  public:
    enum class Mode { DegLex, DegAscLex };

    static WordOrder deg_lex(const GenOrder& g) { return WordOrder(Mode::DegLex, g, {1, 1, 1, 1}); }
    static WordOrder deg_asc_lex(const GenOrder& g, std::array<int, 4> weights = {1, 1, 1, 1}) {
        return WordOrder(Mode::DegAscLex, g, weights);
    }

    // -1 if u < v, 0 if equal, +1 if u > v.
    int cmp(const Word& u, const Word& v) const {
        if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
        if (mode_ == Mode::DegAscLex) {
            int au = ascents(u), av = ascents(v);
            if (au != av) return au < av ? -1 : 1;
            long wu = weight(u), wv = weight(v);
            if (wu != wv) return wu < wv ? -1 : 1;
        }
        for (std::size_t i = 0; i < u.size(); ++i) {
            int ru = gens_.rank[gen_index(u[i])], rv = gens_.rank[gen_index(v[i])];
            if (ru != rv) return ru < rv ? -1 : 1;
        }
        return 0;
    }
    bool less(const Word& u, const Word& v) const { return cmp(u, v) < 0; }

  private:
    WordOrder(Mode m, const GenOrder& g, std::array<int, 4> w) : mode_(m), gens_(g), weights_(w) {}

    int ascents(const Word& w) const {
        int n = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (gens_.rank[gen_index(w[i])] < gens_.rank[gen_index(w[i + 1])]) ++n;
        return n;
    }
    long weight(const Word& w) const {
        long s = 0;
        for (char c : w) s += weights_[gen_index(c)];
        return s;
    }

    Mode mode_;
    GenOrder gens_;
    std::array<int, 4> weights_;
};

// Noncommutative polynomial in a,b,c,d over the rational-function field.
// Terms are stored in a fixed internal order (degree, then alphabetical), so
// equality and printing are deterministic independently of any WordOrder.
class NCPoly {
  public:
    struct WordLess {
        bool operator()(const Word& u, const Word& v) const {
            if (u.size() != v.size()) return u.size() < v.size();
            return u < v;
        }
    };
    using TermMap = std::map<Word, RatFunc, WordLess>;

    NCPoly() = default;
    static NCPoly term(const Word& w, const RatFunc& c) {
        NCPoly p;
        if (!c.is_zero()) p.terms_[w] = c;
        return p;
    }
    static NCPoly generator(char g) {
        gen_index(g);
        return term(Word(1, g), 1);
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    RatFunc coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? RatFunc(0) : it->second;
    }
    uint64_t degree() const {
        uint64_t d = 0;
        for (const auto& [w, c] : terms_) d = std::max<uint64_t>(d, w.size());
        return d;
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator-(const NCPoly& a) {
        NCPoly r;
        for (const auto& [w, c] : a.terms_) r.terms_[w] = -c;
        return r;
    }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
        return r;
    }
    friend NCPoly operator*(const RatFunc& c, const NCPoly& a) {
        NCPoly r;
        if (!c.is_zero())
            for (const auto& [w, cc] : a.terms_) r.terms_[w] = c * cc;
        return r;
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    // Largest word under the given order.
    Word leading_word(const WordOrder& order) const {
        if (terms_.empty()) throw error("leading word of zero polynomial");
        Word best = terms_.begin()->first;
        for (const auto& [w, c] : terms_)
            if (order.less(best, w)) best = w;
        return best;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << it->second.str() << ")";
            if (!it->first.empty()) os << "*" << it->first;
        }
        return os.str();
    }

  private:
    void add_term(const Word& w, const RatFunc& c) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

// Oriented quadratic relation lhs -> rhs: every word of rhs is strictly
// smaller than lhs under the order the rule set was built with.
struct RewriteRule {
    Word lhs;
    NCPoly rhs;
};

namespace detail {

// Reduced row echelon form of a list of NCPolys viewed as vectors over the
// word basis, with pivot words chosen maximal under `order`. Rows come back
// monic, inter-reduced, sorted by leading word descending.
inline std::vector<NCPoly> row_reduce(std::vector<NCPoly> rows, const WordOrder& order) {
    std::vector<NCPoly> out;
    std::vector<Word> pivots;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        NCPoly p = rows[i];
        // eliminate existing pivots
        bool changed = true;
        while (changed && !p.is_zero()) {
            changed = false;
            for (std::size_t k = 0; k < out.size(); ++k) {
                RatFunc c = p.coeff(pivots[k]);
                if (!c.is_zero()) {
                    p -= c * out[k];
                    changed = true;
                }
            }
        }
        if (p.is_zero()) continue;
        Word lw = p.leading_word(order);
        NCPoly monic = p.coeff(lw).inverse() * p;
        // back-substitute into previous rows
        for (std::size_t k = 0; k < out.size(); ++k) {
            RatFunc c = out[k].coeff(lw);
            if (!c.is_zero()) out[k] -= c * monic;
        }
        out.push_back(monic);
        pivots.push_back(lw);
    }
    // sort rows by leading word, largest first
    std::vector<std::size_t> idx(out.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return order.less(pivots[b], pivots[a]); });
    std::vector<NCPoly> sorted;
    for (std::size_t i : idx) sorted.push_back(out[i]);
    return sorted;
}

inline const WordOrder& canonical_order() {
    static WordOrder o = WordOrder::deg_lex(GenOrder::parse("a>b>c>d"));
    return o;
}

} // namespace detail

// The 2x2 matrix of generators and its two tensor embeddings, as 4x4 matrices
// of NCPolys: T1[(i,k),(j,l)] = T[i,j] delta[k,l], T2[(i,k),(j,l)] =
// delta[i,j] T[k,l], so an entry of T1 T2 is t_ik t_jl with the first tensor
// factor indexing first.
namespace detail {

inline std::array<std::array<NCPoly, 2>, 2> generator_matrix() {
    std::array<std::array<NCPoly, 2>, 2> t;
    t[0][0] = NCPoly::generator('a');
    t[0][1] = NCPoly::generator('b');
    t[1][0] = NCPoly::generator('c');
    t[1][1] = NCPoly::generator('d');
    return t;
}

using NCMat4 = std::array<std::array<NCPoly, 4>, 4>;

inline NCMat4 nc_matmul(const NCMat4& x, const NCMat4& y) {
    NCMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            NCPoly acc;
            for (int k = 0; k < 4; ++k) acc += x[i][k] * y[k][j];
            r[i][j] = acc;
        }
    return r;
}

} // namespace detail

// Entries of R T1 T2 - T2 T1 R, row-reduced to a canonical basis of their
// span; zero rows dropped.
inline std::vector<NCPoly> rtt_relations(const MatRF& r) {
    if (r.dim() != 4) throw error("rtt_relations: expected a 4x4 matrix");
    auto t = detail::generator_matrix();
    detail::NCMat4 t1, t2, rs;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l) {
                    t1[i * 2 + k][j * 2 + l] = (k == l) ? t[i][j] : NCPoly();
                    t2[i * 2 + k][j * 2 + l] = (i == j) ? t[k][l] : NCPoly();
                }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rs[i][j] = NCPoly::term("", r.at(i, j));
    detail::NCMat4 lhs = detail::nc_matmul(rs, detail::nc_matmul(t1, t2));
    detail::NCMat4 rhs = detail::nc_matmul(detail::nc_matmul(t2, t1), rs);
    std::vector<NCPoly> rels;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            NCPoly d = lhs[i][j] - rhs[i][j];
            if (!d.is_zero()) rels.push_back(d);
        }
    return detail::row_reduce(rels, detail::canonical_order());
}

inline bool span_equal(const std::vector<NCPoly>& a, const std::vector<NCPoly>& b) {
    auto ra = detail::row_reduce(a, detail::canonical_order());
    auto rb = detail::row_reduce(b, detail::canonical_order());
    return ra == rb;
}

inline bool in_span(const NCPoly& p, const std::vector<NCPoly>& rels) {
    auto basis = detail::row_reduce(rels, detail::canonical_order());
    NCPoly q = p;
    for (const auto& row : basis) {
        if (q.is_zero()) break;
        RatFunc c = q.coeff(row.leading_word(detail::canonical_order()));
        if (!c.is_zero()) q -= c * row;
    }
    return q.is_zero();
}

// Row-reduce under `order` and orient each basis relation with its leading
// word on the left. Leading words must be quadratic, per the straightening
// form of the relation sets handled here.
inline std::vector<RewriteRule> orient(const std::vector<NCPoly>& rels, const WordOrder& order) {
    auto basis = detail::row_reduce(rels, order);
    std::vector<RewriteRule> rules;
    std::map<Word, bool, NCPoly::WordLess> seen;
    for (const auto& row : basis) {
        Word lw = row.leading_word(order);
        if (lw.size() != 2)
            throw domain_error("orient: leading word '" + lw + "' is not quadratic");
        if (seen.count(lw)) throw domain_error("orient: duplicate leading word '" + lw + "'");
        seen[lw] = true;
        NCPoly rhs = NCPoly::term(lw, 1) - row; // row is monic
        rules.push_back({lw, rhs});
    }
    return rules;
}

// Repeatedly replace the leftmost-outermost occurrence of any rule lhs inside
// the terms of p until irreducible. Throws budget_error when max_steps
// rewrites were not enough, which can signal a non-terminating orientation.
inline NCPoly reduce(const NCPoly& p, const std::vector<RewriteRule>& rules, int max_steps = 10000) {
    if (max_steps <= 0) throw error("reduce: max_steps must be positive");
    NCPoly cur = p;
    int steps = 0;
    while (true) {
        const RewriteRule* hit = nullptr;
        Word word;
        std::size_t pos = 0;
        // terms are scanned largest-first so the reduction path is deterministic
        for (auto it = cur.terms().rbegin(); it != cur.terms().rend() && !hit; ++it) {
            const Word& w = it->first;
            for (std::size_t at = 0; at < w.size() && !hit; ++at)
                for (const auto& rule : rules)
                    if (at + rule.lhs.size() <= w.size() &&
                        w.compare(at, rule.lhs.size(), rule.lhs) == 0) {
                        hit = &rule;
                        word = w;
                        pos = at;
                        break;
                    }
        }
        if (!hit) return cur;
        if (++steps > max_steps)
            throw budget_error("reduce: step budget exhausted (non-termination or non-confluence)");
        RatFunc c = cur.coeff(word);
        Word prefix = word.substr(0, pos);
        Word suffix = word.substr(pos + hit->lhs.size());
        NCPoly replacement;
        for (const auto& [w2, c2] : hit->rhs.terms())
            replacement += NCPoly::term(prefix + w2 + suffix, c2);
        cur -= NCPoly::term(word, c);
        cur += c * replacement;
    }
}

// All words of the given degree containing no rule lhs as a subword.
inline std::vector<Word> normal_words(const std::vector<RewriteRule>& rules, int deg) {
    if (deg < 0) throw error("normal_words: degree must be nonnegative");
    std::vector<Word> acc{Word()};
    for (int d = 0; d < deg; ++d) {
        std::vector<Word> next;
        for (const Word& w : acc)
            for (char g : kGenerators) {
                Word cand = w + g;
                bool ok = true;
                for (const auto& rule : rules) {
                    if (cand.size() >= rule.lhs.size() &&
                        cand.compare(cand.size() - rule.lhs.size(), rule.lhs.size(), rule.lhs) == 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok) next.push_back(cand);
            }
        acc = std::move(next);
    }
    return acc;
}

// JSON form: [{"coeff": expr, "word": ["b","a"]}, ...]. Words must be arrays
// of generator names; a bare string like "ba" is rejected.
inline nlohmann::json ncpoly_to_json(const NCPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, c] : p.terms()) {
        nlohmann::json word = nlohmann::json::array();
        for (char g : w) word.push_back(std::string(1, g));
        arr.push_back({{"coeff", c.str()}, {"word", word}});
    }
    return arr;
}

inline NCPoly ncpoly_from_json(const nlohmann::json& j, const std::vector<Symbol>& params) {
    if (!j.is_array()) throw error("relation JSON: expected an array of {coeff, word}");
    NCPoly p;
    for (const auto& item : j) {
        if (!item.contains("coeff") || !item.contains("word"))
            throw error("relation JSON: expected {coeff, word} objects");
        const auto& wj = item.at("word");
        if (!wj.is_array())
            throw error("relation JSON: word must be an array of generator names, not a string");
        Word w;
        for (const auto& g : wj) {
            std::string s = g.get<std::string>();
            if (s.size() != 1) throw error("relation JSON: bad generator '" + s + "'");
            gen_index(s[0]);
            w += s[0];
        }
        p += NCPoly::term(w, parse_expr(item.at("coeff").get<std::string>(), params));
    }
    return p;
}

} // namespace qhd
