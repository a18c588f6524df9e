#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "qhd/parser.hpp"
#include "qhd/ratfunc.hpp"

namespace qhd {

// Dense square matrix over RatFunc.
class MatRF {
  public:
    MatRF() : n_(0) {}
    explicit MatRF(std::size_t n) : n_(n), e_(n * n) {}
    MatRF(std::initializer_list<std::initializer_list<RatFunc>> rows) {
        n_ = rows.size();
        e_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw error("matrix initializer is not square");
            for (const auto& v : row) e_.push_back(v);
        }
    }

    static MatRF identity(std::size_t n) {
        MatRF m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    // Flip permutation on the 2-fold tensor square of an n-dim space.
    static MatRF flip(std::size_t n) {
        MatRF m(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) m.at(i * n + k, k * n + i) = 1;
        return m;
    }

    std::size_t dim() const { return n_; }
    RatFunc& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const RatFunc& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!v.is_zero()) return false;
        return true;
    }

    std::set<Symbol> symbols() const {
        std::set<Symbol> out;
        for (const auto& v : e_)
            for (Symbol s : v.symbols()) out.insert(s);
        return out;
    }

    MatRF substitute(const std::map<Symbol, RatFunc>& bindings) const {
        MatRF r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].substitute(bindings);
        return r;
    }

    friend bool operator==(const MatRF& a, const MatRF& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const MatRF& a, const MatRF& b) { return !(a == b); }

    friend MatRF operator+(const MatRF& a, const MatRF& b) {
        check_same_dim(a, b);
        MatRF r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend MatRF operator-(const MatRF& a, const MatRF& b) {
        check_same_dim(a, b);
        MatRF r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend MatRF operator*(const MatRF& a, const RatFunc& c) {
        MatRF r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] * c;
        return r;
    }

    static void check_same_dim(const MatRF& a, const MatRF& b) {
        if (a.n_ != b.n_) throw error("matrix dimension mismatch");
    }

  private:
    std::size_t n_;
    std::vector<RatFunc> e_;
};

inline MatRF matmul(const MatRF& a, const MatRF& b) {
    MatRF::check_same_dim(a, b);
    std::size_t n = a.dim();
    MatRF r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatFunc acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

// Row-major block convention: (A (x) B)[(i*nB+k),(j*nB+l)] = A[i,j]*B[k,l].
inline MatRF kron(const MatRF& a, const MatRF& b) {
    std::size_t na = a.dim(), nb = b.dim();
    MatRF r(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    r.at(i * nb + k, j * nb + l) = a.at(i, j) * b.at(k, l);
    return r;
}

inline RatFunc trace(const MatRF& a) {
    RatFunc t = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) t += a.at(i, i);
    return t;
}

// Determinant by fraction-free Bareiss elimination after clearing row
// denominators.
inline RatFunc det(const MatRF& a) {
    std::size_t n = a.dim();
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
    RatFunc scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial d(1);
        for (std::size_t j = 0; j < n; ++j) d = d * a.at(i, j).den();
        scale = scale * RatFunc(d);
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a.at(i, j).num() * divexact(d, a.at(i, j).den());
    }
    Polynomial prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return RatFunc(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        for (std::size_t i = k + 1; i < n; ++i) m[i][k] = Polynomial();
        prev = m[k][k];
    }
    RatFunc d = RatFunc(m[n - 1][n - 1]) / scale;
    return sign < 0 ? -d : d;
}

// Exact inverse by Gauss-Jordan elimination over the rational-function field.
inline MatRF inverse(const MatRF& a) {
    std::size_t n = a.dim();
    MatRF m = a, inv = MatRF::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw domain_error("matrix is identically singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        RatFunc p = m.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) = m.at(col, j) / p;
            inv.at(col, j) = inv.at(col, j) / p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            RatFunc f = m.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = m.at(i, j) - f * m.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

// How a 2x2 matrix acts on a matrix living on the tensor square.
enum class Orientation {
    GRG,    // (M (x) M) R (M^-1 (x) M^-1)
    MinvRM, // (M^-1 (x) M^-1) R (M (x) M)
};

inline MatRF conj_tensor_square(const MatRF& r, const MatRF& m, Orientation o) {
    if (m.dim() * m.dim() != r.dim())
        throw error("conj_tensor_square: dim(R) must be dim(M)^2");
    MatRF mi = inverse(m);
    MatRF mm = kron(m, m), mimi = kron(mi, mi);
    if (o == Orientation::GRG) return matmul(matmul(mm, r), mimi);
    return matmul(matmul(mimi, r), mm);
}

// P R P with P the flip on the two tensor factors.
inline MatRF r21(const MatRF& r) {
    std::size_t n2 = r.dim();
    std::size_t n = 0;
    while (n * n < n2) ++n;
    if (n * n != n2) throw error("r21: dimension is not a perfect square");
    MatRF p = MatRF::flip(n);
    return matmul(matmul(p, r), p);
}

inline bool is_upper_triangular(const MatRF& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!a.at(i, j).is_zero()) return false;
    return true;
}

inline bool is_lower_triangular(const MatRF& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (!a.at(i, j).is_zero()) return false;
    return true;
}

inline bool is_triangular_matrix(const MatRF& a) {
    return is_upper_triangular(a) || is_lower_triangular(a);
}

// Diagonal entries, which are the eigenvalues for triangular matrices.
inline std::vector<RatFunc> spectrum_diag(const MatRF& a) {
    if (!is_triangular_matrix(a))
        throw domain_error("spectrum_diag: matrix is not triangular");
    std::vector<RatFunc> out;
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.at(i, i));
    return out;
}

// JSON form: {"n": int, "params": [names], "entries": [[expr, ...], ...]}.
inline nlohmann::json matrix_to_json(const MatRF& a) {
    nlohmann::json j;
    j["n"] = a.dim();
    std::vector<std::string> params;
    for (Symbol s : a.symbols()) params.push_back(s.name());
    std::sort(params.begin(), params.end());
    j["params"] = params;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(a.at(i, k).str());
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

inline MatRF matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw error("matrix JSON: expected {n, params, entries}");
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<Symbol> params;
    if (j.contains("params"))
        for (const auto& name : j.at("params")) params.push_back(sym(name.get<std::string>()));
    const auto& rows = j.at("entries");
    if (rows.size() != n) throw error("matrix JSON: row count mismatch");
    MatRF m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw error("matrix JSON: column count mismatch");
        for (std::size_t k = 0; k < n; ++k)
            m.at(i, k) = parse_expr(rows[i][k].get<std::string>(), params);
    }
    return m;
}

} // namespace qhd
