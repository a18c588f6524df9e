#pragma once

#include <complex>
#include <vector>

#include "qhd/matrix.hpp"

namespace qhd {

using cplx = std::complex<double>;

// Small dense complex matrix for the floating-point checks.
class NumMat {
  public:
    NumMat() : n_(0) {}
    explicit NumMat(std::size_t n) : n_(n), e_(n * n, cplx(0.0)) {}

    static NumMat identity(std::size_t n) {
        NumMat m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return n_; }
    cplx& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    friend NumMat operator+(const NumMat& a, const NumMat& b) {
        NumMat r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend NumMat operator-(const NumMat& a, const NumMat& b) {
        NumMat r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend NumMat operator*(const NumMat& a, cplx c) {
        NumMat r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] * c;
        return r;
    }
    friend NumMat operator*(cplx c, const NumMat& a) { return a * c; }
    friend NumMat operator*(const NumMat& a, const NumMat& b) {
        NumMat r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t j = 0; j < a.n_; ++j) {
                cplx acc = 0.0;
                for (std::size_t k = 0; k < a.n_; ++k) acc += a.at(i, k) * b.at(k, j);
                r.at(i, j) = acc;
            }
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : e_) m = std::max(m, std::abs(v));
        return m;
    }
    double frobenius() const {
        double s = 0.0;
        for (const auto& v : e_) s += std::norm(v);
        return std::sqrt(s);
    }

  private:
    std::size_t n_;
    std::vector<cplx> e_;
};

inline NumMat kron(const NumMat& a, const NumMat& b) {
    std::size_t na = a.dim(), nb = b.dim();
    NumMat r(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    r.at(i * nb + k, j * nb + l) = a.at(i, j) * b.at(k, l);
    return r;
}

inline NumMat commutator(const NumMat& a, const NumMat& b) { return a * b - b * a; }

inline NumMat eval_matrix(const MatRF& m, const std::map<Symbol, cplx>& point,
                          double den_epsilon = 1e-12) {
    NumMat r(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(i, j).eval(point, den_epsilon);
    return r;
}

} // namespace qhd
