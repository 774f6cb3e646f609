#pragma once

// Truncated operators on the span of e_0..e_(N-1): the one-sided shifts E
// (superdiagonal) and F (subdiagonal), the diagonal D = diag(1, q, q^2, ...),
// and the two representation families
//   pi_lambda:   x -> E,        y -> lambda D
//   pi'_mu:      x -> mu D,     y -> F
// Matrices are dense but multiplication skips structural zeros, so banded
// products stay cheap.  Generator bands are one-sided (x-degree sets the
// diagonal offset), which makes truncated products agree with truncations of
// the untruncated products entrywise.

#include "qplane/plane.hpp"
#include "qplane/poly.hpp"

#include <span>
#include <vector>

namespace qplane {

template <typename S>
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(int dim) : n_(dim), a_(static_cast<std::size_t>(dim) * dim, S(0)) {
        if (dim < 1) throw BadDimError("Matrix: dimension must be positive");
    }

    static Matrix identity(int dim) {
        Matrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = S(1);
        return m;
    }

    int dim() const { return n_; }

    S& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const S& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    bool is_zero() const {
        for (const S& v : a_)
            if (!scalar_is_zero(v)) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        check_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = a_[k] + o.a_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        check_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = a_[k] - o.a_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check_dim(b);
        Matrix out(a.n_);
        for (int i = 0; i < a.n_; ++i) {
            for (int k = 0; k < a.n_; ++k) {
                const S& aik = a.at(i, k);
                if (scalar_is_zero(aik)) continue;
                for (int j = 0; j < a.n_; ++j) {
                    const S& bkj = b.at(k, j);
                    if (scalar_is_zero(bkj)) continue;
                    out.at(i, j) = out.at(i, j) + aik * bkj;
                }
            }
        }
        return out;
    }

    Matrix scaled(const S& v) const {
        Matrix out(n_);
        for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * v;
        return out;
    }

    Matrix pow(unsigned e) const {
        Matrix acc = identity(n_), b = *this;
        while (e > 0) {
            if (e & 1u) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t k = 0; k < a.a_.size(); ++k)
            if (!(a.a_[k] == b.a_[k])) return false;
        return true;
    }

    std::vector<S> row(int i) const {
        std::vector<S> out(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(j)] = at(i, j);
        return out;
    }

    std::vector<S> column(int j) const {
        std::vector<S> out(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = at(i, j);
        return out;
    }

  private:
    void check_dim(const Matrix& o) const {
        if (n_ != o.n_) throw BadDimError("Matrix: dimension mismatch");
    }
    int n_ = 0;
    std::vector<S> a_;
};

using QMatrix = Matrix<QScalar>;
using CMatrix = Matrix<Complex>;

enum class RepFamily { PiLambda, PiPrimeMu };

template <typename S>
struct Generators {
    RepFamily family = RepFamily::PiLambda;
    Matrix<S> X, Y;
};

// Symbolic generators at dimension dim >= 2; param is lambda (PiLambda) or
// mu (PiPrimeMu).
Generators<QScalar> build_generators(RepFamily family, const GaussianRational& param, int dim);

// Numeric generators with q substituted.
Generators<Complex> build_generators(RepFamily family, Complex param, Complex q, int dim);

// Monomial-wise substitution y^k x^l -> Y^k * X^l, extended linearly.
QMatrix rep_apply(const Generators<QScalar>& g, const PlaneElement& a);
CMatrix rep_apply(const Generators<Complex>& g, const PlaneElement& a, Complex q);

template <typename S>
std::vector<S> first_row(const Matrix<S>& m) {
    return m.row(0);
}

template <typename S>
std::vector<S> first_column(const Matrix<S>& m) {
    return m.column(0);
}

// PiLambda generators truncated to the upper-triangular algebra of order p:
// X = E_p, Y = lambda D_p.  X*Y is strictly upper triangular, so (X*Y)^p = 0.
Generators<QScalar> upper_triangular_generators(int p, const GaussianRational& lambda);

// sum_(n<p) coeffs[n] b^n after verifying b^p == 0 (NotNilpotentError if not).
// Terms beyond p-1 vanish, so any series truncation >= p gives the same value.
template <typename S>
Matrix<S> nilpotent_series_substitute(std::span<const S> coeffs, const Matrix<S>& b, int p) {
    if (p < 1) throw Error("nilpotent_series_substitute: p must be >= 1");
    if (!b.pow(static_cast<unsigned>(p)).is_zero())
        throw NotNilpotentError("nilpotent_series_substitute: b^p != 0");
    Matrix<S> acc(b.dim());
    Matrix<S> bp = Matrix<S>::identity(b.dim());
    std::size_t count = std::min(coeffs.size(), static_cast<std::size_t>(p));
    for (std::size_t n = 0; n < count; ++n) {
        acc += bp.scaled(coeffs[n]);
        if (n + 1 < count) bp = bp * b;
    }
    return acc;
}

double row_sum_norm(const CMatrix& m);

struct GrowthPoint {
    int n = 0;
    double estimate = 0.0;   // ||pi(u)^n||^(1/n), row-sum norm
    double reference = 0.0;  // |q|^((n+1)/2) * (||Y|| ||X||)^(1/n)
};

std::vector<GrowthPoint> growth_profile(RepFamily family, Complex param, Complex q, int dim,
                                        int n_max);

}  // namespace qplane
