#pragma once

// Dense univariate polynomials over an arbitrary coefficient ring; used with
// QScalar coefficients on the exact side and complex doubles on the numeric
// side.  Trailing zeros are always trimmed, so degree() is canonical.

#include "qplane/scalar.hpp"

#include <vector>

namespace qplane {

inline bool scalar_is_zero(const QScalar& v) { return v.is_zero(); }
inline bool scalar_is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
inline bool scalar_is_zero(const Rational& v) { return v == 0; }
inline bool scalar_is_zero(const GaussianRational& v) { return v.is_zero(); }

template <typename S>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(S v) { return Poly(std::vector<S>{std::move(v)}); }
    // t^k
    static Poly power(std::size_t k, S v = S(1)) {
        std::vector<S> c(k + 1, S(0));
        c[k] = std::move(v);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Coefficient of t^k, i.e. f^(k)(0)/k! read off exactly.
    S coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : S(0); }

    void set_coefficient(std::size_t k, S v) {
        if (k >= c_.size()) c_.resize(k + 1, S(0));
        c_[k] = std::move(v);
        trim();
    }

    const std::vector<S>& coefficients() const { return c_; }

    template <typename A>
    A eval(const A& t) const {
        A acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + A(c_[k]);
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }

    Poly scaled(const S& v) const {
        std::vector<S> c = c_;
        for (auto& e : c) e = e * v;
        return Poly(std::move(c));
    }

    // f(t) * t^k
    Poly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<S> c(c_.size() + k, S(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            if (!(a.c_[k] == b.c_[k])) return false;
        return true;
    }

  private:
    void trim() {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<S> c_;
};

using QPoly = Poly<QScalar>;
using CPoly = Poly<Complex>;

}  // namespace qplane
