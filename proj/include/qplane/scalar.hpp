#pragma once

// Scalar layer: arbitrary-precision rationals, Gaussian rationals and finite
// Laurent polynomials in the deformation parameter q.  Everything here is
// exact; floating point enters only through eval().

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qplane {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation at q = 0 while a negative q-exponent is present.
struct ZeroQError : Error {
    using Error::Error;
};

// Representation dimension too small (< 2) or otherwise unusable.
struct BadDimError : Error {
    using Error::Error;
};

// Series substitution fed an operator whose stated power does not vanish.
struct NotNilpotentError : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    std::size_t column;  // 1-based position in the input text
    SyntaxError(const std::string& what, std::size_t col)
        : Error(what + " (column " + std::to_string(col) + ")"), column(col) {}
};

double to_double(const Rational& v);

// base^e for BigInt e; e < 0 requires base != 0.
Rational rational_pow(const Rational& base, const BigInt& e);

std::string rational_str(const Rational& v);

// a + b*i with exact rational components.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(int v) : re(v) {}  // NOLINT: implicit by design
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    // |a+bi|^2; the modulus itself is generally irrational.
    Rational abs_squared() const { return re * re + im * im; }

    GaussianRational conj() const { return {re, -im}; }
    Complex to_complex() const { return {to_double(re), to_double(im)}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    GaussianRational pow(unsigned n) const;

    // "p/r", "p/r+s/t*i", "p/r-s/t*i"; pure-real values print without the i part.
    std::string str() const;
};

// Finite sum of c * q^e with Gaussian-rational c and BigInt exponent e.
// The term map never stores zero coefficients, so comparing term maps is a
// complete equality test.
class QScalar {
  public:
    QScalar() = default;
    QScalar(int v) { *this = QScalar(GaussianRational(v)); }  // NOLINT
    QScalar(Rational v) { *this = QScalar(GaussianRational(std::move(v))); }
    QScalar(GaussianRational c) {
        if (!c.is_zero()) terms_[0] = std::move(c);
    }

    static QScalar q_power(BigInt e, GaussianRational c = GaussianRational(1));

    const std::map<BigInt, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }

    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o);
    QScalar& operator*=(const QScalar& o);

    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
    friend QScalar operator-(const QScalar& a);
    friend bool operator==(const QScalar& a, const QScalar& b) { return a.terms_ == b.terms_; }

    // Numeric substitution.  Throws ZeroQError when q == 0 meets a negative
    // exponent; q == 0 with nonnegative exponents is fine (q^0 == 1).
    Complex eval(Complex q) const;

    // Exact substitution at rational q (nonzero when negative exponents occur).
    GaussianRational eval_rational(const Rational& q) const;

    // Sum of "c*q^e" terms, ascending exponent: "1 + q^2", "q^-3", "-2*q".
    std::string str() const;

  private:
    void add_term(const BigInt& e, const GaussianRational& c);
    std::map<BigInt, GaussianRational> terms_;
};

// Rejects NaN/inf inputs to numeric kernels.
void ensure_finite(Complex v, const char* what);
void ensure_finite(double v, const char* what);

// [lo, hi] with lo^2 <= v <= hi^2 and hi - lo <= v_scale * 2^-low_bits.
// exact is set when v is a perfect rational square.
struct SqrtBracket {
    Rational lo, hi;
    std::optional<Rational> exact;
};
SqrtBracket rational_sqrt_bracket(const Rational& v, unsigned low_bits = 64);

}  // namespace qplane
