#include "qplane/scalar.hpp"

#include <cmath>
#include <sstream>

namespace qplane {

double to_double(const Rational& v) { return v.convert_to<double>(); }

Rational rational_pow(const Rational& base, const BigInt& e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw Error("rational_pow: 0 raised to a negative power");
        return Rational(0);
    }
    BigInt n = e < 0 ? BigInt(-e) : e;
    Rational b = e < 0 ? Rational(1) / base : base;
    Rational acc(1);
    while (n > 0) {
        if ((n & 1) != 0) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

std::string rational_str(const Rational& v) {
    std::ostringstream os;
    os << numerator(v);
    if (denominator(v) != 1) os << '/' << denominator(v);
    return os.str();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational GaussianRational::pow(unsigned n) const {
    GaussianRational acc(1), b = *this;
    while (n > 0) {
        if (n & 1u) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

std::string GaussianRational::str() const {
    if (im == 0) return rational_str(re);
    std::string s = rational_str(re);
    if (im > 0) {
        s += "+" + rational_str(im) + "*i";
    } else {
        s += "-" + rational_str(Rational(-im)) + "*i";
    }
    return s;
}

QScalar QScalar::q_power(BigInt e, GaussianRational c) {
    QScalar s;
    if (!c.is_zero()) s.terms_[std::move(e)] = std::move(c);
    return s;
}

bool QScalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

void QScalar::add_term(const BigInt& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

QScalar& QScalar::operator+=(const QScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QScalar& QScalar::operator*=(const QScalar& o) {
    std::map<BigInt, GaussianRational> prod;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            BigInt e = e1 + e2;
            GaussianRational c = c1 * c2;
            if (c.is_zero()) continue;
            auto it = prod.find(e);
            if (it == prod.end()) {
                prod.emplace(std::move(e), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) prod.erase(it);
            }
        }
    }
    terms_ = std::move(prod);
    return *this;
}

QScalar operator-(const QScalar& a) {
    QScalar r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
}

Complex QScalar::eval(Complex q) const {
    ensure_finite(q, "q");
    Complex acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        if (q == Complex(0.0, 0.0)) {
            if (e < 0) throw ZeroQError("q^e with e < 0 evaluated at q = 0");
            if (e > 0) continue;
            acc += c.to_complex();
            continue;
        }
        // Split the BigInt exponent to stay inside pow(double)'s range.
        Complex p(1.0, 0.0);
        BigInt n = e < 0 ? BigInt(-e) : e;
        Complex base = e < 0 ? Complex(1.0, 0.0) / q : q;
        while (n > 0) {
            long chunk = (n > 512) ? 512 : n.convert_to<long>();
            p *= std::pow(base, static_cast<double>(chunk));
            n -= chunk;
        }
        acc += c.to_complex() * p;
    }
    return acc;
}

GaussianRational QScalar::eval_rational(const Rational& q) const {
    GaussianRational acc;
    for (const auto& [e, c] : terms_) {
        if (q == 0) {
            if (e < 0) throw ZeroQError("q^e with e < 0 evaluated at q = 0");
            if (e > 0) continue;
            acc += c;
            continue;
        }
        Rational p = rational_pow(q, e);
        acc += c * GaussianRational(p);
    }
    return acc;
}

std::string QScalar::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string qpart;
        if (e == 1) {
            qpart = "q";
        } else if (e != 0) {
            qpart = "q^" + e.str();
        }
        std::string term;
        if (qpart.empty()) {
            term = c.str();
        } else if (c.is_one()) {
            term = qpart;
        } else if (c == GaussianRational(-1)) {
            term = "-" + qpart;
        } else if (c.is_real()) {
            term = c.str() + "*" + qpart;
        } else {
            term = "(" + c.str() + ")*" + qpart;
        }
        if (first) {
            out = term;
            first = false;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

void ensure_finite(Complex v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw Error(std::string(what) + ": non-finite value");
}

void ensure_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw Error(std::string(what) + ": non-finite value");
}

SqrtBracket rational_sqrt_bracket(const Rational& v, unsigned low_bits) {
    if (v < 0) throw Error("rational_sqrt_bracket: negative input");
    SqrtBracket out;
    if (v == 0) {
        out.lo = out.hi = 0;
        out.exact = Rational(0);
        return out;
    }
    BigInt num = numerator(v), den = denominator(v);
    BigInt sn = sqrt(num), sd = sqrt(den);
    if (sn * sn == num && sd * sd == den) {
        out.exact = Rational(sn, sd);
        out.lo = out.hi = *out.exact;
        return out;
    }
    // Newton iteration from the double seed; Newton from above converges
    // monotonically, so x stays an upper bound once x^2 >= v.
    double seed = std::sqrt(to_double(v));
    Rational x = seed > 0 && std::isfinite(seed) ? Rational(seed) : v + 1;
    while (x * x < v) x *= 2;
    Rational tol = v / rational_pow(Rational(2), BigInt(low_bits));
    while (true) {
        Rational nx = (x + v / x) / 2;
        if (x - nx < tol && nx * nx >= v) {
            x = nx;
            break;
        }
        x = nx;
    }
    out.hi = x;
    out.lo = v / x;  // (v/x)^2 <= v <= x^2
    return out;
}

}  // namespace qplane
