#include "qplane/representations.hpp"

#include <cmath>

namespace qplane {

namespace {

void check_rep_dim(int dim) {
    if (dim < 2) throw BadDimError("build_generators: dimension must be >= 2");
}

template <typename S, typename QPow>
Generators<S> make_generators(RepFamily family, const S& param, int dim, QPow&& q_pow) {
    Generators<S> g;
    g.family = family;
    Matrix<S> shift(dim), diag(dim);
    if (family == RepFamily::PiLambda) {
        // X = E (superdiagonal ones), Y = lambda D.
        for (int i = 0; i + 1 < dim; ++i) shift.at(i, i + 1) = S(1);
        for (int i = 0; i < dim; ++i) diag.at(i, i) = param * q_pow(i);
        g.X = std::move(shift);
        g.Y = std::move(diag);
    } else {
        // X = mu D, Y = F (subdiagonal ones).
        for (int i = 0; i + 1 < dim; ++i) shift.at(i + 1, i) = S(1);
        for (int i = 0; i < dim; ++i) diag.at(i, i) = param * q_pow(i);
        g.X = std::move(diag);
        g.Y = std::move(shift);
    }
    return g;
}

}  // namespace

Generators<QScalar> build_generators(RepFamily family, const GaussianRational& param, int dim) {
    check_rep_dim(dim);
    return make_generators<QScalar>(family, QScalar(param), dim,
                                    [](int k) { return QScalar::q_power(k); });
}

Generators<Complex> build_generators(RepFamily family, Complex param, Complex q, int dim) {
    check_rep_dim(dim);
    ensure_finite(param, "param");
    ensure_finite(q, "q");
    return make_generators<Complex>(family, param, dim, [q](int k) {
        Complex p(1.0, 0.0);
        for (int s = 0; s < k; ++s) p *= q;
        return p;
    });
}

namespace {

// Substitutes monomial-wise with cached generator powers.
template <typename S, typename Coeff>
Matrix<S> rep_apply_impl(const Generators<S>& g, const PlaneElement& a, Coeff&& coeff) {
    const int dim = g.X.dim();
    std::vector<Matrix<S>> xp{Matrix<S>::identity(dim)}, yp{Matrix<S>::identity(dim)};
    auto x_pow = [&](int l) -> const Matrix<S>& {
        while (static_cast<int>(xp.size()) <= l) xp.push_back(xp.back() * g.X);
        return xp[static_cast<std::size_t>(l)];
    };
    auto y_pow = [&](int k) -> const Matrix<S>& {
        while (static_cast<int>(yp.size()) <= k) yp.push_back(yp.back() * g.Y);
        return yp[static_cast<std::size_t>(k)];
    };
    Matrix<S> out(dim);
    for (const auto& [m, c] : a.terms()) {
        S cv = coeff(c);
        if (scalar_is_zero(cv)) continue;
        out += (y_pow(m.y_deg) * x_pow(m.x_deg)).scaled(cv);
    }
    return out;
}

}  // namespace

QMatrix rep_apply(const Generators<QScalar>& g, const PlaneElement& a) {
    return rep_apply_impl(g, a, [](const QScalar& c) { return c; });
}

CMatrix rep_apply(const Generators<Complex>& g, const PlaneElement& a, Complex q) {
    return rep_apply_impl(g, a, [q](const QScalar& c) { return c.eval(q); });
}

Generators<QScalar> upper_triangular_generators(int p, const GaussianRational& lambda) {
    if (p < 1) throw BadDimError("upper_triangular_generators: p must be >= 1");
    Generators<QScalar> g;
    g.family = RepFamily::PiLambda;
    Matrix<QScalar> e(p), d(p);
    for (int i = 0; i + 1 < p; ++i) e.at(i, i + 1) = QScalar(1);
    for (int i = 0; i < p; ++i) d.at(i, i) = QScalar::q_power(i, lambda);
    g.X = std::move(e);
    g.Y = std::move(d);
    return g;
}

double row_sum_norm(const CMatrix& m) {
    double best = 0.0;
    for (int i = 0; i < m.dim(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.dim(); ++j) s += std::abs(m.at(i, j));
        best = std::max(best, s);
    }
    return best;
}

std::vector<GrowthPoint> growth_profile(RepFamily family, Complex param, Complex q, int dim,
                                        int n_max) {
    if (n_max < 1) throw Error("growth_profile: n_max must be >= 1");
    double q_abs = std::abs(q);
    if (!(q_abs > 0) || !(q_abs < 1)) throw Error("growth_profile: need 0 < |q| < 1");
    Generators<Complex> g = build_generators(family, param, q, dim);
    const double gen_norm = row_sum_norm(g.Y) * row_sum_norm(g.X);
    CMatrix u = g.X * g.Y;
    CMatrix un = CMatrix::identity(dim);
    std::vector<GrowthPoint> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        un = un * u;
        GrowthPoint pt;
        pt.n = n;
        pt.estimate = std::pow(row_sum_norm(un), 1.0 / n);
        pt.reference = std::pow(q_abs, 0.5 * (n + 1)) * std::pow(gen_norm, 1.0 / n);
        out.push_back(pt);
    }
    return out;
}

}  // namespace qplane
