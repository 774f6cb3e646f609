#include "qplane/randomgen.hpp"

namespace qplane {

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
    // splitmix64 on the combined value.
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational random_rational(Rng& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

GaussianRational random_gaussian(Rng& rng, bool allow_imag) {
    for (;;) {
        GaussianRational g(random_rational(rng));
        if (allow_imag && (rng() & 1u)) g.im = random_rational(rng);
        if (!g.is_zero()) return g;
    }
}

QScalar random_qscalar(Rng& rng, int max_terms, int max_exp) {
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> exp(-max_exp, max_exp);
    QScalar out;
    int n = terms(rng);
    for (int t = 0; t < n; ++t) out += QScalar::q_power(exp(rng), random_gaussian(rng));
    return out;
}

PlaneElement random_plane_element(Rng& rng, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> terms(1, max_terms);
    PlaneElement out;
    int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m{deg(rng), deg(rng)};
        out += PlaneElement::monomial(m, random_qscalar(rng));
    }
    return out;
}

OmegaUElement random_omega_element(Rng& rng, int max_letter, int max_level, int max_terms) {
    std::uniform_int_distribution<int> letter(1, max_letter);
    std::uniform_int_distribution<int> level(0, max_level);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> terms(1, max_terms);
    OmegaUElement out;
    int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        QScalar c = random_qscalar(rng);
        switch (kind(rng)) {
            case 0:
                out.add_pure(level(rng), c);
                break;
            case 1:
                out.add_x(letter(rng), level(rng), c);
                break;
            default:
                out.add_y(letter(rng), level(rng), c);
                break;
        }
    }
    return out;
}

CPoly random_cpoly(Rng& rng, int max_deg, double scale) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_real_distribution<double> box(-scale, scale);
    std::vector<Complex> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = Complex(box(rng), box(rng));
    return CPoly(std::move(c));
}

std::vector<std::pair<CPoly, CPoly>> random_pair_levels(Rng& rng, int levels, int max_deg,
                                                        double scale) {
    std::vector<std::pair<CPoly, CPoly>> out;
    out.reserve(static_cast<std::size_t>(levels));
    for (int n = 0; n < levels; ++n) {
        CPoly f = random_cpoly(rng, max_deg, scale);
        CPoly g = random_cpoly(rng, max_deg, scale);
        g.set_coefficient(0, f.coefficient(0));  // glue f(0) == g(0)
        out.emplace_back(std::move(f), std::move(g));
    }
    return out;
}

std::vector<GaussianRational> random_nonneg_series(Rng& rng, int length, int max_num,
                                                   int max_den) {
    std::uniform_int_distribution<int> num(0, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    std::vector<GaussianRational> out(static_cast<std::size_t>(length));
    for (auto& v : out) v = GaussianRational(Rational(num(rng), den(rng)));
    return out;
}

std::vector<Complex> random_complex_series(Rng& rng, int length, double scale) {
    std::uniform_real_distribution<double> box(-scale, scale);
    std::vector<Complex> out(static_cast<std::size_t>(length));
    for (auto& v : out) v = Complex(box(rng), box(rng));
    return out;
}

}  // namespace qplane
