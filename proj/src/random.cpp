#include "qh/random.hpp"

namespace qh::rnd {

namespace {

int uniform(Engine& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rat rational(Engine& rng, int span) {
    Rat r(uniform(rng, -span, span), uniform(rng, 1, 4));
    r.canonicalize();
    return r;
}

QHPoly poly(Engine& rng, int terms, int degree) {
    QHPoly p;
    const int n = uniform(rng, 0, terms);
    for (int i = 0; i < n; ++i) {
        const auto qd = static_cast<std::uint32_t>(uniform(rng, 0, degree));
        const auto hd = static_cast<std::uint32_t>(uniform(rng, 0, degree - static_cast<int>(qd)));
        p += QHPoly::monomial(rational(rng), qd, hd);
    }
    return p;
}

Coeff coeff(Engine& rng) {
    return Coeff(poly(rng), static_cast<std::uint32_t>(uniform(rng, 0, 2)),
                 static_cast<std::uint32_t>(uniform(rng, 0, 2)));
}

Coeff regular_coeff(Engine& rng) {
    const int k = uniform(rng, 0, 2);
    const QHPoly num = poly(rng) * QHPoly::q_minus_1().pow(static_cast<unsigned>(uniform(rng, k, k + 1)));
    return Coeff(num, static_cast<std::uint32_t>(uniform(rng, 0, 2)), static_cast<std::uint32_t>(k));
}

Element element(Engine& rng, const AlphabetPtr& alphabet, std::size_t max_degree, int terms) {
    Element e(alphabet);
    const int n = uniform(rng, 0, terms);
    const int letters = static_cast<int>(alphabet->size()) - 1;
    for (int i = 0; i < n; ++i) {
        Word w(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_degree))));
        for (auto& g : w) g = static_cast<GenId>(uniform(rng, 0, letters));
        e.add_term(w, coeff(rng));
    }
    return e;
}

}  // namespace qh::rnd
