// Substitutions, relation spans and the subspace limit.
#include "qh/contract.hpp"
#include "qh/grgroup.hpp"
#include "qh/random.hpp"

#include <doctest.h>

using namespace qh;
using namespace qh::gr;

namespace {

const Coeff f = Coeff::contraction_f();

// Rank over Q of the rows evaluated at (q, h), by plain Gaussian
// elimination; an independent oracle for the fraction-free rank.
std::size_t rank_at(const CoeffRows& rows, const Rat& qv, const Rat& hv) {
    std::vector<std::vector<Rat>> m;
    for (const auto& row : rows) {
        std::vector<Rat> r;
        for (const auto& c : row) r.push_back(c.evaluate(qv, hv));
        m.push_back(std::move(r));
    }
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const Rat factor = m[i][c] / m[rank][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::size_t generic_rank(const CoeffRows& rows) {
    std::size_t best = 0;
    for (const auto& [qv, hv] : std::vector<std::pair<Rat, Rat>>{
             {Rat(3), Rat(5)}, {Rat(-7, 2), Rat(2, 3)}, {Rat(11, 5), Rat(-4)}, {Rat(13), Rat(1, 7)}})
        best = std::max(best, rank_at(rows, qv, hv));
    return best;
}

std::vector<Element> substituted_q_relations() {
    std::vector<Element> rels;
    for (const auto& r : gr_q2().relations) rels.push_back(apply_subst(r, subst_q_to_h()));
    return rels;
}

}  // namespace

TEST_CASE("substitution examples") {
    const auto& qa = gr_q2().alphabet;
    const auto& ha = gr_h2().alphabet;
    const auto gp = Element::gen(qa, "gamma'");
    const auto dp = Element::gen(qa, "delta'");
    const auto ga = Element::gen(ha, "gamma");
    const auto de = Element::gen(ha, "delta");
    const Element got = apply_subst(gp * dp + scale(Coeff::q_inv(), dp * gp), subst_q_to_h());
    CHECK(got == ga * de + scale(Coeff::q_inv(), de * ga) - scale(f * (Coeff(1) + Coeff::q_inv()), ga * ga));

    const auto& pa = q_plane().algebra.alphabet;
    const auto& ha2 = h_plane().algebra.alphabet;
    const auto xp = Element::gen(pa, "x'");
    const auto yp = Element::gen(pa, "y'");
    const auto x = Element::gen(ha2, "x");
    const auto y = Element::gen(ha2, "y");
    CHECK(apply_subst(xp * yp - scale(Coeff::q(), yp * xp), plane_subst()) ==
          x * y - scale(Coeff::q(), y * x) + scale(f - Coeff::q() * f, y * y));
}

TEST_CASE("identity substitution and errors") {
    const auto& ha = gr_h2().alphabet;
    Substitution id{ha, ha, {}};
    for (const auto& g : ha->generators()) id.set(g.name, Element::gen(ha, g.name));
    rnd::Engine rng(23);
    for (int i = 0; i < 50; ++i) {
        const auto e = rnd::element(rng, ha, 3);
        CHECK(apply_subst(e, id) == e);
    }
    CHECK(id.linear_part() == ScalMat::identity(4));

    Substitution partial{ha, ha, {}};
    partial.set("alpha", Element::gen(ha, "beta"));
    CHECK_THROWS_AS(apply_subst(Element::gen(ha, "gamma"), partial), MissingImage);
    CHECK_THROWS_AS(partial.set("beta", Element::gen(ha, "beta") * Element::gen(ha, "beta")), DegreeError);
}

TEST_CASE("substitution respects products") {
    rnd::Engine rng(29);
    for (int i = 0; i < 100; ++i) {
        const auto a = rnd::element(rng, gr_q2().alphabet, 2, 3);
        const auto b = rnd::element(rng, gr_q2().alphabet, 2, 3);
        CHECK(apply_subst(a * b, subst_q_to_h()) == apply_subst(a, subst_q_to_h()) * apply_subst(b, subst_q_to_h()));
    }
}

TEST_CASE("the two changes of basis are mutually inverse") {
    const auto there_and_back = compose(subst_q_to_h(), subst_h_to_q());
    for (const auto& g : gr_q2().alphabet->generators())
        CHECK(there_and_back.images.at(g.id) == Element::gen(gr_q2().alphabet, g.name));
    const auto back_and_there = compose(subst_h_to_q(), subst_q_to_h());
    for (const auto& g : gr_h2().alphabet->generators())
        CHECK(back_and_there.images.at(g.id) == Element::gen(gr_h2().alphabet, g.name));
    CHECK_THROWS(compose(subst_q_to_h(), subst_q_to_h()));
}

TEST_CASE("relation span ranks") {
    const auto s10 = relation_span(gr_q2().alphabet, gr_q2().relations);
    const auto s7 = relation_span(gr_h2().alphabet, gr_h2().relations);
    CHECK(s10.basis.size() == 16);
    CHECK(s10.rank() == 10);
    CHECK(s7.rank() == 10);
    CHECK(generic_rank(s10.rows) == 10);
    CHECK(generic_rank(s7.rows) == 10);
    CHECK(relation_span(gr_h2().alphabet, {}).rows.empty());
    CHECK_THROWS_AS(relation_span(gr_h2().alphabet, {Element::gen(gr_h2().alphabet, "alpha")}), DegreeError);
}

TEST_CASE("fraction-free rank matches evaluation at rational points") {
    rnd::Engine rng(31);
    const auto& a = gr_h2().alphabet;
    for (int i = 0; i < 100; ++i) {
        std::vector<Element> rels;
        const auto n = 1 + rng() % 6;
        for (std::size_t k = 0; k < n; ++k) {
            Element e(a);
            for (int t = 0; t < 3; ++t)
                e.add_term({static_cast<GenId>(rng() % 4), static_cast<GenId>(rng() % 4)}, rnd::coeff(rng));
            rels.push_back(e);
        }
        // Repeat a combination so some spans are rank deficient.
        if (rels.size() > 2) rels.push_back(rels[0] + scale(Coeff::h(), rels[1]));
        const auto sp = relation_span(a, rels);
        CHECK(sp.rank() == generic_rank(sp.rows));
    }
}

TEST_CASE("subspace limit of the substituted relations") {
    const auto sp = relation_span(gr_h2().alphabet, substituted_q_relations());
    const auto lim = limit_span(sp);
    CHECK(sp.rank() == 10);
    CHECK(lim.rank() == 10);
    CHECK(span_equal(lim, relation_span(gr_h2().alphabet, gr_h2().relations)));
    for (const auto& row : lim.rows)
        for (const auto& c : row) CHECK(c.is_q_free());
}

TEST_CASE("naive termwise limits fail where the subspace limit succeeds") {
    // At least one substituted relation has a pole at q = 1 on its own.
    bool some_pole = false;
    for (const auto& r : substituted_q_relations())
        for (const auto& [w, c] : r.terms()) some_pole |= c.valuation_q1() < 0;
    CHECK(some_pole);
}

TEST_CASE("plane contractions") {
    std::vector<Element> rels;
    for (const auto& r : q_plane().algebra.relations) rels.push_back(apply_subst(r, plane_subst()));
    const auto lim = limit_span(relation_span(h_plane().algebra.alphabet, rels));
    const auto& ha = h_plane().algebra.alphabet;
    const auto x = Element::gen(ha, "x");
    const auto y = Element::gen(ha, "y");
    CHECK(span_equal(lim, relation_span(ha, {x * y - y * x - scale(Coeff::h(), y * y)})));

    std::vector<Element> drels;
    for (const auto& r : q_dual_plane().algebra.relations) drels.push_back(apply_subst(r, dual_plane_subst()));
    const auto& da = h_dual_plane().algebra.alphabet;
    const auto dlim = limit_span(relation_span(da, drels));
    const auto eta = Element::gen(da, "eta");
    const auto xi = Element::gen(da, "xi");
    CHECK(span_equal(dlim, relation_span(da, {xi * xi, eta * xi + xi * eta, eta * eta - scale(Coeff::h(), eta * xi)})));
}

TEST_CASE("a q-free span is its own limit") {
    const auto s7 = relation_span(gr_h2().alphabet, gr_h2().relations);
    CHECK(span_equal(limit_span(s7), s7));
}

TEST_CASE("span comparison") {
    const auto s7 = relation_span(gr_h2().alphabet, gr_h2().relations);
    std::vector<Element> scaled;
    for (const auto& r : gr_h2().relations) scaled.push_back(scale(Coeff::h() + Coeff(1), r));
    CHECK(span_equal(s7, relation_span(gr_h2().alphabet, scaled)));

    const auto s10 = relation_span(gr_q2().alphabet, gr_q2().relations);
    CHECK_FALSE(span_equal(s10, s7));
    CoeffRows both = s10.rows;
    both.insert(both.end(), s7.rows.begin(), s7.rows.end());
    CHECK(rank_of(both) > 10);

    const auto empty = relation_span(gr_h2().alphabet, {});
    CHECK(span_equal(empty, empty));
}
