// Orientation, normal forms and the confluence check.
#include "qh/grgroup.hpp"
#include "qh/random.hpp"
#include "qh/rewrite.hpp"

#include <doctest.h>

using namespace qh;
using gr::gr_h2;
using gr::gr_q2;
using gr::rules_h;
using gr::rules_q;

namespace {

// Reference reducer: rewrites a uniformly random redex of a random
// reducible word until nothing is reducible. Shares only the rule table
// with normal_form.
Element random_reduce(Element e, const RuleSystem& rs, rnd::Engine& rng) {
    while (true) {
        std::vector<std::pair<Word, std::size_t>> redexes;
        for (const auto& [w, c] : e.terms())
            for (std::size_t p = 0; p + 1 < w.size(); ++p)
                if (rs.rule_for({w[p], w[p + 1]})) redexes.emplace_back(w, p);
        if (redexes.empty()) return e;
        const auto [w, p] = redexes[rng() % redexes.size()];
        const Coeff c = e.coeff(w);
        const Element prefix = Element::word(e.alphabet(), Word(w.begin(), w.begin() + p));
        const Element suffix = Element::word(e.alphabet(), Word(w.begin() + p + 2, w.end()));
        e -= Element::word(e.alphabet(), w, c);
        e += scale(c, prefix * *rs.rule_for({w[p], w[p + 1]}) * suffix);
    }
}

Element g(const AlgebraSpec& s, const char* name) { return Element::gen(s.alphabet, name); }

}  // namespace

TEST_CASE("rules for the q-relations") {
    const auto& rs = rules_q();
    const auto a = g(gr_q2(), "alpha'");
    const auto b = g(gr_q2(), "beta'");
    const auto c = g(gr_q2(), "gamma'");
    const auto d = g(gr_q2(), "delta'");
    CHECK(rs.rules().size() == 10);
    const auto* da = rs.rule_for({d.leading_word()[0], a.leading_word()[0]});
    REQUIRE(da);
    CHECK(*da == -(a * d));
    const auto* cb = rs.rule_for({c.leading_word()[0], b.leading_word()[0]});
    REQUIRE(cb);
    CHECK(*cb == normal_form(-(b * c) + scale(Coeff::q() - Coeff::q_inv(), d * a), rs));
}

TEST_CASE("every defining relation reduces to zero") {
    for (const auto* rs : {&rules_q(), &rules_h()})
        for (const auto& r : rs->spec().relations) CHECK(normal_form(r, *rs).is_zero());
}

TEST_CASE("normal form examples") {
    const auto a = g(gr_q2(), "alpha'");
    const auto b = g(gr_q2(), "beta'");
    CHECK(normal_form(a * a, rules_q()).is_zero());
    CHECK(normal_form(a * b + scale(Coeff::q_inv(), b * a), rules_q()).is_zero());

    // delta alpha -> -alpha delta + h gamma alpha - h delta gamma, then
    // delta gamma -> -gamma delta.
    const auto al = g(gr_h2(), "alpha");
    const auto ga = g(gr_h2(), "gamma");
    const auto de = g(gr_h2(), "delta");
    const auto h = Coeff::h();
    const Element expected = -(al * de) + scale(h, ga * al) + scale(h, ga * de);
    CHECK(normal_form(de * al, rules_h()) == expected);
    rnd::Engine rng(1);
    CHECK(random_reduce(de * al, rules_h(), rng) == expected);
}

TEST_CASE("six normal words in degree two") {
    CHECK(normal_words(rules_q(), 2).size() == 6);
    CHECK(normal_words(rules_h(), 2).size() == 6);
}

TEST_CASE("normal form agrees with a random-strategy reducer") {
    rnd::Engine rng(17);
    for (int i = 0; i < 200; ++i) {
        const RuleSystem& rs = i % 2 ? rules_q() : rules_h();
        const auto e = rnd::element(rng, rs.alphabet(), 4);
        CHECK(normal_form(e, rs) == random_reduce(e, rs, rng));
    }
}

TEST_CASE("idempotence, linearity and multiplicativity on random elements") {
    rnd::Engine rng(19);
    for (int i = 0; i < 1000; ++i) {
        const RuleSystem& rs = i % 2 ? rules_q() : rules_h();
        const auto a = rnd::element(rng, rs.alphabet(), 2);
        const auto b = rnd::element(rng, rs.alphabet(), 2);
        const auto na = normal_form(a, rs);
        const auto nb = normal_form(b, rs);
        CHECK(normal_form(na, rs) == na);
        CHECK(normal_form(a + b, rs) == normal_form(na + nb, rs));
        CHECK(normal_form(a * b, rs) == normal_form(na * nb, rs));
    }
}

TEST_CASE("confluence of the builtin systems") {
    CHECK(check_confluence(rules_q(), 4).empty());
    CHECK(check_confluence(rules_h(), 4).empty());
    CHECK_THROWS(check_confluence(rules_q(), 2));
}

TEST_CASE("commuting plane is confluent") {
    const auto a = make_alphabet({{"x", Parity::even, "P", 0}, {"y", Parity::even, "P", 1}});
    const auto x = Element::gen(a, "x");
    const auto y = Element::gen(a, "y");
    const RuleSystem rs(AlgebraSpec{"plane", a, {x * y - y * x}});
    CHECK(rs.rules().size() == 1);
    CHECK(check_confluence(rs, 4).empty());
}

TEST_CASE("an overlap that does not resolve is reported") {
    // yx -> xx and yy -> 0: (yy)x -> 0 but y(yx) -> xxx.
    const auto a = make_alphabet({{"x", Parity::even, "P", 0}, {"y", Parity::even, "P", 1}});
    const auto x = Element::gen(a, "x");
    const auto y = Element::gen(a, "y");
    const RuleSystem rs(AlgebraSpec{"bad", a, {y * x - x * x, y * y}});
    const auto w = check_confluence(rs, 3);
    REQUIRE_FALSE(w.empty());
    CHECK(w.front().str(*a).find("y*y*x") != std::string::npos);
}

TEST_CASE("orientation needs a unit leading coefficient") {
    const auto a = make_alphabet({{"x", Parity::even, "P", 0}, {"y", Parity::even, "P", 1}});
    const auto x = Element::gen(a, "x");
    const auto y = Element::gen(a, "y");
    CHECK_THROWS_AS(RuleSystem(AlgebraSpec{"p", a, {scale(Coeff::q() + Coeff(1), y * x) - x * x}}),
                    OrientationFailure);
    CHECK_THROWS_AS(RuleSystem(AlgebraSpec{"p", a, {scale(Coeff::h(), y * y) - x * y}}), OrientationFailure);
    CHECK_NOTHROW(RuleSystem(AlgebraSpec{"p", a, {scale(Coeff::q(), y * x) - x * x}}));
}

TEST_CASE("cross-family signs become swap rules") {
    const auto a = make_alphabet({{"u", Parity::odd, "F", 0}, {"v", Parity::odd, "G", 1}}, {{{"F", "G"}, -1}});
    const auto u = Element::gen(a, "u");
    const auto v = Element::gen(a, "v");
    const RuleSystem rs(AlgebraSpec{"pair", a, {}});
    CHECK(normal_form(v * u, rs) == -(u * v));
    CHECK(normal_form(v * v * u, rs) == u * v * v);
}
