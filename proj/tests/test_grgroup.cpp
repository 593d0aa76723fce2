// Builtins, covariance, inverses and the product theorem.
#include "qh/grgroup.hpp"

#include <doctest.h>

using namespace qh;
using namespace qh::gr;

namespace {

Element gen(const AlgebraSpec& s, const char* name) { return Element::gen(s.alphabet, name); }

bool in_span(const RelationSpan& sp, const std::vector<Element>& extra) {
    CoeffRows rows = sp.rows;
    const auto more = relation_span(sp.alphabet, extra);
    rows.insert(rows.end(), more.rows.begin(), more.rows.end());
    return rank_of(rows) == sp.rank();
}

}  // namespace

TEST_CASE("builtin algebras") {
    CHECK(gr_q2().relations.size() == 10);
    CHECK(gr_h2().relations.size() == 10);
    CHECK(glq2_target().relations.size() == 6);
    CHECK(q_plane().algebra.relations.size() == 1);
    CHECK(h_dual_plane().algebra.relations.size() == 3);
    for (const auto& name : kEntriesH) CHECK(gr_h2().alphabet->find(name).has_value());
    for (const auto& name : kEntriesQ) CHECK(gr_q2().alphabet->find(name).has_value());
    CHECK(&gr_h2() == &gr_h2());
    CHECK(gr_h2_at(Rat(0)).alphabet == gr_h2().alphabet);
    for (const auto& r : gr_h2_at(Rat(0)).relations)
        for (const auto& [w, c] : r.terms()) CHECK((c.qpow() == 0 && c.q1pow() == 0 && c.num().is_constant()));
}

TEST_CASE("change-of-basis matrix") {
    const auto g = g_matrix();
    CHECK(g(0, 0).is_one());
    CHECK(g(0, 1) == Coeff::contraction_f());
    CHECK(g(1, 0).is_zero());
    CHECK(g(1, 1).is_one());
    CHECK(g * inverse(g) == ScalMat::identity(2));
}

TEST_CASE("one covariance direction alone is not enough") {
    const auto rels = covariance_relations(plane_to_dual());
    const auto sp = limit_span(relation_span(gr_h2().alphabet, rels));
    CHECK(sp.rank() < 10);
    const auto c = gen(gr_h2(), "gamma");
    const auto d = gen(gr_h2(), "delta");
    CHECK(in_span(sp, {c * c, c * d + d * c, d * d - scale(Coeff::h(), d * c)}));
}

TEST_CASE("both covariance directions give the h-relations") {
    const auto sp = combined_covariance_span();
    CHECK(sp.rank() == 10);
    CHECK(span_equal(sp, relation_span(gr_h2().alphabet, gr_h2().relations)));
}

TEST_CASE("left inverse") {
    const auto d = inverse_data();
    const auto [left, right] = inverse_residuals(d);
    CHECK(left.is_zero());

    const auto d0 = inverse_data(Rat(0));
    const auto& al = d0.spec.alphabet;
    const auto alpha = Element::gen(al, "alpha");
    const auto beta = Element::gen(al, "beta");
    const auto gamma = Element::gen(al, "gamma");
    const auto delta = Element::gen(al, "delta");
    AlgMat2 expected;
    expected(0, 0) = delta;
    expected(0, 1) = beta;
    expected(1, 0) = -gamma;
    expected(1, 1) = -alpha;
    CHECK(d0.left_inv == expected);
    CHECK(inverse_residuals(d0).first.is_zero());
}

TEST_CASE("right inverse yields the negated determinant at h = 0") {
    // A * A_R^-1 comes out as (gamma beta - alpha delta) I, the negative
    // of the determinant it is paired with.
    const auto d0 = inverse_data(Rat(0));
    const auto& al = d0.spec.alphabet;
    const auto alpha = Element::gen(al, "alpha");
    const auto beta = Element::gen(al, "beta");
    const auto gamma = Element::gen(al, "gamma");
    const auto delta = Element::gen(al, "delta");
    const auto prod = mat_mul(d0.a, d0.right_inv);
    const auto minus_det = normal_form(gamma * beta - alpha * delta, d0.rules);
    CHECK(normal_form(prod(0, 0), d0.rules) == minus_det);
    CHECK(normal_form(prod(1, 1), d0.rules) == minus_det);
    CHECK(normal_form(prod(0, 1), d0.rules).is_zero());
    CHECK(normal_form(prod(1, 0), d0.rules).is_zero());
    CHECK_FALSE(normal_form(d0.det_right + minus_det, d0.rules).is_zero());
    CHECK_FALSE(inverse_residuals(d0).second.is_zero());
}

TEST_CASE("right inverse for generic h") {
    const auto d = inverse_data();
    const auto prod = mat_mul(d.a, d.right_inv);
    // Off-diagonal entry carries an h-dependent remainder.
    CHECK_FALSE(normal_form(prod(0, 1), d.rules).is_zero());
    CHECK(normal_form(prod(1, 0), d.rules).is_zero());
    CHECK(normal_form(prod(0, 0), d.rules) == normal_form(prod(1, 1), d.rules));
}

TEST_CASE("determinant identity residuals") {
    CHECK_FALSE(verify_det_identity());
    CHECK_FALSE(verify_det_identity(Rat(0)));
    const auto d = inverse_data();
    CHECK_FALSE(det_identity_residual(d).is_zero());
    CHECK_FALSE(det_identity_residual(d, true).is_zero());
}

TEST_CASE("product theorem") {
    const auto checks = product_theorem();
    CHECK(checks.size() == 6);
    for (const auto& c : checks) {
        INFO(c.name << ": " << c.residual.str());
        CHECK(c.holds());
    }
    const auto& p = product_data();
    for (const auto* e : {&p.a, &p.b, &p.c, &p.d})
        for (const auto& [w, c] : e->terms()) CHECK(w.size() % 2 == 0);
}
