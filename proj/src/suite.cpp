#include "qh/suite.hpp"

#include "qh/grgroup.hpp"
#include "qh/random.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qh::suite {

using namespace qh::gr;

int degree_bound_from_env() {
    const char* raw = std::getenv("QHCONTRACT_DEGREE_BOUND");
    if (!raw || !*raw) return 4;
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(raw, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || raw[used] != '\0' || v < 3 || v > 8)
        throw std::invalid_argument(std::string("QHCONTRACT_DEGREE_BOUND must be an integer in 3..8, got '") +
                                    raw + "'");
    return v;
}

namespace {

Criterion start(int id, std::string title) { return Criterion{id, std::move(title), false, {}}; }

// Substitutes into the relations of `from`, takes the q -> 1 limit of the
// span, and compares with the relations of `expected`.
void check_contraction(Criterion& c, const AlgebraSpec& from, const Substitution& s, const AlgebraSpec& expected) {
    std::vector<Element> rels;
    for (const auto& r : from.relations) rels.push_back(apply_subst(r, s));
    const auto lim = limit_span(relation_span(expected.alphabet, rels));
    const auto want = relation_span(expected.alphabet, expected.relations);
    c.pass = span_equal(lim, want);
    c.details.push_back("limit rank " + std::to_string(lim.rank()) + ", expected rank " +
                        std::to_string(want.rank()));
    for (const auto& e : reduced_basis(lim.elements())) c.details.push_back("limit: " + e.str());
}

}  // namespace

Criterion plane_contraction() {
    auto c = start(1, "plane contraction x'y' - q y'x' -> xy - yx - h y^2");
    check_contraction(c, q_plane().algebra, plane_subst(), h_plane().algebra);
    return c;
}

Criterion dual_plane_contraction() {
    auto c = start(2, "dual plane contraction to the dual h-plane");
    check_contraction(c, q_dual_plane().algebra, dual_plane_subst(), h_dual_plane().algebra);
    return c;
}

Criterion relation_contraction() {
    auto c = start(3, "Gr_q(2) relations contract to the Gr_h(2) relations");
    std::vector<Element> rels;
    for (const auto& r : gr_q2().relations) rels.push_back(apply_subst(r, subst_q_to_h()));
    const auto sp = relation_span(gr_h2().alphabet, rels);
    const auto lim = limit_span(sp);
    const auto want = relation_span(gr_h2().alphabet, gr_h2().relations);
    c.pass = lim.rank() == 10 && want.rank() == 10 && span_equal(lim, want);
    c.details.push_back("substituted rank " + std::to_string(sp.rank()) + ", limit rank " +
                        std::to_string(lim.rank()) + ", expected rank " + std::to_string(want.rank()));
    return c;
}

Criterion covariance_derivation() {
    auto c = start(4, "covariance under both point actions gives the Gr_h(2) relations");
    const auto cov = combined_covariance_span();
    const auto want = relation_span(gr_h2().alphabet, gr_h2().relations);
    c.pass = span_equal(cov, want);
    c.details.push_back("combined rank " + std::to_string(cov.rank()));
    return c;
}

Criterion q_rtt() {
    auto c = start(5, "R_q A'1 A'2 + A'2 A'1 R_q = 0");
    const auto res = rtt_residual(r_q(), generator_matrix(gr_q2().alphabet, kEntriesQ), rules_q(), -1);
    c.pass = res.is_zero();
    if (!c.pass) c.details.push_back(res.nonzero_str());
    return c;
}

Criterion r_matrix_contraction() {
    auto c = start(6, "limit of (g x g)^-1 R_q (g x g), halved, equals R_h");
    const auto gg = kron(g_matrix(), g_matrix());
    const auto lim = scale_mat(Rat(1, 2), limit_mat(similarity(gg, r_q())));
    c.pass = lim == r_h();
    if (!c.pass) c.details.push_back("got\n" + lim.str() + "expected\n" + r_h().str());
    return c;
}

Criterion h_rtt() {
    auto c = start(7, "R_h A1 A2 + A2 A1 R_h = 0");
    const auto res = rtt_residual(r_h(), generator_matrix(gr_h2().alphabet, kEntriesH), rules_h(), -1);
    c.pass = res.is_zero();
    if (!c.pass) c.details.push_back(res.nonzero_str());
    return c;
}

Criterion qybe_verdicts() {
    auto c = start(8, "QYBE fails for R_q and holds for R_h");
    const auto rq = qybe_residual(r_q());
    const auto rh = qybe_residual(r_h());
    c.pass = !rq.is_zero() && rh.is_zero();
    c.details.push_back(std::string("R_q residual ") + (rq.is_zero() ? "zero" : "nonzero"));
    c.details.push_back(std::string("R_h residual ") + (rh.is_zero() ? "zero" : "nonzero"));
    return c;
}

Criterion limit_of_rq() {
    auto c = start(9, "R_q -> 2 I as q -> 1");
    const auto lim = limit_mat(r_q());
    c.pass = lim == scale_mat(2, ScalMat::identity(4));
    if (!c.pass) c.details.push_back(lim.str());
    return c;
}

Criterion inverses() {
    auto c = start(10, "left/right inverses and the determinant identity");
    const auto d = inverse_data();
    const auto [left, right] = inverse_residuals(d);
    const auto det = det_identity_residual(d);
    c.pass = left.is_zero() && right.is_zero() && det.is_zero();
    c.details.push_back(std::string("A_L^-1 A = Delta_L I: ") + (left.is_zero() ? "holds" : "fails"));
    if (!left.is_zero()) c.details.push_back(left.nonzero_str());
    c.details.push_back(std::string("A A_R^-1 = Delta_R I: ") + (right.is_zero() ? "holds" : "fails"));
    if (!right.is_zero()) {
        c.details.push_back("nf(A A_R^-1):\n" + mat_mul(d.a, d.right_inv).normal_form(d.rules).str());
        c.details.push_back("nf(Delta_R) = " + normal_form(d.det_right, d.rules).str());
    }
    c.details.push_back(std::string("Delta_L A_R^-1 = A_L^-1 Delta_R: ") + (det.is_zero() ? "holds" : "fails"));
    if (!det.is_zero()) c.details.push_back(det.nonzero_str());
    return c;
}

Criterion product_theorem() {
    auto c = start(11, "product of anticommuting Gr_q(2) matrices satisfies GL_q(2)");
    c.pass = true;
    for (const auto& check : gr::product_theorem()) {
        if (!check.holds()) {
            c.pass = false;
            c.details.push_back(check.name + " = " + check.residual.str());
        }
    }
    const auto& pd = product_data();
    for (const Element* e : {&pd.a, &pd.b, &pd.c, &pd.d})
        for (const auto& [w, coef] : e->terms())
            if (w.size() % 2 != 0) {
                c.pass = false;
                c.details.push_back("odd word " + e->word_str(w));
            }
    return c;
}

Criterion property_suite(const Options& opt) {
    auto c = start(12, "property suite");
    c.pass = true;
    auto fail = [&](std::string msg) {
        c.pass = false;
        c.details.push_back(std::move(msg));
    };

    for (const auto* rs : {&rules_h(), &rules_q()}) {
        const auto witnesses = check_confluence(*rs, opt.degree_bound);
        for (const auto& w : witnesses) fail("unresolved overlap: " + w.str(*rs->alphabet()));
        c.details.push_back(rs->spec().name + ": confluent up to degree " + std::to_string(opt.degree_bound) +
                            (witnesses.empty() ? "" : " FAILS"));
    }

    rnd::Engine rng(opt.seed);
    int bad_nf = 0;
    for (int i = 0; i < opt.samples; ++i) {
        const RuleSystem& rs = i % 2 == 0 ? rules_h() : rules_q();
        const auto a = rnd::element(rng, rs.alphabet(), 2);
        const auto b = rnd::element(rng, rs.alphabet(), 2);
        const auto na = normal_form(a, rs);
        const auto nb = normal_form(b, rs);
        if (normal_form(na, rs) != na) ++bad_nf;
        if (normal_form(a * b, rs) != normal_form(na * nb, rs)) ++bad_nf;
    }
    if (bad_nf) fail(std::to_string(bad_nf) + " normal-form property violations");
    c.details.push_back("normal form idempotent and multiplicative on " + std::to_string(opt.samples) + " samples");

    int bad_ring = 0;
    int bad_limit = 0;
    for (int i = 0; i < opt.samples; ++i) {
        const auto a = rnd::coeff(rng);
        const auto b = rnd::coeff(rng);
        const auto d = rnd::coeff(rng);
        if ((a + b) + d != a + (b + d) || a + b != b + a || (a * b) * d != a * (b * d) || a * b != b * a ||
            a * (b + d) != a * b + a * d || a + (-a) != Coeff() || a * Coeff(1) != a)
            ++bad_ring;

        const auto x = rnd::regular_coeff(rng);
        const auto y = rnd::regular_coeff(rng);
        const auto r = rnd::rational(rng);
        if (limit_q1(x + y) != limit_q1(x) + limit_q1(y) || limit_q1(Coeff(r) * x) != QHPoly(r) * limit_q1(x) ||
            limit_q1(x * y) != limit_q1(x) * limit_q1(y))
            ++bad_limit;
    }
    if (bad_ring) fail(std::to_string(bad_ring) + " ring-law violations");
    if (bad_limit) fail(std::to_string(bad_limit) + " limit-linearity violations");
    c.details.push_back("ring laws and limit linearity on " + std::to_string(opt.samples) + " samples");

    auto is_identity = [](const Substitution& s) {
        for (const auto& g : s.source->generators()) {
            auto it = s.images.find(g.id);
            if (it == s.images.end() || it->second != Element::gen(s.target, g.name)) return false;
        }
        return true;
    };
    const bool round_trip = is_identity(compose(subst_q_to_h(), subst_h_to_q())) &&
                            is_identity(compose(subst_h_to_q(), subst_q_to_h()));
    if (!round_trip) fail("change-of-basis substitutions do not compose to the identity");
    c.details.push_back(std::string("change-of-basis substitutions compose to the identity: ") +
                        (round_trip ? "yes" : "no"));
    return c;
}

std::vector<Criterion> run_all(const Options& opt) {
    return {plane_contraction(), dual_plane_contraction(), relation_contraction(), covariance_derivation(),
            q_rtt(),             r_matrix_contraction(),   h_rtt(),                qybe_verdicts(),
            limit_of_rq(),       inverses(),               product_theorem(),      property_suite(opt)};
}

}  // namespace qh::suite
