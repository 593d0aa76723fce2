#include "qh/grgroup.hpp"

#include <initializer_list>
#include <utility>

namespace qh::gr {

namespace {

using Term = std::pair<Coeff, std::vector<std::string>>;

Element poly(const AlphabetPtr& a, std::initializer_list<Term> terms) {
    Element e(a);
    for (const auto& [c, names] : terms) {
        Word w;
        for (const auto& n : names) w.push_back(a->id_of(n));
        e.add_term(w, c);
    }
    return e;
}

// The ten Gr_q(2) relations on generators n = {alpha, beta, gamma, delta}.
std::vector<Element> gr_q_relations(const AlphabetPtr& a, const std::array<std::string, 4>& n) {
    const Coeff qi = Coeff::q_inv();
    const Coeff qq = Coeff::q() - qi;
    const auto& [al, be, ga, de] = n;
    return {
        poly(a, {{1, {al, be}}, {qi, {be, al}}}),
        poly(a, {{1, {al, ga}}, {qi, {ga, al}}}),
        poly(a, {{1, {ga, de}}, {qi, {de, ga}}}),
        poly(a, {{1, {be, de}}, {qi, {de, be}}}),
        poly(a, {{1, {al, de}}, {1, {de, al}}}),
        poly(a, {{1, {al, al}}}),
        poly(a, {{1, {be, be}}}),
        poly(a, {{1, {ga, ga}}}),
        poly(a, {{1, {de, de}}}),
        poly(a, {{1, {be, ga}}, {1, {ga, be}}, {-qq, {de, al}}}),
    };
}

std::vector<Element> gr_h_relations(const AlphabetPtr& a, const Coeff& h) {
    const Coeff h2 = h * h;
    return {
        poly(a, {{1, {"alpha", "beta"}}, {1, {"beta", "alpha"}}, {-h, {"alpha", "delta"}}, {-h, {"beta", "gamma"}}}),
        poly(a, {{1, {"alpha", "gamma"}}, {1, {"gamma", "alpha"}}}),
        poly(a, {{1, {"beta", "gamma"}}, {1, {"gamma", "beta"}}, {-h, {"delta", "gamma"}}, {h, {"gamma", "alpha"}}}),
        poly(a, {{1, {"beta", "delta"}}, {1, {"delta", "beta"}}, {h, {"alpha", "delta"}}, {h, {"gamma", "beta"}}}),
        poly(a, {{1, {"alpha", "delta"}}, {1, {"delta", "alpha"}}, {-h, {"gamma", "alpha"}}, {h, {"delta", "gamma"}}}),
        poly(a, {{1, {"gamma", "delta"}}, {1, {"delta", "gamma"}}}),
        poly(a, {{1, {"alpha", "alpha"}}, {h, {"gamma", "alpha"}}}),
        poly(a, {{1, {"beta", "beta"}}, {-h, {"beta", "delta"}}, {h, {"alpha", "beta"}}, {-h2, {"alpha", "delta"}}}),
        poly(a, {{1, {"gamma", "gamma"}}}),
        poly(a, {{1, {"delta", "delta"}}, {-h, {"delta", "gamma"}}}),
    };
}

GeneratorDecl odd(std::string name, std::string family, int prec) {
    return {std::move(name), Parity::odd, std::move(family), prec};
}

GeneratorDecl even(std::string name, std::string family, int prec) {
    return {std::move(name), Parity::even, std::move(family), prec};
}

const AlphabetPtr& gr_h_alphabet() {
    static const AlphabetPtr a = make_alphabet({
        odd("gamma", "A", 0), odd("alpha", "A", 1), odd("delta", "A", 2), odd("beta", "A", 3)});
    return a;
}

// (new_0, new_1) = m (old_0, old_1) on coordinate column vectors.
Substitution coordinate_subst(const PlaneSpec& src, const PlaneSpec& dst, const ScalMat& m) {
    Substitution s{src.algebra.alphabet, dst.algebra.alphabet, {}};
    for (std::size_t i = 0; i < 2; ++i) {
        Element img(dst.algebra.alphabet);
        for (std::size_t j = 0; j < 2; ++j)
            img += scale(m(i, j), Element::gen(dst.algebra.alphabet, dst.coords[j]));
        s.set(src.coords[i], std::move(img));
    }
    return s;
}

}  // namespace

const AlgebraSpec& gr_q2() {
    static const AlgebraSpec spec = [] {
        auto a = make_alphabet({odd("alpha'", "A'", 0), odd("beta'", "A'", 1),
                                odd("gamma'", "A'", 2), odd("delta'", "A'", 3)});
        return AlgebraSpec{"GRq2", a, gr_q_relations(a, kEntriesQ)};
    }();
    return spec;
}

const AlgebraSpec& gr_h2() {
    static const AlgebraSpec spec{"GRh2", gr_h_alphabet(), gr_h_relations(gr_h_alphabet(), Coeff::h())};
    return spec;
}

AlgebraSpec gr_h2_at(const Rat& h) {
    return AlgebraSpec{"GRh2[h=" + h.get_str() + "]", gr_h_alphabet(),
                       gr_h_relations(gr_h_alphabet(), Coeff(h))};
}

const AlgebraSpec& glq2_target() {
    static const AlgebraSpec spec = [] {
        auto a = make_alphabet({even("a", "GL", 0), even("b", "GL", 1), even("c", "GL", 2), even("d", "GL", 3)});
        const Coeff q = Coeff::q();
        const Coeff qq = q - Coeff::q_inv();
        return AlgebraSpec{"GLq2-target", a,
                           {
                               poly(a, {{1, {"a", "b"}}, {-q, {"b", "a"}}}),
                               poly(a, {{1, {"a", "c"}}, {-q, {"c", "a"}}}),
                               poly(a, {{1, {"b", "c"}}, {-1, {"c", "b"}}}),
                               poly(a, {{1, {"b", "d"}}, {-q, {"d", "b"}}}),
                               poly(a, {{1, {"c", "d"}}, {-q, {"d", "c"}}}),
                               poly(a, {{1, {"a", "d"}}, {-1, {"d", "a"}}, {-qq, {"b", "c"}}}),
                           }};
    }();
    return spec;
}

const PlaneSpec& q_plane() {
    static const PlaneSpec p = [] {
        auto a = make_alphabet({even("x'", "X'", 0), even("y'", "X'", 1)});
        return PlaneSpec{{"qplane", a, {poly(a, {{1, {"x'", "y'"}}, {-Coeff::q(), {"y'", "x'"}}})}},
                         {"x'", "y'"}};
    }();
    return p;
}

const PlaneSpec& h_plane() {
    static const PlaneSpec p = [] {
        auto a = make_alphabet({even("y", "X", 0), even("x", "X", 1)});
        return PlaneSpec{
            {"hplane", a, {poly(a, {{1, {"x", "y"}}, {-1, {"y", "x"}}, {-Coeff::h(), {"y", "y"}}})}},
            {"x", "y"}};
    }();
    return p;
}

const PlaneSpec& q_dual_plane() {
    static const PlaneSpec p = [] {
        auto a = make_alphabet({odd("xi'", "D'", 0), odd("eta'", "D'", 1)});
        return PlaneSpec{{"qdualplane", a,
                          {poly(a, {{1, {"eta'", "eta'"}}}), poly(a, {{1, {"xi'", "xi'"}}}),
                           poly(a, {{1, {"eta'", "xi'"}}, {Coeff::q_inv(), {"xi'", "eta'"}}})}},
                         {"eta'", "xi'"}};
    }();
    return p;
}

const PlaneSpec& h_dual_plane() {
    static const PlaneSpec p = [] {
        auto a = make_alphabet({odd("xi", "D", 0), odd("eta", "D", 1)});
        return PlaneSpec{{"hdualplane", a,
                          {poly(a, {{1, {"xi", "xi"}}}),
                           poly(a, {{1, {"eta", "eta"}}, {-Coeff::h(), {"eta", "xi"}}}),
                           poly(a, {{1, {"eta", "xi"}}, {1, {"xi", "eta"}}})}},
                         {"eta", "xi"}};
    }();
    return p;
}

const RuleSystem& rules_q() {
    static const RuleSystem rs(gr_q2());
    return rs;
}

const RuleSystem& rules_h() {
    static const RuleSystem rs(gr_h2());
    return rs;
}

ScalMat g_matrix() { return ScalMat(2, {1, Coeff::contraction_f(), 0, 1}); }

ScalMat r_q() {
    const Coeff q = Coeff::q();
    const Coeff qi = Coeff::q_inv();
    return ScalMat(4, {q + qi, 0, 0, 0,
                       0, 2, qi - q, 0,
                       0, q - qi, 2, 0,
                       0, 0, 0, q + qi});
}

ScalMat r_h() {
    const Coeff h = Coeff::h();
    return ScalMat(4, {1, -h, h, h * h,
                       0, 1, 0, -h,
                       0, 0, 1, h,
                       0, 0, 0, 1});
}

AlgMat2 generator_matrix(const AlphabetPtr& alphabet, const std::array<std::string, 4>& names) {
    AlgMat2 m;
    for (std::size_t i = 0; i < 4; ++i) m(i / 2, i % 2) = Element::gen(alphabet, names[i]);
    return m;
}

const Substitution& subst_q_to_h() {
    static const Substitution s =
        conjugation_subst(gr_q2().alphabet, gr_h2().alphabet, kEntriesQ, kEntriesH, g_matrix());
    return s;
}

const Substitution& subst_h_to_q() {
    static const Substitution s =
        conjugation_subst(gr_h2().alphabet, gr_q2().alphabet, kEntriesH, kEntriesQ, inverse(g_matrix()));
    return s;
}

const Substitution& plane_subst() {
    static const Substitution s = coordinate_subst(q_plane(), h_plane(), g_matrix());
    return s;
}

const Substitution& dual_plane_subst() {
    static const Substitution s = coordinate_subst(q_dual_plane(), h_dual_plane(), g_matrix());
    return s;
}

// ------------------------------------------------------------ covariance

std::vector<Element> covariance_relations(const CovarianceProblem& p) {
    const RuleSystem source_rules(p.source->algebra);
    if (!check_confluence(source_rules, 4).empty())
        throw NonConfluentTarget("coordinate algebra " + p.source->algebra.name + " is not confluent");

    // Entries first in precedence so normal forms read (entry word)(coordinate word).
    const auto& ea = *p.entries->alphabet;
    const auto& ca = *p.source->algebra.alphabet;
    std::vector<GeneratorDecl> decls;
    for (const auto& g : ea.generators()) decls.push_back({g.name, g.parity, "entries", g.precedence});
    const int offset = static_cast<int>(ea.size());
    for (const auto& g : ca.generators())
        decls.push_back({g.name, g.parity, "coords", offset + g.precedence});
    const auto combined =
        make_alphabet(std::move(decls), {{{"entries", "coords"}, p.entry_coordinate_sign}});

    AlgebraSpec cspec{"covariance", combined, {}};
    for (const auto& r : p.source->algebra.relations) cspec.relations.push_back(transport(r, combined));
    const RuleSystem rs(cspec);

    Substitution images{p.target->algebra.alphabet, combined, {}};
    for (std::size_t i = 0; i < 2; ++i) {
        Element img(combined);
        for (std::size_t j = 0; j < 2; ++j)
            img += free_mul(Element::gen(combined, p.entry_names[2 * i + j]),
                            Element::gen(combined, p.source->coords[j]));
        // Entry times coordinate: degree 2, so set directly.
        images.images[p.target->algebra.alphabet->id_of(p.target->coords[i])] = std::move(img);
    }

    std::vector<Element> out;
    for (const auto& rel : p.target->algebra.relations) {
        const Element reduced = normal_form(apply_subst(rel, images), rs);
        std::map<Word, Element, WordOrder> by_coords;
        for (const auto& [w, c] : reduced.terms()) {
            std::size_t split = 0;
            while (split < w.size() && w[split] < offset) ++split;
            Word entry_word;
            for (std::size_t i = 0; i < split; ++i) entry_word.push_back(ea.id_of(combined->gen(w[i]).name));
            Word coord_word(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
            for (GenId g : coord_word)
                if (g < offset) throw std::logic_error("covariance: entry right of a coordinate");
            auto [it, ins] = by_coords.try_emplace(coord_word, p.entries->alphabet);
            it->second.add_term(entry_word, c);
        }
        for (auto& [cw, e] : by_coords)
            if (!e.is_zero()) out.push_back(std::move(e));
    }
    return out;
}

CovarianceProblem plane_to_dual() { return {&gr_h2(), kEntriesH, &h_plane(), &h_dual_plane(), +1}; }

CovarianceProblem dual_to_plane() { return {&gr_h2(), kEntriesH, &h_dual_plane(), &h_plane(), -1}; }

RelationSpan combined_covariance_span() {
    auto rels = covariance_relations(plane_to_dual());
    auto more = covariance_relations(dual_to_plane());
    rels.insert(rels.end(), more.begin(), more.end());
    return relation_span(gr_h2().alphabet, rels);
}

// ------------------------------------------------- inverses, determinants

InverseData inverse_data(std::optional<Rat> h_value) {
    AlgebraSpec spec = h_value ? gr_h2_at(*h_value) : gr_h2();
    RuleSystem rules(spec);
    const AlphabetPtr al = spec.alphabet;
    const Coeff h = h_value ? Coeff(*h_value) : Coeff::h();
    auto g = [&](const char* n) { return Element::gen(al, n); };
    const Element alpha = g("alpha"), beta = g("beta"), gamma = g("gamma"), delta = g("delta");

    AlgMat2 left;
    left(0, 0) = delta + h * gamma;
    left(0, 1) = beta + h * alpha;
    left(1, 0) = -gamma;
    left(1, 1) = -alpha;

    AlgMat2 right;
    right(0, 0) = -delta;
    right(0, 1) = beta + h * delta;
    right(1, 0) = -gamma;
    right(1, 1) = alpha + h * gamma;

    return InverseData{std::move(spec),
                       std::move(rules),
                       generator_matrix(al, kEntriesH),
                       left,
                       right,
                       beta * gamma + delta * alpha,
                       gamma * beta + alpha * delta};
}

AlgMat2 left_inverse() { return inverse_data().left_inv; }
AlgMat2 right_inverse() { return inverse_data().right_inv; }

std::pair<AlgMat2, AlgMat2> inverse_residuals(const InverseData& d) {
    AlgMat2 dl;
    AlgMat2 dr;
    for (std::size_t i = 0; i < 2; ++i) {
        dl(i, i) = d.det_left;
        dr(i, i) = d.det_right;
    }
    return {(mat_mul(d.left_inv, d.a) - dl).normal_form(d.rules),
            (mat_mul(d.a, d.right_inv) - dr).normal_form(d.rules)};
}

AlgMat2 det_identity_residual(const InverseData& d, bool swapped) {
    const Element& dl = swapped ? d.det_right : d.det_left;
    const Element& dr = swapped ? d.det_left : d.det_right;
    return (d.right_inv.left_mul(dl) - d.left_inv.right_mul(dr)).normal_form(d.rules);
}

bool verify_det_identity(std::optional<Rat> h_value) {
    return det_identity_residual(inverse_data(std::move(h_value))).is_zero();
}

// -------------------------------------------------------- product theorem

const ProductData& product_data() {
    static const ProductData data = [] {
        auto al = make_alphabet({odd("alpha", "F", 0), odd("beta", "F", 1), odd("gamma", "F", 2),
                                 odd("delta", "F", 3), odd("alpha'", "F'", 4), odd("beta'", "F'", 5),
                                 odd("gamma'", "F'", 6), odd("delta'", "F'", 7)},
                                {{{"F", "F'"}, -1}});
        AlgebraSpec spec{"GRq2 x GRq2", al, gr_q_relations(al, kEntriesH)};
        for (auto& r : gr_q_relations(al, kEntriesQ)) spec.relations.push_back(std::move(r));
        RuleSystem rules(spec);
        const AlgMat2 lhs = generator_matrix(al, kEntriesH);
        const AlgMat2 rhs = generator_matrix(al, kEntriesQ);
        const AlgMat2 prod = mat_mul(lhs, rhs).normal_form(rules);
        return ProductData{std::move(spec), std::move(rules), prod(0, 0), prod(0, 1), prod(1, 0), prod(1, 1)};
    }();
    return data;
}

std::vector<RelationCheck> product_theorem() {
    const auto& pd = product_data();
    const Coeff q = Coeff::q();
    const Coeff qq = q - Coeff::q_inv();
    const auto& [a, b, c, d] = std::tie(pd.a, pd.b, pd.c, pd.d);
    auto nf = [&](const Element& e) { return normal_form(e, pd.rules); };
    return {
        {"ab - q*ba", nf(a * b - q * (b * a))},
        {"ac - q*ca", nf(a * c - q * (c * a))},
        {"bc - cb", nf(b * c - c * b)},
        {"bd - q*db", nf(b * d - q * (d * b))},
        {"cd - q*dc", nf(c * d - q * (d * c))},
        {"ad - da - (q - q^-1)*bc", nf(a * d - d * a - qq * (b * c))},
    };
}

}  // namespace qh::gr
