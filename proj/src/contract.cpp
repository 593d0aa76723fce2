#include "qh/contract.hpp"

#include <algorithm>

namespace qh {

void Substitution::set(const std::string& gen, Element image) {
    if (!image.is_zero() && !image.homogeneous(1))
        throw DegreeError("image of " + gen + " must be of degree 1");
    images[source->id_of(gen)] = std::move(image);
}

ScalMat Substitution::linear_part() const {
    if (source->size() != target->size())
        throw std::invalid_argument("substitution between alphabets of different size");
    const auto n = source->size();
    ScalMat m(n);
    for (const auto& [s, img] : images)
        for (const auto& [w, c] : img.terms()) m(w.at(0), s) = c;
    return m;
}

Element apply_subst(const Element& e, const Substitution& s) {
    Element out(s.target);
    for (const auto& [w, c] : e.terms()) {
        Element term = Element::scalar(s.target, c);
        for (GenId g : w) {
            auto it = s.images.find(g);
            if (it == s.images.end())
                throw MissingImage("no image for generator '" + s.source->gen(g).name + "'");
            term = free_mul(term, it->second);
        }
        out += term;
    }
    return out;
}

Substitution conjugation_subst(const AlphabetPtr& source, const AlphabetPtr& target,
                               const std::array<std::string, 4>& source_gens,
                               const std::array<std::string, 4>& target_gens, const ScalMat& m) {
    AlgMat2 a;
    for (std::size_t i = 0; i < 4; ++i) a(i / 2, i % 2) = Element::gen(target, target_gens[i]);
    const AlgMat2 conj = conjugate(m, a);
    Substitution s{source, target, {}};
    for (std::size_t i = 0; i < 4; ++i) s.set(source_gens[i], conj(i / 2, i % 2));
    return s;
}

Substitution compose(const Substitution& first, const Substitution& second) {
    if (first.target != second.source) throw std::invalid_argument("compose: alphabets do not chain");
    Substitution out{first.source, second.target, {}};
    for (const auto& [g, img] : first.images) out.images[g] = apply_subst(img, second);
    return out;
}

// ---------------------------------------------------------- RelationSpan

RelationSpan relation_span(const AlphabetPtr& alphabet, const std::vector<Element>& relations) {
    RelationSpan sp{alphabet, degree2_basis(*alphabet), {}};
    const auto n = alphabet->size();
    for (const auto& r : relations) {
        if (r.alphabet() && r.alphabet() != alphabet)
            throw std::invalid_argument("relation_span: relation uses a foreign alphabet");
        if (!r.homogeneous(2)) throw DegreeError("relation '" + r.str() + "' is not quadratic");
        std::vector<Coeff> row(n * n);
        for (const auto& [w, c] : r.terms()) row[w[0] * n + w[1]] = c;
        sp.rows.push_back(std::move(row));
    }
    return sp;
}

std::vector<Element> RelationSpan::elements() const {
    std::vector<Element> out;
    for (const auto& row : rows) {
        Element e(alphabet);
        for (std::size_t j = 0; j < row.size(); ++j) e.add_term(basis[j], row[j]);
        out.push_back(std::move(e));
    }
    return out;
}

Echelon bareiss(CoeffRows m, std::size_t pivot_cols) {
    Echelon out;
    const auto nrows = m.size();
    const auto ncols = nrows == 0 ? 0 : m[0].size();
    Coeff prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && m[p][c].is_zero()) ++p;
        if (p == nrows) continue;
        std::swap(m[p], m[r]);
        const Coeff pivot = m[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const Coeff a = m[i][c];
            for (std::size_t j = 0; j < ncols; ++j) {
                Coeff v = pivot * m[i][j] - a * m[r][j];
                m[i][j] = exact_div(v, prev);
            }
        }
        prev = pivot;
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.rows = std::move(m);
    return out;
}

std::size_t rank_of(const CoeffRows& m) {
    if (m.empty()) return 0;
    return bareiss(m, m[0].size()).rank;
}

std::size_t RelationSpan::rank() const { return rank_of(rows); }

namespace {

// Greedy maximal independent subset, in input order.
CoeffRows independent_rows(const CoeffRows& rows) {
    CoeffRows out;
    for (const auto& row : rows) {
        out.push_back(row);
        if (rank_of(out) < out.size()) out.pop_back();
    }
    return out;
}

void remove_content(std::vector<Coeff>& row) {
    const Coeff content = rational_h_content(row);
    if (content.is_one()) return;
    for (auto& c : row)
        if (!c.is_zero()) c = exact_div(c, content);
}

// Scales a row by a power of (q-1) so no entry has a pole and some entry is
// nonzero at q = 1.
void make_q1_primitive(std::vector<Coeff>& row) {
    std::optional<int> v;
    for (const auto& c : row)
        if (!c.is_zero()) v = v ? std::min(*v, c.valuation_q1()) : c.valuation_q1();
    if (!v || *v == 0) return;
    for (auto& c : row)
        if (!c.is_zero()) c = c.shift_q1(-*v);
}

}  // namespace

RelationSpan limit_span(const RelationSpan& sp) {
    CoeffRows rows = independent_rows(sp.rows);
    const auto k = rows.size();
    const auto width = sp.basis.size();
    constexpr int max_rounds = 10000;
    for (int round = 0; round < max_rounds; ++round) {
        for (auto& row : rows) {
            make_q1_primitive(row);
            remove_content(row);
        }

        // Rows at q = 1, each tagged with an identity block recording the
        // combination that produced it.
        CoeffRows aug(k, std::vector<Coeff>(width + k));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < width; ++j) aug[i][j] = Coeff(limit_q1(rows[i][j]));
            aug[i][width + i] = 1;
        }
        Echelon ech = bareiss(std::move(aug), width);
        if (ech.rank == k) {
            RelationSpan out{sp.alphabet, sp.basis, {}};
            for (const auto& row : rows) {
                std::vector<Coeff> ev(width);
                for (std::size_t j = 0; j < width; ++j) ev[j] = Coeff(limit_q1(row[j]));
                out.rows.push_back(std::move(ev));
            }
            return out;
        }

        // A combination vanishing at q = 1 replaces its lowest participating row.
        const auto& dep = ech.rows[ech.rank];
        std::vector<Coeff> combined(width);
        std::optional<std::size_t> target;
        for (std::size_t i = 0; i < k; ++i) {
            const Coeff& c = dep[width + i];
            if (c.is_zero()) continue;
            if (!target) target = i;
            for (std::size_t j = 0; j < width; ++j)
                if (!rows[i][j].is_zero()) combined[j] += c * rows[i][j];
        }
        if (!target) throw RankDrop("limit_span: empty dependency");
        if (std::all_of(combined.begin(), combined.end(), [](const Coeff& c) { return c.is_zero(); }))
            throw RankDrop("limit_span: rows became dependent");
        rows[*target] = std::move(combined);
    }
    throw RankDrop("limit_span: no convergence");
}

bool span_equal(const RelationSpan& a, const RelationSpan& b) {
    if (a.basis != b.basis) throw std::invalid_argument("span_equal: different word bases");
    const auto ra = a.rank();
    const auto rb = b.rank();
    if (ra != rb) return false;
    CoeffRows all = a.rows;
    all.insert(all.end(), b.rows.begin(), b.rows.end());
    return rank_of(all) == ra;
}

}  // namespace qh
