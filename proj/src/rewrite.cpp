#include "qh/rewrite.hpp"

#include <set>
#include <sstream>

namespace qh {

namespace {

Element strip_leading(const Element& e) {
    Element r = e;
    r.add_term(e.leading_word(), -e.leading_coeff());
    return r;
}

// Swap relations u*v - sign*v*u for u > v in distinct families with a declared sign.
std::vector<Element> cross_relations(const AlphabetPtr& a) {
    std::vector<Element> out;
    for (const auto& u : a->generators()) {
        for (const auto& v : a->generators()) {
            if (u.id <= v.id || u.family == v.family) continue;
            auto sign = a->cross_sign(u.family, v.family);
            if (!sign) continue;
            Element r = Element::word(a, Word{u.id, v.id});
            r.add_term(Word{v.id, u.id}, Coeff(-*sign));
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace

std::map<Word, Element, WordOrder> echelonize(std::vector<Element> relations) {
    // Non-unit leading coefficients are kept while another relation with the
    // same leading word may still replace them.
    std::map<Word, Element, WordOrder> pivots;
    for (auto& r : relations) {
        while (!r.is_zero()) {
            const Word lw = r.leading_word();
            auto it = pivots.find(lw);
            if (it == pivots.end()) {
                pivots.emplace(lw, std::move(r));
                break;
            }
            Element& p = it->second;
            if (auto inv = try_inv(p.leading_coeff())) {
                r -= (r.leading_coeff() * *inv) * p;
            } else if (try_inv(r.leading_coeff())) {
                std::swap(r, p);
            } else {
                r = primitive_part(p.leading_coeff() * r - r.leading_coeff() * p);
            }
        }
    }
    return pivots;
}

std::vector<Element> reduced_basis(std::vector<Element> relations) {
    auto pivots = echelonize(std::move(relations));
    for (auto& [lw, p] : pivots)
        if (auto inv = try_inv(p.leading_coeff())) p = *inv * p;
    // Clear every monic leading word from the other basis elements.
    for (const auto& [lw, p] : pivots) {
        if (!p.leading_coeff().is_one()) continue;
        for (auto& [ow, o] : pivots) {
            if (ow == lw) continue;
            const Coeff c = o.coeff(lw);
            if (!c.is_zero()) o -= c * p;
        }
    }
    std::vector<Element> out;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const Element& p = it->second;
        out.push_back(p.leading_coeff().is_one() ? p : primitive_part(p));
    }
    return out;
}

RuleSystem::RuleSystem(AlgebraSpec spec) : spec_(std::move(spec)) {
    spec_.validate();

    std::vector<Element> pending = spec_.relations;
    for (auto& r : cross_relations(spec_.alphabet)) pending.push_back(std::move(r));

    const auto pivots = echelonize(std::move(pending));

    for (const auto& [lw, p] : pivots) {
        if (lw.size() != 2)
            throw OrientationFailure("relation '" + p.str() + "' has no degree-2 leading word");
        auto inv = try_inv(p.leading_coeff());
        if (!inv)
            throw OrientationFailure("cannot orient '" + p.str() + "': leading coefficient " +
                                     p.leading_coeff().str() + " of " + p.word_str(lw) +
                                     " is not a unit");
        Element rhs = -(*inv * strip_leading(p));
        for (const auto& [w, c] : rhs.terms()) {
            if (!WordOrder{}(w, lw))
                throw OrientationFailure("rule for " + p.word_str(lw) + " is not decreasing");
        }
        rules_.emplace(lw, std::move(rhs));
    }
}

const Element* RuleSystem::rule_for(const Word& lhs) const {
    auto it = rules_.find(lhs);
    return it == rules_.end() ? nullptr : &it->second;
}

std::optional<std::size_t> RuleSystem::reducible_at(const Word& w, std::size_t from) const {
    for (std::size_t p = from; p + 1 < w.size(); ++p) {
        if (rules_.count(Word{w[p], w[p + 1]}) != 0) return p;
    }
    return std::nullopt;
}

Element RuleSystem::rewrite_at(const Word& w, std::size_t p, const Coeff& c) const {
    const Element* rhs = rule_for(Word{w[p], w[p + 1]});
    if (rhs == nullptr) throw std::logic_error("rewrite_at: no rule at position");
    Element out(spec_.alphabet);
    Word nw;
    for (const auto& [m, x] : rhs->terms()) {
        nw.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        nw.insert(nw.end(), m.begin(), m.end());
        nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end());
        out.add_term(nw, c * x);
    }
    return out;
}

RuleSystem orient(const AlgebraSpec& spec) { return RuleSystem(spec); }

Element normal_form(const Element& e, const RuleSystem& rs) {
    if (e.alphabet() && e.alphabet() != rs.alphabet())
        throw std::invalid_argument("normal_form: element is not in the rule system's algebra");
    // Rewriting only produces smaller words, so once the largest pending word
    // is irreducible it is final.
    Element::Terms work = e.terms();
    Element result(rs.alphabet());
    while (!work.empty()) {
        auto last = std::prev(work.end());
        const Word w = last->first;
        const Coeff c = last->second;
        work.erase(last);
        if (auto p = rs.reducible_at(w)) {
            const Element step = rs.rewrite_at(w, *p, c);
            for (const auto& [nw, nc] : step.terms()) {
                auto [it, inserted] = work.emplace(nw, nc);
                if (!inserted) {
                    it->second += nc;
                    if (it->second.is_zero()) work.erase(it);
                }
            }
        } else {
            result.add_term(w, c);
        }
    }
    return result;
}

std::string OverlapWitness::str(const Alphabet& a) const {
    std::string w;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) w += '*';
        w += a.gen(word[i]).name;
    }
    return w + ": " + left.str() + " vs " + right.str();
}

std::vector<OverlapWitness> check_confluence(const RuleSystem& rs, int degree_bound) {
    if (degree_bound < 3) throw std::invalid_argument("check_confluence: degree bound must be >= 3");
    std::vector<OverlapWitness> out;
    std::set<Word, WordOrder> reported;
    for (int d = 3; d <= degree_bound; ++d) {
        for (const auto& w : words_of_length(*rs.alphabet(), static_cast<std::size_t>(d))) {
            auto first = rs.reducible_at(w);
            if (!first) continue;
            std::optional<Element> base;
            for (auto p = rs.reducible_at(w, *first + 1); p; p = rs.reducible_at(w, *p + 1)) {
                if (!base) base = normal_form(rs.rewrite_at(w, *first, 1), rs);
                Element other = normal_form(rs.rewrite_at(w, *p, 1), rs);
                if (other != *base && reported.insert(w).second)
                    out.push_back(OverlapWitness{w, *base, std::move(other)});
            }
        }
    }
    return out;
}

std::vector<Word> normal_words(const RuleSystem& rs, std::size_t d) {
    std::vector<Word> out;
    for (auto& w : words_of_length(*rs.alphabet(), d))
        if (!rs.reducible(w)) out.push_back(std::move(w));
    return out;
}

}  // namespace qh
