/*
 * rewrite.hpp
 * -----------
 * Oriented rewrite systems for quadratic presentations, normal forms, and a
 * bounded local-confluence check.
 */
#pragma once

#include "qh/algebra.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qh {

struct OrientationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RewriteRule {
    Word lhs;     // always length 2
    Element rhs;  // every word strictly smaller than lhs
};

class RuleSystem {
public:
    /// Solves each relation for its largest word; see orient().
    explicit RuleSystem(AlgebraSpec spec);

    const AlgebraSpec& spec() const { return spec_; }
    const AlphabetPtr& alphabet() const { return spec_.alphabet; }
    const std::map<Word, Element, WordOrder>& rules() const { return rules_; }
    const Element* rule_for(const Word& lhs) const;

    /// First position p such that w[p..p+1] is a rule lhs.
    std::optional<std::size_t> reducible_at(const Word& w, std::size_t from = 0) const;
    bool reducible(const Word& w) const { return reducible_at(w).has_value(); }

    /// u * rhs(w[p..p+1]) * v for w = u w[p..p+1] v.
    Element rewrite_at(const Word& w, std::size_t p, const Coeff& c) const;

private:
    AlgebraSpec spec_;
    std::map<Word, Element, WordOrder> rules_;
};

/// Echelon form of homogeneous relations keyed by leading word. Leading
/// coefficients may still be non-units.
std::map<Word, Element, WordOrder> echelonize(std::vector<Element> relations);

/// Reduced echelon basis (largest leading word first); monic wherever the
/// leading coefficient is a unit, and canonical when all of them are.
std::vector<Element> reduced_basis(std::vector<Element> relations);

/// Orients relations plus the declared cross-family swaps. Throws
/// OrientationFailure when a leading coefficient is not a unit.
RuleSystem orient(const AlgebraSpec& spec);

Element normal_form(const Element& e, const RuleSystem& rs);

/// An overlap word whose two reductions disagree.
struct OverlapWitness {
    Word word;
    Element left;   // reduced starting from the leftmost redex
    Element right;  // reduced starting from the other redex

    std::string str(const Alphabet& a) const;
};

/// Checks every overlap uvw of two rule left sides, and every word of length
/// 3..degree_bound, for agreement of all one-step rewrites after reduction.
std::vector<OverlapWitness> check_confluence(const RuleSystem& rs, int degree_bound);

/// Words of length d that no rule applies to.
std::vector<Word> normal_words(const RuleSystem& rs, std::size_t d);

}  // namespace qh
