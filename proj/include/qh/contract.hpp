/*
 * contract.hpp
 * ------------
 * Generator substitutions, relation spans in the degree-2 word basis, and
 * the subspace limit at q = 1 that turns a q-deformed relation set into its
 * h-deformed contraction.
 *
 * All linear algebra is fraction-free: the only division ever performed is
 * an exact one in the localized coefficient ring.
 */
#pragma once

#include "qh/algebra.hpp"
#include "qh/matrix.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace qh {

struct MissingImage : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RankDrop : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Degree-1 images of the generators of `source`, written over `target`.
struct Substitution {
    AlphabetPtr source;
    AlphabetPtr target;
    std::map<GenId, Element> images;

    void set(const std::string& gen, Element image);
    /// Coefficient matrix of the induced map on degree-1 elements:
    /// column s holds the image of source generator s.
    ScalMat linear_part() const;
};

/// Homomorphic extension of s; throws MissingImage.
Element apply_subst(const Element& e, const Substitution& s);

/// Images of the 2x2 generator matrix `gens` under A -> m * A * m^{-1}:
/// the generator at gens(i,j) is sent to the (i,j) entry of m*images*m^{-1}.
Substitution conjugation_subst(const AlphabetPtr& source, const AlphabetPtr& target,
                               const std::array<std::string, 4>& source_gens,
                               const std::array<std::string, 4>& target_gens, const ScalMat& m);

/// Composition: apply `first`, then `second`.
Substitution compose(const Substitution& first, const Substitution& second);

using CoeffRows = std::vector<std::vector<Coeff>>;

struct RelationSpan {
    AlphabetPtr alphabet;
    std::vector<Word> basis;  // the full n^2 degree-2 basis in word order
    CoeffRows rows;

    std::size_t rank() const;
    std::vector<Element> elements() const;
};

/// Throws DegreeError for a non-quadratic relation.
RelationSpan relation_span(const AlphabetPtr& alphabet, const std::vector<Element>& relations);

/// Fraction-free (Bareiss) echelon form. Pivots are searched in the first
/// `pivot_cols` columns only; every column is updated.
struct Echelon {
    CoeffRows rows;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};
Echelon bareiss(CoeffRows m, std::size_t pivot_cols);
std::size_t rank_of(const CoeffRows& m);

/// Basis of the limiting subspace at q = 1; throws RankDrop.
RelationSpan limit_span(const RelationSpan& sp);

/// Equality of spans over the coefficient fraction field.
bool span_equal(const RelationSpan& a, const RelationSpan& b);

}  // namespace qh
