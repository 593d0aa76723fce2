/*
 * grgroup.hpp
 * -----------
 * Builtin objects for the Grassmann matrix group Gr(2) and its q- and
 * h-deformations: the planes, the generator relations, the change of basis
 * g, the R-matrices, the covariance derivation of the h-relations, the left
 * and right inverses, and the product theorem into GL_q(2).
 *
 * Builtins are process-wide singletons so alphabets compare by identity.
 */
#pragma once

#include "qh/algebra.hpp"
#include "qh/contract.hpp"
#include "qh/matrix.hpp"
#include "qh/rewrite.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qh::gr {

/// Two-generator algebra with its coordinates listed in column-vector order.
struct PlaneSpec {
    AlgebraSpec algebra;
    std::array<std::string, 2> coords;
};

// Relations among the entries alpha', beta', gamma', delta' of Gr_q(2).
const AlgebraSpec& gr_q2();
// Relations among alpha, beta, gamma, delta of Gr_h(2).
const AlgebraSpec& gr_h2();
// Gr_h(2) with h set to a rational constant (same alphabet as gr_h2()).
AlgebraSpec gr_h2_at(const Rat& h);
// a, b, c, d with the six GL_q(2) relations.
const AlgebraSpec& glq2_target();

const PlaneSpec& q_plane();       // x' y' = q y' x'
const PlaneSpec& h_plane();       // x y = y x + h y^2
const PlaneSpec& q_dual_plane();  // eta'^2 = xi'^2 = 0, eta' xi' + q^-1 xi' eta' = 0
const PlaneSpec& h_dual_plane();  // xi^2 = 0, eta^2 = h eta xi, eta xi + xi eta = 0

const RuleSystem& rules_q();
const RuleSystem& rules_h();

inline const std::array<std::string, 4> kEntriesH{"alpha", "beta", "gamma", "delta"};
inline const std::array<std::string, 4> kEntriesQ{"alpha'", "beta'", "gamma'", "delta'"};

/// [[1, h/(q-1)], [0, 1]].
ScalMat g_matrix();
ScalMat r_q();
/// The contracted R-matrix written out literally.
ScalMat r_h();

/// The generator matrix [[alpha, beta], [gamma, delta]] over `alphabet`.
AlgMat2 generator_matrix(const AlphabetPtr& alphabet, const std::array<std::string, 4>& names);

/// Primed generators in terms of unprimed ones: A' = g A g^{-1}.
const Substitution& subst_q_to_h();
/// Unprimed in terms of primed: A = g^{-1} A' g.
const Substitution& subst_h_to_q();
/// Plane coordinates: (x', y') = g (x, y).
const Substitution& plane_subst();
/// Dual plane coordinates: (eta', xi') = g (eta, xi).
const Substitution& dual_plane_subst();

// ------------------------------------------------------------ covariance

struct NonConfluentTarget : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The matrix with entries from `entries` sends points of `source` to
/// points of `target`. Entries commute with source coordinates up to
/// `entry_coordinate_sign`.
struct CovarianceProblem {
    const AlgebraSpec* entries;
    std::array<std::string, 4> entry_names;
    const PlaneSpec* source;
    const PlaneSpec* target;
    int entry_coordinate_sign;
};

/// Relations (over the entries alphabet) forced by requiring the images of
/// source points to satisfy the target relations.
std::vector<Element> covariance_relations(const CovarianceProblem& p);

CovarianceProblem plane_to_dual();
CovarianceProblem dual_to_plane();

RelationSpan combined_covariance_span();

// ------------------------------------------------- inverses, determinants

/// Inverses and determinants of the generator matrix of a Gr_h(2)-type spec.
struct InverseData {
    AlgebraSpec spec;
    RuleSystem rules;
    AlgMat2 a;
    AlgMat2 left_inv;
    AlgMat2 right_inv;
    Element det_left;   // beta gamma + delta alpha
    Element det_right;  // gamma beta + alpha delta
};

/// Built for generic h, or for h specialized to a constant.
InverseData inverse_data(std::optional<Rat> h_value = std::nullopt);

AlgMat2 left_inverse();
AlgMat2 right_inverse();

/// nf(left_inv * A) - diag(nf(det_left)) and nf(A * right_inv) - diag(nf(det_right)).
std::pair<AlgMat2, AlgMat2> inverse_residuals(const InverseData& d);

/// nf(det_left * right_inv - left_inv * det_right); `swapped` exchanges the
/// two determinants.
AlgMat2 det_identity_residual(const InverseData& d, bool swapped = false);

bool verify_det_identity(std::optional<Rat> h_value = std::nullopt);

// -------------------------------------------------------- product theorem

struct RelationCheck {
    std::string name;
    Element residual;  // normal form; zero when the relation holds

    bool holds() const { return residual.is_zero(); }
};

struct ProductData {
    AlgebraSpec spec;  // two anticommuting copies of the Gr_q(2) relations
    RuleSystem rules;
    Element a, b, c, d;  // normal forms of the product entries
};

const ProductData& product_data();

/// The six GL_q(2) relations among the entries of the product matrix.
std::vector<RelationCheck> product_theorem();

}  // namespace qh::gr
