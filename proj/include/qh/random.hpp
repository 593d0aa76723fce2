// Seeded random scalars and elements for property checks.
#pragma once

#include "qh/algebra.hpp"

#include <random>

namespace qh::rnd {

using Engine = std::mt19937_64;

Rat rational(Engine& rng, int span = 9);

/// Polynomial with up to `terms` terms of total degree <= `degree`.
QHPoly poly(Engine& rng, int terms = 3, int degree = 2);

/// Arbitrary nonzero-or-zero Coeff, possibly with q and (q-1) denominators.
Coeff coeff(Engine& rng);

/// A Coeff with a finite limit at q = 1 (denominator (q-1)^k absorbed by
/// the numerator).
Coeff regular_coeff(Engine& rng);

/// Random element with up to `terms` words of length <= max_degree.
Element element(Engine& rng, const AlphabetPtr& alphabet, std::size_t max_degree, int terms = 4);

}  // namespace qh::rnd
