/*
 * coeff.hpp
 * ---------
 * Exact scalars for the deformation parameters q and h.
 *
 * Every scalar lives in Q[q,h] with q and (q-1) inverted. A Coeff is stored
 * as num / (q^m (q-1)^k) with the numerator stripped of any q or (q-1)
 * factor that the denominator could cancel, which makes the representation
 * unique and equality a structural comparison.
 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qh {

using Rat = mpq_class;

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleAtQ1 : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAUnit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exponent pair of the monomial q^qdeg h^hdeg.
struct Monomial {
    std::uint32_t qdeg = 0;
    std::uint32_t hdeg = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic: total degree first, then the q-degree.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto da = a.qdeg + a.hdeg;
        const auto db = b.qdeg + b.hdeg;
        if (da != db) return da < db;
        return a.qdeg < b.qdeg;
    }
};

/// Polynomial in q and h with rational coefficients. No zero coefficient is
/// ever stored.
class QHPoly {
public:
    using Terms = std::map<Monomial, Rat, GradedLex>;

    QHPoly() = default;
    QHPoly(long c);  // NOLINT(google-explicit-constructor)
    QHPoly(const Rat& c);  // NOLINT(google-explicit-constructor)

    static QHPoly q();
    static QHPoly h();
    static QHPoly q_minus_1();
    static QHPoly monomial(const Rat& c, std::uint32_t qdeg, std::uint32_t hdeg);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero polynomial gives 0).
    Rat constant() const;
    std::uint32_t qdegree() const;
    std::uint32_t hdegree() const;
    bool has_q() const;

    QHPoly operator-() const;
    QHPoly& operator+=(const QHPoly& o);
    QHPoly& operator-=(const QHPoly& o);
    friend QHPoly operator+(QHPoly a, const QHPoly& b) { return a += b; }
    friend QHPoly operator-(QHPoly a, const QHPoly& b) { return a -= b; }
    friend QHPoly operator*(const QHPoly& a, const QHPoly& b);
    QHPoly pow(unsigned n) const;

    friend bool operator==(const QHPoly& a, const QHPoly& b) { return a.terms_ == b.terms_; }

    /// Value at q = 1, a polynomial in h only.
    QHPoly at_q1() const;
    QHPoly with_h(const Rat& h) const;
    Rat evaluate(const Rat& q, const Rat& h) const;

    bool divisible_by_q() const;
    bool divisible_by_q_minus_1() const;
    /// Exact division by q; precondition divisible_by_q().
    QHPoly div_q() const;
    /// Exact division by (q-1); throws NotDivisible otherwise.
    QHPoly div_q_minus_1() const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rat& c);
    Terms terms_;
};

/// Returns c with a = b*c; throws NotDivisible when the remainder is nonzero.
QHPoly exact_div(const QHPoly& a, const QHPoly& b);

/// Element of Q[q,h][1/q, 1/(q-1)].
class Coeff {
public:
    Coeff() = default;
    Coeff(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    Coeff(const Rat& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    Coeff(QHPoly num, std::uint32_t qpow = 0, std::uint32_t q1pow = 0);

    static Coeff q() { return Coeff(QHPoly::q()); }
    static Coeff h() { return Coeff(QHPoly::h()); }
    static Coeff q_inv() { return Coeff(QHPoly(1), 1, 0); }
    /// h / (q - 1), the off-diagonal entry of the change of basis.
    static Coeff contraction_f() { return Coeff(QHPoly::h(), 0, 1); }

    const QHPoly& num() const { return num_; }
    std::uint32_t qpow() const { return qpow_; }
    std::uint32_t q1pow() const { return q1pow_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// True when the value does not involve q (a polynomial in h).
    bool is_q_free() const;
    /// Single-term numerator with no denominator.
    bool is_monomial() const;

    Coeff operator-() const;
    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff& operator*=(const Coeff& o);
    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
    Coeff pow(int n) const;

    friend bool operator==(const Coeff&, const Coeff&) = default;

    /// (q-1)-adic valuation; the zero value has none.
    int valuation_q1() const;
    /// Multiplies by (q-1)^n for any integer n.
    Coeff shift_q1(int n) const;

    Rat evaluate(const Rat& q, const Rat& h) const;
    /// Same value with h replaced by a rational constant.
    Coeff with_h(const Rat& h) const;

    /// Re-establishes canonical form; idempotent.
    Coeff normalized() const;

    std::string str() const;

private:
    void normalize();

    QHPoly num_;
    std::uint32_t qpow_ = 0;
    std::uint32_t q1pow_ = 0;
};

/// r * h^k with r the rational gcd of all coefficients and k the smallest
/// h-degree, over the numerators of all nonzero values; 1 if all are zero.
template <typename Range>
Coeff rational_h_content(const Range& values);
Coeff rational_h_content_of(const std::vector<const Coeff*>& values);

template <typename Range>
Coeff rational_h_content(const Range& values) {
    std::vector<const Coeff*> ptrs;
    for (const Coeff& c : values) ptrs.push_back(&c);
    return rational_h_content_of(ptrs);
}

/// Inverse when a = r q^i (q-1)^j with r a nonzero rational, else nullopt.
std::optional<Coeff> try_inv(const Coeff& a);

/// a / b exactly in the localized ring; throws NotDivisible.
Coeff exact_div(const Coeff& a, const Coeff& b);

/// Limit at q = 1 as a polynomial in h; throws PoleAtQ1 for a genuine pole.
QHPoly limit_q1(const Coeff& a);

}  // namespace qh
