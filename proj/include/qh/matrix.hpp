/*
 * matrix.hpp
 * ----------
 * Scalar matrices over Coeff and small matrices over the algebra.
 *
 * Tensor embeddings follow the plain index formulas
 *   (A1)^{ij}_{kl} = A^i_k delta^j_l,   (A2)^{ij}_{kl} = delta^i_k A^j_l
 * with no Koszul signs; odd entries get their signs from the relations only.
 * A pair index (i,j) is flattened as 2*i + j.
 */
#pragma once

#include "qh/coeff.hpp"
#include "qh/algebra.hpp"
#include "qh/rewrite.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qh {

struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// PoleAtQ1 raised while taking an entrywise limit.
struct MatrixPoleAtQ1 : PoleAtQ1 {
    MatrixPoleAtQ1(std::size_t r, std::size_t c, const std::string& what)
        : PoleAtQ1("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " + what),
          row(r), col(c) {}
    std::size_t row;
    std::size_t col;
};

class ScalMat {
public:
    ScalMat() = default;
    explicit ScalMat(std::size_t n) : n_(n), a_(n * n) {}
    ScalMat(std::size_t n, std::vector<Coeff> entries);

    static ScalMat identity(std::size_t n);

    std::size_t dim() const { return n_; }
    Coeff& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const Coeff& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    bool is_zero() const;

    friend ScalMat operator+(const ScalMat& a, const ScalMat& b);
    friend ScalMat operator-(const ScalMat& a, const ScalMat& b);
    friend ScalMat operator*(const ScalMat& a, const ScalMat& b);
    friend bool operator==(const ScalMat&, const ScalMat&) = default;

    std::string str() const;

private:
    std::size_t n_ = 0;
    std::vector<Coeff> a_;
};

ScalMat kron(const ScalMat& a, const ScalMat& b);
ScalMat scale_mat(const Coeff& c, const ScalMat& m);

/// Inverse over the localized ring; every pivot must be a unit.
ScalMat inverse(const ScalMat& m);

/// gg^{-1} * r * gg.
ScalMat similarity(const ScalMat& gg, const ScalMat& r);

/// Entrywise limit at q = 1; throws MatrixPoleAtQ1.
ScalMat limit_mat(const ScalMat& m);

/// R12 R13 R23 - R23 R13 R12 for a 4x4 matrix on a pair of 2-dim spaces.
ScalMat qybe_residual(const ScalMat& r);

/// Lifts a 4x4 matrix to one of the three pair slots of an 8x8 triple.
ScalMat lift12(const ScalMat& r);
ScalMat lift13(const ScalMat& r);
ScalMat lift23(const ScalMat& r);

template <std::size_t N>
class AlgMat {
public:
    AlgMat() = default;
    explicit AlgMat(std::array<Element, N * N> e) : a_(std::move(e)) {}

    static AlgMat identity(const AlphabetPtr& alphabet) {
        AlgMat m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = Element::scalar(alphabet, 1);
        return m;
    }

    static constexpr std::size_t dim() { return N; }
    Element& operator()(std::size_t r, std::size_t c) { return a_[r * N + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return a_[r * N + c]; }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend AlgMat operator+(const AlgMat& a, const AlgMat& b) {
        AlgMat r;
        for (std::size_t i = 0; i < N * N; ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    friend AlgMat operator-(const AlgMat& a, const AlgMat& b) {
        AlgMat r;
        for (std::size_t i = 0; i < N * N; ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }
    friend AlgMat operator*(const AlgMat& a, const AlgMat& b) { return mat_mul(a, b); }
    friend bool operator==(const AlgMat&, const AlgMat&) = default;

    /// Row-by-column product; entry factors keep their order, nothing is reduced.
    friend AlgMat mat_mul(const AlgMat& a, const AlgMat& b) {
        AlgMat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                for (std::size_t k = 0; k < N; ++k) r(i, j) += free_mul(a(i, k), b(k, j));
        return r;
    }

    friend AlgMat operator*(const ScalMat& s, const AlgMat& a) {
        check_dim(s);
        AlgMat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                for (std::size_t k = 0; k < N; ++k)
                    if (!s(i, k).is_zero()) r(i, j) += scale(s(i, k), a(k, j));
        return r;
    }
    friend AlgMat operator*(const AlgMat& a, const ScalMat& s) {
        check_dim(s);
        AlgMat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                for (std::size_t k = 0; k < N; ++k)
                    if (!s(k, j).is_zero()) r(i, j) += scale(s(k, j), a(i, k));
        return r;
    }

    /// Every entry multiplied by x on the left (resp. right).
    AlgMat left_mul(const Element& x) const {
        AlgMat r;
        for (std::size_t i = 0; i < N * N; ++i) r.a_[i] = free_mul(x, a_[i]);
        return r;
    }
    AlgMat right_mul(const Element& x) const {
        AlgMat r;
        for (std::size_t i = 0; i < N * N; ++i) r.a_[i] = free_mul(a_[i], x);
        return r;
    }

    AlgMat normal_form(const RuleSystem& rs) const {
        AlgMat r;
        for (std::size_t i = 0; i < N * N; ++i) r.a_[i] = qh::normal_form(a_[i], rs);
        return r;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < N; ++i) {
            s += "[ ";
            for (std::size_t j = 0; j < N; ++j) {
                if (j > 0) s += " , ";
                s += (*this)(i, j).str();
            }
            s += " ]\n";
        }
        return s;
    }

    /// Nonzero entries as "(r,c) = value" lines.
    std::string nonzero_str() const {
        std::string s;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (!(*this)(i, j).is_zero())
                    s += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") = " + (*this)(i, j).str() + "\n";
        return s;
    }

private:
    static void check_dim(const ScalMat& s) {
        if (s.dim() != N) throw std::invalid_argument("matrix dimension mismatch");
    }

    std::array<Element, N * N> a_{};
};

using AlgMat2 = AlgMat<2>;
using AlgMat4 = AlgMat<4>;

/// A tensor I.
AlgMat4 embed1(const AlgMat2& a);
/// I tensor A.
AlgMat4 embed2(const AlgMat2& a);

/// Entrywise normal form of R*A1*A2 - sign*A2*A1*R.
AlgMat4 rtt_residual(const ScalMat& r, const AlgMat2& a, const RuleSystem& rs, int sign);

/// g A g^{-1} for a 2x2 scalar g (entries of A stay in their own algebra).
AlgMat2 conjugate(const ScalMat& g, const AlgMat2& a);

}  // namespace qh
