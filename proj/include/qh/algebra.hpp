/*
 * algebra.hpp
 * -----------
 * Free associative algebra over Coeff on a finite set of generators.
 *
 * Generators carry parity and family metadata, but no sign is ever derived
 * from parity. Commutation between families is declared explicitly through
 * cross signs, and everything else comes from relations.
 *
 * A generator's id is its precedence rank, so words compare with a plain
 * graded-lexicographic order on ids.
 */
#pragma once

#include "qh/coeff.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qh {

enum class Parity { even, odd };

using GenId = std::uint16_t;

struct Generator {
    GenId id = 0;
    std::string name;
    Parity parity = Parity::even;
    std::string family;
    int precedence = 0;
};

/// Declaration used to build an Alphabet; precedence ranks must form a
/// permutation of 0..n-1.
struct GeneratorDecl {
    std::string name;
    Parity parity = Parity::even;
    std::string family;
    int precedence = 0;
};

class Alphabet {
public:
    using FamilyPair = std::pair<std::string, std::string>;

    /// Throws std::invalid_argument on duplicate names or a bad rank set.
    Alphabet(std::vector<GeneratorDecl> gens, std::map<FamilyPair, int> cross = {});

    std::size_t size() const { return gens_.size(); }
    const Generator& gen(GenId id) const { return gens_.at(id); }
    const std::vector<Generator>& generators() const { return gens_; }
    std::optional<GenId> find(const std::string& name) const;
    GenId id_of(const std::string& name) const;

    /// Declared sign between two families, if any.
    std::optional<int> cross_sign(const std::string& fa, const std::string& fb) const;
    const std::map<FamilyPair, int>& cross_signs() const { return cross_; }

private:
    std::vector<Generator> gens_;
    std::map<FamilyPair, int> cross_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<GeneratorDecl> gens,
                          std::map<Alphabet::FamilyPair, int> cross = {});

using Word = std::vector<GenId>;

/// Degree first, then left-to-right by precedence.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Finite linear combination of words. A default-constructed Element is the
/// zero of every algebra; otherwise all operands must share one alphabet.
class Element {
public:
    using Terms = std::map<Word, Coeff, WordOrder>;

    Element() = default;
    explicit Element(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

    static Element word(AlphabetPtr alphabet, Word w, Coeff c = 1);
    static Element scalar(AlphabetPtr alphabet, Coeff c);
    static Element gen(AlphabetPtr alphabet, const std::string& name);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of w (zero if absent).
    Coeff coeff(const Word& w) const;
    /// Largest word; precondition !is_zero().
    const Word& leading_word() const { return terms_.rbegin()->first; }
    const Coeff& leading_coeff() const { return terms_.rbegin()->second; }
    /// True when every word has length d.
    bool homogeneous(std::size_t d) const;
    std::size_t max_degree() const;

    void add_term(const Word& w, const Coeff& c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    /// Concatenation product with no relations applied.
    friend Element operator*(const Element& a, const Element& b) { return free_mul(a, b); }
    friend Element operator*(const Coeff& c, const Element& a) { return scale(c, a); }

    friend Element free_mul(const Element& a, const Element& b);
    friend Element scale(const Coeff& c, const Element& a);

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

    std::string word_str(const Word& w) const;
    /// Canonical text: terms in decreasing word order, re-parseable.
    std::string str() const;

private:
    static AlphabetPtr common(const Element& a, const Element& b);

    AlphabetPtr alphabet_;
    Terms terms_;
};

Element add(const Element& a, const Element& b);

struct DegreeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A finitely presented algebra: alphabet plus quadratic relations (= 0).
struct AlgebraSpec {
    std::string name;
    AlphabetPtr alphabet;
    std::vector<Element> relations;

    /// Throws DegreeError when a relation is not homogeneous of degree 2.
    void validate() const;
};

/// Re-expresses e over `to`, matching generators by name.
Element transport(const Element& e, const AlphabetPtr& to);

/// Coefficient-wise image of e under f.
template <typename F>
Element map_coeffs(const Element& e, F&& f) {
    Element r(e.alphabet());
    for (const auto& [w, c] : e.terms()) r.add_term(w, f(c));
    return r;
}

/// e divided by the rational and h-monomial content of its coefficients.
Element primitive_part(const Element& e);

/// All n^2 words of length 2 in word order.
std::vector<Word> degree2_basis(const Alphabet& a);

/// All words of length d in word order.
std::vector<Word> words_of_length(const Alphabet& a, std::size_t d);

}  // namespace qh
