#include "qh/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qh {

Alphabet::Alphabet(std::vector<GeneratorDecl> gens, std::map<FamilyPair, int> cross) {
    const auto n = gens.size();
    std::vector<bool> seen(n, false);
    std::set<std::string> names;
    gens_.resize(n);
    for (auto& g : gens) {
        if (g.precedence < 0 || static_cast<std::size_t>(g.precedence) >= n || seen[g.precedence])
            throw std::invalid_argument("precedence ranks must be a permutation of 0.." +
                                        std::to_string(n - 1));
        if (!names.insert(g.name).second)
            throw std::invalid_argument("duplicate generator name '" + g.name + "'");
        if (g.name == "q" || g.name == "h")
            throw std::invalid_argument("'" + g.name + "' is reserved for a parameter");
        seen[g.precedence] = true;
        auto id = static_cast<GenId>(g.precedence);
        gens_[id] = Generator{id, std::move(g.name), g.parity, std::move(g.family), g.precedence};
    }
    for (auto& [fams, sign] : cross) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("cross sign must be +1 or -1");
        auto key = fams.first <= fams.second ? fams : FamilyPair{fams.second, fams.first};
        cross_[key] = sign;
    }
}

std::optional<GenId> Alphabet::find(const std::string& name) const {
    for (const auto& g : gens_)
        if (g.name == name) return g.id;
    return std::nullopt;
}

GenId Alphabet::id_of(const std::string& name) const {
    auto id = find(name);
    if (!id) throw std::out_of_range("unknown generator '" + name + "'");
    return *id;
}

std::optional<int> Alphabet::cross_sign(const std::string& fa, const std::string& fb) const {
    auto key = fa <= fb ? FamilyPair{fa, fb} : FamilyPair{fb, fa};
    auto it = cross_.find(key);
    if (it == cross_.end()) return std::nullopt;
    return it->second;
}

AlphabetPtr make_alphabet(std::vector<GeneratorDecl> gens, std::map<Alphabet::FamilyPair, int> cross) {
    return std::make_shared<const Alphabet>(std::move(gens), std::move(cross));
}

// --------------------------------------------------------------- Element

Element Element::word(AlphabetPtr alphabet, Word w, Coeff c) {
    Element e(std::move(alphabet));
    e.add_term(w, c);
    return e;
}

Element Element::scalar(AlphabetPtr alphabet, Coeff c) { return word(std::move(alphabet), {}, std::move(c)); }

Element Element::gen(AlphabetPtr alphabet, const std::string& name) {
    const GenId id = alphabet->id_of(name);
    return word(std::move(alphabet), Word{id});
}

Coeff Element::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff{} : it->second;
}

bool Element::homogeneous(std::size_t d) const {
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.size() == d; });
}

std::size_t Element::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

void Element::add_term(const Word& w, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlphabetPtr Element::common(const Element& a, const Element& b) {
    if (!a.alphabet_) return b.alphabet_;
    if (!b.alphabet_) return a.alphabet_;
    if (a.alphabet_ != b.alphabet_)
        throw std::invalid_argument("elements belong to different algebras");
    return a.alphabet_;
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

Element& Element::operator+=(const Element& o) {
    alphabet_ = common(*this, o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    alphabet_ = common(*this, o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element free_mul(const Element& a, const Element& b) {
    Element r(Element::common(a, b));
    Word w;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            w.assign(wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

Element scale(const Coeff& c, const Element& a) {
    Element r(a.alphabet_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : a.terms_) r.add_term(w, c * x);
    return r;
}

Element add(const Element& a, const Element& b) { return a + b; }

std::string Element::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) s += '*';
        s += alphabet_ ? alphabet_->gen(w[i]).name : "g" + std::to_string(w[i]);
    }
    return s;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        std::string cs;
        bool negative = false;
        if (c.is_monomial()) {
            // Single rational multiple of q^i h^j.
            const auto& [m, r] = *c.num().terms().begin();
            negative = r < 0;
            cs = (negative ? -c : c).str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (w.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << word_str(w);
        } else {
            os << cs << '*' << word_str(w);
        }
    }
    return os.str();
}

void AlgebraSpec::validate() const {
    for (const auto& r : relations) {
        if (r.is_zero()) continue;
        if (!r.homogeneous(2))
            throw DegreeError("relation '" + r.str() + "' in " + name + " is not homogeneous of degree 2");
        if (r.alphabet() && r.alphabet() != alphabet)
            throw std::invalid_argument("relation of " + name + " uses a foreign alphabet");
    }
}

Element transport(const Element& e, const AlphabetPtr& to) {
    Element r(to);
    Word nw;
    for (const auto& [w, c] : e.terms()) {
        nw.clear();
        for (GenId g : w) nw.push_back(to->id_of(e.alphabet()->gen(g).name));
        r.add_term(nw, c);
    }
    return r;
}

Element primitive_part(const Element& e) {
    std::vector<const Coeff*> cs;
    for (const auto& [w, c] : e.terms()) cs.push_back(&c);
    const Coeff content = rational_h_content_of(cs);
    if (content.is_one()) return e;
    return map_coeffs(e, [&](const Coeff& c) { return exact_div(c, content); });
}

std::vector<Word> words_of_length(const Alphabet& a, std::size_t d) {
    const auto n = a.size();
    std::vector<Word> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= n;
    out.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
        Word w(d);
        std::size_t x = k;
        for (std::size_t i = d; i-- > 0;) {
            w[i] = static_cast<GenId>(x % n);
            x /= n;
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Word> degree2_basis(const Alphabet& a) { return words_of_length(a, 2); }

}  // namespace qh
