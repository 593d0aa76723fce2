#include "qh/coeff.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qh {

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

// Coefficient of q^i within a fixed h-degree slice, as a dense vector.
using Slices = std::map<std::uint32_t, std::vector<Rat>>;

Slices slice_by_h(const QHPoly& p) {
    Slices out;
    for (const auto& [m, c] : p.terms()) {
        auto& v = out[m.hdeg];
        if (v.size() <= m.qdeg) v.resize(m.qdeg + 1);
        v[m.qdeg] = c;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- QHPoly

QHPoly::QHPoly(long c) {
    if (c != 0) terms_.emplace(Monomial{}, Rat(c));
}

QHPoly::QHPoly(const Rat& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

QHPoly QHPoly::q() { return monomial(1, 1, 0); }
QHPoly QHPoly::h() { return monomial(1, 0, 1); }
QHPoly QHPoly::q_minus_1() { return q() - QHPoly(1); }

QHPoly QHPoly::monomial(const Rat& c, std::uint32_t qdeg, std::uint32_t hdeg) {
    QHPoly p;
    if (c != 0) p.terms_.emplace(Monomial{qdeg, hdeg}, c);
    return p;
}

bool QHPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rat QHPoly::constant() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rat(0) : it->second;
}

std::uint32_t QHPoly::qdegree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.qdeg);
    return d;
}

std::uint32_t QHPoly::hdegree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.hdeg);
    return d;
}

bool QHPoly::has_q() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.qdeg > 0; });
}

void QHPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QHPoly QHPoly::operator-() const {
    QHPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

QHPoly& QHPoly::operator+=(const QHPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

QHPoly& QHPoly::operator-=(const QHPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

QHPoly operator*(const QHPoly& a, const QHPoly& b) {
    QHPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(Monomial{ma.qdeg + mb.qdeg, ma.hdeg + mb.hdeg}, ca * cb);
    return r;
}

QHPoly QHPoly::pow(unsigned n) const {
    QHPoly r(1);
    QHPoly base = *this;
    while (n > 0) {
        if (n & 1U) r = r * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return r;
}

QHPoly QHPoly::at_q1() const {
    QHPoly r;
    for (const auto& [m, c] : terms_) r.add_term(Monomial{0, m.hdeg}, c);
    return r;
}

QHPoly QHPoly::with_h(const Rat& h) const {
    QHPoly r;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::uint32_t i = 0; i < m.hdeg; ++i) t *= h;
        r.add_term(Monomial{m.qdeg, 0}, t);
    }
    return r;
}

Rat QHPoly::evaluate(const Rat& q, const Rat& h) const {
    Rat acc = 0;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::uint32_t i = 0; i < m.qdeg; ++i) t *= q;
        for (std::uint32_t i = 0; i < m.hdeg; ++i) t *= h;
        acc += t;
    }
    return acc;
}

bool QHPoly::divisible_by_q() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.qdeg > 0; });
}

bool QHPoly::divisible_by_q_minus_1() const { return at_q1().is_zero(); }

QHPoly QHPoly::div_q() const {
    QHPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.qdeg - 1, m.hdeg}, c);
    return r;
}

QHPoly QHPoly::div_q_minus_1() const {
    // Synthetic division in q, one h-slice at a time.
    QHPoly r;
    for (const auto& [hd, coeffs] : slice_by_h(*this)) {
        Rat carry = 0;
        for (std::size_t i = coeffs.size(); i-- > 1;) {
            carry += coeffs[i];
            r.add_term(Monomial{static_cast<std::uint32_t>(i - 1), hd}, carry);
        }
        if (carry + coeffs[0] != 0) throw NotDivisible("not divisible by (q-1)");
    }
    return r;
}

std::string QHPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool bare = (m.qdeg == 0 && m.hdeg == 0);
        bool need_star = false;
        if (bare || mag != 1) {
            os << rat_str(mag);
            need_star = true;
        }
        auto put = [&](const char* sym, std::uint32_t e) {
            if (e == 0) return;
            if (need_star) os << '*';
            os << sym;
            if (e > 1) os << '^' << e;
            need_star = true;
        };
        put("q", m.qdeg);
        put("h", m.hdeg);
    }
    return os.str();
}

QHPoly exact_div(const QHPoly& a, const QHPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
    const auto& [lm_b, lc_b] = *b.terms().rbegin();
    QHPoly rem = a;
    QHPoly quot;
    while (!rem.is_zero()) {
        const auto& [lm_r, lc_r] = *rem.terms().rbegin();
        if (lm_r.qdeg < lm_b.qdeg || lm_r.hdeg < lm_b.hdeg)
            throw NotDivisible("exact_div: " + a.str() + " is not divisible by " + b.str());
        QHPoly t = QHPoly::monomial(lc_r / lc_b, lm_r.qdeg - lm_b.qdeg, lm_r.hdeg - lm_b.hdeg);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

// ----------------------------------------------------------------- Coeff

Coeff::Coeff(QHPoly num, std::uint32_t qpow, std::uint32_t q1pow)
    : num_(std::move(num)), qpow_(qpow), q1pow_(q1pow) {
    normalize();
}

void Coeff::normalize() {
    if (num_.is_zero()) {
        qpow_ = 0;
        q1pow_ = 0;
        return;
    }
    while (qpow_ > 0 && num_.divisible_by_q()) {
        num_ = num_.div_q();
        --qpow_;
    }
    while (q1pow_ > 0 && num_.divisible_by_q_minus_1()) {
        num_ = num_.div_q_minus_1();
        --q1pow_;
    }
}

Coeff Coeff::normalized() const {
    Coeff c = *this;
    c.normalize();
    return c;
}

bool Coeff::is_one() const { return qpow_ == 0 && q1pow_ == 0 && num_ == QHPoly(1); }

bool Coeff::is_q_free() const { return qpow_ == 0 && q1pow_ == 0 && !num_.has_q(); }

bool Coeff::is_monomial() const { return qpow_ == 0 && q1pow_ == 0 && num_.terms().size() <= 1; }

Coeff Coeff::operator-() const {
    Coeff r = *this;
    r.num_ = -r.num_;
    return r;
}

Coeff& Coeff::operator+=(const Coeff& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const auto m = std::max(qpow_, o.qpow_);
    const auto k = std::max(q1pow_, o.q1pow_);
    const auto q = QHPoly::q();
    const auto q1 = QHPoly::q_minus_1();
    QHPoly a = num_ * q.pow(m - qpow_) * q1.pow(k - q1pow_);
    QHPoly b = o.num_ * q.pow(m - o.qpow_) * q1.pow(k - o.q1pow_);
    num_ = a + b;
    qpow_ = m;
    q1pow_ = k;
    normalize();
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff& Coeff::operator*=(const Coeff& o) {
    num_ = num_ * o.num_;
    qpow_ += o.qpow_;
    q1pow_ += o.q1pow_;
    normalize();
    return *this;
}

Coeff Coeff::pow(int n) const {
    if (n < 0) {
        auto inv = try_inv(*this);
        if (!inv) throw NotAUnit("negative power of non-unit " + str());
        return inv->pow(-n);
    }
    return Coeff(num_.pow(static_cast<unsigned>(n)), qpow_ * static_cast<std::uint32_t>(n),
                 q1pow_ * static_cast<std::uint32_t>(n));
}

int Coeff::valuation_q1() const {
    if (is_zero()) throw std::domain_error("valuation of zero");
    int v = 0;
    QHPoly p = num_;
    while (p.divisible_by_q_minus_1()) {
        p = p.div_q_minus_1();
        ++v;
    }
    return v - static_cast<int>(q1pow_);
}

Coeff Coeff::shift_q1(int n) const {
    if (n >= 0) return Coeff(num_ * QHPoly::q_minus_1().pow(static_cast<unsigned>(n)), qpow_, q1pow_);
    return Coeff(num_, qpow_, q1pow_ + static_cast<std::uint32_t>(-n));
}

Rat Coeff::evaluate(const Rat& q, const Rat& h) const {
    Rat den = 1;
    for (std::uint32_t i = 0; i < qpow_; ++i) den *= q;
    for (std::uint32_t i = 0; i < q1pow_; ++i) den *= (q - 1);
    if (den == 0) throw std::domain_error("evaluate: denominator vanishes");
    return num_.evaluate(q, h) / den;
}

Coeff Coeff::with_h(const Rat& h) const { return Coeff(num_.with_h(h), qpow_, q1pow_); }

std::string Coeff::str() const {
    if (qpow_ == 0 && q1pow_ == 0) return num_.str();
    std::string s = num_.terms().size() == 1 ? num_.str() : "(" + num_.str() + ")";
    if (qpow_ == 1) s += "/q";
    if (qpow_ > 1) s += "/q^" + std::to_string(qpow_);
    if (q1pow_ == 1) s += "/(q - 1)";
    if (q1pow_ > 1) s += "/(q - 1)^" + std::to_string(q1pow_);
    return s;
}

Coeff rational_h_content_of(const std::vector<const Coeff*>& values) {
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    std::optional<std::uint32_t> hmin;
    for (const Coeff* c : values) {
        for (const auto& [m, r] : c->num().terms()) {
            num_gcd = gcd(num_gcd, mpz_class(r.get_num()));
            den_lcm = lcm(den_lcm, mpz_class(r.get_den()));
            hmin = hmin ? std::min(*hmin, m.hdeg) : m.hdeg;
        }
    }
    if (!hmin) return 1;
    return Coeff(QHPoly::monomial(Rat(num_gcd, den_lcm), 0, *hmin));
}

std::optional<Coeff> try_inv(const Coeff& a) {
    if (a.is_zero()) return std::nullopt;
    QHPoly p = a.num();
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    while (p.divisible_by_q()) {
        p = p.div_q();
        ++i;
    }
    while (p.divisible_by_q_minus_1()) {
        p = p.div_q_minus_1();
        ++j;
    }
    if (!p.is_constant()) return std::nullopt;
    const Rat r = p.constant();
    QHPoly n = QHPoly(Rat(1) / r) * QHPoly::q().pow(a.qpow()) * QHPoly::q_minus_1().pow(a.q1pow());
    return Coeff(std::move(n), i, j);
}

Coeff exact_div(const Coeff& a, const Coeff& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (a.is_zero()) return {};
    // Split b's numerator into its unit part and a remainder coprime to q, q-1.
    QHPoly rest = b.num();
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    while (rest.divisible_by_q()) {
        rest = rest.div_q();
        ++i;
    }
    while (rest.divisible_by_q_minus_1()) {
        rest = rest.div_q_minus_1();
        ++j;
    }
    QHPoly quot = exact_div(a.num(), rest);
    Coeff r(std::move(quot), a.qpow() + i, a.q1pow() + j);
    return r * Coeff(QHPoly::q().pow(b.qpow()) * QHPoly::q_minus_1().pow(b.q1pow()));
}

QHPoly limit_q1(const Coeff& a) {
    if (a.q1pow() > 0) throw PoleAtQ1("pole at q = 1: " + a.str());
    return a.num().at_q1();
}

}  // namespace qh
