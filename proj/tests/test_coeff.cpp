// Coefficient ring: canonical forms, units, limits at q = 1.
#include "qh/coeff.hpp"
#include "qh/random.hpp"

#include <doctest.h>

using namespace qh;

namespace {

const Coeff q = Coeff::q();
const Coeff h = Coeff::h();
const Coeff one = Coeff(1);
const Coeff qm1 = q - one;

Coeff over_q1(const Coeff& c) { return c.shift_q1(-1); }

// Evaluation points away from q = 0 and q = 1.
std::vector<std::pair<Rat, Rat>> points() {
    return {{Rat(2), Rat(3)}, {Rat(-3, 2), Rat(1, 5)}, {Rat(7, 3), Rat(-2)}, {Rat(5), Rat(0)}};
}

}  // namespace

TEST_CASE("arithmetic examples") {
    CHECK(over_q1(h) * qm1 == h);
    CHECK(Coeff::q_inv() + (-Coeff::q_inv()) == Coeff());
    CHECK((q - Coeff::q_inv()) * q == q * q - one);
    CHECK((q * q - one).str() == "q^2 - 1");
    CHECK(Coeff::contraction_f().str() == "h/(q - 1)");
}

TEST_CASE("canonical form strips cancellable factors") {
    // (q^2 - q) / (q (q - 1)) is 1.
    const Coeff c(QHPoly::q() * QHPoly::q() - QHPoly::q(), 1, 1);
    CHECK(c.is_one());
    CHECK(c.qpow() == 0);
    CHECK(c.q1pow() == 0);
    CHECK(c.normalized() == c);
}

TEST_CASE("try_inv accepts exactly the units") {
    CHECK(try_inv(Coeff::q_inv()).value() == q);
    CHECK(try_inv(Coeff(Rat(-3, 4)) * q * q * qm1).has_value());
    CHECK_FALSE(try_inv(q - Coeff::q_inv()).has_value());
    CHECK_FALSE(try_inv(Coeff()).has_value());
    CHECK_FALSE(try_inv(q + one).has_value());
    CHECK_FALSE(try_inv(h).has_value());
    CHECK_THROWS_AS(Coeff(QHPoly::q() + QHPoly(1)).pow(-1), NotAUnit);
}

TEST_CASE("limit at q = 1") {
    CHECK(limit_q1(Coeff(QHPoly::q() * QHPoly::q() - QHPoly(1), 0, 1)) == QHPoly(2));
    CHECK_THROWS_AS(limit_q1(Coeff::contraction_f()), PoleAtQ1);
    CHECK(limit_q1((q - Coeff::q_inv()) * Coeff::contraction_f()) == QHPoly(2) * QHPoly::h());
    CHECK(limit_q1(Coeff::q_inv().pow(3) * h) == QHPoly::h());
}

TEST_CASE("exact division of polynomials") {
    const QHPoly Q = QHPoly::q();
    const QHPoly H = QHPoly::h();
    CHECK(exact_div(Q * Q - QHPoly(1), Q - QHPoly(1)) == Q + QHPoly(1));
    CHECK(exact_div(Q * H + H, H) == Q + QHPoly(1));
    CHECK_THROWS_AS(exact_div(Q + QHPoly(1), Q - QHPoly(1)), NotDivisible);
}

TEST_CASE("exact division in the localized ring") {
    CHECK(exact_div(h, qm1) == Coeff::contraction_f());
    CHECK(exact_div((q + one) * h * h, (q + one) * h * Coeff::q_inv()) == q * h);
    CHECK_THROWS_AS(exact_div(one, q + one), NotDivisible);
}

TEST_CASE("printing") {
    CHECK(Coeff().str() == "0");
    CHECK(Coeff(Rat(-3, 2)).str() == "-3/2");
    CHECK((q * q * h - Coeff(Rat(3, 2)) * q + one).str() == "q^2*h - 3/2*q + 1");
    CHECK((Coeff::q_inv() * Coeff::contraction_f()).str() == "h/q/(q - 1)");
}

TEST_CASE("ring laws agree with evaluation at rational points") {
    rnd::Engine rng(7);
    for (int i = 0; i < 1000; ++i) {
        const auto a = rnd::coeff(rng);
        const auto b = rnd::coeff(rng);
        const auto c = rnd::coeff(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a.normalized() == a);
        CHECK(a.normalized().normalized() == a.normalized());
        // The evaluation map is a ring homomorphism wherever it is defined.
        for (const auto& [qv, hv] : points()) {
            CHECK((a * b).evaluate(qv, hv) == a.evaluate(qv, hv) * b.evaluate(qv, hv));
            CHECK((a - b).evaluate(qv, hv) == a.evaluate(qv, hv) - b.evaluate(qv, hv));
        }
    }
}

TEST_CASE("try_inv is a two-sided inverse when it succeeds") {
    rnd::Engine rng(11);
    int units = 0;
    for (int i = 0; i < 1000; ++i) {
        const Coeff a = Coeff(rnd::rational(rng)) * q.pow(static_cast<int>(rng() % 5) - 2) *
                        qm1.pow(static_cast<int>(rng() % 5) - 2);
        auto inv = try_inv(a);
        if (a.is_zero()) {
            CHECK_FALSE(inv.has_value());
            continue;
        }
        REQUIRE(inv.has_value());
        CHECK((a * *inv).is_one());
        ++units;
        // Multiplying by a non-unit factor must break invertibility.
        CHECK_FALSE(try_inv(a * (q + one)).has_value());
    }
    CHECK(units > 800);
}

TEST_CASE("limit is linear and multiplicative where defined") {
    rnd::Engine rng(13);
    for (int i = 0; i < 1000; ++i) {
        // Oracle: build p (q-1)^j / (q^m (q-1)^k) with j >= k; the limit is
        // p(1, h) when j = k and 0 otherwise.
        const QHPoly p = rnd::poly(rng);
        const auto k = static_cast<std::uint32_t>(rng() % 3);
        const auto j = k + static_cast<std::uint32_t>(rng() % 2);
        const auto m = static_cast<std::uint32_t>(rng() % 3);
        const Coeff a(p * QHPoly::q_minus_1().pow(j), m, k);
        const QHPoly expected = j == k ? p.at_q1() : QHPoly();
        CHECK(limit_q1(a) == expected);
        CHECK(limit_q1(a * qm1).is_zero());

        const auto x = rnd::regular_coeff(rng);
        const auto r = rnd::rational(rng);
        CHECK(limit_q1(a + x) == limit_q1(a) + limit_q1(x));
        CHECK(limit_q1(Coeff(r) * a) == QHPoly(r) * limit_q1(a));
        CHECK(limit_q1(a * x) == limit_q1(a) * limit_q1(x));
    }
}

TEST_CASE("valuation and shifts at q = 1") {
    const Coeff c = Coeff(QHPoly::q_minus_1().pow(2) * QHPoly::h(), 1, 0);
    CHECK(c.valuation_q1() == 2);
    CHECK(c.shift_q1(-3).valuation_q1() == -1);
    CHECK(c.shift_q1(-3).shift_q1(3) == c);
}

TEST_CASE("content of a row") {
    const std::vector<Coeff> row{Coeff(Rat(4)) * h * h, Coeff(Rat(6)) * h * q, Coeff()};
    CHECK(rational_h_content(row) == Coeff(2) * h);
    CHECK(rational_h_content(std::vector<Coeff>{Coeff(), Coeff()}).is_one());
}
