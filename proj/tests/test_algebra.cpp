#include <doctest.h>

#include <stdexcept>

#include "liftvf/matrix.hpp"
#include "liftvf/poly.hpp"
#include "liftvf/rational.hpp"
#include "test_support.hpp"

using namespace liftvf;
using testsupport::cofactor_determinant;
using testsupport::random_poly;

namespace {

VarTablePtr xy_table() { return VarTable::create({"x", "y"}); }

// Codomain table of the k=2 cross cap, as a plain variable table.
VarTablePtr wu_table() { return VarTable::create({"V1", "W1", "W2"}); }

Poly var(const VarTablePtr& t, const char* name) {
    return Poly::variable(t, *t->index_of(name));
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(numerator(parse_rational("-4/6")) == -2);
    CHECK(denominator(parse_rational("-4/6")) == 3);
    CHECK(parse_rational("0") == 0);
    CHECK(denominator(parse_rational("0")) == 1);
    CHECK(to_string(Rational(-2, 3)) == "-2/3");
    CHECK(to_string(Rational(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("poly arithmetic basics") {
    const auto t = xy_table();
    const Poly x = var(t, "x");
    const Poly y = var(t, "y");
    const Poly one = Poly::constant(t, Rational(1));

    // (x+1) + (x-1) = 2x, with the constant terms cancelling
    CHECK((x + one) + (x - one) == Rational(2) * x);
    CHECK((y * y) == Poly::monomial(t, {0, 2}, Rational(1)));

    // cancellation leaves canonical form: no zero coefficients stored
    const Poly z = (x + y) - (x + y);
    CHECK(z.is_zero());
    CHECK(z.term_count() == 0);
}

TEST_CASE("k=2 image equation assembled termwise") {
    const auto t = wu_table();
    const Poly v1 = var(t, "V1");
    const Poly w1 = var(t, "W1");
    const Poly w2 = var(t, "W2");
    const Poly h = w2 * w2 - (v1 * v1) * w1;
    CHECK(to_string(h) == "W2^2 - V1^2*W1");
    CHECK(h.term_count() == 2);
}

TEST_CASE("table mismatch is an error") {
    const Poly a = var(xy_table(), "x");
    const Poly b = var(wu_table(), "V1");
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("substitution: image equation vanishes on phi_2") {
    const auto cod = wu_table();
    const auto dom = VarTable::create({"v1", "y"});
    const Poly v1 = var(dom, "v1");
    const Poly y = var(dom, "y");

    Substitution s(cod, dom);
    s.set("V1", v1);
    s.set("W1", y * y);
    s.set("W2", v1 * y);

    const Poly h = var(cod, "W2") * var(cod, "W2") -
                   var(cod, "V1") * var(cod, "V1") * var(cod, "W1");
    CHECK(s.apply(h).is_zero());
}

TEST_CASE("substitution: identity and single-variable lookup") {
    const auto t = wu_table();
    const Poly p = var(t, "V1") * var(t, "W2") + Rational(3) * var(t, "W1");
    CHECK(identity_substitution(t).apply(p) == p);

    // missing image is only an error when the variable is used
    Substitution partial(t, t);
    partial.set("W1", var(t, "W1"));
    CHECK(partial.apply(Rational(3) * var(t, "W1")) == Rational(3) * var(t, "W1"));
    CHECK_THROWS_AS(partial.apply(p), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    const int k = 5;
    std::vector<std::string> names;
    for (int i = 1; i <= k - 2; ++i) names.push_back("u" + std::to_string(i));
    names.push_back("y");
    const auto t = VarTable::create(names);
    const Poly y = var(t, "y");

    // W_1 = y^k + sum u_i y^i, dW_1/dy = k y^{k-1} + sum i u_i y^{i-1}
    Poly w1 = Poly::monomial(t, {0, 0, 0, k}, Rational(1));
    Poly expect = Poly::monomial(t, {0, 0, 0, k - 1}, Rational(k));
    for (int i = 1; i <= k - 2; ++i) {
        Monomial m(t->size(), 0);
        m[i - 1] = 1;
        m[t->size() - 1] = i;
        w1 += Poly::monomial(t, m, Rational(1));
        Monomial d = m;
        d[t->size() - 1] = i - 1;
        expect += Poly::monomial(t, d, Rational(i));
    }
    CHECK(partial_derivative(w1, "y") == expect);

    CHECK(partial_derivative(Poly::constant(t, Rational(42)), "y").is_zero());

    const auto cod = wu_table();
    const Poly h = var(cod, "W2") * var(cod, "W2") -
                   var(cod, "V1") * var(cod, "V1") * var(cod, "W1");
    CHECK(partial_derivative(h, "W2") == Rational(2) * var(cod, "W2"));
    CHECK_THROWS_AS(partial_derivative(h, "nope"), std::invalid_argument);
}

TEST_CASE("determinant: 1x1, non-square, integer cross-check") {
    const auto t = xy_table();
    PolyMatrix one(1, 1, t);
    one.at(0, 0) = var(t, "x") + Poly::constant(t, Rational(2));
    CHECK(determinant(one) == one.at(0, 0));

    PolyMatrix rect(2, 3, t);
    CHECK_THROWS_AS(determinant(rect), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        PolyMatrix m(3, 3, t);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                m.at(i, j) = Poly::constant(t, testsupport::random_rational(rng));
        CHECK(determinant(m) == cofactor_determinant(m));
    }
}

TEST_CASE("determinant matches cofactor oracle on random polynomial matrices") {
    const auto t = xy_table();
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            PolyMatrix m(n, n, t);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, t, 2, 2);
            CHECK(determinant(m) == cofactor_determinant(m));
        }
    }
}

TEST_CASE("exact univariate division") {
    const auto t = wu_table();
    const Poly v1 = var(t, "V1");
    const Poly w1 = var(t, "W1");
    const Poly w2 = var(t, "W2");
    const std::size_t w2i = *t->index_of("W2");
    const Poly h = w2 * w2 - v1 * v1 * w1;

    SUBCASE("W2^3 by the k=2 image equation, long division by hand") {
        const auto [q, r] = exact_div_univariate(w2 * w2 * w2, h, w2i);
        CHECK(q == w2);
        CHECK(r == v1 * v1 * w1 * w2);
    }
    SUBCASE("zero dividend") {
        const auto [q, r] = exact_div_univariate(Poly::zero(t), h, w2i);
        CHECK(q.is_zero());
        CHECK(r.is_zero());
    }
    SUBCASE("non-unit leading coefficient rejected") {
        const Poly d = v1 * w2 + w1;
        CHECK_THROWS_AS(exact_div_univariate(w2 * w2, d, w2i), std::invalid_argument);
    }
    SUBCASE("reconstruction on random inputs") {
        std::mt19937_64 rng(23);
        int done = 0;
        while (done < 100) {
            const Poly p = random_poly(rng, t, 6, 3);
            Poly d = random_poly(rng, t, 4, 2);
            const int dd = degree_in(d, w2i);
            if (dd < 1) continue;
            const Poly lead = coeff_of_power(d, w2i, dd);
            if (!lead.is_constant() || lead.is_zero()) continue;
            const auto [q, r] = exact_div_univariate(p, d, w2i);
            CHECK(q * d + r == p);
            CHECK(degree_in(r, w2i) < dd);
            ++done;
        }
    }
}

TEST_CASE("rank of constant matrices") {
    const auto t = xy_table();
    PolyMatrix id(4, 4, t);
    for (int i = 0; i < 4; ++i) id.at(i, i) = Poly::constant(t, Rational(1));
    CHECK(rank(id) == 4);

    PolyMatrix zero(3, 5, t);
    CHECK(rank(zero) == 0);

    PolyMatrix bad(1, 1, t);
    bad.at(0, 0) = var(t, "x");
    CHECK_THROWS_AS(rank(bad), std::invalid_argument);

    // dependent rows
    CHECK(rational_rank({{Rational(1), Rational(2)},
                         {Rational(2), Rational(4)},
                         {Rational(0), Rational(1)}}) == 2);
}

TEST_CASE("ring axioms and substitution homomorphism on random polys") {
    const auto t = VarTable::create({"x", "y", "z"});
    const auto target = VarTable::create({"s", "t"});
    std::mt19937_64 rng(99);

    Substitution sub(t, target);
    sub.set("x", random_poly(rng, target, 2, 2));
    sub.set("y", random_poly(rng, target, 2, 2));
    sub.set("z", random_poly(rng, target, 2, 2));

    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = random_poly(rng, t, 4, 3);
        const Poly b = random_poly(rng, t, 4, 3);
        const Poly c = random_poly(rng, t, 4, 3);
        CHECK(a + b - b == a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(sub.apply(a * b + c) == sub.apply(a) * sub.apply(b) + sub.apply(c));
    }
}

TEST_CASE("canonical rendering") {
    const auto cod = VarTable::create({"U1", "V1", "V2", "W1", "W2"});
    const Poly p = Rational(-3) * (var(cod, "V1") * var(cod, "W1")) +
                   Rational(2) * (var(cod, "U1") * var(cod, "W2"));
    CHECK(to_string(p) == "-3*V1*W1 + 2*U1*W2");
    CHECK(to_string(Poly::zero(cod)) == "0");
    CHECK(to_string(Poly::constant(cod, Rational(-1, 2))) == "-1/2");
    CHECK(to_string(var(cod, "U1") - var(cod, "V1")) == "-V1 + U1");
}
