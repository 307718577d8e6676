#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loglie/polynomial.hpp"

#include <random>

using namespace loglie;

namespace {

const char* kQuartic = "y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*w^2*x^2";

RingPtr xyzw()
{
    return make_ring({"x", "y", "z", "w"});
}

Polynomial random_poly(std::mt19937& rng, const RingPtr& ring, int max_terms = 4, int max_deg = 3)
{
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> expo(0, max_deg);
    std::vector<Term> terms;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            m.exp[i] = static_cast<std::uint16_t>(expo(rng) / 2);
        terms.push_back({m, Rational(coeff(rng))});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace

TEST_CASE("parse simple products and the quartic discriminant")
{
    auto r = make_ring({"x", "y"});
    Polynomial p = parse_polynomial("x*y", r);
    REQUIRE(p.size() == 1);
    CHECK(p.leading().mono.exp[0] == 1);
    CHECK(p.leading().mono.exp[1] == 1);
    CHECK(p.leading().coeff == 1);

    Polynomial f = parse_polynomial(kQuartic, xyzw());
    CHECK(f.size() == 5);
    CHECK(f.degree() == 4);
    CHECK(f.to_string() == "y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*x^2*w^2");
}

TEST_CASE("parse errors carry offsets")
{
    auto r = make_ring({"x", "y"});
    try {
        parse_polynomial("x^2 + (3/2", r);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);
    }
    CHECK_THROWS_AS(parse_polynomial("x + q", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x +", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x y", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0", r), ParseError);
    CHECK(parse_polynomial(" -3/6 * x ^ 2 ", r).to_string() == "-1/2*x^2");
}

TEST_CASE("ring operations")
{
    auto r = make_ring({"x", "y"});
    auto P = [&](const char* s) { return parse_polynomial(s, r); };
    CHECK((P("x+y") * P("x-y")) == P("x^2-y^2"));
    auto q = divide_exact(P("x^2*y + x*y^2"), P("x*y"));
    REQUIRE(q);
    CHECK(*q == P("x+y"));
    CHECK_FALSE(divide_exact(P("x^2+1"), P("x")));
    CHECK((P("x") * Rational(3, 2)) == P("3/2*x"));
    auto other = make_ring({"a", "b"});
    CHECK_THROWS_AS(P("x") + parse_polynomial("a", other), RingMismatch);
}

TEST_CASE("partial derivatives")
{
    auto r = make_ring({"x", "y"});
    CHECK(partial_derivative(parse_polynomial("x^2*y", r), 0) == parse_polynomial("2*x*y", r));
    CHECK(partial_derivative(parse_polynomial("7", r), 0).is_zero());
    auto R = xyzw();
    Polynomial f = parse_polynomial(kQuartic, R);
    CHECK(partial_derivative(f, 3) == parse_polynomial("-4*y^3 + 18*x*y*z - 54*w*x^2", R));
}

TEST_CASE("order at the origin")
{
    auto R = xyzw();
    CHECK(order_at_origin(parse_polynomial(kQuartic, R)) == 4U);
    CHECK(order_at_origin(parse_polynomial("x^2+y^2+z^2", R)) == 2U);
    CHECK_FALSE(order_at_origin(Polynomial(R)).has_value());
    CHECK(order_at_origin(parse_polynomial("x^3 + y^2 + 1", R)) == 0U);
}

TEST_CASE("quasihomogeneous weights")
{
    auto r = make_ring({"x", "y"});
    auto w = quasihomogeneous_weights(parse_polynomial("x^3 + y^4", r));
    REQUIRE(w);
    CHECK(w->weights == std::vector<Rational>{Rational(4, 3), Rational(1)});
    CHECK(w->degree == 4);

    auto w7 = quasihomogeneous_weights(parse_polynomial(kQuartic, xyzw()));
    REQUIRE(w7);
    CHECK(w7->weights == std::vector<Rational>(4, Rational(1)));
    CHECK(w7->degree == 4);

    CHECK_FALSE(quasihomogeneous_weights(parse_polynomial("x^3 + y^3 + x^2*y^2", r)));
}

TEST_CASE("reducedness via gcd with partials")
{
    auto r = make_ring({"x", "y", "z"});
    CHECK_FALSE(is_reduced(parse_polynomial("x^2*y", r)));
    CHECK(is_reduced(parse_polynomial("x*y*z", r)));
    CHECK(is_reduced(parse_polynomial(kQuartic, xyzw())));
    CHECK_FALSE(is_reduced(parse_polynomial("(x^2 + y*z + 1)^2 * (x - z)", r)));
    CHECK(is_reduced(parse_polynomial("x^3 + y^4", r)));
}

TEST_CASE("gcd of structured inputs")
{
    auto r = make_ring({"x", "y", "z"});
    auto P = [&](const char* s) { return parse_polynomial(s, r); };
    Polynomial g = gcd(P("(x+y)*(x-z)^2*(y^2+1)"), P("(x-z)*(y^2+1)*(x*y+z)"));
    CHECK(g == gcd(P("(x-z)*(y^2+1)"), Polynomial(r)));
    CHECK(gcd(P("x^2-1"), P("x^2+1")).is_constant());
}

TEST_CASE("property: ring laws, printing, order, gcd")
{
    std::mt19937 rng(20261016);
    auto r = make_ring({"x", "y", "z"});
    for (int iter = 0; iter < 150; ++iter) {
        Polynomial a = random_poly(rng, r), b = random_poly(rng, r), c = random_poly(rng, r);
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a - a).is_zero());
        CHECK(parse_polynomial(a.to_string(), r) == a);
        if (!a.is_zero() && !b.is_zero())
            CHECK(*order_at_origin(a * b) == *order_at_origin(a) + *order_at_origin(b));
        if (!a.is_zero() && !b.is_zero()) {
            Polynomial ab = a * c, bb = b * c;
            if (ab.is_zero() || bb.is_zero())
                continue;
            Polynomial g = gcd(ab, bb);
            auto qa = divide_exact(ab, g);
            auto qb = divide_exact(bb, g);
            REQUIRE(qa);
            REQUIRE(qb);
            CHECK(gcd(*qa, *qb).is_constant());
            if (!c.is_zero())
                CHECK(divide_exact(g, gcd(c, c)).has_value());
        }
    }
}

TEST_CASE("property: quasihomogeneous certificates are exact")
{
    std::mt19937 rng(7);
    auto r = make_ring({"x", "y", "z"});
    for (int iter = 0; iter < 60; ++iter) {
        Polynomial p = random_poly(rng, r, 3, 6);
        if (p.is_zero())
            continue;
        auto w = quasihomogeneous_weights(p);
        if (!w)
            continue;
        for (const auto& x : w->weights)
            CHECK(x >= 1);
        for (const auto& t : p.terms())
            CHECK(weighted_degree(t.mono, w->weights) == w->degree);
    }
}
