#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loglie/groebner.hpp"

#include <random>

using namespace loglie;

namespace {

std::vector<ModuleElement> ideal(const RingPtr& r, std::initializer_list<const char*> gens)
{
    std::vector<ModuleElement> out;
    for (const char* g : gens)
        out.push_back({parse_polynomial(g, r)});
    return out;
}

void check_cofactor_identity(const GroebnerBasis& gb)
{
    for (std::size_t k = 0; k < gb.elements.size(); ++k)
        CHECK(combine(gb.cofactors[k], gb.gens) == gb.elements[k]);
}

/// Dimension of V(I) by brute force: the largest variable set S with
/// I intersect Q[S] = 0, each tested with an elimination order.
int brute_force_dimension(const std::vector<Polynomial>& gens)
{
    const RingPtr& r = gens.front().ring();
    const std::size_t n = r->nvars();
    std::vector<ModuleElement> elems;
    for (const auto& g : gens)
        elems.push_back({g});
    int best = -1;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        MonomialOrder order;
        order.weights.assign(n, Rational(0));
        for (std::size_t v = 0; v < n; ++v)
            if (!(mask & (1U << v)))
                order.weights[v] = 1;
        GroebnerBasis gb = buchberger(elems, order);
        bool meets = false;
        for (const auto& e : gb.elements) {
            bool only_s = true;
            for (const auto& t : e[0].terms())
                for (std::size_t v = 0; v < n; ++v)
                    if (t.mono.exp[v] && !(mask & (1U << v)))
                        only_s = false;
            if (only_s)
                meets = true;
        }
        if (!meets)
            best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

Polynomial random_poly(std::mt19937& rng, const RingPtr& ring)
{
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> expo(0, 2);
    std::vector<Term> terms;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            m.exp[i] = static_cast<std::uint16_t>(expo(rng));
        terms.push_back({m, Rational(coeff(rng))});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace

TEST_CASE("buchberger on small ideals")
{
    auto r = make_ring({"x", "y"});
    GroebnerBasis gb = buchberger(ideal(r, {"x", "y"}));
    REQUIRE(gb.elements.size() == 2);
    check_cofactor_identity(gb);

    GroebnerBasis gb2 = buchberger(ideal(r, {"x^2 - y", "x^3"}));
    check_cofactor_identity(gb2);
    CHECK(module_membership({parse_polynomial("x*y", r)}, gb2));
    CHECK(module_membership({parse_polynomial("y^2", r)}, gb2));
    for (const auto& e : gb2.elements)
        CHECK(module_membership(e, ideal(r, {"x^2 - y", "x^3"})));
    for (const auto& g : ideal(r, {"x^2 - y", "x^3"}))
        CHECK(module_membership(g, gb2));

    ModuleElement v{parse_polynomial("x", r), parse_polynomial("y", r)};
    GroebnerBasis gm = buchberger({v});
    REQUIRE(gm.elements.size() == 1);
    CHECK(gm.elements[0] == v);
}

TEST_CASE("normal forms")
{
    auto r = make_ring({"x", "y"});
    GroebnerBasis gb = buchberger(ideal(r, {"x", "y"}));
    NormalForm one = normal_form({Polynomial::constant(r, Rational(1))}, gb);
    CHECK(one.remainder[0] == Polynomial::constant(r, Rational(1)));

    GroebnerBasis g2 = buchberger(ideal(r, {"x^2 - y"}));
    NormalForm nf = normal_form({parse_polynomial("x^2*y", r)}, g2);
    CHECK(nf.remainder[0] == parse_polynomial("y^2", r));
    ModuleElement back = combine(nf.quotients, g2.elements) + nf.remainder;
    CHECK(back[0] == parse_polynomial("x^2*y", r));
}

TEST_CASE("syzygies")
{
    auto r = make_ring({"x", "y"});
    auto s = syzygies(ideal(r, {"x", "y"}));
    REQUIRE(s.size() == 1);
    CHECK(s[0] == ModuleElement{parse_polynomial("y", r), parse_polynomial("-x", r)});

    CHECK(syzygies(ideal(r, {"x^2 + y"})).empty());

    auto gens = ideal(r, {"x^2", "x*y", "y^2"});
    auto syz = syzygies(gens);
    CHECK(syz.size() >= 2);
    for (const auto& z : syz) {
        Polynomial sum(r);
        for (std::size_t i = 0; i < gens.size(); ++i)
            sum += z[i] * gens[i][0];
        CHECK(sum.is_zero());
    }
}

TEST_CASE("module membership")
{
    auto r = make_ring({"x", "y"});
    auto c = module_membership({parse_polynomial("x^2 + x*y", r)}, ideal(r, {"x"}));
    REQUIRE(c);
    CHECK((*c)[0] == parse_polynomial("x + y", r));
    CHECK_FALSE(module_membership({parse_polynomial("y", r)}, ideal(r, {"x"})));
}

TEST_CASE("minimal generators")
{
    auto r = make_ring({"x", "y"});
    auto X = [&](const char* s) { return parse_polynomial(s, r); };
    // vector fields x d_x, y d_y, x d_x + y d_y
    std::vector<ModuleElement> fields{{X("x"), X("0")}, {X("0"), X("y")}, {X("x"), X("y")}};
    MinimalGenerators mg = minimal_generators(fields);
    CHECK(mg.generators.size() == 2);
    CHECK(mg.discarded.size() == 1);

    ModuleElement g{X("x^2 + y^2"), X("x*y")};
    MinimalGenerators m2 = minimal_generators({X("x") * g, g});
    REQUIRE(m2.generators.size() == 1);
    CHECK(m2.generators[0] == g);
    REQUIRE(m2.discarded.size() == 1);
    CHECK(m2.discarded[0].cofactors[0] == X("x"));

    CHECK_THROWS_AS(minimal_generators({{X("x + x^2")}}), NotGraded);
}

TEST_CASE("ideal dimension")
{
    auto r = make_ring({"x", "y", "z"});
    CHECK(ideal_dimension({parse_polynomial("x", r), parse_polynomial("y", r)}) == 1);
    CHECK(ideal_dimension({Polynomial::constant(r, Rational(1))}) == std::nullopt);
    CHECK(ideal_dimension({parse_polynomial("x - 1", r), parse_polynomial("x", r)}) == std::nullopt);
    auto R = make_ring({"x", "y", "z", "w"});
    std::vector<Polynomial> sing{parse_polynomial("z^2 - 3*y*w", R), parse_polynomial("y*z - 9*x*w", R),
                                 parse_polynomial("y^2 - 3*x*z", R)};
    CHECK(ideal_dimension(sing) == 2);
    CHECK(brute_force_dimension(sing) == 2);
}

TEST_CASE("property: cofactors, syzygies, membership and dimension on random ideals")
{
    std::mt19937 rng(1234);
    auto r = make_ring({"x", "y", "z"});
    for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<int> ngen(1, 3);
        std::vector<Polynomial> gens;
        int k = ngen(rng);
        for (int i = 0; i < k; ++i)
            gens.push_back(random_poly(rng, r));
        std::vector<ModuleElement> elems;
        for (const auto& g : gens)
            elems.push_back({g});
        if (std::all_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); }))
            continue;
        GroebnerBasis gb = buchberger(elems);
        check_cofactor_identity(gb);

        for (const auto& z : syzygies(elems)) {
            Polynomial sum(r);
            for (std::size_t i = 0; i < gens.size(); ++i)
                sum += z[i] * gens[i];
            CHECK(sum.is_zero());
        }

        Polynomial probe = random_poly(rng, r);
        Polynomial member = probe * gens[0];
        NormalForm nf = normal_form({member}, gb);
        CHECK(is_zero(nf.remainder));
        auto c = module_membership({member}, gb);
        REQUIRE(c);
        CHECK(combine(*c, elems)[0] == member);
        NormalForm nf2 = normal_form({probe}, gb);
        CHECK(is_zero(nf2.remainder) == module_membership({probe}, gb).has_value());

        Dimension d = ideal_dimension(gb);
        CHECK(d.value_or(-1) == brute_force_dimension(gens));
    }
}
