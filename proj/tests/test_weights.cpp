#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loglie/weights.hpp"

#include <random>
#include <set>
#include <unordered_set>

using namespace loglie;

namespace {

const char* kQuartic = "y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*w^2*x^2";

Weight wt(std::initializer_list<int> xs)
{
    Weight w;
    for (int x : xs)
        w.push_back(Rational(x));
    return w;
}

WeightDiagram diagram(std::initializer_list<Weight> ws)
{
    WeightDiagram d;
    for (const auto& w : ws) {
        d.rank = w.size();
        d.entries[w] += 1;
    }
    return d;
}

Matrix diag(std::initializer_list<int> xs)
{
    Vec d;
    for (int x : xs)
        d.push_back(Rational(x));
    return Matrix::diagonal(d);
}

long total_count(const std::vector<Integer>& counts)
{
    long t = 0;
    for (const auto& x : counts)
        t += x.get_si();
    return t;
}

/// Direct l-fold sumsets for l <= max_l on integer points of Z^2.
bool brute_avoids(const std::vector<Weight>& c, const WeightDiagram& w, int k, int max_l)
{
    if (c.empty())
        return true;
    auto pack = [](long a, long b) { return (a << 32) ^ (b & 0xffffffffL); };
    std::vector<std::pair<long, long>> cs;
    for (const auto& x : c)
        cs.emplace_back(x[0].get_num().get_si(), x.size() > 1 ? x[1].get_num().get_si() : 0);
    std::unordered_set<long> targets;
    for (const auto& x : w.weights())
        targets.insert(pack(x[0].get_num().get_si(), x.size() > 1 ? x[1].get_num().get_si() : 0));
    std::unordered_set<long> seen;
    std::vector<std::pair<long, long>> level{{0, 0}};
    for (int l = 1; l <= max_l; ++l) {
        std::vector<std::pair<long, long>> next;
        seen.clear();
        for (const auto& [a, b] : level)
            for (const auto& [p, q] : cs)
                if (seen.insert(pack(a + p, b + q)).second)
                    next.emplace_back(a + p, b + q);
        if (l >= k - 1)
            for (const auto& [a, b] : next)
                if (targets.count(pack(a, b)))
                    return false;
        level = std::move(next);
    }
    return true;
}

} // namespace

TEST_CASE("weight diagrams")
{
    WeightDiagram d = weight_diagram({diag({-3, -1, 1, 3})}, 4);
    CHECK(d.rank == 1);
    CHECK(d.entries.size() == 4);
    for (int x : {-3, -1, 1, 3})
        CHECK(d.multiplicity(wt({x})) == 1);

    WeightDiagram e = weight_diagram({}, 3);
    CHECK(e.rank == 0);
    CHECK(e.multiplicity(Weight{}) == 3);

    WeightDiagram i = weight_diagram({Matrix::identity(3)}, 3);
    CHECK(i.multiplicity(wt({1})) == 3);
    CHECK(i.total() == 3);

    // non-diagonal but diagonalizable pair
    Matrix p = Matrix::from_rows({{1, 1}, {0, 1}}, 2);
    Matrix pinv = *inverse(p);
    WeightDiagram two = weight_diagram({p * diag({2, 5}) * pinv, p * diag({1, 1}) * pinv}, 2);
    CHECK(two.multiplicity(wt({2, 1})) == 1);
    CHECK(two.multiplicity(wt({5, 1})) == 1);

    CHECK_THROWS_AS(weight_diagram({Matrix::from_rows({{0, -1}, {1, 0}}, 2)}, 2), IrrationalWeight);
    CHECK_THROWS_AS(weight_diagram({Matrix::from_rows({{0, 1}, {0, 0}}, 2)}, 2), NotSemisimple);
    CHECK_THROWS_AS(weight_diagram({diag({1, 2}), Matrix::from_rows({{0, 1}, {1, 0}}, 2)}, 2), NotCommuting);
}

TEST_CASE("normalized Cartan of sl2")
{
    // e, h, f with [h,e]=2e, [h,f]=-2f, [e,f]=h
    LieAlgebra sl2 = LieAlgebra::from_table(
        {"e", "h", "f"}, {{0, 1, {-2, 0, 0}}, {0, 2, {0, 1, 0}}, {1, 2, {0, 0, -2}}});
    Representation def;
    def.matrices = {Matrix::from_rows({{0, 1}, {0, 0}}, 2), diag({1, -1}), Matrix::from_rows({{0, 0}, {1, 0}}, 2)};
    Subalgebra h{{{0, 5, 0}}};
    auto cartan = normalize_cartan(sl2, def, h);
    REQUIRE(cartan.size() == 1);
    WeightDiagram d = weight_diagram(cartan, 2);
    CHECK(d.multiplicity(wt({1})) == 1);
    CHECK(d.multiplicity(wt({-1})) == 1);

    // cubic forms: the defining action on binary cubics
    Representation sym3;
    sym3.matrices = {Matrix::from_rows({{0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 3}, {0, 0, 0, 0}}, 4),
                     diag({3, 1, -1, -3}),
                     Matrix::from_rows({{0, 0, 0, 0}, {3, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0}}, 4)};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(commutator(sym3.matrices[i], sym3.matrices[j]) == sym3(sl2.bracket_basis(i, j)));
    WeightDiagram d3 = weight_diagram(normalize_cartan(sl2, sym3, h), 4);
    for (int x : {-3, -1, 1, 3})
        CHECK(d3.multiplicity(wt({x})) == 1);

    CHECK(normalize_cartan(LieAlgebra(), Representation{}, Subalgebra{}).empty());
}

TEST_CASE("sumset avoidance examples")
{
    WeightDiagram w = diagram({wt({-3}), wt({-1}), wt({1}), wt({3})});
    SubsetCertificate three = sumset_avoidance({wt({3})}, w, 4);
    CHECK(three.verdict == SubsetCertificate::Verdict::InC);
    CHECK(three.witness == SubsetCertificate::Witness::Separating);
    CHECK(verify_certificate(three, w, 4));

    SubsetCertificate one = sumset_avoidance({wt({1})}, w, 4);
    CHECK(one.verdict == SubsetCertificate::Verdict::Excluded);
    REQUIRE(one.witness == SubsetCertificate::Witness::Hit);
    CHECK(one.target == wt({3}));
    CHECK(one.counts == std::vector<Integer>{3});
    CHECK(verify_certificate(one, w, 4));

    SubsetCertificate none = sumset_avoidance({}, w, 4);
    CHECK(none.verdict == SubsetCertificate::Verdict::InC);
    CHECK(verify_certificate(none, w, 4));

    // 0 in conv(C): {-3, 3} generates 3Z
    SubsetCertificate both = sumset_avoidance({wt({-3}), wt({3})}, w, 4);
    CHECK(both.verdict == SubsetCertificate::Verdict::Excluded);
    CHECK(verify_certificate(both, w, 4));
    CHECK(brute_avoids({wt({-3}), wt({3})}, w, 4, 30) == false);

    WeightDiagram odd = diagram({wt({1}), wt({-2}), wt({2})});
    SubsetCertificate lattice = sumset_avoidance({wt({-2}), wt({2})}, odd, 3);
    CHECK(lattice.verdict == SubsetCertificate::Verdict::Excluded);
    WeightDiagram only_odd = diagram({wt({1}), wt({-1}), wt({4}), wt({-4})});
    // {4, -4} generates 4Z which contains 4, so excluded; {1,-1} excluded too
    CHECK(sumset_avoidance({wt({4}), wt({-4})}, only_odd, 3).verdict == SubsetCertificate::Verdict::Excluded);
    WeightDiagram gaps = diagram({wt({1}), wt({2}), wt({-2}), wt({3})});
    SubsetCertificate avoid = sumset_avoidance({wt({2}), wt({-2})}, diagram({wt({1}), wt({2}), wt({-2}), wt({3}), wt({5})}), 3);
    CHECK(avoid.verdict == SubsetCertificate::Verdict::Excluded);
    (void)gaps;
}

TEST_CASE("lattice witness")
{
    // C inside W with 0 in conv(C) always hits C itself after adding a relation
    WeightDiagram w = diagram({wt({1, 0}), wt({-1, 0}), wt({0, 2}), wt({0, 1})});
    SubsetCertificate c = sumset_avoidance({wt({-1, 0}), wt({0, 2}), wt({1, 0})}, w, 5);
    CHECK(c.verdict == SubsetCertificate::Verdict::Excluded);
    CHECK(verify_certificate(c, w, 5));

    // generators outside W: 2Z x {0} misses odd points and the second axis
    WeightDiagram odd = diagram({wt({1, 0}), wt({0, 1}), wt({3, 4})});
    SubsetCertificate l = sumset_avoidance({wt({2, 0}), wt({-2, 0})}, odd, 4);
    CHECK(l.verdict == SubsetCertificate::Verdict::InC);
    CHECK(l.witness == SubsetCertificate::Witness::Lattice);
    CHECK(l.relation == std::vector<Integer>{1, 1});
    CHECK(verify_certificate(l, odd, 4));
    CHECK(brute_avoids({wt({2, 0}), wt({-2, 0})}, odd, 4, 40));

    // a cone plus a lattice: (2,0), (-2,0) and (0,1) reach only even first coordinates
    std::vector<Weight> mixed{wt({2, 0}), wt({-2, 0}), wt({0, 1})};
    SubsetCertificate m = sumset_avoidance(mixed, odd, 4);
    CHECK(m.verdict == SubsetCertificate::Verdict::Excluded);
    WeightDiagram shifted = diagram({wt({1, 3}), wt({3, 0}), wt({-1, -1})});
    SubsetCertificate n = sumset_avoidance(mixed, shifted, 4);
    CHECK(n.verdict == SubsetCertificate::Verdict::InC);
    CHECK(n.witness == SubsetCertificate::Witness::Lattice);
    CHECK(verify_certificate(n, shifted, 4));
    CHECK(brute_avoids(mixed, shifted, 4, 40));

    // a tampered hit does not verify
    SubsetCertificate bad = m;
    bad.counts.back() += 1;
    CHECK_FALSE(verify_certificate(bad, odd, 4));
}

TEST_CASE("property: sumset avoidance agrees with brute force")
{
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> coord(-4, 4), size(1, 5), kd(3, 5);
    int checked = 0, lattice = 0;
    for (int trial = 0; trial < 150; ++trial) {
        WeightDiagram w;
        w.rank = 2;
        int s = size(rng);
        while (static_cast<int>(w.entries.size()) < s)
            w.entries[wt({coord(rng), coord(rng)})] = 1;
        auto ws = w.weights();
        int k = kd(rng);
        for (std::uint32_t mask = 1; mask < (1U << ws.size()); ++mask) {
            std::vector<Weight> c;
            for (std::size_t i = 0; i < ws.size(); ++i)
                if (mask & (1U << i))
                    c.push_back(ws[i]);
            SubsetCertificate cert = sumset_avoidance(c, w, k);
            REQUIRE(cert.verdict != SubsetCertificate::Verdict::EmptyUpToBound);
            bool in_c = cert.verdict == SubsetCertificate::Verdict::InC;
            int depth = 30;
            if (cert.witness == SubsetCertificate::Witness::Hit)
                depth = std::max(depth, static_cast<int>(total_count(cert.counts)));
            bool brute = brute_avoids(c, w, k, depth);
            CHECK(in_c == brute);
            if (in_c != brute) {
                std::string msg;
                for (const auto& x : c)
                    msg += weight_to_string(x);
                msg += " in ";
                for (const auto& x : ws)
                    msg += weight_to_string(x);
                MESSAGE(msg << " k=" << k << " witness=" << static_cast<int>(cert.witness));
            }
            CHECK(verify_certificate(cert, w, k));
            lattice += cert.witness == SubsetCertificate::Witness::Lattice;
            ++checked;
        }
    }
    CHECK(checked > 500);
    MESSAGE("lattice certificates: " << lattice);
}

TEST_CASE("compute M")
{
    WeightDiagram w = diagram({wt({-3}), wt({-1}), wt({1}), wt({3})});
    MResult m = compute_M(w, 4);
    REQUIRE(m.value);
    CHECK(*m.value == 1);
    CHECK(m.maximizer == std::vector<Weight>{wt({-3})});
    CHECK_FALSE(compute_M(w, 2).value);

    WeightDiagram zero;
    zero.entries[Weight{}] = 3;
    CHECK_FALSE(compute_M(zero, 4).value);

    CHECK(rank_lower_bound_check(1, w, 4));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        WeightDiagram r;
        r.rank = 2;
        for (int i = 0; i < 5; ++i)
            r.entries[wt({coord(rng), coord(rng)})] += 1;
        std::optional<std::size_t> prev;
        for (int k = 3; k <= 6; ++k) {
            MResult mk = compute_M(r, k);
            if (prev)
                CHECK((mk.value && *mk.value >= *prev));
            prev = mk.value;
        }
    }
}

TEST_CASE("weight of f")
{
    auto r = make_ring({"x", "y", "z", "w"});
    JointEigenbasis eb = joint_eigenbasis({diag({-3, -1, 1, 3})}, 4);
    auto w7 = weight_of_f(parse_polynomial(kQuartic, r), eb);
    REQUIRE(w7);
    CHECK(*w7 == wt({0}));

    auto r2 = make_ring({"x", "y"});
    JointEigenbasis e2 = joint_eigenbasis({diag({1, -1})}, 2);
    CHECK(weight_of_f(parse_polynomial("x*y", r2), e2) == wt({0}));
    JointEigenbasis e3 = joint_eigenbasis({diag({1, 1})}, 2);
    CHECK_FALSE(weight_of_f(parse_polynomial("x^2 + y^3", r2), e3));

    // eigen coordinates x - y (weight 1) and y (weight -1)
    Matrix a = Matrix::from_rows({{1, 0}, {-2, -1}}, 2);
    JointEigenbasis e4 = joint_eigenbasis({a}, 2);
    CHECK(weight_of_f(parse_polynomial("x*y - y^2", r2), e4) == wt({0}));
    CHECK(weight_of_f(parse_polynomial("x^2 - 2*x*y + y^2", r2), e4) == wt({2}));
    CHECK_FALSE(weight_of_f(parse_polynomial("x^2", r2), e4));
}

TEST_CASE("bound check")
{
    auto r4 = make_ring({"x", "y", "z", "w"});
    BoundReport b = theorem13_check(parse_polynomial(kQuartic, r4));
    CHECK(b.ord == 4u);
    REQUIRE(b.m);
    CHECK(*b.m == 1);
    CHECK(b.sing_dim == 2);
    CHECK(b.holds == "holds");
    CHECK(b.levi_dim == 3);
    CHECK(b.levi_rank == 1);
    for (int x : {-3, -1, 1, 3})
        CHECK(b.diagram.multiplicity(wt({x})) == 1);
    REQUIRE(b.f_weight);
    CHECK(*b.f_weight == wt({0}));

    auto r3 = make_ring({"x", "y", "z"});
    BoundReport q = theorem13_check(parse_polynomial("x^2 + y^2 + z^2", r3));
    CHECK(q.ord == 2u);
    CHECK(q.holds == "vacuous");
    CHECK_FALSE(q.m);

    auto r2 = make_ring({"x", "y"});
    BoundReport c = theorem13_check(parse_polynomial("x^3 + y^4", r2));
    CHECK(c.holds == "vacuous");
    CHECK(c.levi_dim == 0);
    CHECK(c.sing_dim == 0);
}
