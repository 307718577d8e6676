#include "loglie/weights.hpp"

#include "loglie/lp.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace loglie {

namespace {

Weight add(const Weight& a, const Weight& b)
{
    Weight out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return out;
}

Weight scaled(const Integer& s, const Weight& a)
{
    Weight out = a;
    for (auto& x : out)
        x *= s;
    return out;
}

Integer floor_of(const Rational& q)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer ceil_of(const Rational& q)
{
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

bool is_zero_weight(const Weight& w)
{
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
}

Integer total(const std::vector<Integer>& counts)
{
    Integer t = 0;
    for (const auto& c : counts)
        t += c;
    return t;
}

Weight combination(const std::vector<Weight>& c, const std::vector<Integer>& counts, std::size_t r)
{
    Weight out(r);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (counts[i] != 0)
            out = add(out, scaled(counts[i], c[i]));
    return out;
}

struct Hit {
    Weight target;
    std::vector<Integer> counts;
};

struct Expansion {
    std::optional<Hit> hit;
    bool exhausted = false; ///< budget ran out before max_l
};

/// Level-by-level sumsets of C for l = 1..max_l; reports the first point of W
/// reached with l >= k - 1. Points with prune(p) true are dropped.
Expansion expand(const std::vector<Weight>& c, const WeightDiagram& w, int k, std::size_t max_l, std::size_t budget,
                 const std::function<bool(const Weight&)>& prune)
{
    Expansion out;
    std::map<Weight, std::vector<Integer>> level;
    level[Weight(c.front().size())] = std::vector<Integer>(c.size(), 0);
    std::size_t visited = 0;
    for (std::size_t l = 1; l <= max_l; ++l) {
        std::map<Weight, std::vector<Integer>> next;
        for (const auto& [p, counts] : level)
            for (std::size_t i = 0; i < c.size(); ++i) {
                Weight q = add(p, c[i]);
                if (prune && prune(q))
                    continue;
                if (next.count(q))
                    continue;
                std::vector<Integer> nc = counts;
                nc[i] += 1;
                if (++visited > budget) {
                    out.exhausted = true;
                    return out;
                }
                if (static_cast<int>(l) >= k - 1 && w.entries.count(q)) {
                    out.hit = Hit{q, nc};
                    return out;
                }
                next.emplace(std::move(q), std::move(nc));
            }
        if (next.empty())
            break;
        level = std::move(next);
    }
    return out;
}

/// Integer row echelon form of integer generators with the unimodular transform.
struct IntegerEchelon {
    std::vector<std::vector<Integer>> rows;
    std::vector<std::vector<Integer>> transform;
    std::vector<std::size_t> pivots;
};

IntegerEchelon integer_echelon(const std::vector<std::vector<Integer>>& gens, std::size_t r)
{
    IntegerEchelon e;
    e.rows = gens;
    const std::size_t p = gens.size();
    e.transform.assign(p, std::vector<Integer>(p, 0));
    for (std::size_t i = 0; i < p; ++i)
        e.transform[i][i] = 1;
    auto sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t j = 0; j < r; ++j)
            e.rows[dst][j] -= q * e.rows[src][j];
        for (std::size_t j = 0; j < p; ++j)
            e.transform[dst][j] -= q * e.transform[src][j];
    };
    std::size_t prow = 0;
    for (std::size_t col = 0; col < r && prow < p; ++col) {
        for (;;) {
            std::size_t best = p;
            for (std::size_t i = prow; i < p; ++i)
                if (e.rows[i][col] != 0 && (best == p || abs(e.rows[i][col]) < abs(e.rows[best][col])))
                    best = i;
            if (best == p)
                break;
            std::swap(e.rows[prow], e.rows[best]);
            std::swap(e.transform[prow], e.transform[best]);
            bool done = true;
            for (std::size_t i = prow + 1; i < p; ++i) {
                if (e.rows[i][col] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), e.rows[i][col].get_mpz_t(), e.rows[prow][col].get_mpz_t());
                sub(i, prow, q);
                if (e.rows[i][col] != 0)
                    done = false;
            }
            if (done) {
                e.pivots.push_back(col);
                ++prow;
                break;
            }
        }
    }
    return e;
}

/// Integer z with sum z_i gens_i = target, if one exists.
std::optional<std::vector<Integer>> lattice_solve(const IntegerEchelon& e, std::vector<Integer> target)
{
    const std::size_t p = e.transform.size();
    std::vector<Integer> y(p, 0);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        std::size_t col = e.pivots[k];
        for (std::size_t j = (k == 0 ? 0 : e.pivots[k - 1] + 1); j < col; ++j)
            if (target[j] != 0)
                return std::nullopt;
        if (target[col] % e.rows[k][col] != 0)
            return std::nullopt;
        y[k] = target[col] / e.rows[k][col];
        for (std::size_t j = 0; j < target.size(); ++j)
            target[j] -= y[k] * e.rows[k][j];
    }
    for (const auto& t : target)
        if (t != 0)
            return std::nullopt;
    std::vector<Integer> z(p, 0);
    for (std::size_t k = 0; k < p; ++k)
        if (y[k] != 0)
            for (std::size_t j = 0; j < p; ++j)
                z[j] += y[k] * e.transform[k][j];
    return z;
}

Integer denominator_lcm(const std::vector<Weight>& ws)
{
    Integer d = 1;
    for (const auto& w : ws)
        for (const auto& x : w)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    return d;
}

std::vector<Integer> to_integers(const Weight& w, const Integer& d)
{
    std::vector<Integer> out;
    for (const auto& x : w) {
        Rational s = x * d;
        out.push_back(s.get_num());
    }
    return out;
}

/// Nonnegative relations among C: for each c, maximize m_c subject to
/// sum m_c c = 0, sum m = 1.
std::vector<Rational> relation_support(const std::vector<Weight>& c, std::size_t r)
{
    const std::size_t p = c.size();
    std::vector<Rational> sum(p, Rational(0));
    for (std::size_t target = 0; target < p; ++target) {
        lp::Problem prob(p);
        prob.objective.assign(p, Rational(0));
        prob.objective[target] = -1;
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<Rational> row(p);
            for (std::size_t i = 0; i < p; ++i)
                row[i] = c[i][j];
            prob.add(std::move(row), lp::Relation::Equal, Rational(0));
        }
        prob.add(std::vector<Rational>(p, Rational(1)), lp::Relation::Equal, Rational(1));
        lp::Solution sol = lp::solve(prob);
        if (sol.status != lp::Status::Optimal)
            return {};
        if (sol.x[target] > 0)
            for (std::size_t i = 0; i < p; ++i)
                sum[i] += sol.x[i];
    }
    return sum;
}

std::vector<Integer> integer_relation(const std::vector<Rational>& rel)
{
    Integer d = 1;
    for (const auto& x : rel)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& x : rel) {
        Rational s = x * d;
        out.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g > 1)
        for (auto& x : out)
            x /= g;
    return out;
}

/// Adds multiples of the relation until all counts are nonnegative and the total reaches k - 1.
void boost(std::vector<Integer>& counts, const std::vector<Integer>& relation, int k)
{
    Integer t = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (relation[i] > 0 && counts[i] < 0) {
            Integer need = ceil_of(Rational(-counts[i], relation[i]));
            if (need > t)
                t = need;
        }
    for (std::size_t i = 0; i < counts.size(); ++i)
        counts[i] += t * relation[i];
    Integer tot = total(counts);
    Integer rel = total(relation);
    if (tot < k - 1) {
        Integer more = ceil_of(Rational(Integer(k - 1) - tot, rel));
        for (std::size_t i = 0; i < counts.size(); ++i)
            counts[i] += more * relation[i];
    }
}

std::size_t rank_of_differences(const std::vector<Weight>& pts)
{
    if (pts.size() < 2)
        return 0;
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i)
        diffs.push_back(pts[i] - pts[0]);
    return span_basis(diffs, pts[0].size()).size();
}

Rational evaluate(const Vec& l, const Weight& w)
{
    Rational s = 0;
    for (std::size_t i = 0; i < l.size(); ++i)
        s += l[i] * w[i];
    return s;
}

} // namespace

std::size_t WeightDiagram::total() const
{
    std::size_t t = 0;
    for (const auto& [w, m] : entries)
        t += m;
    return t;
}

std::vector<Weight> WeightDiagram::weights() const
{
    std::vector<Weight> out;
    for (const auto& [w, m] : entries)
        out.push_back(w);
    return out;
}

std::size_t WeightDiagram::multiplicity(const Weight& w) const
{
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
}

std::string weight_to_string(const Weight& w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ", ";
        s += to_string(w[i]);
    }
    return s + ")";
}

JointEigenbasis joint_eigenbasis(const std::vector<Matrix>& cartan, std::size_t n)
{
    for (std::size_t i = 0; i < cartan.size(); ++i) {
        for (std::size_t j = i + 1; j < cartan.size(); ++j)
            if (!commutator(cartan[i], cartan[j]).is_zero())
                throw NotCommuting();
        if (!is_semisimple_matrix(cartan[i]))
            throw NotSemisimple();
    }
    std::vector<std::pair<std::vector<Vec>, Weight>> spaces;
    std::vector<Vec> all;
    for (std::size_t i = 0; i < n; ++i)
        all.push_back(unit_vector(n, i));
    spaces.push_back({all, {}});
    for (const auto& a : cartan) {
        auto roots = rational_roots(characteristic_polynomial(a));
        unsigned found = 0;
        for (const auto& [root, mult] : roots)
            found += mult;
        if (found != n)
            throw IrrationalWeight();
        std::vector<std::pair<std::vector<Vec>, Weight>> next;
        for (const auto& [basis, weight] : spaces)
            for (const auto& [root, mult] : roots) {
                std::vector<Vec> eig = nullspace(a - Matrix::identity(n) * root);
                std::vector<Vec> both = intersect(basis, eig, n);
                if (both.empty())
                    continue;
                Weight w = weight;
                w.push_back(root);
                next.push_back({both, w});
            }
        spaces = std::move(next);
    }
    JointEigenbasis out;
    out.diagram.rank = cartan.size();
    for (const auto& [basis, weight] : spaces) {
        out.diagram.entries[weight] += basis.size();
        for (const auto& v : basis) {
            out.vectors.push_back(v);
            out.weights.push_back(weight);
        }
    }
    return out;
}

WeightDiagram weight_diagram(const std::vector<Matrix>& cartan, std::size_t n)
{
    return joint_eigenbasis(cartan, n).diagram;
}

std::vector<Matrix> normalize_cartan(const LieAlgebra& s, const Representation& rho, const Subalgebra& h)
{
    const std::size_t m = s.dim();
    if (m == 0)
        return {};
    std::vector<Matrix> ads;
    for (const auto& v : h.basis)
        ads.push_back(s.ad(v));
    JointEigenbasis roots;
    try {
        roots = joint_eigenbasis(ads, m);
    } catch (const IrrationalWeight&) {
        throw NonSplitCartan();
    } catch (const NotSemisimple&) {
        throw NonSplitCartan();
    }
    auto positive = [](const Weight& a) {
        for (const auto& x : a)
            if (x != 0)
                return x > 0;
        return false;
    };
    std::map<Weight, Vec> space;
    std::vector<Weight> pos;
    for (std::size_t i = 0; i < roots.vectors.size(); ++i) {
        const Weight& a = roots.weights[i];
        if (is_zero_weight(a))
            continue;
        space.emplace(a, roots.vectors[i]);
        if (positive(a) && std::find(pos.begin(), pos.end(), a) == pos.end())
            pos.push_back(a);
    }
    std::vector<Matrix> out;
    for (const auto& a : pos) {
        bool decomposable = false;
        for (const auto& b : pos)
            for (const auto& c : pos)
                if (add(b, c) == a)
                    decomposable = true;
        if (decomposable)
            continue;
        Weight neg = a;
        for (auto& x : neg)
            x = -x;
        auto ne = space.find(neg);
        if (ne == space.end())
            throw NonSplitCartan();
        Vec t = s.bracket(space.at(a), ne->second);
        auto coords = coordinates(h.basis, t);
        if (!coords)
            throw std::logic_error("bracket of root vectors is outside the Cartan subalgebra");
        Rational at = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            at += (*coords)[i] * a[i];
        if (at == 0)
            throw std::logic_error("degenerate root pairing");
        out.push_back(rho(Rational(2) / at * t));
    }
    if (out.size() != h.dim())
        throw NonSplitCartan();
    return out;
}

SubsetCertificate sumset_avoidance(const std::vector<Weight>& c, const WeightDiagram& w, int k,
                                   const SearchLimits& limits)
{
    SubsetCertificate cert;
    cert.subset = c;
    if (c.empty())
        return cert;
    const std::size_t r = c.front().size();
    const std::size_t p = c.size();

    for (std::size_t i = 0; i < p; ++i)
        if (is_zero_weight(c[i]) && w.entries.count(c[i])) {
            cert.verdict = SubsetCertificate::Verdict::Excluded;
            cert.witness = SubsetCertificate::Witness::Hit;
            cert.target = c[i];
            cert.counts.assign(p, 0);
            cert.counts[i] = std::max(k - 1, 1);
            return cert;
        }

    std::vector<Rational> support = relation_support(c, r);
    bool origin_inside = std::any_of(support.begin(), support.end(), [](const Rational& x) { return x > 0; });

    if (!origin_inside) {
        // minimize t with l >= 1 on C and l <= t on W
        lp::Problem prob(r + 1);
        prob.free_var.assign(r + 1, true);
        prob.objective.assign(r + 1, Rational(0));
        prob.objective[r] = 1;
        for (const auto& x : c) {
            std::vector<Rational> row(x.begin(), x.end());
            row.push_back(0);
            prob.add(std::move(row), lp::Relation::GreaterEq, Rational(1));
        }
        for (const auto& [x, mult] : w.entries) {
            std::vector<Rational> row(x.begin(), x.end());
            row.push_back(-1);
            prob.add(std::move(row), lp::Relation::LessEq, Rational(0));
        }
        std::vector<Rational> floor_row(r + 1);
        floor_row[r] = 1;
        prob.add(std::move(floor_row), lp::Relation::GreaterEq, Rational(-1));
        lp::Solution sol = lp::solve(prob);
        if (sol.status != lp::Status::Optimal)
            throw std::logic_error("separating functional LP failed");
        cert.functional.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(r));
        Rational top = evaluate(cert.functional, w.weights().front());
        for (const auto& x : w.weights())
            top = std::max(top, evaluate(cert.functional, x));
        cert.range = top < 0 ? Integer(0) : floor_of(top);
        cert.witness = SubsetCertificate::Witness::Separating;
        if (cert.range < k - 1)
            return cert;
        const Vec& l = cert.functional;
        const Rational bound = top;
        Expansion ex = expand(c, w, k, cert.range.get_ui(), limits.budget,
                              [&](const Weight& q) { return evaluate(l, q) > bound; });
        if (ex.hit) {
            cert.verdict = SubsetCertificate::Verdict::Excluded;
            cert.witness = SubsetCertificate::Witness::Hit;
            cert.target = ex.hit->target;
            cert.counts = ex.hit->counts;
        } else if (ex.exhausted) {
            cert.verdict = SubsetCertificate::Verdict::EmptyUpToBound;
            cert.witness = SubsetCertificate::Witness::Bounded;
            cert.bound = 0;
        }
        return cert;
    }

    // 0 in conv(C): split C into the support S of nonnegative relations and the rest
    cert.relation = integer_relation(support);
    std::vector<std::size_t> in_s, rest;
    for (std::size_t i = 0; i < p; ++i)
        (cert.relation[i] > 0 ? in_s : rest).push_back(i);

    lp::Problem prob(r);
    prob.free_var.assign(r, true);
    for (auto i : in_s)
        prob.add(std::vector<Rational>(c[i].begin(), c[i].end()), lp::Relation::Equal, Rational(0));
    for (auto i : rest)
        prob.add(std::vector<Rational>(c[i].begin(), c[i].end()), lp::Relation::GreaterEq, Rational(1));
    lp::Solution sol = lp::solve(prob);
    if (sol.status != lp::Status::Optimal)
        throw std::logic_error("no functional vanishing on the relation support");
    cert.functional = sol.x;

    std::vector<Weight> everything = c;
    for (const auto& x : w.weights())
        everything.push_back(x);
    Integer den = denominator_lcm(everything);
    std::vector<std::vector<Integer>> gens;
    for (auto i : in_s)
        gens.push_back(to_integers(c[i], den));
    IntegerEchelon ech = integer_echelon(gens, r);

    std::size_t visited = 0;
    bool exhausted = false;
    for (const auto& target : w.weights()) {
        Rational lt = evaluate(cert.functional, target);
        if (!rest.empty() && lt < 0)
            continue;
        std::vector<Integer> n_rest(rest.size(), 0);
        std::optional<std::vector<Integer>> found;
        std::function<void(std::size_t, Rational)> dfs = [&](std::size_t pos, Rational budget_left) {
            if (found || exhausted)
                return;
            if (pos == rest.size()) {
                if (++visited > limits.budget) {
                    exhausted = true;
                    return;
                }
                Weight residual = target;
                for (std::size_t j = 0; j < rest.size(); ++j)
                    if (n_rest[j] != 0)
                        residual = add(residual, scaled(-n_rest[j], c[rest[j]]));
                auto z = lattice_solve(ech, to_integers(residual, den));
                if (!z)
                    return;
                std::vector<Integer> counts(p, 0);
                for (std::size_t j = 0; j < rest.size(); ++j)
                    counts[rest[j]] = n_rest[j];
                for (std::size_t j = 0; j < in_s.size(); ++j)
                    counts[in_s[j]] = (*z)[j];
                found = counts;
                return;
            }
            Rational step = evaluate(cert.functional, c[rest[pos]]);
            for (Integer t = 0; t * step <= budget_left; ++t) {
                n_rest[pos] = t;
                dfs(pos + 1, budget_left - t * step);
                if (found || exhausted)
                    break;
            }
            n_rest[pos] = 0;
        };
        dfs(0, lt);
        if (found) {
            boost(*found, cert.relation, k);
            cert.verdict = SubsetCertificate::Verdict::Excluded;
            cert.witness = SubsetCertificate::Witness::Hit;
            cert.target = target;
            cert.counts = *found;
            return cert;
        }
        if (exhausted)
            break;
    }
    if (!exhausted) {
        cert.witness = SubsetCertificate::Witness::Lattice;
        return cert;
    }
    Expansion ex = expand(c, w, k, limits.bound, limits.budget, {});
    if (ex.hit) {
        cert.verdict = SubsetCertificate::Verdict::Excluded;
        cert.witness = SubsetCertificate::Witness::Hit;
        cert.target = ex.hit->target;
        cert.counts = ex.hit->counts;
    } else {
        cert.verdict = SubsetCertificate::Verdict::EmptyUpToBound;
        cert.witness = SubsetCertificate::Witness::Bounded;
        cert.bound = limits.bound;
    }
    return cert;
}

bool verify_certificate(const SubsetCertificate& cert, const WeightDiagram& w, int k)
{
    using W = SubsetCertificate::Witness;
    const auto& c = cert.subset;
    switch (cert.witness) {
    case W::Empty:
        return c.empty() && cert.verdict == SubsetCertificate::Verdict::InC;
    case W::Hit: {
        if (cert.counts.size() != c.size() || !w.entries.count(cert.target))
            return false;
        for (const auto& n : cert.counts)
            if (n < 0)
                return false;
        if (total(cert.counts) < std::max(k - 1, 1))
            return false;
        return combination(c, cert.counts, cert.target.size()) == cert.target;
    }
    case W::Separating: {
        for (const auto& x : c)
            if (evaluate(cert.functional, x) < 1)
                return false;
        for (const auto& x : w.weights())
            if (evaluate(cert.functional, x) >= cert.range + 1)
                return false;
        // direct expansion over the finite range
        std::set<Weight> level{Weight(c.front().size())};
        for (Integer l = 1; l <= cert.range; ++l) {
            std::set<Weight> next;
            for (const auto& p : level)
                for (const auto& x : c)
                    next.insert(add(p, x));
            if (l >= k - 1)
                for (const auto& p : next)
                    if (w.entries.count(p))
                        return false;
            level = std::move(next);
        }
        return true;
    }
    case W::Lattice: {
        if (cert.relation.size() != c.size() || total(cert.relation) <= 0)
            return false;
        std::vector<Integer> rel = cert.relation;
        for (const auto& x : rel)
            if (x < 0)
                return false;
        if (!is_zero_weight(combination(c, rel, c.front().size())))
            return false;
        for (std::size_t i = 0; i < c.size(); ++i) {
            Rational v = evaluate(cert.functional, c[i]);
            if (rel[i] > 0 ? v != 0 : v < 1)
                return false;
        }
        SubsetCertificate again = sumset_avoidance(c, w, k);
        return again.witness == W::Lattice;
    }
    case W::Bounded:
        return cert.verdict == SubsetCertificate::Verdict::EmptyUpToBound;
    }
    return false;
}

MResult compute_M(const WeightDiagram& w, int k, const SearchLimits& limits)
{
    MResult out;
    if (k < 3)
        return out;
    std::vector<Weight> ws = w.weights();
    const std::size_t q = ws.size();
    if (q > 20)
        throw std::invalid_argument("too many distinct weights for subset enumeration");
    std::vector<std::uint32_t> failed;
    std::optional<std::size_t> best;
    std::vector<Weight> best_set;
    for (std::uint32_t mask = 1; mask < (1U << q); ++mask) {
        std::vector<Weight> subset;
        std::size_t d = 0;
        for (std::size_t i = 0; i < q; ++i)
            if (mask & (1U << i)) {
                subset.push_back(ws[i]);
                d += w.entries.at(ws[i]);
            }
        if (best && (d < *best || (d == *best && !(subset < best_set))))
            continue;
        if (std::any_of(failed.begin(), failed.end(), [&](std::uint32_t f) { return (f & mask) == f; }))
            continue;
        SubsetCertificate cert = sumset_avoidance(subset, w, k, limits);
        if (cert.verdict == SubsetCertificate::Verdict::Excluded) {
            failed.push_back(mask);
            continue;
        }
        if (cert.verdict == SubsetCertificate::Verdict::EmptyUpToBound) {
            out.lower_bound_only = true;
            continue;
        }
        best = d;
        best_set = subset;
    }
    out.value = best;
    out.maximizer = best_set;
    return out;
}

bool rank_lower_bound_check(std::size_t rank, const WeightDiagram& w, int k)
{
    if (k < 3 || rank == 0)
        return false;
    std::vector<Weight> ws = w.weights();
    const std::size_t q = ws.size();
    if (ws.empty() || ws.front().size() != rank)
        return false;
    // facets through r affinely independent weights
    std::vector<std::size_t> idx(rank);
    std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t from) -> bool {
        if (pos == rank) {
            std::vector<Vec> rows;
            for (auto i : idx)
                rows.push_back(ws[i]);
            auto l = solve(Matrix::from_rows(rows, rank), Vec(rank, Rational(1)));
            if (!l)
                return false;
            std::vector<Weight> facet;
            std::size_t d = 0;
            for (const auto& x : ws) {
                Rational v = evaluate(*l, x);
                if (v > 1)
                    return false;
                if (v == 1) {
                    facet.push_back(x);
                    d += w.entries.at(x);
                }
            }
            if (rank > 1 && rank_of_differences(facet) + 1 < rank)
                return false;
            if (d < rank)
                return false;
            SubsetCertificate cert = sumset_avoidance(facet, w, k);
            return cert.verdict == SubsetCertificate::Verdict::InC && verify_certificate(cert, w, k);
        }
        for (std::size_t i = from; i < q; ++i) {
            idx[pos] = i;
            if (choose(pos + 1, i + 1))
                return true;
        }
        return false;
    };
    return choose(0, 0);
}

std::optional<Weight> weight_of_f(const Polynomial& f, const JointEigenbasis& basis)
{
    const std::size_t n = f.nvars();
    const RingPtr& ring = f.ring();
    if (basis.vectors.size() != n)
        throw std::invalid_argument("eigenbasis size does not match the ring");
    // y_k = sum_i P(i, k) x_i, so x = (P^T)^{-1} y
    Matrix pt(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            pt(k, i) = basis.vectors[k][i];
    auto q = inverse(pt);
    if (!q)
        throw std::logic_error("eigenvectors are dependent");
    std::vector<Polynomial> subs;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial xi(ring);
        for (std::size_t k = 0; k < n; ++k)
            if ((*q)(i, k) != 0)
                xi += Polynomial::variable(ring, k) * (*q)(i, k);
        subs.push_back(std::move(xi));
    }
    Polynomial g(ring);
    for (const auto& t : f.terms()) {
        Polynomial term = Polynomial::constant(ring, t.coeff);
        for (std::size_t i = 0; i < n; ++i)
            if (t.mono.exp[i])
                term *= subs[i].pow(t.mono.exp[i]);
        g += term;
    }
    const std::size_t r = basis.diagram.rank;
    std::optional<Weight> common;
    for (const auto& t : g.terms()) {
        Weight wt(r);
        for (std::size_t k = 0; k < n; ++k)
            if (t.mono.exp[k])
                wt = add(wt, scaled(Integer(t.mono.exp[k]), basis.weights[k]));
        if (common && *common != wt)
            return std::nullopt;
        common = wt;
    }
    return common;
}

LeviAction levi_action(const InitialLieData& data)
{
    LeviAction out;
    out.levi = levi_subalgebra(data.lie);
    if (out.levi.dim() == 0)
        return out;
    out.algebra = restrict_to(data.lie, out.levi);
    for (const auto& b : out.levi.basis) {
        Matrix m(data.lambda0.front().rows(), data.lambda0.front().cols());
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] != 0)
                m = m + data.lambda0[i] * b[i];
        out.rep.matrices.push_back(std::move(m));
    }
    CartanResult h = cartan_subalgebra(out.algebra);
    if (!h.split)
        throw NonSplitCartan();
    out.cartan = normalize_cartan(out.algebra, out.rep, h.cartan);
    return out;
}

BoundReport theorem13_check(const Polynomial& f, const LogDerivationModule& m, const InitialLieData& data,
                            const SearchLimits& limits)
{
    (void)m;
    BoundReport rep;
    const std::size_t n = f.nvars();
    rep.ord = order_at_origin(f);
    rep.sing_dim = ideal_dimension(jacobian_ideal(f));
    int k = rep.ord ? static_cast<int>(*rep.ord) : 0;

    Subalgebra levi = levi_subalgebra(data.lie);
    rep.levi_dim = levi.dim();
    if (levi.dim() > 0) {
        try {
            rep.levi_rank = cartan_subalgebra(restrict_to(data.lie, levi)).cartan.dim();
        } catch (const NoRegularElement&) {
        }
    }
    std::optional<LeviAction> la;
    try {
        la = levi_action(data);
        JointEigenbasis eb = joint_eigenbasis(la->cartan, n);
        rep.diagram = eb.diagram;
        if (rep.levi_dim > 0)
            rep.f_weight = weight_of_f(f, eb);
    } catch (const std::runtime_error& e) {
        if (k >= 3)
            throw;
        rep.flags.push_back(std::string("weight diagram unavailable: ") + e.what());
    }
    if (rep.levi_dim == 0 && !rep.diagram.entries.empty() && rep.diagram.rank == 0)
        rep.diagram.entries = {{Weight{}, n}};

    MResult mr = compute_M(rep.diagram, k, limits);
    rep.m = mr.value;
    rep.maximizer = mr.maximizer;
    if (mr.lower_bound_only)
        rep.flags.push_back("empty up to bound");
    if (!rep.m)
        rep.holds = "vacuous";
    else if (rep.sing_dim && *rep.sing_dim >= static_cast<int>(*rep.m))
        rep.holds = "holds";
    else
        rep.holds = "fails";
    return rep;
}

BoundReport theorem13_check(const Polynomial& f, const SearchLimits& limits)
{
    LogDerivationModule m = logarithmic_derivations(f);
    InitialLieData data = initial_lie_algebra(m);
    return theorem13_check(f, m, data, limits);
}

} // namespace loglie
