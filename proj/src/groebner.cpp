#include "loglie/groebner.hpp"

#include "loglie/lp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace loglie {

bool MonomialOrder::greater(const Monomial& a, std::size_t i, const Monomial& b, std::size_t j) const
{
    if (extension == Extension::PositionOverTerm && i != j)
        return i < j;
    if (!weights.empty()) {
        Rational wa = weighted_degree(a, weights);
        Rational wb = weighted_degree(b, weights);
        if (wa != wb)
            return wa > wb;
    }
    if (!(a == b))
        return grevlex_greater(a, b);
    return i < j;
}

// ---------------------------------------------------------------------------
// module element helpers

ModuleElement zero_element(const RingPtr& ring, std::size_t rank)
{
    return ModuleElement(rank, Polynomial(ring));
}

bool is_zero(const ModuleElement& e)
{
    return std::all_of(e.begin(), e.end(), [](const Polynomial& p) { return p.is_zero(); });
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b)
{
    ModuleElement r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b)
{
    ModuleElement r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

ModuleElement operator*(const Polynomial& p, const ModuleElement& e)
{
    ModuleElement r;
    r.reserve(e.size());
    for (const auto& c : e)
        r.push_back(p * c);
    return r;
}

ModuleElement combine(const std::vector<Polynomial>& coeffs, const std::vector<ModuleElement>& elems)
{
    if (elems.empty())
        throw std::invalid_argument("combine: no elements");
    ModuleElement r = zero_element(elems.front().front().ring(), elems.front().size());
    for (std::size_t k = 0; k < elems.size(); ++k) {
        if (coeffs[k].is_zero())
            continue;
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] += coeffs[k] * elems[k][i];
    }
    return r;
}

std::string to_string(const ModuleElement& e)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < e.size(); ++i)
        os << (i ? ", " : "") << e[i].to_string();
    os << ")";
    return os.str();
}

namespace {

struct MTerm {
    Monomial mono;
    std::size_t comp;
    Rational coeff;
};

/// Module polynomial with terms sorted decreasingly in the module order.
struct ModPoly {
    std::vector<MTerm> terms;

    bool empty() const { return terms.empty(); }
    const MTerm& lead() const { return terms.front(); }
};

ModPoly to_modpoly(const ModuleElement& e, const MonomialOrder& order)
{
    ModPoly p;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (const auto& t : e[i].terms())
            p.terms.push_back({t.mono, i, t.coeff});
    std::sort(p.terms.begin(), p.terms.end(), [&](const MTerm& a, const MTerm& b) {
        return order.greater(a.mono, a.comp, b.mono, b.comp);
    });
    return p;
}

ModuleElement to_element(const ModPoly& p, const RingPtr& ring, std::size_t rank)
{
    std::vector<std::vector<Term>> comps(rank);
    for (const auto& t : p.terms)
        comps[t.comp].push_back({t.mono, t.coeff});
    ModuleElement e;
    e.reserve(rank);
    for (auto& c : comps)
        e.push_back(Polynomial::from_terms(ring, std::move(c)));
    return e;
}

/// p += c * m * q
void add_scaled(ModPoly& p, const ModPoly& q, const Monomial& m, const Rational& c, const MonomialOrder& order)
{
    std::vector<MTerm> out;
    out.reserve(p.terms.size() + q.terms.size());
    auto a = p.terms.begin();
    auto b = q.terms.begin();
    while (a != p.terms.end() || b != q.terms.end()) {
        if (b == q.terms.end()) {
            out.push_back(std::move(*a++));
            continue;
        }
        Monomial bm = b->mono * m;
        if (a == p.terms.end() || order.greater(bm, b->comp, a->mono, a->comp)) {
            out.push_back({bm, b->comp, b->coeff * c});
            ++b;
        } else if (a->comp == b->comp && a->mono == bm) {
            Rational s = a->coeff + b->coeff * c;
            if (s != 0)
                out.push_back({bm, a->comp, std::move(s)});
            ++a;
            ++b;
        } else {
            out.push_back(std::move(*a++));
        }
    }
    p.terms = std::move(out);
}

struct Reduction {
    ModPoly remainder;
    std::vector<std::vector<Term>> quotients; // per basis element, unsorted
};

/// Full reduction of h by the basis polynomials.
Reduction reduce(ModPoly h, const std::vector<ModPoly>& basis, const MonomialOrder& order)
{
    Reduction r;
    r.quotients.resize(basis.size());
    std::vector<MTerm> rem;
    while (!h.empty()) {
        const MTerm& lt = h.lead();
        std::size_t k = 0;
        for (; k < basis.size(); ++k) {
            const MTerm& lb = basis[k].lead();
            if (lb.comp == lt.comp && lb.mono.divides(lt.mono))
                break;
        }
        if (k == basis.size()) {
            rem.push_back(lt);
            h.terms.erase(h.terms.begin());
            continue;
        }
        const MTerm& lb = basis[k].lead();
        Monomial q = lb.mono.quotient_of(lt.mono);
        Rational c = lt.coeff / lb.coeff;
        r.quotients[k].push_back({q, c});
        add_scaled(h, basis[k], q, -c, order);
    }
    r.remainder.terms = std::move(rem);
    return r;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::size_t comp;
    unsigned sugar;
    std::size_t serial;
};

std::vector<Polynomial> combine_cofactors(const std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>>& parts,
                                          const RingPtr& ring, std::size_t ngens)
{
    std::vector<Polynomial> out(ngens, Polynomial(ring));
    for (const auto& [coef, cof] : parts) {
        if (coef.is_zero())
            continue;
        for (std::size_t l = 0; l < ngens; ++l)
            if (!(*cof)[l].is_zero())
                out[l] += coef * (*cof)[l];
    }
    return out;
}

RingPtr ring_of(const std::vector<ModuleElement>& gens)
{
    if (gens.empty() || gens.front().empty())
        throw std::invalid_argument("need at least one generator of positive rank");
    return gens.front().front().ring();
}

} // namespace

// ---------------------------------------------------------------------------

GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, const MonomialOrder& order)
{
    GroebnerBasis gb;
    gb.ring = ring_of(gens);
    gb.rank = gens.front().size();
    gb.ngens = gens.size();
    gb.order = order;
    gb.gens = gens;
    for (const auto& g : gens)
        if (g.size() != gb.rank)
            throw std::invalid_argument("generators of different rank");

    const RingPtr& ring = gb.ring;
    std::vector<ModPoly> basis;
    std::vector<std::vector<Polynomial>> cofs;
    std::vector<unsigned> sugar;
    std::vector<bool> active;
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_set;
    std::size_t serial = 0;

    auto add_element = [&](ModPoly p, std::vector<Polynomial> cof, unsigned s) {
        const std::size_t k = basis.size();
        for (std::size_t i = 0; i < k; ++i) {
            if (!active[i] || basis[i].lead().comp != p.lead().comp)
                continue;
            const Monomial& a = basis[i].lead().mono;
            const Monomial& b = p.lead().mono;
            Monomial l = a.lcm(b);
            // product criterion, valid for ideals only
            if (gb.rank == 1 && l == a * b)
                continue;
            unsigned sg = std::max(sugar[i] + l.degree() - a.degree(), s + l.degree() - b.degree());
            pending.push_back({i, k, l, p.lead().comp, sg, serial++});
            pending_set.insert({i, k});
        }
        basis.push_back(std::move(p));
        cofs.push_back(std::move(cof));
        sugar.push_back(s);
        active.push_back(true);
    };

    for (std::size_t g = 0; g < gens.size(); ++g) {
        ModPoly p = to_modpoly(gens[g], order);
        if (p.empty())
            continue;
        std::vector<Polynomial> cof(gens.size(), Polynomial(ring));
        cof[g] = Polynomial::constant(ring, Rational(1));
        // reduce against what we have so far to keep the input small
        Reduction red = reduce(p, basis, order);
        if (red.remainder.empty())
            continue;
        std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>> parts;
        std::vector<Polynomial> qs;
        qs.reserve(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k)
            qs.push_back(-Polynomial::from_terms(ring, std::move(red.quotients[k])));
        for (std::size_t k = 0; k < basis.size(); ++k)
            parts.emplace_back(qs[k], &cofs[k]);
        Polynomial one = Polynomial::constant(ring, Rational(1));
        parts.emplace_back(one, &cof);
        unsigned s = 0;
        for (const auto& t : p.terms)
            s = std::max(s, t.mono.degree());
        add_element(std::move(red.remainder), combine_cofactors(parts, ring, gens.size()), s);
    }

    while (!pending.empty()) {
        auto best = pending.begin();
        for (auto it = pending.begin() + 1; it != pending.end(); ++it) {
            bool smaller = order.greater(best->lcm, best->comp, it->lcm, it->comp);
            bool same = best->lcm == it->lcm && best->comp == it->comp;
            if (smaller || (same && (it->sugar < best->sugar || (it->sugar == best->sugar && it->serial < best->serial))))
                best = it;
        }
        Pair pr = *best;
        pending.erase(best);
        pending_set.erase({pr.i, pr.j});

        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j || basis[k].lead().comp != pr.comp)
                continue;
            if (!basis[k].lead().mono.divides(pr.lcm))
                continue;
            auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending_set.count(key(pr.i, k)) && !pending_set.count(key(pr.j, k)))
                skip = true;
        }
        if (skip)
            continue;

        const MTerm& li = basis[pr.i].lead();
        const MTerm& lj = basis[pr.j].lead();
        Monomial mi = li.mono.quotient_of(pr.lcm);
        Monomial mj = lj.mono.quotient_of(pr.lcm);
        Rational ci = Rational(1) / li.coeff;
        Rational cj = -Rational(1) / lj.coeff;
        ModPoly s;
        add_scaled(s, basis[pr.i], mi, ci, order);
        add_scaled(s, basis[pr.j], mj, cj, order);
        Reduction red = reduce(std::move(s), basis, order);
        if (red.remainder.empty())
            continue;

        std::vector<Polynomial> coefs;
        coefs.reserve(basis.size() + 2);
        std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>> parts;
        Polynomial pi = Polynomial::monomial(ring, mi, ci);
        Polynomial pj = Polynomial::monomial(ring, mj, cj);
        parts.emplace_back(pi, &cofs[pr.i]);
        parts.emplace_back(pj, &cofs[pr.j]);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!red.quotients[k].empty())
                parts.emplace_back(-Polynomial::from_terms(ring, std::move(red.quotients[k])), &cofs[k]);
        auto cof = combine_cofactors(parts, ring, gens.size());
        add_element(std::move(red.remainder), std::move(cof), pr.sugar);
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || basis[i].lead().comp != basis[j].lead().comp)
                continue;
            const Monomial& a = basis[i].lead().mono;
            const Monomial& b = basis[j].lead().mono;
            if (b.divides(a) && (!(a == b) || j < i))
                redundant = true;
        }
        if (!redundant)
            keep.push_back(i);
    }
    std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
        const MTerm& x = basis[a].lead();
        const MTerm& y = basis[b].lead();
        return order.greater(y.mono, y.comp, x.mono, x.comp);
    });

    std::vector<ModPoly> minimal;
    std::vector<std::vector<Polynomial>> mincofs;
    for (auto i : keep) {
        minimal.push_back(basis[i]);
        mincofs.push_back(cofs[i]);
    }
    // tail reduction and normalization to leading coefficient one
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        ModPoly head;
        head.terms.push_back(minimal[i].lead());
        ModPoly tail;
        tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
        std::vector<ModPoly> others;
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) {
                others.push_back(minimal[j]);
                idx.push_back(j);
            }
        Reduction red = reduce(std::move(tail), others, order);
        std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>> parts;
        Polynomial one = Polynomial::constant(ring, Rational(1));
        std::vector<Polynomial> own = mincofs[i];
        parts.emplace_back(one, &own);
        for (std::size_t k = 0; k < others.size(); ++k)
            if (!red.quotients[k].empty())
                parts.emplace_back(-Polynomial::from_terms(ring, std::move(red.quotients[k])), &mincofs[idx[k]]);
        auto cof = combine_cofactors(parts, ring, gens.size());
        Rational inv = Rational(1) / head.terms.front().coeff;
        ModPoly result = head;
        result.terms.insert(result.terms.end(), red.remainder.terms.begin(), red.remainder.terms.end());
        for (auto& t : result.terms)
            t.coeff *= inv;
        for (auto& c : cof)
            c *= inv;
        minimal[i] = std::move(result);
        mincofs[i] = std::move(cof);
    }

    for (std::size_t i = 0; i < minimal.size(); ++i) {
        gb.elements.push_back(to_element(minimal[i], ring, gb.rank));
        gb.cofactors.push_back(std::move(mincofs[i]));
    }
    return gb;
}

NormalForm normal_form(const ModuleElement& e, const GroebnerBasis& gb)
{
    if (e.size() != gb.rank)
        throw std::invalid_argument("normal_form: rank mismatch");
    std::vector<ModPoly> basis;
    basis.reserve(gb.elements.size());
    for (const auto& g : gb.elements)
        basis.push_back(to_modpoly(g, gb.order));
    Reduction red = reduce(to_modpoly(e, gb.order), basis, gb.order);
    NormalForm nf;
    nf.remainder = to_element(red.remainder, gb.ring, gb.rank);
    for (auto& q : red.quotients)
        nf.quotients.push_back(Polynomial::from_terms(gb.ring, std::move(q)));
    return nf;
}

std::vector<Polynomial> to_generator_cofactors(const std::vector<Polynomial>& quotients, const GroebnerBasis& gb)
{
    std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>> parts;
    for (std::size_t k = 0; k < quotients.size(); ++k)
        parts.emplace_back(quotients[k], &gb.cofactors[k]);
    return combine_cofactors(parts, gb.ring, gb.ngens);
}

std::optional<std::vector<Polynomial>> module_membership(const ModuleElement& e, const GroebnerBasis& gb)
{
    NormalForm nf = normal_form(e, gb);
    if (!is_zero(nf.remainder))
        return std::nullopt;
    return to_generator_cofactors(nf.quotients, gb);
}

std::optional<std::vector<Polynomial>> module_membership(const ModuleElement& e,
                                                         const std::vector<ModuleElement>& gens)
{
    return module_membership(e, buchberger(gens));
}

std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens)
{
    GroebnerBasis gb = buchberger(gens);
    const RingPtr& ring = gb.ring;
    const std::size_t t = gb.elements.size();
    const std::size_t s = gens.size();
    std::vector<ModPoly> basis;
    for (const auto& g : gb.elements)
        basis.push_back(to_modpoly(g, gb.order));

    std::vector<ModuleElement> out;
    auto push_unique = [&](ModuleElement v) {
        if (is_zero(v))
            return;
        // normalize: first nonzero component has leading coefficient one
        for (const auto& c : v)
            if (!c.is_zero()) {
                Rational inv = Rational(1) / c.leading().coeff;
                for (auto& x : v)
                    x *= inv;
                break;
            }
        for (const auto& w : out)
            if (w == v)
                return;
        out.push_back(std::move(v));
    };

    // syzygies of the basis from S-vectors, pushed through the cofactor matrix
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j) {
            const MTerm& li = basis[i].lead();
            const MTerm& lj = basis[j].lead();
            if (li.comp != lj.comp)
                continue;
            Monomial l = li.mono.lcm(lj.mono);
            Monomial mi = li.mono.quotient_of(l);
            Monomial mj = lj.mono.quotient_of(l);
            Rational ci = Rational(1) / li.coeff;
            Rational cj = -Rational(1) / lj.coeff;
            ModPoly sv;
            add_scaled(sv, basis[i], mi, ci, gb.order);
            add_scaled(sv, basis[j], mj, cj, gb.order);
            Reduction red = reduce(std::move(sv), basis, gb.order);
            if (!red.remainder.empty())
                throw std::logic_error("internal: S-vector of a Groebner basis did not reduce to zero");
            std::vector<Polynomial> sigma(t, Polynomial(ring));
            for (std::size_t k = 0; k < t; ++k)
                sigma[k] = -Polynomial::from_terms(ring, std::move(red.quotients[k]));
            sigma[i] += Polynomial::monomial(ring, mi, ci);
            sigma[j] += Polynomial::monomial(ring, mj, cj);
            push_unique(to_generator_cofactors(sigma, gb));
        }

    // each input expressed through the basis
    for (std::size_t i = 0; i < s; ++i) {
        NormalForm nf = normal_form(gens[i], gb);
        if (!is_zero(nf.remainder))
            throw std::logic_error("internal: generator not reduced to zero by its own basis");
        ModuleElement rel = to_generator_cofactors(nf.quotients, gb);
        for (auto& c : rel)
            c = -c;
        rel[i] += Polynomial::constant(ring, Rational(1));
        push_unique(std::move(rel));
    }
    return out;
}

std::optional<ModuleGrading> detect_grading(const std::vector<ModuleElement>& gens)
{
    if (gens.empty())
        return ModuleGrading{};
    const std::size_t n = ring_of(gens)->nvars();
    const std::size_t r = gens.front().size();
    // unknowns: weights (n, nonnegative), shifts (r, free)
    lp::Problem prob(n + r);
    prob.free_var.assign(n + r, false);
    for (std::size_t i = 0; i < r; ++i)
        prob.free_var[n + i] = true;
    prob.objective.assign(n + r, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        prob.objective[i] = 1;
    std::set<std::vector<Rational>> rows;
    std::vector<std::pair<Monomial, std::size_t>> refs;
    for (const auto& g : gens) {
        std::optional<std::pair<Monomial, std::size_t>> ref;
        for (std::size_t c = 0; c < r; ++c)
            for (const auto& t : g[c].terms()) {
                if (!ref) {
                    ref = {t.mono, c};
                    continue;
                }
                std::vector<Rational> row(n + r);
                for (std::size_t v = 0; v < n; ++v)
                    row[v] = static_cast<long>(t.mono.exp[v]) - static_cast<long>(ref->first.exp[v]);
                row[n + c] += 1;
                row[n + ref->second] -= 1;
                if (!std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; }))
                    rows.insert(std::move(row));
            }
        refs.push_back(ref.value_or(std::make_pair(Monomial{}, std::size_t{0})));
    }
    for (const auto& row : rows)
        prob.add(row, lp::Relation::Equal, Rational(0));
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<Rational> row(n + r);
        row[v] = 1;
        prob.add(std::move(row), lp::Relation::GreaterEq, Rational(1));
    }
    lp::Solution sol = lp::solve(prob);
    if (sol.status != lp::Status::Optimal)
        return std::nullopt;
    ModuleGrading grading;
    grading.weights.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(n));
    grading.shifts.assign(sol.x.begin() + static_cast<std::ptrdiff_t>(n), sol.x.end());
    for (const auto& [mono, comp] : refs)
        grading.degrees.push_back(weighted_degree(mono, grading.weights) + grading.shifts[comp]);
    return grading;
}

MinimalGenerators minimal_generators(const std::vector<ModuleElement>& gens)
{
    MinimalGenerators out;
    std::vector<std::size_t> nonzero;
    std::vector<ModuleElement> nz;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!is_zero(gens[i])) {
            nonzero.push_back(i);
            nz.push_back(gens[i]);
        }
    auto grading = detect_grading(nz);
    if (!grading)
        throw NotGraded();
    out.grading = *grading;

    std::vector<std::size_t> order(nz.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return grading->degrees[a] < grading->degrees[b]; });

    std::optional<GroebnerBasis> gb;
    for (auto k : order) {
        if (gb) {
            auto cof = module_membership(nz[k], *gb);
            if (cof) {
                out.discarded.push_back({nonzero[k], std::move(*cof)});
                continue;
            }
        }
        out.kept.push_back(nonzero[k]);
        out.generators.push_back(nz[k]);
        gb = buchberger(out.generators);
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (is_zero(gens[i]))
            out.discarded.push_back({i, {}});
    return out;
}

namespace {

void max_independent(const std::vector<Monomial>& leads, std::size_t n, std::size_t var, unsigned mask,
                     int size, int& best)
{
    if (size + static_cast<int>(n - var) <= best)
        return;
    if (var == n) {
        best = std::max(best, size);
        return;
    }
    unsigned with = mask | (1U << var);
    bool independent = true;
    for (const auto& m : leads) {
        bool inside = true;
        for (std::size_t v = 0; v < n && inside; ++v)
            if (m.exp[v] && !(with & (1U << v)))
                inside = false;
        if (inside) {
            independent = false;
            break;
        }
    }
    if (independent)
        max_independent(leads, n, var + 1, with, size + 1, best);
    max_independent(leads, n, var + 1, mask, size, best);
}

} // namespace

Dimension ideal_dimension(const GroebnerBasis& gb)
{
    if (gb.rank != 1)
        throw std::invalid_argument("ideal_dimension expects an ideal");
    const std::size_t n = gb.ring->nvars();
    std::vector<Monomial> leads;
    for (const auto& e : gb.elements) {
        const Monomial& m = e[0].leading().mono;
        if (m.is_one())
            return std::nullopt;
        leads.push_back(m);
    }
    int best = -1;
    max_independent(leads, n, 0, 0U, 0, best);
    return best;
}

Dimension ideal_dimension(const std::vector<Polynomial>& gens)
{
    if (gens.empty())
        throw std::invalid_argument("ideal_dimension needs at least one generator");
    std::vector<ModuleElement> elems;
    for (const auto& g : gens)
        elems.push_back({g});
    return ideal_dimension(buchberger(elems));
}

} // namespace loglie
