#include "loglie/logder.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace loglie {

namespace {

const RingPtr& ring_of(const VectorField& v)
{
    if (v.coeffs.empty())
        throw std::invalid_argument("vector field with no coefficients");
    return v.coeffs.front().ring();
}

using Key = std::pair<std::size_t, std::array<std::uint16_t, kMaxVars>>;

std::map<Key, Rational> key_map(const VectorField& v)
{
    std::map<Key, Rational> out;
    for (std::size_t c = 0; c < v.size(); ++c)
        for (const auto& t : v.coeffs[c].terms())
            out[{c, t.mono.exp}] = t.coeff;
    return out;
}

void monomials_up_to(std::size_t n, unsigned deg, std::size_t var, Monomial& cur, std::vector<Monomial>& out)
{
    if (var == n) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e <= deg; ++e) {
        cur.exp[var] = static_cast<std::uint16_t>(e);
        monomials_up_to(n, deg - e, var + 1, cur, out);
    }
    cur.exp[var] = 0;
}

/// Canonical basis of the Q-span of fields that share a degree: reduced echelon
/// form over their terms, ordered by the module order.
std::vector<VectorField> echelon_fields(const std::vector<VectorField>& fields)
{
    if (fields.empty())
        return {};
    const RingPtr& ring = ring_of(fields.front());
    const std::size_t n = fields.front().size();
    std::vector<Key> keys;
    std::vector<std::map<Key, Rational>> maps;
    for (const auto& f : fields) {
        maps.push_back(key_map(f));
        for (const auto& [k, c] : maps.back())
            keys.push_back(k);
    }
    MonomialOrder order;
    auto mono = [](const Key& k) {
        Monomial m;
        m.exp = k.second;
        return m;
    };
    std::sort(keys.begin(), keys.end(),
              [&](const Key& a, const Key& b) { return order.greater(mono(a), a.first, mono(b), b.first); });
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    Matrix m(fields.size(), keys.size());
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (std::size_t j = 0; j < keys.size(); ++j) {
            auto it = maps[i].find(keys[j]);
            if (it != maps[i].end())
                m(i, j) = it->second;
        }
    Echelon e = rref(m);
    std::vector<VectorField> out;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        std::vector<std::vector<Term>> terms(n);
        for (std::size_t j = 0; j < keys.size(); ++j)
            if (e.reduced(r, j) != 0)
                terms[keys[j].first].push_back({mono(keys[j]), e.reduced(r, j)});
        VectorField v;
        for (auto& t : terms)
            v.coeffs.push_back(Polynomial::from_terms(ring, std::move(t)));
        out.push_back(std::move(v));
    }
    return out;
}

Polynomial cofactor_of(const VectorField& v, const Polynomial& f)
{
    auto q = divide_exact(v.apply(f), f);
    if (!q)
        throw std::logic_error("field is not logarithmic");
    return *q;
}

} // namespace

bool VectorField::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial VectorField::apply(const Polynomial& p) const
{
    if (p.nvars() != size())
        throw RingMismatch();
    Polynomial out(p.ring());
    for (std::size_t i = 0; i < size(); ++i)
        if (!coeffs[i].is_zero())
            out += coeffs[i] * partial_derivative(p, i);
    return out;
}

VectorField VectorField::bracket(const VectorField& w) const
{
    if (w.size() != size())
        throw RingMismatch();
    VectorField out;
    for (std::size_t j = 0; j < size(); ++j)
        out.coeffs.push_back(apply(w.coeffs[j]) - w.apply(coeffs[j]));
    return out;
}

Matrix VectorField::linear_part() const
{
    const std::size_t n = size();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            Monomial x;
            x.exp[i] = 1;
            m(i, j) = coeffs[j].coefficient(x);
        }
    return m;
}

VectorField VectorField::truncate(unsigned k) const
{
    VectorField out;
    for (const auto& c : coeffs) {
        std::vector<Term> terms;
        for (const auto& t : c.terms()) {
            unsigned d = t.mono.degree();
            if (d >= 1 && d <= k + 1)
                terms.push_back(t);
        }
        out.coeffs.push_back(Polynomial::from_terms(c.ring(), std::move(terms)));
    }
    return out;
}

VectorField VectorField::operator+(const VectorField& o) const
{
    VectorField out = *this;
    for (std::size_t i = 0; i < size(); ++i)
        out.coeffs[i] += o.coeffs[i];
    return out;
}

VectorField VectorField::operator-(const VectorField& o) const
{
    VectorField out = *this;
    for (std::size_t i = 0; i < size(); ++i)
        out.coeffs[i] -= o.coeffs[i];
    return out;
}

std::string VectorField::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < size(); ++i) {
        if (coeffs[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << coeffs[i].to_string() << ")*d_" << coeffs[i].ring()->name(i);
    }
    if (first)
        return "0";
    return os.str();
}

VectorField operator*(const Polynomial& p, const VectorField& v)
{
    VectorField out;
    for (const auto& c : v.coeffs)
        out.coeffs.push_back(p * c);
    return out;
}

VectorField euler_field(const RingPtr& ring, const std::vector<Rational>& weights)
{
    VectorField e;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        e.coeffs.push_back(Polynomial::variable(ring, i) * weights[i]);
    return e;
}

ModuleElement to_element(const VectorField& v)
{
    return v.coeffs;
}

VectorField to_field(const ModuleElement& e)
{
    return VectorField{e};
}

std::vector<Polynomial> jacobian_ideal(const Polynomial& f)
{
    std::vector<Polynomial> out{f};
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        Polynomial d = partial_derivative(f, i);
        if (!d.is_zero())
            out.push_back(std::move(d));
    }
    return out;
}

LogDerivationModule logarithmic_derivations(const Polynomial& f)
{
    if (f.is_constant())
        throw std::invalid_argument("f must be nonconstant");
    if (f.constant_term() != 0)
        throw std::invalid_argument("f must vanish at the origin");
    if (!is_reduced(f))
        throw NotReduced();
    const RingPtr& ring = f.ring();
    const std::size_t n = f.nvars();

    std::vector<VectorField> fields;
    std::vector<ModuleElement> gens;
    std::vector<std::size_t> slot; // variable index of each nonzero partial, n for f
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial d = partial_derivative(f, i);
        if (d.is_zero()) {
            VectorField unit;
            for (std::size_t j = 0; j < n; ++j)
                unit.coeffs.push_back(Polynomial::constant(ring, Rational(i == j ? 1 : 0)));
            fields.push_back(std::move(unit));
            continue;
        }
        gens.push_back({d});
        slot.push_back(i);
    }
    gens.push_back({f});
    slot.push_back(n);
    for (const auto& s : syzygies(gens)) {
        VectorField v;
        v.coeffs.assign(n, Polynomial(ring));
        for (std::size_t k = 0; k < s.size(); ++k)
            if (slot[k] < n)
                v.coeffs[slot[k]] = s[k];
        if (!v.is_zero())
            fields.push_back(std::move(v));
    }

    LogDerivationModule m{f, {}, {}, false, quasihomogeneous_weights(f), {}};
    std::vector<ModuleElement> elems;
    for (const auto& v : fields)
        elems.push_back(to_element(v));
    try {
        MinimalGenerators mg = minimal_generators(elems);
        m.graded = true;
        std::map<Rational, std::vector<VectorField>> by_degree;
        for (std::size_t i = 0; i < mg.kept.size(); ++i)
            by_degree[mg.grading.degrees[mg.kept[i]]].push_back(to_field(mg.generators[i]));
        for (auto& [deg, group] : by_degree)
            for (auto& v : echelon_fields(group)) {
                m.generators.push_back(std::move(v));
                m.degrees.push_back(deg);
            }
    } catch (const NotGraded&) {
        // greedy pruning against all remaining fields
        std::vector<bool> alive(elems.size(), true);
        for (std::size_t i = 0; i < elems.size(); ++i) {
            std::vector<ModuleElement> others;
            for (std::size_t j = 0; j < elems.size(); ++j)
                if (j != i && alive[j])
                    others.push_back(elems[j]);
            if (!others.empty() && module_membership(elems[i], others))
                alive[i] = false;
        }
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (alive[i])
                m.generators.push_back(fields[i]);
    }
    for (const auto& v : m.generators)
        m.cofactors.push_back(cofactor_of(v, f));
    return m;
}

bool product_test(const LogDerivationModule& m)
{
    for (const auto& g : m.generators)
        for (const auto& c : g.coeffs)
            if (c.constant_term() != 0)
                return false;
    return true;
}

InitialLieData initial_lie_algebra(const LogDerivationModule& m)
{
    if (!product_test(m))
        throw ProductTestFailed();
    if (!m.graded)
        throw NotGraded();
    const std::size_t s = m.generators.size();
    const std::size_t n = m.f.nvars();
    std::vector<ModuleElement> elems;
    for (const auto& g : m.generators)
        elems.push_back(to_element(g));
    GroebnerBasis gb = buchberger(elems);

    std::vector<std::vector<Vec>> c(s, std::vector<Vec>(s, Vec(s)));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            VectorField b = m.generators[i].bracket(m.generators[j]);
            auto cof = module_membership(to_element(b), gb);
            if (!cof)
                throw BracketNotInModule();
            for (std::size_t k = 0; k < s; ++k) {
                c[i][j][k] = (*cof)[k].constant_term();
                c[j][i][k] = -c[i][j][k];
            }
        }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < s; ++i)
        labels.push_back("d" + std::to_string(i + 1));

    InitialLieData out;
    try {
        out.lie = LieAlgebra(std::move(labels), std::move(c));
    } catch (const InvalidLieAlgebra& e) {
        throw std::logic_error(std::string("initial Lie algebra: ") + e.what());
    }
    for (const auto& g : m.generators)
        out.lambda0.push_back(g.linear_part());
    out.l0 = linear_lie_algebra(out.lambda0, n);
    out.kernel_dim = s - out.l0.chosen.size();
    return out;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> a)
{
    const std::size_t n = a.size();
    if (n == 0)
        throw std::invalid_argument("empty determinant");
    const RingPtr ring = a[0][0].ring();
    Polynomial prev = Polynomial::constant(ring, Rational(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero())
                ++p;
            if (p == n)
                return Polynomial(ring);
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = divide_exact(num, prev);
                if (!q)
                    throw std::logic_error("fraction-free elimination: inexact division");
                a[i][j] = std::move(*q);
            }
            a[i][k] = Polynomial(ring);
        }
        prev = a[k][k];
    }
    Polynomial d = a[n - 1][n - 1];
    return negate ? -d : d;
}

namespace {

std::optional<FreeCertificate> saito_certificate(const Polynomial& f, const std::vector<VectorField>& fields)
{
    const std::size_t n = f.nvars();
    if (fields.size() != n)
        return std::nullopt;
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& v : fields)
        rows.push_back(v.coeffs);
    Polynomial det = determinant(rows);
    if (det.is_zero())
        return std::nullopt;
    auto u = divide_exact(det, f);
    if (!u || u->constant_term() == 0)
        return std::nullopt;
    return FreeCertificate{det, *u};
}

} // namespace

std::optional<FreeCertificate> saito_freeness(const LogDerivationModule& m)
{
    if (!is_reduced(m.f))
        return std::nullopt;
    return saito_certificate(m.f, m.generators);
}

SaitoCheck saito_check(const Polynomial& f, const std::vector<VectorField>& fields)
{
    SaitoCheck out;
    const std::size_t n = f.nvars();
    if (fields.size() != n) {
        out.reason = "expected " + std::to_string(n) + " fields, got " + std::to_string(fields.size());
        return out;
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i].size() != n) {
            out.reason = "field " + std::to_string(i + 1) + " has wrong length";
            out.offending = i;
            return out;
        }
        if (!divide_exact(fields[i].apply(f), f)) {
            out.reason = "not logarithmic: field " + std::to_string(i + 1);
            out.offending = i;
            return out;
        }
    }
    if (!is_reduced(f)) {
        out.reason = "f is not reduced";
        return out;
    }
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& v : fields)
        rows.push_back(v.coeffs);
    out.det = determinant(rows);
    auto u = divide_exact(*out.det, f);
    if (out.det->is_zero() || !u || u->constant_term() == 0) {
        out.reason = "determinant not unit multiple of f";
        return out;
    }
    out.unit = *u;
    out.ok = true;
    return out;
}

std::optional<EulerSplit> euler_split(const LogDerivationModule& m)
{
    if (!m.weights)
        return std::nullopt;
    const RingPtr& ring = m.f.ring();
    std::vector<Rational> scaled;
    for (const auto& w : m.weights->weights)
        scaled.push_back(w / m.weights->degree);
    EulerSplit out{euler_field(ring, scaled), {}};
    std::vector<Vec> seen;
    std::map<Key, std::size_t> index;
    std::vector<VectorField> candidates;
    for (std::size_t i = 0; i < m.generators.size(); ++i) {
        VectorField a = m.generators[i] - m.cofactors[i] * out.euler;
        if (!a.is_zero())
            candidates.push_back(std::move(a));
    }
    for (const auto& a : candidates)
        for (const auto& [k, c] : key_map(a))
            index.emplace(k, index.size());
    for (auto& a : candidates) {
        Vec v(index.size());
        for (const auto& [k, c] : key_map(a))
            v[index[k]] = c;
        if (in_span(seen, v))
            continue;
        seen.push_back(std::move(v));
        out.annihilators.push_back(std::move(a));
    }
    return out;
}

std::vector<VectorField> koszul_fields(const Polynomial& f)
{
    Dimension d = ideal_dimension(jacobian_ideal(f));
    if (d && *d > 0)
        throw NotIsolated();
    const std::size_t n = f.nvars();
    const RingPtr& ring = f.ring();
    std::vector<Polynomial> partials;
    for (std::size_t i = 0; i < n; ++i)
        partials.push_back(partial_derivative(f, i));
    std::vector<VectorField> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            VectorField v;
            v.coeffs.assign(n, Polynomial(ring));
            v.coeffs[j] = partials[i];
            v.coeffs[i] = -partials[j];
            out.push_back(std::move(v));
        }
    return out;
}

LieAlgebra jet_truncation(const LogDerivationModule& m, unsigned k, unsigned cap)
{
    if (k > cap)
        throw std::invalid_argument("jet order " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
    if (!product_test(m))
        throw ProductTestFailed();
    const RingPtr& ring = m.f.ring();
    const std::size_t n = m.f.nvars();
    std::vector<Monomial> monos;
    Monomial cur;
    monomials_up_to(n, k, 0, cur, monos);

    std::vector<VectorField> cands;
    for (const auto& g : m.generators)
        for (const auto& a : monos) {
            VectorField t = Polynomial::monomial(ring, a, Rational(1)) * g;
            t = t.truncate(k);
            if (!t.is_zero())
                cands.push_back(std::move(t));
        }
    std::map<Key, std::size_t> index;
    for (const auto& c : cands)
        for (const auto& [key, v] : key_map(c))
            index.emplace(key, index.size());
    auto vec_of = [&](const VectorField& v) -> std::optional<Vec> {
        Vec out(index.size());
        for (const auto& [key, c] : key_map(v)) {
            auto it = index.find(key);
            if (it == index.end())
                return std::nullopt;
            out[it->second] = c;
        }
        return out;
    };
    std::vector<Vec> flat;
    for (const auto& c : cands)
        flat.push_back(*vec_of(c));
    std::vector<std::size_t> chosen = independent_subset(flat, index.size());
    std::vector<Vec> basis;
    std::vector<VectorField> fields;
    for (auto i : chosen) {
        basis.push_back(flat[i]);
        fields.push_back(cands[i]);
    }
    const std::size_t d = basis.size();
    std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, Vec(d)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            VectorField b = fields[i].bracket(fields[j]).truncate(k);
            auto v = vec_of(b);
            std::optional<Vec> coords = v ? coordinates(basis, *v) : std::nullopt;
            if (!coords)
                throw BracketNotInModule();
            c[i][j] = *coords;
            for (std::size_t t = 0; t < d; ++t)
                c[j][i][t] = -(*coords)[t];
        }
    std::vector<std::string> labels;
    for (const auto& f : fields)
        labels.push_back(f.to_string());
    return LieAlgebra::unchecked(std::move(labels), std::move(c));
}

} // namespace loglie
