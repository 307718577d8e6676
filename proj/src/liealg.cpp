#include "loglie/liealg.hpp"

#include <functional>
#include <sstream>

namespace loglie {

namespace {

Vec zero_vec(std::size_t n)
{
    return Vec(n);
}

Matrix rows_matrix(const std::vector<Vec>& rows, std::size_t cols)
{
    if (rows.empty())
        return Matrix(0, cols);
    return Matrix::from_rows(rows, cols);
}

Matrix power(const Matrix& m, std::size_t e)
{
    Matrix out = Matrix::identity(m.rows());
    for (std::size_t i = 0; i < e; ++i)
        out = out * m;
    return out;
}

std::vector<Vec> units(std::size_t n)
{
    std::vector<Vec> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(unit_vector(n, i));
    return out;
}

} // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> constants)
    : labels_(std::move(labels)), c_(std::move(constants))
{
    const std::size_t n = labels_.size();
    if (c_.size() != n)
        throw InvalidLieAlgebra("structure constant table has wrong size");
    for (const auto& row : c_) {
        if (row.size() != n)
            throw InvalidLieAlgebra("structure constant table has wrong size");
        for (const auto& v : row)
            if (v.size() != n)
                throw InvalidLieAlgebra("structure constant vector has wrong length");
    }
    if (auto v = validate(*this))
        throw InvalidLieAlgebra(v->message());
}

LieAlgebra LieAlgebra::unchecked(std::vector<std::string> labels, std::vector<std::vector<Vec>> constants)
{
    LieAlgebra g;
    g.labels_ = std::move(labels);
    g.c_ = std::move(constants);
    return g;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i)
        labels.push_back("e" + std::to_string(i + 1));
    return unchecked(std::move(labels), std::vector<std::vector<Vec>>(dim, std::vector<Vec>(dim, zero_vec(dim))));
}

LieAlgebra LieAlgebra::from_table(std::vector<std::string> labels, const std::vector<Entry>& table)
{
    const std::size_t n = labels.size();
    std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, zero_vec(n)));
    for (const auto& e : table) {
        if (e.i >= n || e.j >= n || e.value.size() != n)
            throw InvalidLieAlgebra("bracket table entry out of range");
        c[e.i][e.j] = e.value;
        c[e.j][e.i] = Rational(-1) * e.value;
    }
    return LieAlgebra(std::move(labels), std::move(c));
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const
{
    const std::size_t n = dim();
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0)
                continue;
            Rational s = x[i] * y[j];
            const Vec& c = c_[i][j];
            for (std::size_t k = 0; k < n; ++k)
                if (c[k] != 0)
                    out[k] += s * c[k];
        }
    }
    return out;
}

Matrix LieAlgebra::ad(const Vec& x) const
{
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec col = bracket(x, unit_vector(n, j));
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = col[i];
    }
    return m;
}

bool LieAlgebra::is_abelian() const
{
    for (const auto& row : c_)
        for (const auto& v : row)
            if (!loglie::is_zero(v))
                return false;
    return true;
}

std::string Violation::message() const
{
    std::ostringstream os;
    if (kind == "antisymmetry")
        os << "antisymmetry fails for basis pair (" << i << ", " << j << ")";
    else
        os << "Jacobi identity fails for basis triple (" << i << ", " << j << ", " << k << ")";
    return os.str();
}

std::optional<Violation> validate(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!is_zero(g.bracket_basis(i, j) + g.bracket_basis(j, i)))
                return Violation{"antisymmetry", i, j, 0};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec a = g.bracket(unit_vector(n, i), g.bracket_basis(j, k));
                Vec b = g.bracket(unit_vector(n, j), g.bracket_basis(k, i));
                Vec c = g.bracket(unit_vector(n, k), g.bracket_basis(i, j));
                if (!is_zero(a + b + c))
                    return Violation{"jacobi", i, j, k};
            }
    return std::nullopt;
}

bool Subalgebra::contains(const Vec& v) const
{
    return in_span(basis, v);
}

Matrix Representation::operator()(const Vec& x) const
{
    std::size_t d = degree();
    Matrix m(d, d);
    for (std::size_t i = 0; i < matrices.size(); ++i)
        if (x[i] != 0)
            m = m + matrices[i] * x[i];
    return m;
}

Subalgebra whole(const LieAlgebra& g)
{
    return {units(g.dim())};
}

Subalgebra bracket_span(const LieAlgebra& g, const Subalgebra& a, const Subalgebra& b)
{
    std::vector<Vec> vs;
    for (const auto& x : a.basis)
        for (const auto& y : b.basis) {
            Vec z = g.bracket(x, y);
            if (!is_zero(z))
                vs.push_back(std::move(z));
        }
    return {span_basis(vs, g.dim())};
}

bool is_closed(const LieAlgebra& g, const Subalgebra& s)
{
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            if (!s.contains(g.bracket(s.basis[i], s.basis[j])))
                return false;
    return true;
}

bool is_ideal(const LieAlgebra& g, const Subalgebra& s)
{
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (const auto& v : s.basis)
            if (!s.contains(g.bracket(unit_vector(g.dim(), i), v)))
                return false;
    return true;
}

LieAlgebra restrict_to(const LieAlgebra& g, const Subalgebra& s)
{
    const std::size_t m = s.dim();
    std::vector<std::vector<Vec>> c(m, std::vector<Vec>(m, zero_vec(m)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto coords = coordinates(s.basis, g.bracket(s.basis[i], s.basis[j]));
            if (!coords)
                throw InvalidLieAlgebra("subspace is not closed under the bracket");
            c[i][j] = *coords;
        }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i)
        labels.push_back("s" + std::to_string(i + 1));
    return LieAlgebra::unchecked(std::move(labels), std::move(c));
}

Vec lift(const Subalgebra& s, const Vec& coords)
{
    Vec out;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (out.empty())
            out = zero_vec(s.basis[i].size());
        out = out + coords[i] * s.basis[i];
    }
    return out;
}

LinearLieAlgebra linear_lie_algebra(const std::vector<Matrix>& matrices, std::size_t degree)
{
    std::vector<Vec> flat;
    for (const auto& m : matrices)
        flat.push_back(m.flatten());
    LinearLieAlgebra out;
    out.chosen = independent_subset(flat, degree * degree);
    std::vector<Vec> basis;
    for (auto i : out.chosen) {
        basis.push_back(flat[i]);
        out.rep.matrices.push_back(matrices[i]);
    }
    const std::size_t n = basis.size();
    std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, zero_vec(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto coords = coordinates(basis, commutator(out.rep.matrices[i], out.rep.matrices[j]).flatten());
            if (!coords)
                throw InvalidLieAlgebra("matrices do not span a Lie algebra");
            c[i][j] = *coords;
        }
    std::vector<std::string> labels;
    for (auto i : out.chosen)
        labels.push_back("m" + std::to_string(i + 1));
    out.algebra = LieAlgebra::unchecked(std::move(labels), std::move(c));
    return out;
}

std::vector<Subalgebra> derived_series(const LieAlgebra& g)
{
    std::vector<Subalgebra> out{whole(g)};
    while (out.back().dim() > 0) {
        Subalgebra next = bracket_span(g, out.back(), out.back());
        if (next.dim() == out.back().dim())
            break;
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<Subalgebra> lower_central_series(const LieAlgebra& g)
{
    Subalgebra all = whole(g);
    std::vector<Subalgebra> out{all};
    while (out.back().dim() > 0) {
        Subalgebra next = bracket_span(g, all, out.back());
        if (next.dim() == out.back().dim())
            break;
        out.push_back(std::move(next));
    }
    return out;
}

bool is_solvable(const LieAlgebra& g)
{
    return derived_series(g).back().dim() == 0;
}

bool is_nilpotent(const LieAlgebra& g)
{
    return lower_central_series(g).back().dim() == 0;
}

Matrix killing_form(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < n; ++i)
        ads.push_back(g.ad(unit_vector(n, i)));
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            k(i, j) = (ads[i] * ads[j]).trace();
            k(j, i) = k(i, j);
        }
    return k;
}

Inertia inertia(const Matrix& symmetric)
{
    Matrix a = symmetric;
    const std::size_t n = a.rows();
    Inertia out;
    auto swap_index = [&](std::size_t p, std::size_t q) {
        if (p == q)
            return;
        for (std::size_t t = 0; t < n; ++t)
            std::swap(a(p, t), a(q, t));
        for (std::size_t t = 0; t < n; ++t)
            std::swap(a(t, p), a(t, q));
    };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n && piv == n; ++i)
            if (a(i, i) != 0)
                piv = i;
        if (piv == n) {
            // zero diagonal: e_i <- e_i + e_j makes a nonzero diagonal entry
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                out.zero += n - k;
                break;
            }
            for (std::size_t t = 0; t < n; ++t)
                a(pi, t) += a(pj, t);
            for (std::size_t t = 0; t < n; ++t)
                a(t, pi) += a(t, pj);
            piv = pi;
        }
        swap_index(k, piv);
        Rational d = a(k, k);
        if (d > 0)
            ++out.positive;
        else
            ++out.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0)
                continue;
            Rational f = a(i, k) / d;
            for (std::size_t t = k; t < n; ++t)
                a(i, t) -= f * a(k, t);
            for (std::size_t t = k; t < n; ++t)
                a(t, i) = a(i, t);
        }
    }
    return out;
}

Subalgebra radical(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    Subalgebra all = whole(g);
    Subalgebra derived = bracket_span(g, all, all);
    Matrix k = killing_form(g);
    std::vector<Vec> rows;
    for (const auto& d : derived.basis)
        rows.push_back(k * d);
    Subalgebra r{span_basis(nullspace(rows_matrix(rows, n)), n)};
    if (!is_ideal(g, r) || !is_solvable(restrict_to(g, r)))
        throw std::logic_error("Killing orthogonal of [g,g] is not a solvable ideal");
    return r;
}

Subalgebra levi_subalgebra(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    Subalgebra r = radical(g);
    if (r.dim() == n)
        return {};
    std::vector<Vec> y = complement_in(r.basis, units(n), n);
    const std::size_t m = y.size();

    std::vector<Vec> full = y;
    full.insert(full.end(), r.basis.begin(), r.basis.end());
    // c[i][j]: structure constants of g/r in the lifted basis
    std::vector<std::vector<Vec>> c(m, std::vector<Vec>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec coords = *coordinates(full, g.bracket(y[i], y[j]));
            c[i][j] = Vec(coords.begin(), coords.begin() + static_cast<long>(m));
        }

    std::vector<Subalgebra> series = derived_series(restrict_to(g, r));
    for (std::size_t s = 0; s + 1 < series.size(); ++s) {
        std::vector<Vec> cur, next;
        for (const auto& v : series[s].basis)
            cur.push_back(lift(r, v));
        for (const auto& v : series[s + 1].basis)
            next.push_back(lift(r, v));
        std::vector<Vec> b = complement_in(next, cur, n);
        std::vector<Vec> phis = nullspace(rows_matrix(next, n));
        const std::size_t nb = b.size();
        const std::size_t unknowns = m * nb;

        std::vector<Vec> eq_rows;
        Vec rhs;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                Vec e = g.bracket(y[i], y[j]);
                for (std::size_t k = 0; k < m; ++k)
                    e = e - c[i][j][k] * y[k];
                // coefficient of t(p, a) in the correction term
                std::vector<Vec> terms(unknowns, zero_vec(n));
                for (std::size_t a = 0; a < nb; ++a) {
                    terms[j * nb + a] = terms[j * nb + a] + g.bracket(y[i], b[a]);
                    terms[i * nb + a] = terms[i * nb + a] + g.bracket(b[a], y[j]);
                    for (std::size_t k = 0; k < m; ++k)
                        if (c[i][j][k] != 0)
                            terms[k * nb + a] = terms[k * nb + a] - c[i][j][k] * b[a];
                }
                for (const auto& phi : phis) {
                    Vec row(unknowns);
                    for (std::size_t u = 0; u < unknowns; ++u)
                        row[u] = dot(phi, terms[u]);
                    eq_rows.push_back(std::move(row));
                    rhs.push_back(-dot(phi, e));
                }
            }
        if (eq_rows.empty() || unknowns == 0)
            continue;
        auto t = solve(Matrix::from_rows(eq_rows, unknowns), rhs);
        if (!t)
            throw std::logic_error("Levi correction system is inconsistent");
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t a = 0; a < nb; ++a)
                if ((*t)[i * nb + a] != 0)
                    y[i] = y[i] + (*t)[i * nb + a] * b[a];
    }
    Subalgebra s{y};
    if (!is_closed(g, s))
        throw std::logic_error("Levi lift is not closed");
    return s;
}

namespace {

/// Calls visit on integer vectors in the fixed search order; stops when visit returns true.
void enumerate_candidates(std::size_t n, int bound, const std::function<bool(const Vec&)>& visit)
{
    std::vector<int> values;
    for (int v = 1; v <= bound; ++v) {
        values.push_back(v);
        values.push_back(-v);
    }
    bool stop = false;
    for (std::size_t support = 1; support <= n && !stop; ++support) {
        std::vector<std::size_t> idx(support);
        for (std::size_t i = 0; i < support; ++i)
            idx[i] = i;
        while (!stop) {
            std::vector<std::size_t> choice(support, 0);
            while (!stop) {
                int maxabs = 0;
                Vec x(n);
                for (std::size_t i = 0; i < support; ++i) {
                    int v = values[choice[i]];
                    x[idx[i]] = v;
                    maxabs = std::max(maxabs, std::abs(v));
                }
                if (maxabs == bound && visit(x))
                    stop = true;
                bool advanced = false;
                for (std::size_t p = support; p-- > 0;) {
                    if (++choice[p] < values.size()) {
                        advanced = true;
                        break;
                    }
                    choice[p] = 0;
                }
                if (!advanced)
                    break;
            }
            // next support subset
            std::size_t i = support;
            while (i > 0 && idx[i - 1] == n - support + i - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t t = i; t < support; ++t)
                idx[t] = idx[t - 1] + 1;
        }
    }
}

bool all_roots_rational(const Matrix& m)
{
    unsigned total = 0;
    for (const auto& [root, mult] : rational_roots(characteristic_polynomial(m)))
        total += mult;
    return total == m.rows();
}

} // namespace

CartanResult cartan_subalgebra(const LieAlgebra& g, int max_bound)
{
    const std::size_t n = g.dim();
    CartanResult out;
    if (n == 0)
        return out;
    if (is_nilpotent(g)) {
        out.cartan = whole(g);
        out.regular_element = unit_vector(n, 0);
        out.split = all_roots_rational(g.ad(out.regular_element));
        return out;
    }
    for (int bound = 1; bound <= max_bound; ++bound) {
        std::optional<CartanResult> fallback;
        enumerate_candidates(n, bound, [&](const Vec& x) {
            Matrix adx = g.ad(x);
            Subalgebra e{span_basis(nullspace(power(adx, n)), n)};
            if (e.dim() == n || !is_nilpotent(restrict_to(g, e)))
                return false;
            CartanResult cand{e, x, all_roots_rational(adx)};
            if (cand.split) {
                out = std::move(cand);
                return true;
            }
            if (!fallback)
                fallback = std::move(cand);
            return false;
        });
        if (!out.regular_element.empty())
            return out;
        if (fallback)
            return *fallback;
    }
    throw NoRegularElement();
}

JordanPair jordan_chevalley(const Matrix& m)
{
    UPoly p = squarefree_part(characteristic_polynomial(m));
    UPoly dp = p.derivative();
    Matrix s = m;
    for (;;) {
        Matrix ps = p.eval(s);
        if (ps.is_zero())
            break;
        auto inv = inverse(dp.eval(s));
        if (!inv)
            throw std::logic_error("Newton step for Jordan-Chevalley is singular");
        s = s - ps * *inv;
    }
    return {s, m - s};
}

bool is_nilpotent_matrix(const Matrix& m)
{
    return power(m, m.rows()).is_zero();
}

bool is_semisimple_matrix(const Matrix& m)
{
    return squarefree_part(characteristic_polynomial(m)).eval(m).is_zero();
}

RadicalSplit radical_split(const LieAlgebra& l0, const Representation& rho)
{
    RadicalSplit out;
    out.radical = radical(l0);
    const Subalgebra& r = out.radical;
    if (r.dim() == 0)
        return out;
    const std::size_t deg = rho.degree();
    std::vector<Matrix> rm;
    std::vector<Vec> rflat;
    for (const auto& v : r.basis) {
        rm.push_back(rho(v));
        rflat.push_back(rm.back().flatten());
    }

    // associative algebra generated by rho(r) and the identity
    std::vector<Vec> alg = span_basis({Matrix::identity(deg).flatten()}, deg * deg);
    std::vector<Matrix> algm{Matrix::identity(deg)};
    for (std::size_t pos = 0; pos < algm.size(); ++pos)
        for (const auto& x : rm) {
            Matrix prod = algm[pos] * x;
            if (in_span(alg, prod.flatten()))
                continue;
            alg.push_back(prod.flatten());
            algm.push_back(prod);
        }

    Matrix cond(algm.size(), r.dim());
    for (std::size_t a = 0; a < algm.size(); ++a)
        for (std::size_t i = 0; i < r.dim(); ++i)
            cond(a, i) = (rm[i] * algm[a]).trace();
    for (const auto& c : nullspace(cond))
        out.nilpotent.basis.push_back(lift(r, c));
    out.nilpotent.basis = span_basis(out.nilpotent.basis, l0.dim());

    LieAlgebra rl = restrict_to(l0, r);
    CartanResult h = cartan_subalgebra(rl);
    std::vector<Vec> parts;
    for (const auto& v : h.cartan.basis) {
        Matrix s = jordan_chevalley(rho(lift(r, v))).semisimple;
        auto coords = coordinates(rflat, s.flatten());
        if (!coords)
            throw SemisimplePartEscapes();
        parts.push_back(lift(r, *coords));
    }
    out.torus.basis = complement_in(out.nilpotent.basis, parts, l0.dim());
    if (out.torus.dim() + out.nilpotent.dim() != r.dim())
        throw SemisimplePartEscapes();
    return out;
}

ReductivityRecord is_reductive_singularity(std::size_t kernel_dim, const LieAlgebra& l0, const Representation& rho,
                                           bool free, bool quasihomogeneous)
{
    ReductivityRecord rec;
    RadicalSplit split = radical_split(l0, rho);
    rec.kernel_dim = kernel_dim;
    rec.radical_dim = split.radical.dim();
    rec.torus_dim = split.torus.dim();
    rec.nilpotent_dim = split.nilpotent.dim();
    rec.reductive = kernel_dim == 0 && split.nilpotent.dim() == 0;
    if (rec.reductive && (free || quasihomogeneous))
        rec.linear_verdict = "linear";
    else if (rec.reductive)
        rec.linear_verdict = "formally linear";
    else
        rec.linear_verdict = "undetermined";
    return rec;
}

RankData rank_and_multihomogeneity(const LieAlgebra& l0, const Representation& rho)
{
    RankData out;
    if (l0.dim() == 0)
        return out;
    CartanResult h = cartan_subalgebra(l0);
    out.rank = h.cartan.dim();
    std::vector<Vec> nil;
    const std::size_t deg = rho.degree();
    for (const auto& v : h.cartan.basis)
        nil.push_back(jordan_chevalley(rho(v)).nilpotent.flatten());
    out.n_d = span_basis(nil, deg * deg).size();
    out.s_d = out.rank - out.n_d;
    return out;
}

} // namespace loglie
