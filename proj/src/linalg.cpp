#include "loglie/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace loglie {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("from_rows: ragged input");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const Rational> d)
{
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

Vec Matrix::row(std::size_t i) const
{
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::col(std::size_t j) const
{
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k)
        r.data_[k] += o.data_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k)
        r.data_[k] -= o.data_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0)
                    r(i, j) += a * o(k, j);
        }
    return r;
}

Matrix Matrix::operator*(const Rational& c) const
{
    Matrix r = *this;
    for (auto& v : r.data_)
        v *= c;
    return r;
}

Vec Matrix::operator*(const Vec& v) const
{
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0)
                r[i] += (*this)(i, j) * v[j];
    return r;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

Rational Matrix::trace() const
{
    Rational t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        t += (*this)(i, i);
    return t;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b)
{
    return a * b - b * a;
}

Echelon rref(const Matrix& input)
{
    Echelon e{input, {}};
    Matrix& m = e.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0)
                    m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

std::size_t rank(const Matrix& m)
{
    return rref(m).pivots.size();
}

std::vector<Vec> nullspace(const Matrix& m)
{
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b)
{
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon e = rref(aug);
    Vec x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == m.cols())
            return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = e.reduced(i, n + j);
    return inv;
}

Rational determinant(const Matrix& input)
{
    if (!input.is_square())
        throw std::invalid_argument("determinant of non-square matrix");
    Matrix m = input;
    const std::size_t n = m.rows();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0)
            ++p;
        if (p == n)
            return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0)
                continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Vec operator+(const Vec& a, const Vec& b)
{
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b)
{
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vec operator*(const Rational& c, const Vec& v)
{
    Vec r = v;
    for (auto& x : r)
        x *= c;
    return r;
}

Rational dot(const Vec& a, const Vec& b)
{
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

Vec unit_vector(std::size_t n, std::size_t i)
{
    Vec v(n);
    v[i] = 1;
    return v;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim)
{
    if (vectors.empty())
        return {};
    Echelon e = rref(Matrix::from_rows(vectors, dim));
    std::vector<Vec> out;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        out.push_back(e.reduced.row(r));
    return out;
}

std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors, std::size_t dim)
{
    std::vector<std::size_t> keep;
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        basis.push_back(vectors[i]);
        if (rank(Matrix::from_rows(basis, dim)) == basis.size())
            keep.push_back(i);
        else
            basis.pop_back();
    }
    return keep;
}

std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v)
{
    if (basis.empty()) {
        if (is_zero(v))
            return Vec{};
        return std::nullopt;
    }
    // columns are the basis vectors
    Matrix a(v.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i)
            a(i, j) = basis[j][i];
    return solve(a, v);
}

bool in_span(const std::vector<Vec>& basis, const Vec& v)
{
    return coordinates(basis, v).has_value();
}

std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim)
{
    if (a.empty() || b.empty())
        return {};
    // solve sum x_i a_i - sum y_j b_j = 0
    Matrix m(dim, a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t r = 0; r < dim; ++r)
            m(r, i) = a[i][r];
    for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t r = 0; r < dim; ++r)
            m(r, a.size() + j) = -b[j][r];
    std::vector<Vec> out;
    for (const auto& k : nullspace(m)) {
        Vec v(dim);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (k[i] != 0)
                v = v + k[i] * a[i];
        out.push_back(std::move(v));
    }
    return span_basis(out, dim);
}

std::vector<Vec> complement_in(const std::vector<Vec>& sub, const std::vector<Vec>& all, std::size_t dim)
{
    std::vector<Vec> basis = sub;
    std::vector<Vec> added;
    std::size_t r = basis.empty() ? 0 : rank(Matrix::from_rows(basis, dim));
    for (const auto& v : all) {
        basis.push_back(v);
        std::size_t r2 = rank(Matrix::from_rows(basis, dim));
        if (r2 > r) {
            added.push_back(v);
            r = r2;
        } else {
            basis.pop_back();
        }
    }
    return added;
}

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(Vec coeffs) : c_(std::move(coeffs))
{
    trim();
}

UPoly UPoly::monomial(std::size_t deg, const Rational& c)
{
    Vec v(deg + 1);
    v[deg] = c;
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const
{
    Vec r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (*this)[i] + o[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const
{
    Vec r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (*this)[i] - o[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const
{
    if (is_zero() || o.is_zero())
        return {};
    Vec r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rational& c) const
{
    Vec r = c_;
    for (auto& x : r)
        x *= c;
    return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const
{
    if (d.is_zero())
        throw std::domain_error("UPoly division by zero");
    Vec rem = c_;
    if (rem.size() < d.c_.size())
        return {UPoly(), *this};
    Vec q(rem.size() - d.c_.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational f = rem[k + d.c_.size() - 1] / d.lead();
        q[k] = f;
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < d.c_.size(); ++j)
            rem[k + j] -= f * d.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly UPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    Vec r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const
{
    if (is_zero())
        return *this;
    return *this * (Rational(1) / lead());
}

Rational UPoly::eval(const Rational& x) const
{
    Rational r;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = r * x + c_[i];
    return r;
}

Matrix UPoly::eval(const Matrix& m) const
{
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = c_.size(); i-- > 0;)
        r = r * m + Matrix::identity(m.rows()) * c_[i];
    return r;
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly squarefree_part(const UPoly& p)
{
    if (p.degree() <= 0)
        return p.monic();
    UPoly g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

UPoly characteristic_polynomial(const Matrix& m)
{
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    if (!m.is_square())
        throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    Vec c(n + 1);
    c[n] = 1;
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + Matrix::identity(n) * c[n - k + 1];
        c[n - k] = -(m * mk).trace() / static_cast<long>(k);
    }
    return UPoly(std::move(c));
}

namespace {

std::vector<Integer> positive_divisors(Integer v)
{
    if (v < 0)
        v = -v;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            small.push_back(d);
            if (d * d != v)
                large.push_back(v / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::vector<std::pair<Rational, unsigned>> rational_roots(const UPoly& p)
{
    std::vector<std::pair<Rational, unsigned>> out;
    if (p.degree() <= 0)
        return out;
    UPoly q = p;
    unsigned zero_mult = 0;
    while (q[0] == 0) {
        q = q.divmod(UPoly::monomial(1)).first;
        ++zero_mult;
    }
    if (zero_mult)
        out.emplace_back(Rational(0), zero_mult);
    if (q.degree() <= 0)
        return out;
    // integer coefficients
    Integer l = 1;
    for (const auto& c : q.coeffs())
        l = lcm(l, Integer(c.get_den()));
    Vec ic;
    for (const auto& c : q.coeffs())
        ic.push_back(c * l);
    auto num = positive_divisors(Integer(ic.front().get_num()));
    auto den = positive_divisors(Integer(ic.back().get_num()));
    std::vector<Rational> cands;
    for (const auto& a : num)
        for (const auto& b : den) {
            Rational r(a, b);
            r.canonicalize();
            cands.push_back(r);
            cands.push_back(-r);
        }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& r : cands) {
        unsigned mult = 0;
        UPoly lin(Vec{-r, Rational(1)});
        for (;;) {
            auto [qq, rem] = q.divmod(lin);
            if (!rem.is_zero())
                break;
            q = qq;
            ++mult;
        }
        if (mult)
            out.emplace_back(r, mult);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace loglie
