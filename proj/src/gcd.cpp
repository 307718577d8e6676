#include "loglie/polynomial.hpp"

namespace loglie {

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("division by zero polynomial");
    Polynomial q(a.ring());
    Polynomial r = a;
    const Term& lb = b.leading();
    std::vector<Term> quotient;
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        if (!lb.mono.divides(lr.mono))
            return std::nullopt;
        Monomial m = lb.mono.quotient_of(lr.mono);
        Rational c = lr.coeff / lb.coeff;
        quotient.push_back({m, c});
        r.add_scaled(b, m, -c);
    }
    return Polynomial::from_terms(a.ring(), std::move(quotient));
}

namespace {

using Coeffs = std::vector<Polynomial>;

int main_variable(const Polynomial& p)
{
    int v = -1;
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (t.mono.exp[i])
                v = std::max(v, static_cast<int>(i));
    return v;
}

bool involves(const Polynomial& p, std::size_t v)
{
    for (const auto& t : p.terms())
        if (t.mono.exp[v])
            return true;
    return false;
}

Coeffs to_coeffs(const Polynomial& p, std::size_t v)
{
    std::vector<std::vector<Term>> buckets;
    for (const auto& t : p.terms()) {
        unsigned e = t.mono.exp[v];
        if (buckets.size() <= e)
            buckets.resize(e + 1);
        Term s = t;
        s.mono.exp[v] = 0;
        buckets[e].push_back(std::move(s));
    }
    Coeffs out;
    out.reserve(buckets.size());
    for (auto& b : buckets)
        out.push_back(Polynomial::from_terms(p.ring(), std::move(b)));
    return out;
}

Polynomial from_coeffs(const Coeffs& c, std::size_t v, const RingPtr& ring)
{
    Polynomial p(ring);
    for (std::size_t e = 0; e < c.size(); ++e) {
        Monomial m;
        m.exp[v] = static_cast<std::uint16_t>(e);
        p.add_scaled(c[e], m, Rational(1));
    }
    return p;
}

void trim(Coeffs& c)
{
    while (!c.empty() && c.back().is_zero())
        c.pop_back();
}

Polynomial normalized(Polynomial p)
{
    if (p.is_zero())
        return p;
    Rational lc = p.leading().coeff;
    return p * (Rational(1) / lc);
}

Polynomial exact(const Polynomial& a, const Polynomial& b)
{
    auto q = divide_exact(a, b);
    if (!q)
        throw std::logic_error("internal: expected exact polynomial division");
    return *q;
}

Polynomial content_in(const Polynomial& p, std::size_t v)
{
    Polynomial g(p.ring());
    for (const auto& c : to_coeffs(p, v)) {
        if (c.is_zero())
            continue;
        g = gcd(g, c);
        if (g.is_constant())
            break;
    }
    return g;
}

/// Pseudo-remainder of a by b in the main variable: lc(b)^(da-db+1) a = q b + r.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b)
{
    const std::size_t db = b.size() - 1;
    const Polynomial& lb = b.back();
    const std::size_t steps = a.size() - db;
    std::size_t done = 0;
    while (a.size() > db && !a.empty()) {
        std::size_t shift = a.size() - 1 - db;
        Polynomial la = a.back();
        for (auto& c : a)
            c = c * lb;
        for (std::size_t i = 0; i <= db; ++i)
            a[i + shift] -= la * b[i];
        trim(a);
        ++done;
    }
    if (done < steps) {
        Polynomial extra = lb.pow(static_cast<unsigned>(steps - done));
        for (auto& c : a)
            c = c * extra;
    }
    return a;
}

Polynomial primitive_gcd(const Polynomial& pa, const Polynomial& pb, std::size_t v)
{
    Coeffs a = to_coeffs(pa, v);
    Coeffs b = to_coeffs(pb, v);
    if (a.size() < b.size())
        std::swap(a, b);
    const RingPtr& ring = pa.ring();
    Polynomial g = Polynomial::constant(ring, Rational(1));
    Polynomial h = Polynomial::constant(ring, Rational(1));
    for (;;) {
        std::size_t delta = a.size() - b.size();
        Coeffs r = pseudo_remainder(a, b);
        if (r.empty())
            break;
        if (r.size() == 1)
            return Polynomial::constant(ring, Rational(1));
        a = std::move(b);
        Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
        for (auto& c : r)
            c = exact(c, divisor);
        b = std::move(r);
        g = a.back();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    Polynomial last = from_coeffs(b, v, ring);
    return exact(last, content_in(last, v));
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero())
        return normalized(b);
    if (b.is_zero())
        return normalized(a);
    const RingPtr& ring = a.ring();
    int mv = std::max(main_variable(a), main_variable(b));
    if (mv < 0)
        return Polynomial::constant(ring, Rational(1));
    auto v = static_cast<std::size_t>(mv);
    if (!involves(a, v))
        return gcd(a, content_in(b, v));
    if (!involves(b, v))
        return gcd(content_in(a, v), b);
    Polynomial ca = content_in(a, v);
    Polynomial cb = content_in(b, v);
    Polynomial g = gcd(ca, cb);
    Polynomial h = primitive_gcd(exact(a, ca), exact(b, cb), v);
    return normalized(g * h);
}

bool is_reduced(const Polynomial& p)
{
    if (p.is_constant())
        throw std::invalid_argument("is_reduced requires a nonconstant polynomial");
    Polynomial g = p;
    for (std::size_t i = 0; i < p.nvars() && !g.is_constant(); ++i)
        g = gcd(g, partial_derivative(p, i));
    return g.is_constant();
}

} // namespace loglie
