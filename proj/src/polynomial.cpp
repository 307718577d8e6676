#include "loglie/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace loglie {

Rational rational_from_string(std::string_view text)
{
    Rational r;
    if (text.empty() || r.set_str(std::string(text), 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("malformed rational: " + std::string(text));
    r.canonicalize();
    return r;
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.size() > kMaxVars)
        throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: " + n);
    }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names)
{
    return std::make_shared<const Ring>(std::move(names));
}

// ---------------------------------------------------------------------------
// Monomial

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (auto e : exp)
        d += e;
    return d;
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exp[i] > other.exp[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        r.exp[i] = static_cast<std::uint16_t>(exp[i] + other.exp[i]);
    return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        r.exp[i] = static_cast<std::uint16_t>(other.exp[i] - exp[i]);
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        r.exp[i] = std::max(exp[i], other.exp[i]);
    return r;
}

bool grevlex_greater(const Monomial& a, const Monomial& b)
{
    unsigned da = a.degree(), db = b.degree();
    if (da != db)
        return da > db;
    for (std::size_t i = kMaxVars; i-- > 0;) {
        if (a.exp[i] != b.exp[i])
            return a.exp[i] < b.exp[i];
    }
    return false;
}

namespace {

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

} // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(RingPtr ring, const Rational& c)
{
    return monomial(std::move(ring), Monomial{}, c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i)
{
    if (i >= ring->nvars())
        throw std::out_of_range("variable index out of range");
    Monomial m;
    m.exp[i] = 1;
    return monomial(std::move(ring), m, Rational(1));
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c)
{
    Polynomial p(std::move(ring));
    if (c != 0)
        p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms)
{
    std::map<Monomial, Rational, GrevlexGreater> acc;
    for (auto& t : terms)
        acc[t.mono] += t.coeff;
    Polynomial p(std::move(ring));
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            p.terms_.push_back({m, c});
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::constant_term() const
{
    if (!terms_.empty() && terms_.back().mono.is_one())
        return terms_.back().coeff;
    return Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return grevlex_greater(t.mono, x); });
    if (it != terms_.end() && it->mono == m)
        return it->coeff;
    return Rational(0);
}

int Polynomial::degree() const
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

Polynomial Polynomial::homogeneous_part(unsigned deg) const
{
    Polynomial r(ring_);
    for (const auto& t : terms_)
        if (t.mono.degree() == deg)
            r.terms_.push_back(t);
    return r;
}

Polynomial Polynomial::truncate(unsigned deg) const
{
    Polynomial r(ring_);
    for (const auto& t : terms_)
        if (t.mono.degree() <= deg)
            r.terms_.push_back(t);
    return r;
}

void Polynomial::check_ring(const Polynomial& other) const
{
    if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
        throw RingMismatch();
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& t : r.terms_)
        t.coeff = -t.coeff;
    return r;
}

void Polynomial::add_scaled(const Polynomial& other, const Monomial& m, const Rational& c)
{
    check_ring(other);
    if (c == 0 || other.terms_.empty())
        return;
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end()) {
            out.push_back(std::move(*a++));
            continue;
        }
        Monomial bm = b->mono * m;
        if (a == terms_.end() || grevlex_greater(bm, a->mono)) {
            out.push_back({bm, b->coeff * c});
            ++b;
        } else if (a->mono == bm) {
            Rational s = a->coeff + b->coeff * c;
            if (s != 0)
                out.push_back({bm, std::move(s)});
            ++a;
            ++b;
        } else {
            out.push_back(std::move(*a++));
        }
    }
    terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    add_scaled(other, Monomial{}, Rational(1));
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    add_scaled(other, Monomial{}, Rational(-1));
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= c;
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_ring(b);
    if (a.terms_.size() == 1)
        return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.terms_.size() == 1)
        return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
    std::map<Monomial, Rational, GrevlexGreater> acc;
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            acc[s.mono * t.mono] += s.coeff * t.coeff;
    Polynomial r(a.ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            r.terms_.push_back({m, c});
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const
{
    Polynomial r(ring_);
    if (c == 0)
        return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result = constant(ring_, Rational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1U)
            result = result * base;
        e >>= 1U;
        if (e)
            base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& other) const
{
    if (!(*ring_ == *other.ring_) || terms_.size() != other.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        bool need_star = false;
        if (c != 1 || t.mono.is_one()) {
            os << c.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (t.mono.exp[i] == 0)
                continue;
            if (need_star)
                os << "*";
            os << ring_->name(i);
            if (t.mono.exp[i] > 1)
                os << "^" << t.mono.exp[i];
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Polynomial partial_derivative(const Polynomial& p, std::size_t i)
{
    if (i >= p.nvars())
        throw std::out_of_range("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        if (t.mono.exp[i] == 0)
            continue;
        Term d{t.mono, t.coeff * t.mono.exp[i]};
        --d.mono.exp[i];
        out.push_back(std::move(d));
    }
    return Polynomial::from_terms(p.ring(), std::move(out));
}

std::optional<unsigned> order_at_origin(const Polynomial& p)
{
    if (p.is_zero())
        return std::nullopt;
    unsigned best = p.terms().front().mono.degree();
    for (const auto& t : p.terms())
        best = std::min(best, t.mono.degree());
    return best;
}

Rational weighted_degree(const Monomial& m, std::span<const Rational> weights)
{
    Rational d(0);
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (m.exp[i])
            d += weights[i] * m.exp[i];
    return d;
}

} // namespace loglie
