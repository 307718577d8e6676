#pragma once

#include "loglie/rational.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace loglie {

inline constexpr std::size_t kMaxVars = 8;

/// Ordered variable names x_1..x_n of a polynomial ring over Q.
class Ring {
public:
    explicit Ring(std::vector<std::string> names);

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const Ring& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

class RingMismatch : public std::logic_error {
public:
    RingMismatch() : std::logic_error("ring context mismatch") {}
};

/// Exponent vector. Unused trailing slots are zero, so comparisons do not
/// need to know the ring size.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> exp{};

    unsigned degree() const;
    bool is_one() const { return degree() == 0; }
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    /// Requires divides(other) to hold for `*this` as divisor of `other`.
    Monomial quotient_of(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;
};

/// Graded reverse lexicographic comparison: true iff a > b.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse polynomial over Q in canonical form: terms strictly decreasing in
/// grevlex order, no zero coefficients.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::size_t i);
    static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c);
    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    std::size_t nvars() const { return ring_->nvars(); }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }

    /// Leading term in grevlex order. Requires !is_zero().
    const Term& leading() const { return terms_.front(); }

    /// Value at the origin (the constant coefficient).
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Homogeneous component of the given total degree.
    Polynomial homogeneous_part(unsigned deg) const;
    /// Terms of total degree <= deg.
    Polynomial truncate(unsigned deg) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    /// this * c * m, without going through a general product.
    Polynomial mul_term(const Monomial& m, const Rational& c) const;
    /// this + c * m * other
    void add_scaled(const Polynomial& other, const Monomial& m, const Rational& c);

    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& other) const;

    std::string to_string() const;

private:
    void check_ring(const Polynomial& other) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := base ('^' uint)?; base := rational | var | '(' expr ')'.
/// A leading sign is accepted before any term.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

Polynomial partial_derivative(const Polynomial& p, std::size_t i);

/// Minimal total degree of a term; nullopt stands for +infinity (p = 0).
std::optional<unsigned> order_at_origin(const Polynomial& p);

/// Quotient if b divides a exactly, nullopt otherwise. b must be nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Multivariate gcd, normalized to leading coefficient one (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Squarefree test through gcd(p, d_1 p, ..., d_n p).
bool is_reduced(const Polynomial& p);

/// Strictly positive weights w with <w, alpha> = degree on every exponent.
struct QuasihomogeneousWeights {
    std::vector<Rational> weights; ///< normalized so that min weight = 1
    Rational degree;
};

/// Decided exactly with a rational LP; nullopt if no positive grading exists.
std::optional<QuasihomogeneousWeights> quasihomogeneous_weights(const Polynomial& p);

/// Weighted degree <w, alpha>.
Rational weighted_degree(const Monomial& m, std::span<const Rational> weights);

} // namespace loglie
