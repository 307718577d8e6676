#pragma once

#include "loglie/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace loglie {

using Vec = std::vector<Rational>;

/// Dense matrix over Q, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Matrix diagonal(std::span<const Rational> d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    /// Entries in row-major order.
    Vec flatten() const { return data_; }

    Matrix transpose() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Rational& c) const;
    Vec operator*(const Vec& v) const;

    bool is_zero() const;
    Rational trace() const;

    bool operator==(const Matrix& o) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

struct Echelon {
    Matrix reduced;                  ///< reduced row echelon form
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);
/// Some x with m x = b, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(const Matrix& m);

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);
Rational dot(const Vec& a, const Vec& b);
Vec unit_vector(std::size_t n, std::size_t i);

/// Echelon basis of the span of the given vectors (all of length dim).
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim);
/// Indices of a maximal linearly independent prefix-greedy subset.
std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors, std::size_t dim);
/// Coefficients c with v = sum c_i basis_i, or nullopt if v is outside the span.
std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v);
bool in_span(const std::vector<Vec>& basis, const Vec& v);
/// Basis of the intersection of two subspaces of Q^dim.
std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim);
/// Vectors extending `sub` (assumed independent) to a basis of the span of `sub` and `all`:
/// returns only the added vectors, chosen from `all` greedily.
std::vector<Vec> complement_in(const std::vector<Vec>& sub, const std::vector<Vec>& all, std::size_t dim);

/// Dense univariate polynomial over Q, coefficients from degree 0 upward.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Vec coeffs);
    static UPoly monomial(std::size_t deg, const Rational& c = Rational(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Vec& coeffs() const { return c_; }
    const Rational& lead() const { return c_.back(); }
    Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rational& c) const;
    bool operator==(const UPoly& o) const = default;

    /// Quotient and remainder; divisor nonzero.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    UPoly derivative() const;
    UPoly monic() const;
    Rational eval(const Rational& x) const;
    Matrix eval(const Matrix& m) const;

private:
    void trim();
    Vec c_;
};

UPoly gcd(UPoly a, UPoly b);
/// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);
/// Characteristic polynomial det(t I - m).
UPoly characteristic_polynomial(const Matrix& m);
/// Distinct rational roots with their multiplicities.
std::vector<std::pair<Rational, unsigned>> rational_roots(const UPoly& p);

} // namespace loglie
