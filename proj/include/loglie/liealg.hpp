#pragma once

#include "loglie/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loglie {

class InvalidLieAlgebra : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c(i, j)[k] e_k.
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// `constants[i][j]` is the coordinate vector of [e_i, e_j]. Antisymmetry and
    /// the Jacobi identity are checked; throws InvalidLieAlgebra on violation.
    LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> constants);

    static LieAlgebra abelian(std::size_t dim);
    /// Builds from a sparse table of brackets [e_i, e_j] for i < j; others zero.
    struct Entry {
        std::size_t i, j;
        Vec value;
    };
    static LieAlgebra from_table(std::vector<std::string> labels, const std::vector<Entry>& table);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& bracket_basis(std::size_t i, std::size_t j) const { return c_[i][j]; }
    Vec bracket(const Vec& x, const Vec& y) const;
    /// Matrix of ad x: column j holds [x, e_j].
    Matrix ad(const Vec& x) const;
    bool is_abelian() const;

    /// Skips validation; used by `validate` tests to build broken tables.
    static LieAlgebra unchecked(std::vector<std::string> labels, std::vector<std::vector<Vec>> constants);

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Vec>> c_;
};

struct Violation {
    std::string kind; ///< "antisymmetry" or "jacobi"
    std::size_t i, j, k;
    std::string message() const;
};

/// Exact check of antisymmetry and every Jacobi triple; reports the first failure.
std::optional<Violation> validate(const LieAlgebra& g);

/// A subspace given by a basis of coordinate vectors in its parent algebra.
struct Subalgebra {
    std::vector<Vec> basis;
    std::size_t dim() const { return basis.size(); }
    bool contains(const Vec& v) const;
};

/// Matrices rho(e_i) of a linear action, one per basis element.
struct Representation {
    std::vector<Matrix> matrices;
    std::size_t degree() const { return matrices.empty() ? 0 : matrices.front().rows(); }
    Matrix operator()(const Vec& x) const;
};

/// The whole algebra as a subalgebra of itself.
Subalgebra whole(const LieAlgebra& g);
/// Span of all brackets [a, b] with a in A, b in B.
Subalgebra bracket_span(const LieAlgebra& g, const Subalgebra& a, const Subalgebra& b);
bool is_closed(const LieAlgebra& g, const Subalgebra& s);
bool is_ideal(const LieAlgebra& g, const Subalgebra& s);
/// Structure constants of s on its own basis. Throws if s is not closed.
LieAlgebra restrict_to(const LieAlgebra& g, const Subalgebra& s);
/// Lifts coordinates with respect to s.basis back to the parent.
Vec lift(const Subalgebra& s, const Vec& coords);

/// Linear Lie algebra spanned by the given matrices; the basis is an
/// independent subset, and the returned representation is the inclusion.
struct LinearLieAlgebra {
    LieAlgebra algebra;
    Representation rep;
    std::vector<std::size_t> chosen; ///< indices of input matrices used as basis
};
LinearLieAlgebra linear_lie_algebra(const std::vector<Matrix>& matrices, std::size_t degree);

std::vector<Subalgebra> derived_series(const LieAlgebra& g);
std::vector<Subalgebra> lower_central_series(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

Matrix killing_form(const LieAlgebra& g);
/// Counts of positive, negative and zero squares of a symmetric form over Q.
struct Inertia {
    std::size_t positive = 0, negative = 0, zero = 0;
};
Inertia inertia(const Matrix& symmetric);

/// Orthogonal of [g, g] under the Killing form.
Subalgebra radical(const LieAlgebra& g);

/// Semisimple complement of the radical, built by correcting a lift of
/// g/rad(g) through the derived series of the radical.
Subalgebra levi_subalgebra(const LieAlgebra& g);

class NoRegularElement : public std::runtime_error {
public:
    NoRegularElement() : std::runtime_error("no rational regular element within bound") {}
};

struct CartanResult {
    Subalgebra cartan;
    Vec regular_element;
    bool split = false; ///< ad of the regular element has only rational eigenvalues
};

/// Engel subalgebra of the first regular element found by a fixed-order
/// search over small integer coordinate vectors.
CartanResult cartan_subalgebra(const LieAlgebra& g, int max_bound = 3);

struct JordanPair {
    Matrix semisimple;
    Matrix nilpotent;
};

/// Rational Jordan-Chevalley decomposition by Newton iteration on the
/// squarefree part of the characteristic polynomial.
JordanPair jordan_chevalley(const Matrix& m);
bool is_nilpotent_matrix(const Matrix& m);
bool is_semisimple_matrix(const Matrix& m);

class SemisimplePartEscapes : public std::runtime_error {
public:
    SemisimplePartEscapes() : std::runtime_error("semisimple part escapes r0") {}
};

struct RadicalSplit {
    Subalgebra radical;
    Subalgebra torus;     ///< d0: commuting semisimple elements
    Subalgebra nilpotent; ///< n0: elements acting nilpotently
};

/// r0 = d0 + n0 for a faithful linear Lie algebra.
RadicalSplit radical_split(const LieAlgebra& l0, const Representation& rho);

struct ReductivityRecord {
    bool reductive = false;
    std::size_t kernel_dim = 0;
    std::size_t radical_dim = 0;
    std::size_t torus_dim = 0;
    std::size_t nilpotent_dim = 0;
    std::string linear_verdict; ///< "linear", "formally linear" or "undetermined"
};

/// Reductive iff the linear part map is injective and n0 vanishes.
ReductivityRecord is_reductive_singularity(std::size_t kernel_dim, const LieAlgebra& l0, const Representation& rho,
                                           bool free, bool quasihomogeneous);

struct RankData {
    std::size_t rank = 0;
    std::size_t n_d = 0;
    std::size_t s_d = 0;
};

RankData rank_and_multihomogeneity(const LieAlgebra& l0, const Representation& rho);

} // namespace loglie
