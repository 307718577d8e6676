#pragma once

#include "loglie/groebner.hpp"
#include "loglie/liealg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loglie {

/// The field sum_i a_i d_i.
struct VectorField {
    std::vector<Polynomial> coeffs;

    std::size_t size() const { return coeffs.size(); }
    bool is_zero() const;
    Polynomial apply(const Polynomial& p) const;
    /// Coefficients v(w_j) - w(v_j).
    VectorField bracket(const VectorField& w) const;
    /// Action on linear forms: entry (i, j) is the coefficient of x_i in a_j.
    Matrix linear_part() const;
    /// Coefficient degrees 1..k+1 only.
    VectorField truncate(unsigned k) const;
    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    bool operator==(const VectorField& o) const { return coeffs == o.coeffs; }
    std::string to_string() const;
};

VectorField operator*(const Polynomial& p, const VectorField& v);
VectorField euler_field(const RingPtr& ring, const std::vector<Rational>& weights);

class NotReduced : public std::runtime_error {
public:
    NotReduced() : std::runtime_error("not reduced: f has a repeated factor") {}
};

class NotIsolated : public std::runtime_error {
public:
    NotIsolated() : std::runtime_error("not isolated: the singular locus has positive dimension") {}
};

class ProductTestFailed : public std::runtime_error {
public:
    ProductTestFailed()
        : std::runtime_error("product test failed: a logarithmic field has a constant coefficient, D has a smooth factor")
    {
    }
};

class BracketNotInModule : public std::logic_error {
public:
    BracketNotInModule() : std::logic_error("bracket not in module") {}
};

struct LogDerivationModule {
    Polynomial f;
    std::vector<VectorField> generators;
    /// generators[i](f) = cofactors[i] * f
    std::vector<Polynomial> cofactors;
    /// Whether a positive grading was found; otherwise the generators are
    /// only greedily pruned and need not be minimal.
    bool graded = false;
    std::optional<QuasihomogeneousWeights> weights;
    std::vector<Rational> degrees; ///< generator degrees under the detected grading
};

/// Syzygies of (d_1 f, ..., d_n f, f), projected and minimalized.
LogDerivationModule logarithmic_derivations(const Polynomial& f);

bool product_test(const LogDerivationModule& m);

struct InitialLieData {
    LieAlgebra lie;
    std::vector<Matrix> lambda0;
    std::size_t kernel_dim = 0;
    LinearLieAlgebra l0;
};

/// Structure constants of l_D / m l_D on the minimal generators. Throws
/// ProductTestFailed, or NotGraded for an ungraded module.
InitialLieData initial_lie_algebra(const LogDerivationModule& m);

struct FreeCertificate {
    Polynomial det;
    Polynomial unit; ///< det = unit * f
};

/// Determinant of a square polynomial matrix (fraction-free elimination).
Polynomial determinant(std::vector<std::vector<Polynomial>> rows);

std::optional<FreeCertificate> saito_freeness(const LogDerivationModule& m);

struct SaitoCheck {
    bool ok = false;
    std::string reason;
    std::optional<std::size_t> offending; ///< first non-logarithmic field
    std::optional<Polynomial> det;
    std::optional<Polynomial> unit;
};

/// Saito's criterion for a user supplied candidate basis.
SaitoCheck saito_check(const Polynomial& f, const std::vector<VectorField>& fields);

struct EulerSplit {
    VectorField euler;                     ///< euler(f) = f
    std::vector<VectorField> annihilators; ///< each kills f
};

std::optional<EulerSplit> euler_split(const LogDerivationModule& m);

/// d_i(f) d_j - d_j(f) d_i for i < j. Throws NotIsolated.
std::vector<VectorField> koszul_fields(const Polynomial& f);

inline constexpr unsigned kJetCap = 6;

/// l_{D,k}: truncations of x^alpha g_i, |alpha| <= k, to coefficient degrees 1..k+1.
LieAlgebra jet_truncation(const LogDerivationModule& m, unsigned k, unsigned cap = kJetCap);

/// The ideal (f, d_1 f, ..., d_n f).
std::vector<Polynomial> jacobian_ideal(const Polynomial& f);

ModuleElement to_element(const VectorField& v);
VectorField to_field(const ModuleElement& e);

} // namespace loglie
