#pragma once

#include "loglie/polynomial.hpp"

#include <optional>
#include <vector>

namespace loglie {

/// Element of the free module O^r.
using ModuleElement = std::vector<Polynomial>;

/// Degree of a variety; nullopt encodes -infinity (the empty variety).
using Dimension = std::optional<int>;

/// Graded reverse lexicographic order on the ring, optionally refined by a
/// nonnegative weight vector compared first, and extended to O^r either
/// term-over-position or position-over-term.
struct MonomialOrder {
    enum class Extension { TermOverPosition, PositionOverTerm };
    Extension extension = Extension::TermOverPosition;
    std::vector<Rational> weights;

    /// Whether (a, i) is greater than (b, j), where i and j are component indices.
    bool greater(const Monomial& a, std::size_t i, const Monomial& b, std::size_t j) const;
};

struct GroebnerBasis {
    RingPtr ring;
    std::size_t rank = 0;
    std::size_t ngens = 0;
    MonomialOrder order;
    std::vector<ModuleElement> elements;
    /// cofactors[k][i]: elements[k] = sum_i cofactors[k][i] * gens[i]
    std::vector<std::vector<Polynomial>> cofactors;
    std::vector<ModuleElement> gens;
};

struct NormalForm {
    ModuleElement remainder;
    /// Quotients against the basis elements.
    std::vector<Polynomial> quotients;
};

/// Buchberger's algorithm with the normal selection strategy (ties broken by
/// sugar, then by creation order). The result is a reduced basis.
GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, const MonomialOrder& order = {});

/// Full reduction: e = sum quotients[k] * gb.elements[k] + remainder.
NormalForm normal_form(const ModuleElement& e, const GroebnerBasis& gb);

/// Rewrites quotients against the basis as cofactors of the input generators.
std::vector<Polynomial> to_generator_cofactors(const std::vector<Polynomial>& quotients, const GroebnerBasis& gb);

/// Generators of {c : sum c_i gens_i = 0} built from S-vector reductions
/// (Schreyer) together with the relations expressing each input in the basis.
std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens);

/// Cofactors c with e = sum c_i gens_i, or nullopt when e is not in the submodule.
std::optional<std::vector<Polynomial>> module_membership(const ModuleElement& e,
                                                         const std::vector<ModuleElement>& gens);
std::optional<std::vector<Polynomial>> module_membership(const ModuleElement& e, const GroebnerBasis& gb);

/// A positive grading making every generator homogeneous: variable weights,
/// per-component shifts, and the resulting degree of each generator.
struct ModuleGrading {
    std::vector<Rational> weights;
    std::vector<Rational> shifts;
    std::vector<Rational> degrees;
};

std::optional<ModuleGrading> detect_grading(const std::vector<ModuleElement>& gens);

class NotGraded : public std::runtime_error {
public:
    NotGraded() : std::runtime_error("not graded: no positive grading makes all generators homogeneous") {}
};

struct MinimalGenerators {
    std::vector<std::size_t> kept; ///< indices into the input, in processing order
    std::vector<ModuleElement> generators;
    struct Discarded {
        std::size_t index;
        std::vector<Polynomial> cofactors; ///< against `generators` (prefix kept at that time)
    };
    std::vector<Discarded> discarded;
    ModuleGrading grading;
};

/// Minimal generating subset for a positively graded module. Throws NotGraded.
MinimalGenerators minimal_generators(const std::vector<ModuleElement>& gens);

/// Krull dimension of V(I) from the leading-term ideal.
Dimension ideal_dimension(const std::vector<Polynomial>& gens);
/// Same, from an existing ideal basis.
Dimension ideal_dimension(const GroebnerBasis& gb);

/// Helpers on module elements.
ModuleElement zero_element(const RingPtr& ring, std::size_t rank);
bool is_zero(const ModuleElement& e);
ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);
ModuleElement operator*(const Polynomial& p, const ModuleElement& e);
/// sum_i c_i e_i
ModuleElement combine(const std::vector<Polynomial>& coeffs, const std::vector<ModuleElement>& elems);
std::string to_string(const ModuleElement& e);

} // namespace loglie
