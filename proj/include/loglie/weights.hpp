#pragma once

#include "loglie/logder.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loglie {

using Weight = std::vector<Rational>;

class IrrationalWeight : public std::runtime_error {
public:
    IrrationalWeight() : std::runtime_error("irrational weight") {}
};
class NotSemisimple : public std::runtime_error {
public:
    NotSemisimple() : std::runtime_error("not semisimple") {}
};
class NotCommuting : public std::runtime_error {
public:
    NotCommuting() : std::runtime_error("not commuting") {}
};
class NonSplitCartan : public std::runtime_error {
public:
    NonSplitCartan() : std::runtime_error("non-split Cartan") {}
};

/// Weights of a commuting family of semisimple operators, with multiplicities.
struct WeightDiagram {
    std::size_t rank = 0;
    std::map<Weight, std::size_t> entries;

    std::size_t total() const;
    std::vector<Weight> weights() const;
    std::size_t multiplicity(const Weight& w) const;
};

/// Joint eigenvectors (coordinate vectors in V) and their weights.
struct JointEigenbasis {
    WeightDiagram diagram;
    std::vector<Vec> vectors;
    std::vector<Weight> weights;
};

JointEigenbasis joint_eigenbasis(const std::vector<Matrix>& cartan, std::size_t n);
WeightDiagram weight_diagram(const std::vector<Matrix>& cartan, std::size_t n);

/// Coroots h_alpha of the simple roots, alpha(h_alpha) = 2, as operators on V.
/// `s` is semisimple with representation `rho`; `h` is a split Cartan subalgebra of s.
std::vector<Matrix> normalize_cartan(const LieAlgebra& s, const Representation& rho, const Subalgebra& h);

struct SubsetCertificate {
    enum class Verdict { InC, Excluded, EmptyUpToBound };
    enum class Witness {
        Empty,      ///< C is empty
        Separating, ///< functional >= 1 on C; sums of l terms with l <= range checked directly
        Lattice,    ///< 0 in conv(C): no point of W lies in the generated monoid
        Hit,        ///< counts with sum n_c c = target in W and sum n_c >= k - 1
        Bounded     ///< nothing found for l <= bound, search budget exceeded
    };
    std::vector<Weight> subset;
    Verdict verdict = Verdict::InC;
    Witness witness = Witness::Empty;
    Vec functional;
    Integer range = 0;
    /// Lattice case: nonnegative integer relation sum m_c c = 0 and its support.
    std::vector<Integer> relation;
    Weight target;
    std::vector<Integer> counts;
    std::size_t bound = 0;
};

struct SearchLimits {
    std::size_t budget = 200000; ///< points visited per decision
    std::size_t bound = 50;      ///< l range for the fallback expansion
};

/// Decides (C + ... + C) with l terms misses W for all l >= k - 1.
SubsetCertificate sumset_avoidance(const std::vector<Weight>& c, const WeightDiagram& w, int k,
                                   const SearchLimits& limits = {});

/// Rechecks a certificate without the decision procedure.
bool verify_certificate(const SubsetCertificate& cert, const WeightDiagram& w, int k);

struct MResult {
    std::optional<std::size_t> value; ///< nullopt encodes -infinity
    std::vector<Weight> maximizer;
    bool lower_bound_only = false; ///< some subset was only cleared up to a bound
};

MResult compute_M(const WeightDiagram& w, int k, const SearchLimits& limits = {});

/// Facet subset C = W on {l = 1}, l <= 1 on W, checked to lie in C_k with d(C) >= rank.
bool rank_lower_bound_check(std::size_t rank, const WeightDiagram& w, int k);

/// Common weight of all monomials of f in the eigen coordinates, or nullopt.
std::optional<Weight> weight_of_f(const Polynomial& f, const JointEigenbasis& basis);

struct BoundReport {
    std::optional<unsigned> ord;
    std::optional<std::size_t> m; ///< nullopt is -infinity
    Dimension sing_dim;
    std::string holds; ///< "holds", "fails" or "vacuous"
    std::vector<Weight> maximizer;
    WeightDiagram diagram;
    std::size_t levi_dim = 0;
    std::size_t levi_rank = 0;
    std::optional<Weight> f_weight;
    std::vector<std::string> flags;
};

/// Levi factor of the initial algebra acting on m/m^2 through the linear parts.
struct LeviAction {
    Subalgebra levi;
    LieAlgebra algebra;
    Representation rep;
    std::vector<Matrix> cartan; ///< normalized, empty for a zero Levi factor
};
LeviAction levi_action(const InitialLieData& data);

BoundReport theorem13_check(const Polynomial& f, const SearchLimits& limits = {});
BoundReport theorem13_check(const Polynomial& f, const LogDerivationModule& m, const InitialLieData& data,
                            const SearchLimits& limits = {});

std::string weight_to_string(const Weight& w);

} // namespace loglie
