#include "loglie/lp.hpp"
#include "loglie/polynomial.hpp"

#include <algorithm>

namespace loglie {

std::optional<QuasihomogeneousWeights> quasihomogeneous_weights(const Polynomial& p)
{
    if (p.is_zero())
        throw std::invalid_argument("quasihomogeneous_weights requires a nonzero polynomial");
    const std::size_t n = p.nvars();
    // positivity is encoded as w_i >= 1 (any positive solution can be rescaled)
    lp::Problem prob(n);
    prob.objective.assign(n, Rational(1));
    const Monomial& base = p.terms().front().mono;
    for (std::size_t t = 1; t < p.terms().size(); ++t) {
        const Monomial& m = p.terms()[t].mono;
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i)
            row[i] = static_cast<long>(m.exp[i]) - static_cast<long>(base.exp[i]);
        prob.add(std::move(row), lp::Relation::Equal, Rational(0));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(n);
        row[i] = 1;
        prob.add(std::move(row), lp::Relation::GreaterEq, Rational(1));
    }
    lp::Solution sol = lp::solve(prob);
    if (sol.status != lp::Status::Optimal)
        return std::nullopt;
    Rational lowest = *std::min_element(sol.x.begin(), sol.x.end());
    QuasihomogeneousWeights out;
    for (auto& w : sol.x)
        out.weights.push_back(w / lowest);
    out.degree = weighted_degree(base, out.weights);
    return out;
}

} // namespace loglie
