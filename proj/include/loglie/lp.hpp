#pragma once

#include "loglie/rational.hpp"

#include <vector>

namespace loglie::lp {

enum class Relation { LessEq, GreaterEq, Equal };

struct Constraint {
    std::vector<Rational> coeffs;
    Relation rel;
    Rational rhs;
};

/// minimize objective . x subject to the constraints; variables flagged free
/// are unrestricted in sign, all others are nonnegative.
struct Problem {
    std::size_t nvars = 0;
    std::vector<Rational> objective; ///< empty means pure feasibility
    std::vector<Constraint> constraints;
    std::vector<bool> free_var; ///< empty means all nonnegative

    explicit Problem(std::size_t n) : nvars(n) {}
    void add(std::vector<Rational> coeffs, Relation rel, Rational rhs)
    {
        constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
    }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    std::vector<Rational> x;
    Rational value;
};

/// Dense two-phase simplex over Q with Bland's rule; exact and deterministic.
Solution solve(const Problem& problem);

} // namespace loglie::lp
