#include "loglie/lp.hpp"

#include <stdexcept>

namespace loglie::lp {

namespace {

struct Tableau {
    std::vector<std::vector<Rational>> rows; // each row: ncols entries then rhs
    std::vector<Rational> cost;              // reduced costs, last entry = -objective
    std::vector<std::size_t> basis;
    std::size_t ncols = 0;

    void pivot(std::size_t r, std::size_t c)
    {
        Rational inv = Rational(1) / rows[r][c];
        for (auto& v : rows[r])
            v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j <= ncols; ++j)
                if (rows[r][j] != 0)
                    rows[i][j] -= f * rows[r][j];
        }
        if (cost[c] != 0) {
            Rational f = cost[c];
            for (std::size_t j = 0; j <= ncols; ++j)
                if (rows[r][j] != 0)
                    cost[j] -= f * rows[r][j];
        }
        basis[r] = c;
    }

    void set_cost(const std::vector<Rational>& c)
    {
        cost.assign(ncols + 1, Rational(0));
        for (std::size_t j = 0; j < ncols; ++j)
            cost[j] = c[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& cb = c[basis[i]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j <= ncols; ++j)
                cost[j] -= cb * rows[i][j];
        }
    }

    /// Returns false when unbounded. Columns >= limit never enter.
    bool run(std::size_t limit)
    {
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j)
                if (cost[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == limit)
                return true;
            std::size_t leave = rows.size();
            Rational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0)
                    continue;
                Rational ratio = rows[i][ncols] / rows[i][enter];
                if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows.size())
                return false;
            pivot(leave, enter);
        }
    }
};

} // namespace

Solution solve(const Problem& problem)
{
    const std::size_t n = problem.nvars;
    std::vector<bool> is_free = problem.free_var;
    is_free.resize(n, false);

    // column layout: structural (free vars split in two), slacks, artificials
    std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
        pos_col[j] = col++;
        if (is_free[j])
            neg_col[j] = col++;
    }
    const std::size_t nstruct = col;
    std::size_t nslack = 0;
    for (const auto& c : problem.constraints)
        if (c.rel != Relation::Equal)
            ++nslack;
    const std::size_t m = problem.constraints.size();
    const std::size_t nart_start = nstruct + nslack;

    Tableau t;
    t.ncols = nart_start + m;
    t.rows.assign(m, std::vector<Rational>(t.ncols + 1));
    t.basis.resize(m);
    std::size_t slack = nstruct;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = problem.constraints[i];
        if (c.coeffs.size() != n)
            throw std::invalid_argument("lp: constraint width mismatch");
        auto& row = t.rows[i];
        for (std::size_t j = 0; j < n; ++j) {
            row[pos_col[j]] = c.coeffs[j];
            if (is_free[j])
                row[neg_col[j]] = -c.coeffs[j];
        }
        if (c.rel == Relation::LessEq)
            row[slack++] = 1;
        else if (c.rel == Relation::GreaterEq)
            row[slack++] = -1;
        row[t.ncols] = c.rhs;
        if (c.rhs < 0)
            for (auto& v : row)
                v = -v;
        row[nart_start + i] = 1;
        t.basis[i] = nart_start + i;
    }

    std::vector<Rational> phase1(t.ncols, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        phase1[nart_start + i] = 1;
    t.set_cost(phase1);
    t.run(t.ncols);
    Solution sol;
    if (-t.cost[t.ncols] != 0) {
        sol.status = Status::Infeasible;
        return sol;
    }

    // drive remaining artificials out of the basis, dropping redundant rows
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < nart_start) {
            ++i;
            continue;
        }
        std::size_t c = nart_start;
        for (std::size_t j = 0; j < nart_start; ++j)
            if (t.rows[i][j] != 0) {
                c = j;
                break;
            }
        if (c == nart_start) {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            continue;
        }
        t.pivot(i, c);
        ++i;
    }

    std::vector<Rational> phase2(t.ncols, Rational(0));
    if (!problem.objective.empty()) {
        for (std::size_t j = 0; j < n; ++j) {
            phase2[pos_col[j]] = problem.objective[j];
            if (is_free[j])
                phase2[neg_col[j]] = -problem.objective[j];
        }
    }
    t.set_cost(phase2);
    if (!t.run(nart_start)) {
        sol.status = Status::Unbounded;
        return sol;
    }

    std::vector<Rational> values(t.ncols, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        values[t.basis[i]] = t.rows[i][t.ncols];
    sol.status = Status::Optimal;
    sol.x.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        sol.x[j] = values[pos_col[j]];
        if (is_free[j])
            sol.x[j] -= values[neg_col[j]];
    }
    sol.value = 0;
    if (!problem.objective.empty())
        for (std::size_t j = 0; j < n; ++j)
            sol.value += problem.objective[j] * sol.x[j];
    return sol;
}

} // namespace loglie::lp
