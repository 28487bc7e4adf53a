#pragma once

#include "nichols/cyclotomic.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace nichols {

/// Sparse row of a linear system over Q(zeta): column index -> coefficient.
using LinRow = std::map<std::size_t, CycNum>;

/// Solves rows[i] . x = rhs[i] for x over the cyclotomic field by exact
/// Gauss-Jordan elimination. Pivots are chosen deterministically in
/// increasing column order; free variables are set to zero. Returns nullopt
/// when the system is inconsistent.
inline std::optional<std::vector<CycNum>> solve_linear(std::vector<LinRow> rows,
                                                       std::vector<CycNum> rhs,
                                                       std::size_t ncols)
{
    if (rows.size() != rhs.size())
        throw AlgebraError("linear system shape mismatch");

    auto drop_zeros = [](LinRow& r) {
        for (auto it = r.begin(); it != r.end();)
            it = it->second.is_zero() ? r.erase(it) : std::next(it);
    };
    for (auto& r : rows)
        drop_zeros(r);

    std::vector<std::size_t> pivot_row_of_col(ncols, static_cast<std::size_t>(-1));
    std::vector<bool> used(rows.size(), false);

    for (std::size_t col = 0; col < ncols; ++col) {
        // deterministic: first unused row whose leading column is `col`
        std::size_t chosen = static_cast<std::size_t>(-1);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i])
                continue;
            if (!rows[i].empty() && rows[i].begin()->first == col) {
                chosen = i;
                break;
            }
        }
        if (chosen == static_cast<std::size_t>(-1))
            continue;
        CycNum inv = rows[chosen].begin()->second.inverse();
        for (auto& [c, v] : rows[chosen])
            v = v * inv;
        rhs[chosen] = rhs[chosen] * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == chosen)
                continue;
            auto it = rows[i].find(col);
            if (it == rows[i].end())
                continue;
            CycNum f = it->second;
            for (const auto& [c, v] : rows[chosen]) {
                auto jt = rows[i].find(c);
                if (jt == rows[i].end())
                    rows[i].emplace(c, -(f * v));
                else
                    jt->second = jt->second - f * v;
            }
            rhs[i] = rhs[i] - f * rhs[chosen];
            drop_zeros(rows[i]);
        }
        pivot_row_of_col[col] = chosen;
        used[chosen] = true;
    }

    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].empty() && !rhs[i].is_zero())
            return std::nullopt;

    std::vector<CycNum> x(ncols, CycNum(0L));
    for (std::size_t col = 0; col < ncols; ++col) {
        std::size_t pr = pivot_row_of_col[col];
        if (pr != static_cast<std::size_t>(-1))
            x[col] = rhs[pr];
    }
    return x;
}

} // namespace nichols
