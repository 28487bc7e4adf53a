#pragma once

#include "nichols/ncpoly.hpp"

#include <map>

namespace nichols {

/// Diagonal braiding c(x_i (x) x_j) = q_ij x_j (x) x_i, all entries roots
/// of unity. The derived bicharacter chi(a, b) = prod q_ij^{a_i b_j} on
/// Z^theta drives every twist in the system.
struct BraidingMatrix {
    std::size_t theta = 0;
    std::vector<std::vector<CycNum>> q;

    void validate() const
    {
        if (q.size() != theta)
            throw AlgebraError("braiding matrix shape mismatch");
        for (const auto& row : q) {
            if (row.size() != theta)
                throw AlgebraError("braiding matrix shape mismatch");
            for (const auto& e : row)
                if (!e.order())
                    throw AlgebraError("braiding entry is not a root of unity");
        }
    }

    CycNum bichar(const MultiDegree& a, const MultiDegree& b) const
    {
        auto key = std::make_pair(a, b);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        CycNum r(1L);
        for (std::size_t i = 0; i < theta; ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < theta; ++j) {
                if (b[j] == 0)
                    continue;
                r = r * q[i][j].pow(static_cast<long>(a[i]) * b[j]);
            }
        }
        cache_.emplace(std::move(key), r);
        return r;
    }

private:
    mutable std::map<std::pair<MultiDegree, MultiDegree>, CycNum> cache_;
};

/// How shorthand root vectors expand. The paper never pins the convention;
/// LeftNested is x_{i w} = [x_i, x_w]_c and matches its coefficient tables.
enum class RootConvention { LeftNested, RightIterated };

struct BraidCtx {
    FreeCtx fc;
    BraidingMatrix braiding;
    RootConvention conv = RootConvention::LeftNested;
};

} // namespace nichols
