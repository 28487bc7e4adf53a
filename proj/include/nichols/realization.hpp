#pragma once

#include "nichols/braiding.hpp"

#include <numeric>

namespace nichols {

/// Element of the abelian group Gamma = Z/N_1 x ... x Z/N_k, as exponent
/// vector on the standard generators, each entry normalized to [0, N_i).
/// N_i = 0 denotes an infinite cyclic factor (exponents unrestricted).
using GrpElem = std::vector<int>;

inline void grp_normalize(GrpElem& g, const std::vector<unsigned>& orders)
{
    for (std::size_t i = 0; i < g.size(); ++i)
        if (orders[i] != 0) {
            g[i] %= static_cast<int>(orders[i]);
            if (g[i] < 0)
                g[i] += static_cast<int>(orders[i]);
        }
}

inline GrpElem grp_id(const std::vector<unsigned>& orders)
{
    return GrpElem(orders.size(), 0);
}

inline GrpElem grp_mul(const GrpElem& a, const GrpElem& b, const std::vector<unsigned>& orders)
{
    GrpElem r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    grp_normalize(r, orders);
    return r;
}

inline GrpElem grp_pow(const GrpElem& a, long e, const std::vector<unsigned>& orders)
{
    GrpElem r(a);
    for (auto& c : r)
        c = static_cast<int>(c * e);
    grp_normalize(r, orders);
    return r;
}

inline GrpElem grp_inv(const GrpElem& a, const std::vector<unsigned>& orders)
{
    return grp_pow(a, -1, orders);
}

inline bool grp_is_id(const GrpElem& a)
{
    for (int c : a)
        if (c != 0)
            return false;
    return true;
}

inline std::string grp_to_string(const GrpElem& g)
{
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "g" + std::to_string(i + 1);
        if (g[i] != 1)
            out += "^" + std::to_string(g[i]);
    }
    return out.empty() ? "1" : out;
}

/// Principal realization data: Gamma, grouplikes g_i and characters chi_i
/// with chi_j(g_i) = q_ij.
struct Realization {
    BraidingMatrix braiding;
    std::vector<unsigned> group_orders;
    std::vector<GrpElem> grouplikes;                  // per letter i
    std::vector<std::vector<CycNum>> char_values;     // char_values[j][k] = chi_j(generator k)

    std::size_t rank() const { return group_orders.size(); }

    /// chi_j evaluated at an arbitrary group element.
    CycNum chi(std::size_t j, const GrpElem& g) const
    {
        CycNum r(1L);
        for (std::size_t k = 0; k < g.size(); ++k)
            if (g[k] != 0)
                r = r * char_values[j][k].pow(g[k]);
        return r;
    }

    /// chi_a(g) = prod_j chi_j(g)^{a_j} for a multidegree a.
    CycNum chi_deg(const MultiDegree& a, const GrpElem& g) const
    {
        CycNum r(1L);
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] != 0)
                r = r * chi(j, g).pow(a[j]);
        return r;
    }

    /// g_r = prod g_i^{a_i} for a multidegree a.
    GrpElem grouplike_of(const MultiDegree& a) const
    {
        GrpElem g = grp_id(group_orders);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0)
                g = grp_mul(g, grp_pow(grouplikes[i], a[i], group_orders), group_orders);
        return g;
    }

    void validate() const
    {
        braiding.validate();
        const std::size_t theta = braiding.theta;
        if (grouplikes.size() != theta || char_values.size() != theta)
            throw AlgebraError("realization shape mismatch");
        for (std::size_t j = 0; j < theta; ++j) {
            if (char_values[j].size() != rank())
                throw AlgebraError("realization shape mismatch");
            for (std::size_t k = 0; k < rank(); ++k) {
                auto ord = char_values[j][k].order();
                if (!ord)
                    throw AlgebraError("character value is not a root of unity");
                if (group_orders[k] != 0 && group_orders[k] % *ord != 0)
                    throw AlgebraError("character order does not divide generator order");
            }
        }
        for (std::size_t i = 0; i < theta; ++i) {
            if (grouplikes[i].size() != rank())
                throw AlgebraError("realization shape mismatch");
            for (std::size_t j = 0; j < theta; ++j)
                if (!(chi(j, grouplikes[i]) == braiding.q[i][j]))
                    throw AlgebraError("realization equation violated: chi_j(g_i) != q_ij");
        }
    }

    /// Default principal realization: Gamma = (Z/m)^theta, m = lcm of the
    /// orders of all braiding entries, g_i the standard generators.
    static Realization principal(const BraidingMatrix& b)
    {
        b.validate();
        unsigned m = 1;
        for (const auto& row : b.q)
            for (const auto& e : row)
                m = std::lcm(m, *e.order());
        Realization r;
        r.braiding = b;
        r.group_orders.assign(b.theta, m);
        for (std::size_t i = 0; i < b.theta; ++i) {
            GrpElem g(b.theta, 0);
            g[i] = 1;
            r.grouplikes.push_back(g);
        }
        for (std::size_t j = 0; j < b.theta; ++j) {
            std::vector<CycNum> row;
            for (std::size_t i = 0; i < b.theta; ++i)
                row.push_back(b.q[i][j]);
            r.char_values.push_back(row);
        }
        r.validate();
        return r;
    }
};

} // namespace nichols
