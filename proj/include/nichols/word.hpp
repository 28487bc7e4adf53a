#pragma once

#include "nichols/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nichols {

/// A monomial of the free algebra: a sequence of letter indices (0-based).
using Word = std::vector<std::uint8_t>;

using MultiDegree = std::vector<int>;

inline MultiDegree multidegree(const Word& w, std::size_t theta)
{
    MultiDegree d(theta, 0);
    for (auto l : w)
        ++d.at(l);
    return d;
}

inline MultiDegree operator+(const MultiDegree& a, const MultiDegree& b)
{
    MultiDegree r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

inline Word concat(const Word& a, const Word& b)
{
    Word r(a);
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

/// Degree-first order on words. Among words of equal degree the one that
/// reads earlier in dictionary order (by letter rank, smaller rank = smaller
/// letter) is the LARGER monomial; with precedence x1 < x2 the leading word
/// of x1x2 - q x2x1 is x1x2 and x2x1 is a normal form. rank gives the
/// precedence permutation.
struct WordOrder {
    std::vector<std::uint8_t> rank;

    static WordOrder natural(std::size_t theta)
    {
        WordOrder o;
        for (std::size_t i = 0; i < theta; ++i)
            o.rank.push_back(static_cast<std::uint8_t>(i));
        return o;
    }

    bool less(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return rank[a[i]] > rank[b[i]];
        return false;
    }
};

struct WordLess {
    const WordOrder* order = nullptr;
    bool operator()(const Word& a, const Word& b) const { return order->less(a, b); }
};

/// First position where `factor` occurs in `w` as a contiguous subword, or
/// nullopt. Leftmost occurrence.
inline std::optional<std::size_t> find_factor(const Word& w, const Word& factor)
{
    if (factor.empty() || factor.size() > w.size())
        return std::nullopt;
    for (std::size_t i = 0; i + factor.size() <= w.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < factor.size(); ++j)
            if (w[i + j] != factor[j]) {
                hit = false;
                break;
            }
        if (hit)
            return i;
    }
    return std::nullopt;
}

inline std::string to_string(const Word& w)
{
    if (w.empty())
        return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (!out.empty())
            out += "*";
        out += "x" + std::to_string(w[i] + 1);
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

} // namespace nichols
