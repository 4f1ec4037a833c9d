#pragma once

// Independent reference for test expectations. Builds the Chevalley–Eilenberg
// complex of a Vergne-type algebra straight from its bracket table (dualising
// [ei, ej] into d(e^k) on the full, ungraded basis) and ranks the matrices
// with an XOR basis. Shares no code with the library beyond its header types.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

/// c(i, j) for 2 <= i < j, i + j <= n, completed from the e2-row by the
/// e1-Jacobi recursion. row[j] for j = 2..n (entries 0 and 1 unused).
inline std::map<std::pair<int, int>, int> complete(int n, const std::vector<int>& row) {
    std::map<std::pair<int, int>, int> c;
    for (int j = 3; 2 + j <= n; ++j) c[{2, j}] = row[static_cast<std::size_t>(j)];
    for (int i = 3; i < n; ++i)
        for (int j = i + 1; i + j <= n; ++j) {
            const int a = c.count({i - 1, j}) ? c[{i - 1, j}] : 0;
            const int b = c.count({i - 1, j + 1}) ? c[{i - 1, j + 1}] : 0;
            c[{i, j}] = a ^ b;
        }
    return c;
}

struct Complex {
    int n;
    // dgen[k] = set of 2-masks in d(e^k)
    std::vector<std::set<Mask>> dgen;
};

inline Complex build(int n, const std::map<std::pair<int, int>, int>& c) {
    auto bracket_has = [&](int i, int j, int k) {
        if (i == j) return false;
        const int a = std::min(i, j), b = std::max(i, j);
        if (a + b != k || k > n) return false;
        if (a == 1) return b >= 2;
        auto it = c.find({a, b});
        return it != c.end() && it->second == 1;
    };
    Complex cx{n, std::vector<std::set<Mask>>(static_cast<std::size_t>(n) + 1)};
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (bracket_has(i, j, k)) {
                    const Mask t = (Mask{1} << (i - 1)) | (Mask{1} << (j - 1));
                    if (!cx.dgen[static_cast<std::size_t>(k)].insert(t).second)
                        cx.dgen[static_cast<std::size_t>(k)].erase(t);
                }
    return cx;
}

inline std::set<Mask> apply(const Complex& cx, Mask mono) {
    std::set<Mask> out;
    for (int i = 1; i <= cx.n; ++i) {
        if (!((mono >> (i - 1)) & 1U)) continue;
        const Mask rest = mono & ~(Mask{1} << (i - 1));
        for (Mask t : cx.dgen[static_cast<std::size_t>(i)]) {
            if (t & rest) continue;
            if (!out.insert(t | rest).second) out.erase(t | rest);
        }
    }
    return out;
}

inline bool square_zero(const Complex& cx) {
    for (int k = 1; k <= cx.n; ++k) {
        std::set<Mask> acc;
        for (Mask t : cx.dgen[static_cast<std::size_t>(k)])
            for (Mask s : apply(cx, t))
                if (!acc.insert(s).second) acc.erase(s);
        if (!acc.empty()) return false;
    }
    return true;
}

inline std::vector<Mask> subsets(int n, int k) {
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
        if (__builtin_popcountll(m) == k) out.push_back(m);
    return out;
}

// Rank of a set of bit vectors given as lists of set positions.
inline std::size_t rank(const std::vector<std::vector<std::size_t>>& vectors, std::size_t width) {
    const std::size_t words = (width + 63) / 64;
    std::map<std::size_t, std::vector<Mask>> pivots;  // leading bit -> reduced vector
    std::size_t r = 0;
    for (const auto& positions : vectors) {
        std::vector<Mask> v(words, 0);
        for (auto p : positions) v[p / 64] ^= Mask{1} << (p % 64);
        while (true) {
            std::optional<std::size_t> lead;
            for (std::size_t w = words; w-- > 0;)
                if (v[w]) {
                    lead = w * 64 + (63 - static_cast<std::size_t>(__builtin_clzll(v[w])));
                    break;
                }
            if (!lead) break;
            auto it = pivots.find(*lead);
            if (it == pivots.end()) {
                pivots.emplace(*lead, v);
                ++r;
                break;
            }
            for (std::size_t w = 0; w < words; ++w) v[w] ^= it->second[w];
        }
    }
    return r;
}

/// rank of d: Λ^k → Λ^{k+1} on the full basis.
inline std::size_t rank_d(const Complex& cx, int k) {
    if (k >= cx.n) return 0;
    const auto codomain = subsets(cx.n, k + 1);
    std::map<Mask, std::size_t> index;
    for (std::size_t i = 0; i < codomain.size(); ++i) index[codomain[i]] = i;
    std::vector<std::vector<std::size_t>> vectors;
    for (Mask m : subsets(cx.n, k)) {
        std::vector<std::size_t> positions;
        for (Mask t : apply(cx, m)) positions.push_back(index.at(t));
        vectors.push_back(std::move(positions));
    }
    return rank(vectors, codomain.size());
}

inline std::vector<std::uint64_t> betti(const Complex& cx) {
    std::vector<std::uint64_t> b;
    std::size_t previous = 0;
    for (int k = 0; k <= cx.n; ++k) {
        const std::size_t dim = subsets(cx.n, k).size();
        const std::size_t r = rank_d(cx, k);
        b.push_back(dim - r - previous);
        previous = r;
    }
    return b;
}

inline std::vector<int> row_from_bits(int n, std::initializer_list<int> entries) {
    std::vector<int> row(static_cast<std::size_t>(n) + 1, 0);
    int j = 2;
    for (int e : entries) row[static_cast<std::size_t>(j++)] = e;
    return row;
}

}  // namespace oracle
