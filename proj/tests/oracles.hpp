#pragma once

// Slow, independent reference implementations. Nothing here calls the library
// beyond constructing Partition values.

#include <functional>
#include <map>
#include <vector>

#include "gg/partition.hpp"

namespace oracle {

// Every partition of n, parts non-increasing, by plain recursion.
inline void partitions(int n, int max_part, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& fn) {
    if (n == 0) {
        fn(cur);
        return;
    }
    for (int v = std::min(n, max_part); v >= 1; --v) {
        cur.push_back(v);
        partitions(n - v, v, cur, fn);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions(n, n, cur, [&](const std::vector<int>& p) { out.push_back(p); });
    return out;
}

// The frequency conditions, written out from their statement.
inline bool in_class(const std::vector<int>& parts, int k, int i, int j) {
    std::map<int, int> f;
    for (int v : parts) ++f[v];
    auto F = [&](int t) { auto it = f.find(t); return it == f.end() ? 0 : it->second; };
    auto odd_upto = [&](int n) {
        int c = 0;
        for (int v : parts)
            if (v % 2 && v <= n) ++c;
        return c;
    };
    if (F(1) + F(2) > i - 1) return false;
    int top = parts.empty() ? 0 : parts.front();
    for (int t = 0; 2 * t <= top; ++t) {
        if (F(2 * t + 1) > 1) return false;
        int s = F(2 * t) + F(2 * t + 1) + F(2 * t + 2);
        if (s > k - 1) return false;
        if (j == 0 && s == k - 1) {
            int lhs = t * F(2 * t) + t * F(2 * t + 1) + (t + 1) * F(2 * t + 2);
            int rhs = odd_upto(2 * t + 2) + i - 1;
            if (((lhs - rhs) % 2 + 2) % 2 != 0) return false;
        }
    }
    return true;
}

inline long count_class(int n, int k, int i, int j) {
    long c = 0;
    for (auto& p : all_partitions(n))
        if (in_class(p, k, i, j)) ++c;
    return c;
}

// Truncated power series with machine integers, naive products.
using Poly = std::vector<long long>;

inline Poly mul(const Poly& a, const Poly& b, int q) {
    Poly c(q + 1, 0);
    for (int x = 0; x <= q && x < static_cast<int>(a.size()); ++x)
        if (a[x])
            for (int y = 0; x + y <= q && y < static_cast<int>(b.size()); ++y) c[x + y] += a[x] * b[y];
    return c;
}

// 1 / (1 - q^a) truncated.
inline Poly geometric(int a, int q) {
    Poly g(q + 1, 0);
    for (int e = 0; e <= q; e += a) g[e] = 1;
    return g;
}

// 1 + s q^a truncated.
inline Poly binomial(int s, int a, int q) {
    Poly g(q + 1, 0);
    g[0] = 1;
    if (a <= q) g[a] += s;
    return g;
}

}  // namespace oracle
