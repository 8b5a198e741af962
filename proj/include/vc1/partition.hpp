#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace vc1 {

/// A partition: non-increasing list of positive parts. The empty partition is
/// the unique partition of 0.
using Partition = std::vector<int>;

inline int weight(const Partition& p)
{
    return std::accumulate(p.begin(), p.end(), 0);
}

inline bool is_valid_partition(const Partition& p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1)
            return false;
        if (i + 1 < p.size() && p[i] < p[i + 1])
            return false;
    }
    return true;
}

namespace detail {

inline void gen_partitions(int n, int max_part, Partition& cur,
                           std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// All partitions of n in reverse-lexicographic order: [n], [n-1,1], ...,
/// [1,...,1]. Deterministic; count = p(n).
inline std::vector<Partition> partitions(int n)
{
    std::vector<Partition> out;
    Partition cur;
    detail::gen_partitions(n, n, cur, out);
    return out;
}

/// p(n), the number of partitions of n (Euler's pentagonal recurrence).
inline long partition_count(int n)
{
    if (n < 0)
        return 0;
    static thread_local std::vector<long> cache{1};
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m)
                break;
            long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m)
                total += sign * cache[m - g1];
            if (g2 <= m)
                total += sign * cache[m - g2];
        }
        cache.push_back(total);
    }
    return cache[n];
}

} // namespace vc1
