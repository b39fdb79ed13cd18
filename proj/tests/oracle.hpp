#pragma once
/**
 * Independent reference implementations used as test oracles. Nothing here
 * calls into the library: partitions are plain vectors, cores come from
 * bead moves on an abacus, characters at x_i = 1 from counting tableaux,
 * and series products from schoolbook convolution.
 */
#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

inline Parts conjugate(const Parts& p)
{
    Parts c(p.empty() ? 0 : p[0], 0);
    for (int row : p) {
        for (int j = 0; j < row; ++j) ++c[j];
    }
    return c;
}

inline int weight(const Parts& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline int durfee(const Parts& p)
{
    int d = 0;
    while (d < static_cast<int>(p.size()) && p[d] >= d + 1) ++d;
    return d;
}

/** Hook of the 1-based box (i, j) counted box by box. */
inline int hook(const Parts& p, int i, int j)
{
    int arm = 0, leg = 0;
    for (int jj = j + 1; jj <= p[i - 1]; ++jj) ++arm;
    for (int ii = i + 1; ii <= static_cast<int>(p.size()) && p[ii - 1] >= j; ++ii) ++leg;
    return arm + leg + 1;
}

inline std::vector<int> hooks(const Parts& p)
{
    std::vector<int> h;
    for (int i = 1; i <= static_cast<int>(p.size()); ++i) {
        for (int j = 1; j <= p[i - 1]; ++j) h.push_back(hook(p, i, j));
    }
    std::sort(h.begin(), h.end());
    return h;
}

inline bool is_sc(const Parts& p) { return conjugate(p) == p; }

inline bool is_dd(const Parts& p)
{
    Parts c = conjugate(p);
    for (int i = 0; i < durfee(p); ++i) {
        if (p[i] != c[i] + 1) return false;
    }
    return true;
}

inline bool is_ddp(const Parts& p) { return is_dd(conjugate(p)); }

/** All partitions of n, parts decreasing, lexicographically decreasing. */
inline void partitions_rec(int n, int maxpart, Parts& cur, std::vector<Parts>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Parts> partitions(int n)
{
    std::vector<Parts> out;
    Parts cur;
    partitions_rec(n, n, cur, out);
    return out;
}

/** Partition numbers by the recurrence p(n, k) over the largest part. */
inline std::vector<long long> partition_counts(int n)
{
    std::vector<long long> p(n + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int m = k; m <= n; ++m) p[m] += p[m - k];
    }
    return p;
}

/** Beta-set with `len` beads: lambda_i - i + len for i = 1..len. */
inline std::vector<int> beta_set(const Parts& p, int len)
{
    std::vector<int> b;
    for (int i = 1; i <= len; ++i) b.push_back((i <= static_cast<int>(p.size()) ? p[i - 1] : 0) - i + len);
    return b;
}

inline Parts from_beta(std::vector<int> b)
{
    std::sort(b.rbegin(), b.rend());
    Parts p;
    int len = static_cast<int>(b.size());
    for (int i = 1; i <= len; ++i) {
        int part = b[i - 1] + i - len;
        if (part > 0) p.push_back(part);
    }
    return p;
}

/** t-core by sliding beads up the abacus runners (removing rim t-hooks). */
inline Parts core(const Parts& p, int t)
{
    int len = static_cast<int>(p.size());
    len += (t - len % t) % t;  // a multiple of t keeps runner labels fixed
    std::vector<int> b = beta_set(p, len);
    std::vector<int> count(t, 0);
    for (int x : b) ++count[x % t];
    std::vector<int> nb;
    for (int r = 0; r < t; ++r) {
        for (int k = 0; k < count[r]; ++k) nb.push_back(r + k * t);
    }
    return from_beta(nb);
}

/** Sizes of the t-quotient components read off the abacus. */
inline std::vector<int> quotient_sizes(const Parts& p, int t)
{
    int len = static_cast<int>(p.size());
    len += (t - len % t) % t;
    std::vector<int> b = beta_set(p, len);
    std::vector<int> sizes;
    for (int r = 0; r < t; ++r) {
        std::vector<int> runner;
        for (int x : b) {
            if (x % t == r) runner.push_back(x / t);
        }
        sizes.push_back(weight(from_beta(runner)));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

/** The t-quotient read off the abacus: runner r holds the beads congruent to r. */
inline std::vector<Parts> quotient(const Parts& p, int t)
{
    int len = static_cast<int>(p.size());
    len += (t - len % t) % t;
    std::vector<int> b = beta_set(p, len);
    std::vector<Parts> out;
    for (int r = 0; r < t; ++r) {
        std::vector<int> runner;
        for (int x : b) {
            if (x % t == r) runner.push_back(x / t);
        }
        out.push_back(from_beta(runner));
    }
    return out;
}

/** Number of standard Young tableaux by removing corners recursively. */
inline long long syt_count(const Parts& p)
{
    static std::map<Parts, long long> memo;
    if (weight(p) <= 1) return 1;
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    long long total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        bool corner = i + 1 == p.size() || p[i + 1] < p[i];
        if (!corner) continue;
        Parts q = p;
        if (--q[i] == 0) q.pop_back();
        total += syt_count(q);
    }
    memo[p] = total;
    return total;
}

/** Number of semistandard tableaux of shape p with entries 1..n (Schur at x_i = 1). */
inline long long ssyt_count(const Parts& p, int n)
{
    if (p.empty()) return 1;
    if (static_cast<int>(p.size()) > n) return 0;
    // Fill cell by cell in row-major order.
    std::vector<std::vector<int>> t(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) t[i].assign(p[i], 0);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (int j = 0; j < p[i]; ++j) cells.push_back({static_cast<int>(i), j});
    }
    long long count = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[k];
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1]);
        if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v <= n; ++v) {
            t[i][j] = v;
            fill(k + 1);
        }
    };
    fill(0);
    return count;
}

/** Schoolbook product of integer series truncated at `n`. */
inline std::vector<long long> mul(const std::vector<long long>& a, const std::vector<long long>& b, int n)
{
    std::vector<long long> c(n + 1, 0);
    for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i) {
        for (int j = 0; i + j <= n && j < static_cast<int>(b.size()); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

/** (T;T)_infinity to order n by multiplying the factors one at a time. */
inline std::vector<long long> euler(int n)
{
    std::vector<long long> e(n + 1, 0);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<long long> f(n + 1, 0);
        f[0] = 1;
        f[k] = -1;
        e = mul(e, f, n);
    }
    return e;
}

/** Generalized pentagonal numbers k(3k-1)/2 up to n with their signs (-1)^k. */
inline std::map<int, int> pentagonal(int n)
{
    std::map<int, int> out;
    for (int k = -n; k <= n; ++k) {
        long v = static_cast<long>(k) * (3 * k - 1) / 2;
        if (v >= 0 && v <= n) out[static_cast<int>(v)] = k % 2 ? -1 : 1;
    }
    return out;
}

} // namespace oracle
