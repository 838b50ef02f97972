/// Partitions and compositions as plain int vectors. Partitions are weakly
/// decreasing with no trailing zeros; compositions are any positive vectors.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace cparking {

using Partition = std::vector<int>;
using Composition = std::vector<int>;

inline int part_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline Partition trim_zeros(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    c.assign(p[0], 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) c[j]++;
    return c;
}

/// Durfee square size: max s with p[s-1] >= s.
inline int durfee(const Partition& p) {
    int s = 0;
    while (s < (int)p.size() && p[s] >= s + 1) ++s;
    return s;
}

/// z_lambda = prod i^{m_i} m_i!
inline long z_of(const Partition& p) {
    long z = 1;
    int run = 1;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i > 0 && p[i] == p[i - 1])
            ++run;
        else
            run = 1;
        z *= p[i] * run;
    }
    return z;
}

/// All partitions of d, descending lex order, largest part first.
inline std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

inline std::vector<Composition> compositions_of(int k) {
    std::vector<Composition> out;
    Composition cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            self(self, rem - p);
            cur.pop_back();
        }
    };
    rec(rec, k);
    return out;
}

/// Partitions nu with mu/nu a vertical strip of size i (at most one cell
/// removed per row).
inline std::vector<Partition> vertical_strip_removals(const Partition& mu, int i) {
    std::vector<Partition> out;
    int L = (int)mu.size();
    if (i == 0) {
        out.push_back(trim_zeros(mu));
        return out;
    }
    if (i > L) return out;
    Partition nu(L, 0);
    auto rec = [&](auto&& self, int row, int left) -> void {
        if (L - row < left) return;
        if (row == L) {
            if (left == 0) out.push_back(trim_zeros(nu));
            return;
        }
        for (int take = 0; take <= std::min(1, left); ++take) {
            int val = mu[row] - take;
            if (val < 0) continue;
            if (row > 0 && val > nu[row - 1]) continue;
            nu[row] = val;
            self(self, row + 1, left - take);
        }
    };
    rec(rec, 0, i);
    return out;
}

/// Partitions mu obtained from lambda by adding a horizontal strip of size k
/// (at most one cell added per column, i.e. mu/lambda interlaces).
inline std::vector<Partition> horizontal_strip_additions(const Partition& lambda, int k) {
    std::vector<Partition> out;
    int L = (int)lambda.size();
    Partition mu(L + 1, 0);
    auto rec = [&](auto&& self, int row, int left) -> void {
        if (row == L + 1) {
            if (left == 0) out.push_back(trim_zeros(mu));
            return;
        }
        int lo = row < L ? lambda[row] : 0;
        int hi = row == 0 ? lo + left : std::min(lambda[row - 1], lo + left);
        for (int v = lo; v <= hi; ++v) {
            mu[row] = v;
            self(self, row + 1, left - (v - lo));
        }
    };
    rec(rec, 0, k);
    return out;
}

}  // namespace cparking
