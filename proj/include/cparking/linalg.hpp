/// Exact Gaussian elimination over QTRatFun. Pivots prefer the entry of
/// lowest total (q,t)-degree to limit expression swell.
#pragma once

#include <stdexcept>
#include <vector>

#include "cparking/qt.hpp"

namespace cparking {

struct SingularTable : std::runtime_error {
    SingularTable() : std::runtime_error("SingularTable: exact linear solve failed") {}
};

using RatMatrix = std::vector<std::vector<QTRatFun>>;

inline int ratfun_weight(const QTRatFun& f) {
    auto wt = [](const QTCoeff& p) {
        int w = 0;
        for (const auto& [k, c] : p.terms()) w = std::max(w, std::abs(k.first) + std::abs(k.second));
        return w;
    };
    return wt(f.num()) + wt(f.den());
}

/// Solve M x = b; throws SingularTable if M is singular.
inline std::vector<QTRatFun> solve_linear(RatMatrix M, std::vector<QTRatFun> b) {
    const size_t n = M.size();
    for (size_t col = 0; col < n; ++col) {
        size_t best = n;
        int best_w = 0;
        for (size_t r = col; r < n; ++r) {
            if (M[r][col].is_zero()) continue;
            int w = ratfun_weight(M[r][col]);
            if (best == n || w < best_w) {
                best = r;
                best_w = w;
            }
        }
        if (best == n) throw SingularTable();
        std::swap(M[col], M[best]);
        std::swap(b[col], b[best]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            QTRatFun f = M[r][col] / M[col][col];
            for (size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<QTRatFun> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / M[i][i];
    return x;
}

/// Rank of M (destructive elimination on a copy).
inline size_t matrix_rank(RatMatrix M) {
    size_t rank = 0;
    const size_t rows = M.size();
    if (rows == 0) return 0;
    const size_t cols = M[0].size();
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r)
            if (!M[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (M[r][col].is_zero()) continue;
            QTRatFun f = M[r][col] / M[rank][col];
            for (size_t c = col; c < cols; ++c) M[r][c] -= f * M[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace cparking
