#include "cparking/macdonald.hpp"

#include <algorithm>
#include <mutex>

#include "cparking/linalg.hpp"

namespace cparking {

namespace {

struct Cell {
    int row, col;  // 0-based, row 0 at the bottom (French)
};

}  // namespace

SymPoly htilde(const Partition& mu, int N) {
    const int d = part_size(mu);
    if (N < d) throw TooFewVariables();
    if (d == 0) return SymPoly::constant(N, QTRatFun(1));

    const int rows = (int)mu.size();
    const Partition muc = conjugate(mu);

    // cells in reading order: top row first, left to right
    std::vector<Cell> cells;
    for (int r = rows - 1; r >= 0; --r)
        for (int c = 0; c < mu[r]; ++c) cells.push_back({r, c});
    const int ncells = (int)cells.size();
    auto cell_index = [&](int r, int c) {
        // rows above r hold mu[r+1..], all of them before row r in
        // reading order
        int idx = 0;
        for (int rr = rows - 1; rr > r; --rr) idx += mu[rr];
        return idx + c;
    };

    // descent pairs: (cell, cell below), weight leg+1; arm for the inv fix
    struct Desc {
        int upper, lower, legp1, arm;
    };
    std::vector<Desc> descs;
    for (int i = 0; i < ncells; ++i) {
        const auto [r, c] = cells[i];
        if (r == 0) continue;
        int leg = muc[c] - 1 - r;
        int arm = mu[r] - 1 - c;
        descs.push_back({i, cell_index(r - 1, c), leg + 1, arm});
    }

    // attacking pairs (u before v in reading order): same row, or u one row
    // above v and strictly to the right
    std::vector<std::pair<int, int>> attack;
    for (int i = 0; i < ncells; ++i)
        for (int j = i + 1; j < ncells; ++j) {
            const auto [ri, ci] = cells[i];
            const auto [rj, cj] = cells[j];
            if (ri == rj)
                attack.push_back({i, j});
            else if (ri == rj + 1 && ci > cj)
                attack.push_back({i, j});
        }

    std::map<Partition, QTCoeff> bym;
    std::vector<int> fill(ncells, 1);
    std::vector<int> weight(N, 0);
    weight[0] = ncells;
    for (;;) {
        // keep weakly decreasing weights only: these are the m-coefficients
        bool sorted = true;
        for (int v = 0; v + 1 < N; ++v)
            if (weight[v] < weight[v + 1]) {
                sorted = false;
                break;
            }
        if (sorted) {
            int maj = 0, inv = 0;
            for (const auto& dsc : descs)
                if (fill[dsc.upper] > fill[dsc.lower]) {
                    maj += dsc.legp1;
                    inv -= dsc.arm;
                }
            for (const auto& [u, v] : attack)
                if (fill[u] > fill[v]) ++inv;
            bym[trim_zeros(weight)] += QTCoeff::monomial(inv, maj);
        }
        // odometer
        int pos = ncells - 1;
        while (pos >= 0 && fill[pos] == N) {
            weight[fill[pos] - 1]--;
            fill[pos] = 1;
            weight[0]++;
            --pos;
        }
        if (pos < 0) break;
        weight[fill[pos] - 1]--;
        fill[pos]++;
        weight[fill[pos] - 1]++;
    }

    SymPoly r(N);
    for (auto& [key, c] : bym) r.add_term(key, QTRatFun(c));
    return r;
}

QTCoeff t_mu(const Partition& mu) {
    QTCoeff r(1);
    for (size_t i = 0; i < mu.size(); ++i)
        for (int j = 0; j < mu[i]; ++j) r = r * QTCoeff::monomial(j, (int)i);
    return r;
}

const MacdonaldTable& macdonald_table(int degree, int nvars) {
    static std::map<std::pair<int, int>, MacdonaldTable> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(degree, nvars);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    MacdonaldTable tab;
    tab.degree = degree;
    tab.nvars = nvars;
    auto parts = partitions_of(degree);
    for (const auto& mu : parts) {
        tab.entries.emplace(mu, htilde(mu, nvars));
        tab.eigen.emplace(mu, t_mu(mu));
    }
    // rank check: entries must be linearly independent
    RatMatrix M(parts.size(), std::vector<QTRatFun>(parts.size()));
    for (size_t j = 0; j < parts.size(); ++j)
        for (size_t i = 0; i < parts.size(); ++i)
            M[i][j] = tab.entries.at(parts[j]).coefficient(parts[i]);
    if (matrix_rank(M) != parts.size()) throw SingularTable();
    return memo.emplace(key, std::move(tab)).first->second;
}

SymPoly nabla_power(const SymPoly& f, int m, int N) {
    if (f.degree() > N) throw DegreeExceedsVars();
    SymPoly out(N);
    for (int d = 0; d <= f.degree(); ++d) {
        SymPoly comp = f.homogeneous_component(d);
        if (comp.is_zero()) continue;
        if (d == 0) {
            out += comp;  // nabla fixes constants
            continue;
        }
        const MacdonaldTable& tab = macdonald_table(d, N);
        auto parts = partitions_of(d);
        const size_t n = parts.size();
        RatMatrix M(n, std::vector<QTRatFun>(n));
        std::vector<QTRatFun> b(n);
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) M[i][j] = tab.entries.at(parts[j]).coefficient(parts[i]);
        for (size_t i = 0; i < n; ++i) b[i] = comp.coefficient(parts[i]);
        auto x = solve_linear(std::move(M), std::move(b));
        for (size_t j = 0; j < n; ++j) {
            if (x[j].is_zero()) continue;
            QTRatFun scale = m >= 0 ? QTRatFun(tab.eigen.at(parts[j]).pow(m))
                                    : QTRatFun(QTCoeff(1), tab.eigen.at(parts[j]).pow(-m));
            out += tab.entries.at(parts[j]) * (x[j] * scale);
        }
    }
    return out;
}

SymPoly hmz_c(int a, const SymPoly& f) {
    if (a < 1) throw std::domain_error("hmz_c: index must be positive");
    const int N = f.nvars();
    if (!f.is_zero() && f.degree() + a > N) throw TooFewVariables();
    auto graded = plethysm_x_minus_qz(f);
    SymPoly r(N);
    for (const auto& [j, gj] : graded) r += gj * basis_vector(Basis::h, {a + j}, N);
    return r * QTRatFun(QTCoeff::neg_q_power(1 - a));
}

SymPoly c_alpha(const Composition& alpha, int N) {
    SymPoly f = SymPoly::constant(N, QTRatFun(1));
    for (int part : alpha) f = hmz_c(part, f);
    return f;
}

std::map<Composition, QTCoeff> schur_to_calpha(const Partition& lambda) {
    static std::map<Partition, std::map<Composition, QTCoeff>> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto rec = [&](auto&& self, const Partition& lam) -> const std::map<Composition, QTCoeff>& {
        auto it = memo.find(lam);
        if (it != memo.end()) return it->second;
        std::map<Composition, QTCoeff> out;
        if (lam.empty()) {
            out[{}] = QTCoeff(1);
        } else {
            const int head = lam[0];
            Partition mu(lam.begin() + 1, lam.end());
            QTCoeff scale = QTCoeff::neg_q_power(head - 1);
            for (int i = 0; i <= part_size(mu); ++i) {
                for (const auto& nu : vertical_strip_removals(mu, i)) {
                    const auto& inner = self(self, nu);
                    for (const auto& [beta, c] : inner) {
                        Composition gamma = beta;
                        gamma.push_back(head + i);  // operator applied last
                        auto jt = out.find(gamma);
                        if (jt == out.end())
                            out.emplace(std::move(gamma), scale * c);
                        else {
                            jt->second += scale * c;
                            if (jt->second.is_zero()) out.erase(jt);
                        }
                    }
                }
            }
        }
        return memo.emplace(lam, std::move(out)).first->second;
    };
    return rec(rec, lambda);
}

}  // namespace cparking
