#include "cparking/sympoly.hpp"

#include <algorithm>
#include <mutex>

#include "cparking/linalg.hpp"

namespace cparking {

SymPoly SymPoly::constant(int nvars, QTRatFun c) {
    SymPoly r(nvars);
    if (!c.is_zero()) r.terms_[{}] = std::move(c);
    return r;
}

int SymPoly::degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, part_size(k));
    return d;
}

void SymPoly::add_term(Partition key, const QTRatFun& c) {
    if (c.is_zero()) return;
    std::sort(key.begin(), key.end(), std::greater<int>());
    key = trim_zeros(std::move(key));
    auto it = terms_.find(key);
    if (it == terms_.end())
        terms_.emplace(std::move(key), c);
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QTRatFun SymPoly::coefficient(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? QTRatFun() : it->second;
}

SymPoly SymPoly::homogeneous_component(int d) const {
    SymPoly r(nvars_);
    for (const auto& [k, c] : terms_)
        if (part_size(k) == d) r.terms_.emplace(k, c);
    return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

SymPoly SymPoly::operator*(const QTRatFun& c) const {
    SymPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

namespace {

std::vector<std::vector<int>> distinct_permutations(Partition key, int N) {
    std::vector<int> v(std::move(key));
    v.resize(N, 0);
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

bool is_orbit_member(std::vector<int> v, const std::vector<int>& sorted_desc_padded) {
    for (int x : v)
        if (x < 0) return false;
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v == sorted_desc_padded;
}

}  // namespace

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    const int N = std::max(a.nvars(), b.nvars());
    SymPoly r(N);
    for (const auto& [lam, ca] : a.terms()) {
        std::vector<int> lam_pad(lam);
        lam_pad.resize(N, 0);
        for (const auto& [mu, cb] : b.terms()) {
            QTRatFun c = ca * cb;
            auto orbit = distinct_permutations(mu, N);
            // candidate orbit reps of the product, then exact pair counts
            std::map<std::vector<int>, long> counts;
            for (const auto& bvec : orbit) {
                std::vector<int> s(N);
                for (int i = 0; i < N; ++i) s[i] = lam_pad[i] + bvec[i];
                std::sort(s.begin(), s.end(), std::greater<int>());
                counts[s] = 0;
            }
            for (auto& [nu, cnt] : counts) {
                for (const auto& bvec : orbit) {
                    std::vector<int> diff(N);
                    for (int i = 0; i < N; ++i) diff[i] = nu[i] - bvec[i];
                    if (is_orbit_member(std::move(diff), lam_pad)) ++cnt;
                }
                if (cnt) r.add_term(nu, c * QTRatFun(Rat(cnt)));
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Bases
// ---------------------------------------------------------------------------

namespace {

SymPoly power_sum_single(int k, int N) {
    SymPoly r(N);
    r.add_term({k}, QTRatFun(1));
    return r;
}

SymPoly elementary_single(int k, int N) {
    SymPoly r(N);
    if (k == 0) return SymPoly::constant(N, QTRatFun(1));
    if (k > N) return r;
    r.add_term(Partition(k, 1), QTRatFun(1));
    return r;
}

SymPoly homogeneous_single(int k, int N) {
    SymPoly r(N);
    if (k == 0) return SymPoly::constant(N, QTRatFun(1));
    for (const auto& lam : partitions_of(k))
        if ((int)lam.size() <= N) r.add_term(lam, QTRatFun(1));
    return r;
}

SymPoly schur_ssyt(const Partition& lam, int N) {
    SymPoly r(N);
    if (lam.empty()) return SymPoly::constant(N, QTRatFun(1));
    if ((int)lam.size() > N) return r;
    const int rows = (int)lam.size();
    std::vector<std::vector<int>> T(rows);
    for (int i = 0; i < rows; ++i) T[i].assign(lam[i], 0);
    std::map<Partition, long> kostka;
    std::vector<int> weight(N, 0);
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == rows) {
            // keep only weakly decreasing weights: those are the m-coefficients
            for (int v = 0; v + 1 < N; ++v)
                if (weight[v] < weight[v + 1]) return;
            kostka[trim_zeros(weight)]++;
            return;
        }
        int ni = i, nj = j + 1;
        if (nj == lam[i]) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, T[i][j - 1]);
        if (i > 0 && j < lam[i - 1]) lo = std::max(lo, T[i - 1][j] + 1);
        for (int v = lo; v <= N; ++v) {
            T[i][j] = v;
            weight[v - 1]++;
            self(self, ni, nj);
            weight[v - 1]--;
        }
    };
    rec(rec, 0, 0);
    for (const auto& [mu, c] : kostka) r.add_term(mu, QTRatFun(Rat(c)));
    return r;
}

}  // namespace

SymPoly basis_vector(Basis kind, const Partition& lambda, int N) {
    if (N < 1) throw TooFewVariables();
    switch (kind) {
        case Basis::m: {
            SymPoly r(N);
            if ((int)lambda.size() <= N) r.add_term(lambda, QTRatFun(1));
            if (lambda.empty()) return SymPoly::constant(N, QTRatFun(1));
            return r;
        }
        case Basis::s:
            return schur_ssyt(lambda, N);
        case Basis::e:
        case Basis::h:
        case Basis::p: {
            SymPoly r = SymPoly::constant(N, QTRatFun(1));
            for (int part : lambda) {
                SymPoly f = kind == Basis::e   ? elementary_single(part, N)
                            : kind == Basis::h ? homogeneous_single(part, N)
                                               : power_sum_single(part, N);
                r = r * f;
            }
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

BasisExpansion expand_in_basis(const SymPoly& f, Basis kind) {
    BasisExpansion out;
    out.basis = kind;
    out.nvars = f.nvars();
    if (f.is_zero()) return out;
    const int N = f.nvars();
    for (int d = 0; d <= f.degree(); ++d) {
        SymPoly comp = f.homogeneous_component(d);
        if (comp.is_zero()) continue;
        if (d == 0) {
            out.coeffs[{}] = comp.coefficient({});
            continue;
        }
        if (d > N) throw DegreeExceedsVars();
        auto parts = partitions_of(d);
        const size_t n = parts.size();
        RatMatrix M(n, std::vector<QTRatFun>(n));
        for (size_t j = 0; j < n; ++j) {
            SymPoly bj = basis_vector(kind, parts[j], N);
            for (size_t i = 0; i < n; ++i) M[i][j] = bj.coefficient(parts[i]);
        }
        std::vector<QTRatFun> b(n);
        for (size_t i = 0; i < n; ++i) b[i] = comp.coefficient(parts[i]);
        auto x = solve_linear(std::move(M), std::move(b));
        for (size_t j = 0; j < n; ++j)
            if (!x[j].is_zero()) out.coeffs[parts[j]] = x[j];
    }
    return out;
}

SymPoly reassemble(const BasisExpansion& e) {
    SymPoly r(e.nvars);
    for (const auto& [lam, c] : e.coeffs) r += basis_vector(e.basis, lam, e.nvars) * c;
    return r;
}

QTRatFun inner_product(const SymPoly& f, const SymPoly& g) {
    if (!f.is_zero() && !g.is_zero() && f.degree() != g.degree()) throw DegreeMismatch();
    BasisExpansion pf = expand_in_basis(f, Basis::p);
    BasisExpansion pg = expand_in_basis(g, Basis::p);
    QTRatFun acc;
    for (const auto& [lam, a] : pf.coeffs) {
        auto it = pg.coeffs.find(lam);
        if (it != pg.coeffs.end()) acc += a * it->second * QTRatFun(Rat(z_of(lam)));
    }
    return acc;
}

BasisExpansion omega_involution(const BasisExpansion& schur) {
    BasisExpansion out;
    out.basis = Basis::s;
    out.nvars = schur.nvars;
    for (const auto& [lam, c] : schur.coeffs) out.coeffs[conjugate(lam)] += c;
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = it->second.is_zero() ? out.coeffs.erase(it) : std::next(it);
    return out;
}

BasisExpansion skew_by_e(int i, const BasisExpansion& schur) {
    if (i < 0) throw std::domain_error("skew_by_e: negative i");
    BasisExpansion out;
    out.basis = Basis::s;
    out.nvars = schur.nvars;
    for (const auto& [mu, c] : schur.coeffs)
        for (const auto& nu : vertical_strip_removals(mu, i)) out.coeffs[nu] += c;
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = it->second.is_zero() ? out.coeffs.erase(it) : std::next(it);
    return out;
}

// ---------------------------------------------------------------------------
// Plethysm
// ---------------------------------------------------------------------------

const std::map<Partition, QTRatFun>& p_to_h(const Partition& alpha) {
    static std::map<Partition, std::map<Partition, QTRatFun>> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(alpha);
    if (it != memo.end()) return it->second;
    int d = part_size(alpha);
    SymPoly p = basis_vector(Basis::p, alpha, std::max(d, 1));
    auto exp = expand_in_basis(p, Basis::h);
    return memo.emplace(alpha, std::move(exp.coeffs)).first->second;
}

SymPoly plethysm_one_minus_t(const SymPoly& f) {
    auto pexp = expand_in_basis(f, Basis::p);
    SymPoly r(f.nvars());
    for (const auto& [rho, c] : pexp.coeffs) {
        QTRatFun factor = c;
        for (int part : rho) {
            QTCoeff u(1);
            u -= QTCoeff::t_power(part);
            factor *= QTRatFun(u);
        }
        r += basis_vector(Basis::p, rho, f.nvars()) * factor;
    }
    return r;
}

PairHExpansion plethysm_y_minus_z(const SymPoly& f) {
    auto pexp = expand_in_basis(f, Basis::p);
    // split parts between Y and Z with sign (-1)^{#Z parts}, in the p x p
    // basis first
    std::map<std::pair<Partition, Partition>, QTRatFun> pp;
    for (const auto& [rho, c] : pexp.coeffs) {
        const int L = (int)rho.size();
        for (unsigned mask = 0; mask < (1u << L); ++mask) {
            Partition ay, az;
            int sign = 1;
            for (int i = 0; i < L; ++i) {
                if (mask & (1u << i)) {
                    az.push_back(rho[i]);
                    sign = -sign;
                } else {
                    ay.push_back(rho[i]);
                }
            }
            std::sort(ay.begin(), ay.end(), std::greater<int>());
            std::sort(az.begin(), az.end(), std::greater<int>());
            pp[{ay, az}] += c * QTRatFun(Rat(sign));
        }
    }
    PairHExpansion out;
    for (const auto& [key, c] : pp) {
        const auto& hy = p_to_h(key.first);
        const auto& hz = p_to_h(key.second);
        for (const auto& [lam, cy] : hy)
            for (const auto& [mu, cz] : hz) {
                auto& acc = out.coeffs[{lam, mu}];
                acc += c * cy * cz;
            }
    }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = it->second.is_zero() ? out.coeffs.erase(it) : std::next(it);
    return out;
}

std::map<int, QTRatFun> plethysm_a_minus_ainv(const SymPoly& f) {
    auto pexp = expand_in_basis(f, Basis::p);
    std::map<int, QTRatFun> out;
    for (const auto& [rho, c] : pexp.coeffs) {
        std::map<int, QTRatFun> prod{{0, c}};
        for (int part : rho) {
            std::map<int, QTRatFun> next;
            for (const auto& [e, v] : prod) {
                next[e + part] += v;
                next[e - part] -= v;
            }
            prod = std::move(next);
        }
        for (const auto& [e, v] : prod) out[e] += v;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::map<int, SymPoly> plethysm_x_minus_qz(const SymPoly& f) {
    auto pexp = expand_in_basis(f, Basis::p);
    const int N = f.nvars();
    std::map<int, SymPoly> out;
    for (const auto& [rho, c] : pexp.coeffs) {
        const int L = (int)rho.size();
        for (unsigned mask = 0; mask < (1u << L); ++mask) {
            Partition keep;
            QTRatFun factor = c;
            int zdeg = 0;
            for (int i = 0; i < L; ++i) {
                if (mask & (1u << i)) {
                    // p_k[-(q-1)/(qz)] = -(1 - q^{-k}) z^{-k}
                    QTCoeff u(-1);
                    u += QTCoeff::q_power(-rho[i]);
                    factor *= QTRatFun(u);
                    zdeg += rho[i];
                } else {
                    keep.push_back(rho[i]);
                }
            }
            if (factor.is_zero()) continue;
            std::sort(keep.begin(), keep.end(), std::greater<int>());
            auto it = out.find(zdeg);
            if (it == out.end()) it = out.emplace(zdeg, SymPoly(N)).first;
            it->second += basis_vector(Basis::p, keep, N) * factor;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

PlethysmResult plethysm(const SymPoly& f, Alphabet alphabet) {
    PlethysmResult r;
    r.alphabet = alphabet;
    switch (alphabet) {
        case Alphabet::X:
            r.direct = f;
            return r;
        case Alphabet::OneMinusT_Y:
            r.direct = plethysm_one_minus_t(f);
            return r;
        case Alphabet::Y_minus_Z:
            r.pair = plethysm_y_minus_z(f);
            return r;
        case Alphabet::X_minus_qz:
            r.z_graded = plethysm_x_minus_qz(f);
            return r;
        case Alphabet::A_minus_Ainv:
            r.a_laurent = plethysm_a_minus_ainv(f);
            return r;
    }
    throw UnsupportedAlphabet();
}

}  // namespace cparking
