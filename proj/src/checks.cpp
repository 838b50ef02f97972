#include "cparking/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cparking/macdonald.hpp"

namespace cparking {

namespace {

struct Failure {
    std::string witness;
};

void expect(bool ok, const std::string& witness) {
    if (!ok) throw Failure{witness};
}

std::string fmt_mnk(int m, int n, int k) {
    std::ostringstream os;
    os << "(m,n)=(" << m << "," << n << ")";
    if (k) os << " k=" << k;
    return os.str();
}

std::string comp_str(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::vector<std::pair<int, int>> grid_or(const CheckParams& p,
                                         std::vector<std::pair<int, int>> dflt) {
    if (p.m > 0 && p.n > 0) return {{p.m, p.n}};
    return dflt;
}

bool projections_equal(const TupleSeries& a, const TupleSeries& b, std::string* witness) {
    auto pa = skeleton_projection(a);
    auto pb = skeleton_projection(b);
    for (const auto& [z, c] : pa) {
        auto it = pb.find(z);
        QTCoeff other = it == pb.end() ? QTCoeff() : it->second;
        if (c != other) {
            if (witness) *witness = skeleton_str(z) + ": " + c.str() + " vs " + other.str();
            return false;
        }
    }
    for (const auto& [z, c] : pb)
        if (!pa.count(z)) {
            if (witness) *witness = skeleton_str(z) + ": 0 vs " + c.str();
            return false;
        }
    return true;
}

// ---- sw / qsw -------------------------------------------------------------

void check_sw(const CheckParams& p, CheckReport& rep) {
    auto grid = grid_or(p, {{2, 1}, {3, 2}});
    int A = p.area_budget < 0 ? 4 : p.area_budget;
    int N = p.labels < 0 ? 4 : p.labels;
    for (auto [m, n] : grid) {
        ChainContext ctx(m, n, A, N);
        TupleSeries unit = TupleSeries::unit(m, n, A, N);
        for (OpKind kind : {OpKind::h, OpKind::hhat, OpKind::hbar})
            for (int a = 1; a <= 2; ++a)
                for (int b = a; b <= 2; ++b) {
                    TupleSeries ab = apply_word({{kind, a}, {kind, b}}, unit, ctx);
                    TupleSeries ba = apply_word({{kind, b}, {kind, a}}, unit, ctx);
                    std::string w;
                    bool ok = projections_equal(ab, ba, &w);
                    expect(ok, fmt_mnk(m, n, 0) + " " + OperatorSymbol{kind, a}.str() + "," +
                                   OperatorSymbol{kind, b}.str() + " commute: " + w);
                }
    }
}

void check_qsw(const CheckParams& p, CheckReport& rep) {
    auto grid = grid_or(p, {{2, 1}, {3, 2}});
    int A = p.area_budget < 0 ? 4 : p.area_budget;
    int N = p.labels < 0 ? 4 : p.labels;
    std::vector<OpWord> contexts{{}};
    for (OpKind kind : {OpKind::h, OpKind::hhat, OpKind::hbar})
        for (int i = 1; i <= 2; ++i) contexts.push_back({OperatorSymbol{kind, i}});
    for (auto [m, n] : grid) {
        ChainContext ctx(m, n, A, N);
        TupleSeries unit = TupleSeries::unit(m, n, A, N);
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b) {
                SignedWordSum lhs{{QTCoeff::q_power(1), {op_hhat(b), op_hbar(a)}},
                                  {-QTCoeff::q_power(1), {op_hhat(a - 1), op_hbar(b + 1)}}};
                SignedWordSum rhs{{QTCoeff(1), {op_hbar(a), op_hhat(b)}},
                                  {QTCoeff(-1), {op_hbar(b + 1), op_hhat(a - 1)}}};
                TupleSeries ls = apply_word_sum(lhs, unit, ctx);
                TupleSeries rs = apply_word_sum(rhs, unit, ctx);
                for (const auto& w : contexts) {
                    TupleSeries lw = apply_word(w, ls, ctx);
                    TupleSeries rw = apply_word(w, rs, ctx);
                    std::string wit;
                    bool ok = projections_equal(lw, rw, &wit);
                    expect(ok, fmt_mnk(m, n, 0) + " qsw a=" + std::to_string(a) +
                                   " b=" + std::to_string(b) + " ctx=" + word_str(w) + ": " + wit);
                }
            }
    }
}

// ---- compositional shuffle reformulation ----------------------------------

void check_calpha(const CheckParams& p, CheckReport& rep) {
    auto grid = grid_or(p, {{1, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 3}});
    int kmax = p.k > 0 ? p.k : 2;
    for (auto [m, n] : grid)
        for (int k = 1; k <= kmax; ++k) {
            int N = p.labels < 0 ? k * n : p.labels;
            int A = p.area_budget < 0 ? max_global_area(m, n, k) + 1 : p.area_budget;
            ChainContext ctx(m, n, A, N);
            TupleSeries unit = TupleSeries::unit(m, n, A, N);
            std::vector<Composition> alphas =
                p.alpha ? std::vector<Composition>{*p.alpha} : compositions_of(k);
            for (const auto& alpha : alphas) {
                OmegaSeries lhs = omega_spec(det_apply(build_H(alpha), unit, ctx));
                OmegaSeries rhs = pf_touch_sum(m, n, k, alpha, N);
                std::string w;
                bool ok = lhs.window_equal(rhs, 0, A, &w);
                expect(ok, fmt_mnk(m, n, k) + " alpha=" + comp_str(alpha) + ": " + w);
            }
        }
}

// ---- Gamma / Psi ----------------------------------------------------------

Composition alpha_pattern(const PathTuple& t) {
    Composition alpha;
    int run = 0;
    for (const auto& c : t.comps) {
        if (c.aseq(0) == 0) {
            if (run) alpha.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    if (run) alpha.push_back(run);
    return alpha;
}

void check_gamma(const CheckParams& p, CheckReport& rep) {
    auto grid = grid_or(p, {{1, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 3}});
    int kmax = p.k > 0 ? p.k : 2;
    for (auto [m, n] : grid)
        for (int k = 1; k <= kmax; ++k) {
            int N = p.labels < 0 ? k * n : p.labels;
            int Amax = max_global_area(m, n, k);
            auto ptabs = enumerate_ptab(m, n, k, Amax + n, N);
            for (const auto& t : ptabs)
                expect(t.area() <= Amax, fmt_mnk(m, n, k) + ": P-tableau with area " +
                                             std::to_string(t.area()) + " above the image bound");
            auto pfs = enumerate_pf(m, n, k, N);
            expect(ptabs.size() == pfs.size(),
                   fmt_mnk(m, n, k) + ": |PTab| = " + std::to_string(ptabs.size()) +
                       " != |PF| = " + std::to_string(pfs.size()));
            std::set<GlobalParkingFunction> seen;
            for (const auto& t : ptabs) {
                GlobalParkingFunction g = gamma(t);
                expect(validate_global(g).ok, fmt_mnk(m, n, k) + ": Gamma image invalid");
                expect(seen.insert(g).second, fmt_mnk(m, n, k) + ": Gamma not injective");
                expect(skeleton(t) == global_skeleton(g),
                       fmt_mnk(m, n, k) + ": skeleton not preserved");
                TupleStats st = tuple_stats(t), sg = global_stats(g);
                expect(st.pdinv + st.ldinv == sg.pdinv + sg.ldinv,
                       fmt_mnk(m, n, k) + ": pdinv+ldinv not preserved");
                expect(touch(g) == alpha_pattern(t),
                       fmt_mnk(m, n, k) + ": touch differs from the alpha pattern");
                expect(psi(g) == t, fmt_mnk(m, n, k) + ": Psi(Gamma(T)) != T");
            }
            for (const auto& g : pfs) {
                PathTuple t = psi(g);
                expect(is_ptab(t), fmt_mnk(m, n, k) + ": Psi image is not a P-tableau");
                expect(gamma(t) == g, fmt_mnk(m, n, k) + ": Gamma(Psi(pf)) != pf");
            }
        }
}

void check_counts(const CheckParams& p, CheckReport& rep) {
    auto grid = grid_or(p, {{1, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 3}});
    int kmax = p.k > 0 ? p.k : 2;
    for (auto [m, n] : grid)
        for (int k = 1; k <= kmax; ++k) {
            int N = p.labels < 0 ? k * n : p.labels;
            int Amax = max_global_area(m, n, k);
            auto ptabs = enumerate_ptab(m, n, k, Amax + n, N);
            auto pfs = enumerate_pf(m, n, k, N);
            expect(ptabs.size() == pfs.size(),
                   fmt_mnk(m, n, k) + ": |PTab(k)| != |PF_{km,kn}|");
            std::map<Composition, long> by_alpha_pf, by_alpha_pt;
            for (const auto& g : pfs) by_alpha_pf[touch(g)]++;
            long total = 0;
            for (const auto& alpha : compositions_of(k)) {
                long c = (long)ptab_filter(ptabs, alpha).size();
                by_alpha_pt[alpha] = c;
                total += c;
            }
            expect(total == (long)ptabs.size(),
                   fmt_mnk(m, n, k) + ": alpha conditions do not partition PTab");
            for (const auto& [alpha, c] : by_alpha_pf)
                expect(by_alpha_pt[alpha] == c, fmt_mnk(m, n, k) + " alpha=" + comp_str(alpha) +
                                                    ": |PTab(k;alpha)| != |touch=alpha|");
        }
}

// ---- n = 1 oracle suite ----------------------------------------------------

struct NamedF {
    std::string name;
    std::function<SymPoly(int)> build;
    int deg;
};

std::vector<NamedF> oracle_inputs() {
    return {
        {"e1", [](int N) { return basis_vector(Basis::e, {1}, N); }, 1},
        {"e2", [](int N) { return basis_vector(Basis::e, {2}, N); }, 2},
        {"h2", [](int N) { return basis_vector(Basis::h, {2}, N); }, 2},
        {"s(2,1)", [](int N) { return basis_vector(Basis::s, {2, 1}, N); }, 3},
        {"s(1,1,1)", [](int N) { return basis_vector(Basis::s, {1, 1, 1}, N); }, 3},
    };
}

int n1_budget(int m, int d) { return m * d * (d - 1) / 2 + 2; }

void check_nabla_n1(const CheckParams& p, CheckReport& rep) {
    std::vector<int> ms = p.m > 0 ? std::vector<int>{p.m} : std::vector<int>{1, 2};
    for (int m : ms) {
        for (const auto& nf : oracle_inputs()) {
            int N = p.labels < 0 ? nf.deg : p.labels;
            int A = p.area_budget < 0 ? n1_budget(m, nf.deg) : p.area_budget;
            if (A - p.guard < 0) throw BudgetTooSmall();
            SymPoly f = nf.build(N);
            ChainContext ctx(m, 1, A, N);
            OmegaSeries om =
                omega_spec(apply_word_sum(phi_operator(f), TupleSeries::unit(m, 1, A, N), ctx));
            SymPoly alg = nabla_power(f, m, N);
            std::string w;
            bool ok = omega_matches_sympoly(om, alg, 0, A - p.guard, &w);
            expect(ok, "m=" + std::to_string(m) + " Phi(" + nf.name + "): " + w);
        }
        int kmax = p.k > 0 ? p.k : 3;
        for (int k = 1; k <= kmax; ++k)
            for (const auto& alpha : compositions_of(k)) {
                if (p.alpha && alpha != *p.alpha) continue;
                int N = p.labels < 0 ? k : p.labels;
                int A = p.area_budget < 0 ? n1_budget(m, k) : p.area_budget;
                ChainContext ctx(m, 1, A, N);
                OmegaSeries om =
                    omega_spec(det_apply(build_H(alpha), TupleSeries::unit(m, 1, A, N), ctx));
                SymPoly alg = nabla_power(c_alpha(alpha, N), m, N);
                std::string w;
                bool ok = omega_matches_sympoly(om, alg, 0, A - p.guard, &w);
                expect(ok, "m=" + std::to_string(m) + " H" + comp_str(alpha) + ": " + w);
            }
    }
}

void check_jacobi_trudi(const CheckParams& p, CheckReport& rep, bool primed) {
    std::vector<int> ms = p.m > 0 ? std::vector<int>{p.m} : std::vector<int>{1, 2};
    std::vector<Partition> lambdas;
    if (p.lambda)
        lambdas.push_back(*p.lambda);
    else
        for (int d = 1; d <= 3; ++d)
            for (const auto& lam : partitions_of(d)) lambdas.push_back(lam);
    for (int m : ms)
        for (const auto& lam : lambdas) {
            int d = part_size(lam);
            int N = p.labels < 0 ? d : p.labels;
            int A = p.area_budget < 0 ? n1_budget(m, d) : p.area_budget;
            if (A - p.guard < 0) throw BudgetTooSmall();
            ChainContext ctx(m, 1, A, N);
            TupleSeries unit = TupleSeries::unit(m, 1, A, N);
            OmegaSeries om;
            std::string tag;
            if (!primed) {
                om = omega_spec(det_apply(build_J(lam), unit, ctx));
                tag = "J";
            } else {
                JPrime jp = build_Jprime(lam);
                om = omega_spec(det_apply(jp.matrix, unit, ctx))
                         .scaled(QTCoeff::neg_q_power(jp.adj));
                tag = "J'";
            }
            SymPoly alg = nabla_power(basis_vector(Basis::s, lam, N), m, N);
            std::string w;
            bool ok = omega_matches_sympoly(om, alg, 0, A - p.guard, &w);
            expect(ok, "m=" + std::to_string(m) + " " + tag + comp_str(lam) + ": " + w);
        }
}

// ---- Theorem 1.1 ------------------------------------------------------------

void check_main(const CheckParams& p, CheckReport& rep) {
    if (p.n == 1 || p.n == 0) {
        // n = 1: against nabla^m e_1^k
        std::vector<int> ms = p.m > 0 ? std::vector<int>{p.m} : std::vector<int>{1, 2};
        int kmax = p.k > 0 ? p.k : 3;
        for (int m : ms)
            for (int k = 1; k <= kmax; ++k) {
                int A = p.area_budget < 0 ? 5 : p.area_budget;
                int N = p.labels < 0 ? k : p.labels;
                int hi = A - p.guard * k;
                if (hi < 0) throw BudgetTooSmall();
                OmegaSeries rhs = rhs_main(m, 1, k, A, N);
                SymPoly alg = nabla_power(basis_vector(Basis::e, Partition(k, 1), N), m, N);
                std::string w;
                bool ok = omega_matches_sympoly(rhs, alg, 0, hi, &w);
                expect(ok, "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + w);
            }
    }
    if (p.n != 1) {
        int m = p.m > 0 ? p.m : 3;
        int n = p.n > 0 ? p.n : 2;
        int k = p.k > 0 ? p.k : 2;
        int A = p.area_budget < 0 ? 6 : p.area_budget;
        int N = p.labels < 0 ? k * n : p.labels;
        int hi = A - 2 * p.guard;
        if (hi < 0) throw BudgetTooSmall();
        OmegaSeries rhs = rhs_main(m, n, k, A, N);
        // assemble e_1^k -> schur -> C_alpha -> parking-function touch sums
        SymPoly e1k = basis_vector(Basis::e, Partition(k, 1), std::max(N, k));
        BasisExpansion schur = expand_in_basis(e1k, Basis::s);
        OmegaSeries assembled;
        assembled.nvars = N;
        assembled.t_exact_max = max_global_area(m, n, k);
        for (const auto& [lam, flam] : schur.coeffs) {
            if (!flam.is_polynomial()) throw Failure{"f^lambda not integral"};
            for (const auto& [alpha, d] : schur_to_calpha(lam)) {
                OmegaSeries part = pf_touch_sum(m, n, k, alpha, N).scaled(d * flam.num());
                for (const auto& [x, c] : part.terms) assembled.add(x, c);
            }
        }
        std::string w;
        bool ok = rhs.window_equal(assembled, 0, hi, &w);
        expect(ok, fmt_mnk(m, n, k) + " main: " + w);
    }
}

void check_wilson(const CheckParams& p, CheckReport& rep) {
    int m = p.m > 0 ? p.m : 3;
    int n = p.n > 0 ? p.n : 2;
    int k = p.k > 0 ? p.k : 2;
    int A = p.area_budget < 0 ? 6 : p.area_budget;
    int N = p.labels < 0 ? k * n : p.labels;
    int hi = A - 2 * p.guard;
    if (hi < 0) throw BudgetTooSmall();
    OmegaSeries main = rhs_main(m, n, k, A, N);
    OmegaSeries wilson = rhs_wilson(m, n, k, A, N);
    std::string w;
    bool wilson_ok = main.window_equal(wilson, 0, hi, &w);
    expect(wilson_ok, fmt_mnk(m, n, k) + " main vs wilson: " + w);

    // positivity spot-check on Omega(h_{(1^{k-1})} hbar_1 . 1): Schur
    // coefficients should be polynomials in q,t with nonnegative integers
    ChainContext ctx(m, n, A, N);
    TupleSeries s = TupleSeries::unit(m, n, A, N);
    s = apply_symbol(op_hbar(1), s, ctx);
    for (int i = 0; i < k - 1; ++i) s = apply_symbol(op_h(1), s, ctx);
    OmegaSeries om = omega_spec(s);
    for (int d = 0; d <= A - p.guard; ++d) {
        SymPoly slice(N);
        for (const auto& [x, c] : om.terms) {
            bool sorted = true;
            for (size_t i = 0; i + 1 < x.size(); ++i)
                if (x[i] < x[i + 1]) sorted = false;
            if (!sorted) continue;  // one representative per orbit
            QTCoeff qc = c.t_slice(d);
            if (!qc.is_zero()) slice.add_term(x, QTRatFun(qc));
        }
        if (slice.is_zero()) continue;
        BasisExpansion sch = expand_in_basis(slice, Basis::s);
        for (const auto& [lam, c] : sch.coeffs) {
            bool good = c.is_polynomial();
            if (good)
                for (const auto& [key, v] : c.num().terms())
                    if (v < 0 || v.get_den() != 1) good = false;
            if (!good)
                rep.warnings.push_back("positivity: t^" + std::to_string(d) + " s" +
                                       comp_str(lam) + " coefficient " + c.str());
        }
    }
}

// ---- property batteries -----------------------------------------------------

std::vector<PathTuple> tuple_pool(int m, int n, int kmax, int budget, size_t cap) {
    std::vector<PathTuple> pool;
    for (int k = 2; k <= kmax; ++k) {
        for (const auto& g : enumerate_pf(m, n, k, n + 1)) {
            pool.push_back(decompose_pf(g));
            if (pool.size() >= cap / 2) break;
        }
        auto paths = enumerate_cpf(m, n, budget, n + 1);
        std::mt19937 rng(20240 + m * 10 + n + k);
        std::uniform_int_distribution<size_t> pick(0, paths.empty() ? 0 : paths.size() - 1);
        for (int trial = 0; trial < 200 && !paths.empty(); ++trial) {
            PathTuple t;
            t.m = m;
            t.n = n;
            int area = 0;
            for (int i = 0; i < k; ++i) {
                const auto& cand = paths[pick(rng)];
                area += cand.area();
                t.comps.push_back(cand);
            }
            if (area <= budget) pool.push_back(std::move(t));
            if (pool.size() >= cap) break;
        }
        if (pool.size() >= cap) break;
    }
    return pool;
}

std::vector<int> conjugate_perm(const std::vector<int>& perm, const std::vector<int>& sigma) {
    // components re-sheeted by sigma: new phi = sigma . phi . sigma^{-1}
    const int k = (int)perm.size();
    std::vector<int> out(k);
    for (int l = 1; l <= k; ++l) out[sigma[l - 1] - 1] = sigma[perm[l - 1] - 1];
    return out;
}

void check_resheet(const CheckParams& p, CheckReport& rep) {
    auto grid = grid_or(p, {{2, 1}, {3, 2}});
    int kmax = p.k > 0 ? p.k : 3;
    size_t per_grid = 250;
    for (auto [m, n] : grid) {
        auto pool = tuple_pool(m, n, kmax, 5, per_grid);
        for (const auto& t : pool) {
            const int k = t.order();
            std::vector<int> perm = t.perm;
            if (perm.empty()) {
                perm.resize(k);
                std::iota(perm.begin(), perm.end(), 1);
            }
            if (!validate_perm(t, perm).ok) continue;
            TupleStats st = tuple_stats(t);
            long base = st.pdinv + st.ldinv + pos_crossings(t);
            std::vector<int> sigma(k);
            std::iota(sigma.begin(), sigma.end(), 1);
            while (std::next_permutation(sigma.begin(), sigma.end())) {
                PathTuple rt;
                rt.m = m;
                rt.n = n;
                rt.comps.resize(k);
                for (int l = 0; l < k; ++l) rt.comps[sigma[l] - 1] = t.comps[l];
                rt.perm = conjugate_perm(perm, sigma);
                TupleStats rs = tuple_stats(rt);
                long resheeted = rs.pdinv + rs.ldinv + pos_crossings(rt);
                expect(resheeted == base,
                       fmt_mnk(m, n, k) + ": pdinv+ldinv+pos changed under resheeting (" +
                           std::to_string(base) + " -> " + std::to_string(resheeted) + ")");
            }
            // pos independence of the connecting permutation
            std::vector<int> phi(k);
            std::iota(phi.begin(), phi.end(), 1);
            long pos_ref = -1;
            std::sort(phi.begin(), phi.end());
            do {
                PathTuple u = t;
                u.perm = phi;
                if (!validate_perm(u, phi).ok) continue;
                long pv = pos_crossings(u);
                if (pos_ref < 0)
                    pos_ref = pv;
                else
                    expect(pv == pos_ref, fmt_mnk(m, n, k) +
                                              ": pos depends on the connecting permutation");
            } while (std::next_permutation(phi.begin(), phi.end()));
        }
        // stat-increment well-definedness on equal-skeleton identity tuples
        ChainContext ctx(m, n, 4, n + 1);
        std::map<Skeleton, std::vector<PathTuple>> by_skel;
        for (const auto& t : pool) {
            if (!t.perm.empty()) continue;
            bool cyclic = true;
            for (const auto& c : t.comps) cyclic &= validate_cpf(c).ok;
            if (cyclic && t.area() <= 3) by_skel[skeleton(t)].push_back(t);
        }
        for (const auto& [z, ts] : by_skel) {
            if (ts.size() < 2) continue;
            for (size_t i = 1; i < ts.size(); ++i) {
                long s0 = tuple_stats(ts[0]).stat, si = tuple_stats(ts[i]).stat;
                for (const auto& chain : ctx.chains(OpKind::h, 1)) {
                    PathTuple a = ts[0], b = ts[i];
                    a.comps.insert(a.comps.end(), chain.comps.begin(), chain.comps.end());
                    b.comps.insert(b.comps.end(), chain.comps.begin(), chain.comps.end());
                    expect(tuple_stats(a).stat - s0 == tuple_stats(b).stat - si,
                           fmt_mnk(m, n, 0) + ": stat increment differs on equal skeletons " +
                               skeleton_str(z));
                }
            }
        }
    }
}

void check_cycling(const CheckParams& p, CheckReport& rep) {
    auto grid = grid_or(p, {{2, 1}, {3, 2}, {1, 2}});
    int A = p.area_budget < 0 ? 4 : p.area_budget;
    int N = p.labels < 0 ? 3 : p.labels;
    for (auto [m, n] : grid) {
        auto paths = enumerate_cpf(m, n, A, N);
        // up: bijection CH_1 -> hat CH_1 raising area by one
        std::set<LabeledPath> images;
        for (const auto& pi : paths) {
            LabeledPath u = up(pi);
            expect(validate_cpf(u).ok, fmt_mnk(m, n, 0) + ": up image is not a cPF");
            expect(u.area() == pi.area() + 1, fmt_mnk(m, n, 0) + ": up does not raise area by 1");
            expect(u.aseq(0) > 0, fmt_mnk(m, n, 0) + ": up image passes through the origin");
            expect(images.insert(u).second, fmt_mnk(m, n, 0) + ": up is not injective");
        }
        std::set<LabeledPath> hat;
        for (const auto& pi : enumerate_cpf(m, n, A + 1, N))
            if (pi.aseq(0) > 0) hat.insert(pi);
        expect(images == hat, fmt_mnk(m, n, 0) + ": up images differ from hat paths");
        // cycling relation on random tuples
        std::mt19937 rng(555 + m + 10 * n);
        std::uniform_int_distribution<size_t> pick(0, paths.size() - 1);
        int kmax = p.k > 0 ? p.k : 3;
        for (int k = 2; k <= kmax; ++k)
            for (int trial = 0; trial < 150; ++trial) {
                PathTuple t;
                t.m = m;
                t.n = n;
                for (int i = 0; i < k; ++i) t.comps.push_back(paths[pick(rng)]);
                PathTuple cycled;
                cycled.m = m;
                cycled.n = n;
                cycled.comps.push_back(up(t.comps.back()));
                for (int i = 0; i + 1 < k; ++i) cycled.comps.push_back(t.comps[i]);
                expect(tuple_stats(t).stat == tuple_stats(cycled).stat,
                       fmt_mnk(m, n, k) + ": cycling relation fails");
            }
    }
}

}  // namespace

const std::vector<std::string>& check_names() {
    static std::vector<std::string> names{"sw",   "qsw",          "calpha", "gamma",
                                          "nabla-n1", "jacobi-trudi", "lw",     "main",
                                          "wilson",   "cycling",      "resheet", "counts"};
    return names;
}

CheckReport run_check(const std::string& name, const CheckParams& p) {
    const auto& names = check_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw UnknownCheck(name);
    CheckReport rep;
    rep.name = name;
    if (p.m) rep.params.push_back({"m", std::to_string(p.m)});
    if (p.n) rep.params.push_back({"n", std::to_string(p.n)});
    if (p.k) rep.params.push_back({"k", std::to_string(p.k)});
    if (p.alpha) rep.params.push_back({"alpha", comp_str(*p.alpha)});
    if (p.lambda) rep.params.push_back({"lambda", comp_str(*p.lambda)});
    if (p.area_budget >= 0) rep.params.push_back({"area_budget", std::to_string(p.area_budget)});
    if (p.labels >= 0) rep.params.push_back({"labels", std::to_string(p.labels)});
    rep.params.push_back({"guard", std::to_string(p.guard)});
    auto start = std::chrono::steady_clock::now();
    try {
        if (name == "sw")
            check_sw(p, rep);
        else if (name == "qsw")
            check_qsw(p, rep);
        else if (name == "calpha")
            check_calpha(p, rep);
        else if (name == "gamma")
            check_gamma(p, rep);
        else if (name == "counts")
            check_counts(p, rep);
        else if (name == "nabla-n1")
            check_nabla_n1(p, rep);
        else if (name == "jacobi-trudi")
            check_jacobi_trudi(p, rep, false);
        else if (name == "lw")
            check_jacobi_trudi(p, rep, true);
        else if (name == "main")
            check_main(p, rep);
        else if (name == "wilson")
            check_wilson(p, rep);
        else if (name == "cycling")
            check_cycling(p, rep);
        else if (name == "resheet")
            check_resheet(p, rep);
        rep.verdict = "pass";
    } catch (const Failure& f) {
        rep.verdict = "fail";
        rep.witness = f.witness;
    }
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
    return rep;
}

std::string report_line(const CheckReport& r) {
    std::ostringstream os;
    os << (r.verdict == "pass" ? "[PASS] " : r.verdict == "fail" ? "[FAIL] " : "[SKIP] ");
    os << r.name;
    for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
    os << "  (" << (long)r.millis << " ms)";
    if (!r.witness.empty()) os << "\n       witness: " << r.witness;
    for (const auto& w : r.warnings) os << "\n       warning: " << w;
    return os.str();
}

}  // namespace cparking
