#include "cparking/ehaops.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cparking {

std::string OperatorSymbol::str() const {
    const char* base = kind == OpKind::h ? "h" : kind == OpKind::hhat ? "hhat" : "hbar";
    return std::string(base) + "_" + std::to_string(index);
}

std::string word_str(const OpWord& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << w[i].str();
    }
    return os.str();
}

SignedWordSum det_expand(const OperatorMatrix& M) {
    const int l = M.size();
    std::map<OpWord, QTCoeff> acc;
    std::vector<int> rows(l);
    std::iota(rows.begin(), rows.end(), 0);
    std::sort(rows.begin(), rows.end());
    do {
        int invs = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (rows[i] > rows[j]) ++invs;
        OpWord word;
        bool zero = false;
        for (int c = 0; c < l && !zero; ++c) {
            OperatorSymbol s = M.entry(rows[c], c);
            if (s.is_zero())
                zero = true;
            else if (!s.is_identity())
                word.push_back(s);
        }
        if (zero) continue;
        QTCoeff sign(invs % 2 == 0 ? 1 : -1);
        auto it = acc.find(word);
        if (it == acc.end())
            acc.emplace(std::move(word), sign);
        else {
            it->second += sign;
            if (it->second.is_zero()) acc.erase(it);
        }
    } while (std::next_permutation(rows.begin(), rows.end()));
    SignedWordSum out;
    for (auto& [w, c] : acc) out.push_back({c, w});
    return out;
}

TupleSeries TupleSeries::unit(int m, int n, int A, int nlabels) {
    TupleSeries s;
    s.m = m;
    s.n = n;
    s.area_budget = A;
    s.label_budget = nlabels;
    PathTuple empty;
    empty.m = m;
    empty.n = n;
    s.terms.emplace(std::move(empty), QTCoeff(1));
    return s;
}

TupleSeries& TupleSeries::operator+=(const TupleSeries& o) {
    for (const auto& [t, c] : o.terms) {
        auto it = terms.find(t);
        if (it == terms.end())
            terms.emplace(t, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return *this;
}

TupleSeries TupleSeries::operator*(const QTCoeff& c) const {
    TupleSeries r = *this;
    r.terms.clear();
    if (c.is_zero()) return r;
    for (const auto& [t, v] : terms) r.terms.emplace(t, v * c);
    return r;
}

const std::vector<PathTuple>& ChainContext::chains(OpKind kind, int len) {
    auto key = std::make_pair(kind, len);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    ChainKind ck = kind == OpKind::h     ? ChainKind::all
                   : kind == OpKind::hhat ? ChainKind::hat
                                          : ChainKind::bar;
    auto chains = enumerate_chains(ck, len, m_, n_, area_budget_, label_budget_);
    return memo_.emplace(key, std::move(chains)).first->second;
}

TupleSeries apply_symbol(const OperatorSymbol& s, const TupleSeries& x, ChainContext& ctx) {
    if (s.is_zero()) {
        TupleSeries zero = x;
        zero.terms.clear();
        return zero;
    }
    if (s.is_identity()) return x;
    TupleSeries out = x;
    out.terms.clear();
    const auto& chains = ctx.chains(s.kind, s.index);
    for (const auto& [tup, coeff] : x.terms) {
        const int base_area = tup.area();
        const long base_stat = tup.order() == 0 ? 0 : tuple_stats(tup).stat;
        for (const auto& chain : chains) {
            if (base_area + chain.area() > ctx.area_budget()) continue;
            PathTuple cat = tup;
            cat.comps.insert(cat.comps.end(), chain.comps.begin(), chain.comps.end());
            long dstat = tuple_stats(cat).stat - base_stat;
            QTCoeff add = coeff * QTCoeff::q_power((int)dstat);
            auto it = out.terms.find(cat);
            if (it == out.terms.end())
                out.terms.emplace(std::move(cat), std::move(add));
            else {
                it->second += add;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    }
    return out;
}

TupleSeries apply_word(const OpWord& w, const TupleSeries& x, ChainContext& ctx) {
    TupleSeries cur = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply_symbol(*it, cur, ctx);
    return cur;
}

TupleSeries apply_word_sum(const SignedWordSum& ws, const TupleSeries& x, ChainContext& ctx) {
    TupleSeries acc = x;
    acc.terms.clear();
    for (const auto& [scalar, word] : ws) acc += apply_word(word, x, ctx) * scalar;
    return acc;
}

TupleSeries det_apply(const OperatorMatrix& M, const TupleSeries& x, ChainContext& ctx) {
    return apply_word_sum(det_expand(M), x, ctx);
}

std::map<Skeleton, QTCoeff> skeleton_projection(const TupleSeries& x) {
    std::map<Skeleton, QTCoeff> out;
    for (const auto& [t, c] : x.terms) {
        Skeleton z = skeleton(t);
        auto it = out.find(z);
        if (it == out.end())
            out.emplace(std::move(z), c);
        else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

OperatorMatrix build_H(const Composition& alpha) {
    const int k = part_size(alpha);
    std::vector<char> is_bar(k + 1, 0);
    int sum = 0;
    for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) {
        sum += *it;
        is_bar[sum] = 1;
    }
    OperatorMatrix M;
    for (int i = 1; i <= k; ++i) M.first_row.push_back(is_bar[i] ? op_hbar(i) : op_hhat(i));
    return M;
}

OperatorMatrix build_J(const Partition& lambda) {
    const int l = (int)lambda.size();
    const int l1 = lambda.empty() ? 0 : lambda[0];
    OperatorMatrix M;
    for (int i = 0; i < l; ++i) M.first_row.push_back(op_h(lambda[l - 1 - i] + i));
    for (int i = l; i < l1 + l; ++i) M.first_row.push_back(op_hhat(i));
    return M;
}

JPrime build_Jprime(const Partition& lambda) {
    if (lambda.empty()) throw std::domain_error("build_Jprime: empty partition");
    const int l = (int)lambda.size();
    const int l1 = lambda[0];
    const int s = durfee(lambda);
    JPrime out;
    for (int i = 0; i < s; ++i) out.adj += lambda[i] - (i + 1);
    std::vector<int> vec;
    for (int i = 0; i < l; ++i) vec.push_back(lambda[i] + l - (i + 1));
    for (int i = l; i <= l1 + l - 1; ++i) vec.push_back(i);
    std::sort(vec.begin(), vec.end());
    out.v = vec;
    for (int i = 0; i + 1 < (int)vec.size(); ++i)
        if (vec[i] == vec[i + 1]) out.piv.push_back(i + 1);  // 1-based
    for (int i = 0; i < (int)vec.size(); ++i) out.bo.push_back(s + 1 + i - vec[i]);
    std::vector<char> pivot(vec.size() + 1, 0);
    for (int p : out.piv) pivot[p] = 1;
    for (int i = 1; i <= (int)vec.size(); ++i) {
        if (i <= l - s)
            out.matrix.first_row.push_back(op_h(vec[i - 1]));
        else if (pivot[i])
            out.matrix.first_row.push_back(op_hbar(vec[i - 1]));
        else
            out.matrix.first_row.push_back(op_hhat(vec[i - 1]));
    }
    return out;
}

SignedWordSum phi_operator(const SymPoly& f) {
    PairHExpansion pe = plethysm_y_minus_z(f);
    SignedWordSum out;
    for (const auto& [key, c] : pe.coeffs) {
        if (!c.is_polynomial())
            throw std::domain_error("phi_operator: non-polynomial coefficient");
        SignedWord sw;
        sw.scalar = c.num();
        // within each block the largest index sits rightmost (applies first)
        for (auto it = key.first.rbegin(); it != key.first.rend(); ++it)
            sw.word.push_back(op_h(*it));
        for (auto it = key.second.rbegin(); it != key.second.rend(); ++it)
            sw.word.push_back(op_hhat(*it));
        out.push_back(std::move(sw));
    }
    return out;
}

OmegaSeries OmegaSeries::scaled(const QTCoeff& c) const {
    OmegaSeries r;
    r.nvars = nvars;
    r.t_exact_max = t_exact_max;
    for (const auto& [x, v] : terms) {
        QTCoeff p = v * c;
        if (!p.is_zero()) r.terms.emplace(x, std::move(p));
    }
    return r;
}

void OmegaSeries::add(const std::vector<int>& xexp, const QTCoeff& c) {
    if (c.is_zero()) return;
    auto it = terms.find(xexp);
    if (it == terms.end())
        terms.emplace(xexp, c);
    else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

QTCoeff OmegaSeries::coeff(const std::vector<int>& xexp, int tdeg) const {
    auto it = terms.find(xexp);
    return it == terms.end() ? QTCoeff() : it->second.t_slice(tdeg);
}

bool OmegaSeries::window_equal(const OmegaSeries& o, int t_lo, int t_hi,
                               std::string* witness) const {
    std::vector<std::vector<int>> keys;
    for (const auto& [x, v] : terms) keys.push_back(x);
    for (const auto& [x, v] : o.terms)
        if (!terms.count(x)) keys.push_back(x);
    for (const auto& x : keys)
        for (int d = t_lo; d <= t_hi; ++d) {
            QTCoeff a = coeff(x, d), b = o.coeff(x, d);
            if (a != b) {
                if (witness) {
                    std::ostringstream os;
                    os << "t^" << d << " x^[";
                    for (size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
                    os << "]: " << a.str() << " vs " << b.str();
                    *witness = os.str();
                }
                return false;
            }
        }
    return true;
}

std::vector<int> label_exponents(const PathTuple& t, int nvars) {
    std::vector<int> e(nvars, 0);
    for (const auto& comp : t.comps)
        for (int lab : comp.labels) e.at(lab - 1)++;
    return e;
}

OmegaSeries omega_spec(const TupleSeries& x) {
    OmegaSeries out;
    out.nvars = x.label_budget;
    out.t_exact_max = x.area_budget;
    for (const auto& [t, c] : x.terms)
        out.add(label_exponents(t, out.nvars), c * QTCoeff::t_power(t.area()));
    return out;
}

bool omega_matches_sympoly(const OmegaSeries& s, const SymPoly& f, int t_lo, int t_hi,
                           std::string* witness) {
    OmegaSeries g;
    g.nvars = s.nvars;
    g.t_exact_max = t_hi;
    for (const auto& [x, v] : f.terms()) {
        if (!v.is_polynomial()) {
            if (witness) *witness = "algebraic side is not polynomial in q,t";
            return false;
        }
        // expand the orbit to explicit monomials
        std::vector<int> e(x);
        e.resize(std::max((int)e.size(), s.nvars), 0);
        if ((int)e.size() > s.nvars) {
            if (witness) *witness = "variable counts differ";
            return false;
        }
        std::sort(e.begin(), e.end());
        do {
            g.add(e, v.num());
        } while (std::next_permutation(e.begin(), e.end()));
    }
    return s.window_equal(g, t_lo, t_hi, witness);
}

OmegaSeries rhs_main(int m, int n, int k, int A, int nlabels) {
    ChainContext ctx(m, n, A, nlabels);
    TupleSeries s = TupleSeries::unit(m, n, A, nlabels);
    for (int i = 0; i < k; ++i) s = apply_symbol(op_h(1), s, ctx);
    return omega_spec(s).scaled(QTCoeff::one_minus_t().pow(k));
}

OmegaSeries rhs_wilson(int m, int n, int k, int A, int nlabels) {
    ChainContext ctx(m, n, A, nlabels);
    TupleSeries s = TupleSeries::unit(m, n, A, nlabels);
    s = apply_symbol(op_hbar(1), s, ctx);
    for (int i = 0; i < k - 1; ++i) s = apply_symbol(op_h(1), s, ctx);
    return omega_spec(s).scaled(QTCoeff::one_minus_t().pow(k - 1));
}

std::map<Partition, QTCoeff> clambda(const SymPoly& f) {
    BasisExpansion h = expand_in_basis(plethysm_one_minus_t(f), Basis::h);
    std::map<Partition, QTCoeff> out;
    for (const auto& [lam, c] : h.coeffs) {
        if (!c.is_polynomial()) throw std::domain_error("clambda: non-polynomial coefficient");
        out.emplace(lam, c.num());
    }
    return out;
}

namespace {

OmegaSeries pf_sum_filtered(int m, int n, int k, int nlabels,
                            const std::optional<Composition>& alpha) {
    OmegaSeries out;
    out.nvars = nlabels;
    out.t_exact_max = max_global_area(m, n, k);
    for (const auto& g : enumerate_pf(m, n, k, nlabels)) {
        if (alpha && touch(g) != *alpha) continue;
        PathTuple t = decompose_pf(g);
        TupleStats st = tuple_stats(t);
        out.add(label_exponents(t, nlabels), QTCoeff::monomial((int)st.stat, t.area()));
    }
    return out;
}

}  // namespace

OmegaSeries pf_touch_sum(int m, int n, int k, const Composition& alpha, int nlabels) {
    return pf_sum_filtered(m, n, k, nlabels, alpha);
}

OmegaSeries pf_full_sum(int m, int n, int k, int nlabels) {
    return pf_sum_filtered(m, n, k, nlabels, std::nullopt);
}

}  // namespace cparking
