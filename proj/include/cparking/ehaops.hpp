/**
 * @file ehaops.hpp
 * @brief The chain-appending operators h / h-hat / h-bar on truncated tuple
 *        series, noncommutative first-row determinants, the matrices
 *        H(alpha), J(lambda), J'(lambda), the map Phi, the Omega
 *        specialization, and the generating-function right-hand sides.
 *
 * Series live at tuple level; skeleton projection happens only when
 * comparing identities. Operator words act right-to-left onto the unit
 * series; the telescoped coefficient of a tuple reached from 1 is
 * q^{stat(tuple)}.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cparking/bijection.hpp"
#include "cparking/paths.hpp"
#include "cparking/sympoly.hpp"

namespace cparking {

enum class OpKind { h, hhat, hbar };

struct OperatorSymbol {
    OpKind kind = OpKind::h;
    int index = 0;

    bool is_zero() const { return index < 0 || (index == 0 && kind == OpKind::hbar); }
    bool is_identity() const { return index == 0 && kind != OpKind::hbar; }
    friend bool operator==(const OperatorSymbol& a, const OperatorSymbol& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator<(const OperatorSymbol& a, const OperatorSymbol& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.index < b.index;
    }
    std::string str() const;
};

inline OperatorSymbol op_h(int i) { return {OpKind::h, i}; }
inline OperatorSymbol op_hhat(int i) { return {OpKind::hhat, i}; }
inline OperatorSymbol op_hbar(int i) { return {OpKind::hbar, i}; }

using OpWord = std::vector<OperatorSymbol>;  // applied right-to-left onto 1
std::string word_str(const OpWord& w);

/// Square matrix determined by its first row: entry (r,c) lowers the index
/// of first_row[c] by r (0-based rows).
struct OperatorMatrix {
    OpWord first_row;
    OperatorSymbol entry(int row, int col) const {
        OperatorSymbol s = first_row[col];
        s.index -= row;
        return s;
    }
    int size() const { return (int)first_row.size(); }
};

struct SignedWord {
    QTCoeff scalar;
    OpWord word;
};
using SignedWordSum = std::vector<SignedWord>;

/// det(A) = sum over permutations w of (-1)^w A_{w1,1}...A_{wl,l}; words with
/// a vanishing factor are dropped, identity factors removed, duplicates
/// merged. Deterministic order.
SignedWordSum det_expand(const OperatorMatrix& M);

/// Truncated element of the skeleton algebra, tracked at tuple level.
struct TupleSeries {
    int m = 0, n = 0;
    int area_budget = 0;
    int label_budget = 0;
    std::map<PathTuple, QTCoeff> terms;

    static TupleSeries unit(int m, int n, int A, int nlabels);
    TupleSeries& operator+=(const TupleSeries& o);
    TupleSeries operator*(const QTCoeff& c) const;
    bool operator==(const TupleSeries& o) const { return terms == o.terms; }
};

/// Chain cache shared by word evaluations under one budget.
class ChainContext {
public:
    ChainContext(int m, int n, int A, int nlabels)
        : m_(m), n_(n), area_budget_(A), label_budget_(nlabels) {}
    const std::vector<PathTuple>& chains(OpKind kind, int len);
    int m() const { return m_; }
    int n() const { return n_; }
    int area_budget() const { return area_budget_; }
    int label_budget() const { return label_budget_; }

private:
    int m_, n_, area_budget_, label_budget_;
    std::map<std::pair<OpKind, int>, std::vector<PathTuple>> memo_;
};

TupleSeries apply_symbol(const OperatorSymbol& s, const TupleSeries& x, ChainContext& ctx);
TupleSeries apply_word(const OpWord& w, const TupleSeries& x, ChainContext& ctx);
TupleSeries apply_word_sum(const SignedWordSum& ws, const TupleSeries& x, ChainContext& ctx);
TupleSeries det_apply(const OperatorMatrix& M, const TupleSeries& x, ChainContext& ctx);

/// Projection to the skeleton basis (sums coefficients over tuples with
/// equal skeleton).
std::map<Skeleton, QTCoeff> skeleton_projection(const TupleSeries& x);

/// H(alpha): column i is hbar_i when i is a partial sum of the parts of
/// alpha read from the end, else hhat_i.
OperatorMatrix build_H(const Composition& alpha);

/// J(lambda) = [h_{l_l}, h_{l_{l-1}+1}, ..., h_{l_1+l-1}, hhat_l, ..., hhat_{l_1+l-1}].
OperatorMatrix build_J(const Partition& lambda);

struct JPrime {
    OperatorMatrix matrix;
    int adj = 0;
    std::vector<int> v, piv, bo;
};
JPrime build_Jprime(const Partition& lambda);

/// Phi(f) = sum c_{lambda,mu} h_lambda hhat_mu from the h[Y]h[Z] expansion
/// of f[Y-Z]; within each block the largest index applies first.
SignedWordSum phi_operator(const SymPoly& f);

/// Omega: each tuple contributes coeff * t^{area} * x^{labels}. Terms are
/// keyed by the full exponent-by-variable vector (length nvars), so
/// comparisons check every monomial rather than assuming symmetry; q and t
/// live in the coefficient. Exact for t-degrees <= t_exact_max.
struct OmegaSeries {
    int nvars = 0;
    int t_exact_max = 0;
    std::map<std::vector<int>, QTCoeff> terms;

    OmegaSeries scaled(const QTCoeff& c) const;
    void add(const std::vector<int>& xexp, const QTCoeff& c);
    /// Pure-q coefficient polynomial of x^xexp t^tdeg.
    QTCoeff coeff(const std::vector<int>& xexp, int tdeg) const;
    bool window_equal(const OmegaSeries& o, int t_lo, int t_hi, std::string* witness) const;
};

OmegaSeries omega_spec(const TupleSeries& x);

/// Compare against an exact symmetric polynomial (t in the coefficients) on
/// t-degrees t_lo..t_hi; a mismatch witness is written when given.
bool omega_matches_sympoly(const OmegaSeries& s, const SymPoly& f, int t_lo, int t_hi,
                           std::string* witness);

/// (1-t)^k Omega(h_{(1^k)} . 1), truncated at t-degree A.
OmegaSeries rhs_main(int m, int n, int k, int A, int nlabels);
/// (1-t)^{k-1} Omega(h_{(1^{k-1})} hbar_1 . 1).
OmegaSeries rhs_wilson(int m, int n, int k, int A, int nlabels);

/// c_lambda = coefficient of h_lambda[Y] in f[(1-t)Y].
std::map<Partition, QTCoeff> clambda(const SymPoly& f);

/// Exact finite sum over global parking functions with the given touch.
OmegaSeries pf_touch_sum(int m, int n, int k, const Composition& alpha, int nlabels);
/// Sum over all global parking functions of order k.
OmegaSeries pf_full_sum(int m, int n, int k, int nlabels);

}  // namespace cparking
