/**
 * @file sympoly.hpp
 * @brief Symmetric polynomials in N variables over Q(q,t): the m/e/h/p/s
 *        bases, exact basis conversion, Hall inner product, omega, the
 *        e_i-perp skewing rule, and the plethystic substitutions used here.
 *
 * A SymPoly stores one coefficient per S_N-orbit, keyed by the weakly
 * decreasing exponent vector. A degree-d symmetric function is faithfully
 * represented once d <= N.
 */
#pragma once

#include <map>
#include <vector>

#include "cparking/partition.hpp"
#include "cparking/qt.hpp"

namespace cparking {

struct DegreeExceedsVars : std::domain_error {
    DegreeExceedsVars() : std::domain_error("DegreeExceedsVars") {}
};
struct DegreeMismatch : std::domain_error {
    DegreeMismatch() : std::domain_error("DegreeMismatch") {}
};
struct UnsupportedAlphabet : std::domain_error {
    UnsupportedAlphabet() : std::domain_error("UnsupportedAlphabet") {}
};
struct TooFewVariables : std::domain_error {
    TooFewVariables() : std::domain_error("TooFewVariables") {}
};

class SymPoly {
public:
    explicit SymPoly(int nvars = 0) : nvars_(nvars) {}
    static SymPoly constant(int nvars, QTRatFun c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max total degree, -1 if zero
    const std::map<Partition, QTRatFun>& terms() const { return terms_; }

    /// Accumulate c on the orbit of key (key gets sorted and trimmed).
    void add_term(Partition key, const QTRatFun& c);
    QTRatFun coefficient(const Partition& key) const;
    SymPoly homogeneous_component(int d) const;

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { a += b; return a; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { a -= b; return a; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    SymPoly operator*(const QTRatFun& c) const;
    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

private:
    int nvars_;
    std::map<Partition, QTRatFun> terms_;
};

enum class Basis { m, e, h, p, s };

struct BasisExpansion {
    Basis basis = Basis::m;
    int nvars = 0;
    std::map<Partition, QTRatFun> coeffs;
};

/// The named basis element in N variables. s_lambda = 0 when len(lambda) > N.
SymPoly basis_vector(Basis kind, const Partition& lambda, int N);

/// Exact expansion of a symmetric polynomial; throws DegreeExceedsVars when a
/// homogeneous component has degree > N (the restriction is not faithful).
BasisExpansion expand_in_basis(const SymPoly& f, Basis kind);

SymPoly reassemble(const BasisExpansion& e);

/// Hall inner product via the power-sum basis, <p_l, p_m> = z_l delta.
QTRatFun inner_product(const SymPoly& f, const SymPoly& g);

/// omega on a Schur expansion: transport coefficients lambda -> lambda^t.
BasisExpansion omega_involution(const BasisExpansion& schur);

/// e_i-perp on a Schur expansion: vertical-strip removal rule.
BasisExpansion skew_by_e(int i, const BasisExpansion& schur);

// --- plethystic substitutions -------------------------------------------

/// f[(1-t)X]: p_k -> (1-t^k) p_k.
SymPoly plethysm_one_minus_t(const SymPoly& f);

/// Coefficients c_{lambda,mu} of f[Y-Z] on the basis h_lambda[Y] h_mu[Z].
struct PairHExpansion {
    std::map<std::pair<Partition, Partition>, QTRatFun> coeffs;
};
PairHExpansion plethysm_y_minus_z(const SymPoly& f);

/// f[a - a^{-1}]: Laurent polynomial in a, exponent -> coefficient.
std::map<int, QTRatFun> plethysm_a_minus_ainv(const SymPoly& f);

/// f[X - (q-1)/(qz)] = sum_j g_j[X] z^{-j}; returns j -> g_j (j >= 0).
std::map<int, SymPoly> plethysm_x_minus_qz(const SymPoly& f);

/// Spec-surface dispatcher; throws UnsupportedAlphabet for anything else.
enum class Alphabet { X, OneMinusT_Y, Y_minus_Z, X_minus_qz, A_minus_Ainv };
struct PlethysmResult {
    Alphabet alphabet;
    SymPoly direct;                     // X, OneMinusT_Y
    PairHExpansion pair;                // Y_minus_Z
    std::map<int, SymPoly> z_graded;    // X_minus_qz
    std::map<int, QTRatFun> a_laurent;  // A_minus_Ainv
};
PlethysmResult plethysm(const SymPoly& f, Alphabet alphabet);

/// Exact expansion coefficients of p_alpha in the h basis (variable-count
/// independent); memoized per degree.
const std::map<Partition, QTRatFun>& p_to_h(const Partition& alpha);

}  // namespace cparking
