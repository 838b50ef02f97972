/**
 * @file qt.hpp
 * @brief Exact arithmetic in q and t: sparse Laurent polynomials over
 *        arbitrary-precision rationals, and reduced rational functions.
 *
 * QTCoeff is the universal coefficient domain of the project: a sparse
 * Laurent polynomial in q,t with mpq_class coefficients, kept in canonical
 * form (no zero terms). QTRatFun is a reduced fraction of two QTCoeff with
 * a fixed normalization, so equality is structural.
 */
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace cparking {

using Rat = mpq_class;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("DivisionByZero") {}
};
struct PoleAtZero : std::domain_error {
    PoleAtZero() : std::domain_error("PoleAtZero: q0 = 0 meets a negative exponent") {}
};

/// Sparse Laurent polynomial in q,t over Q. q-exponents may be negative;
/// t-exponents are nonnegative on every combinatorial path (signed ones are
/// tolerated internally so the type can serve QTRatFun numerators).
class QTCoeff {
public:
    using Key = std::pair<int, int>;  // (q exponent, t exponent)

    QTCoeff() = default;
    QTCoeff(long v) { if (v != 0) terms_[{0, 0}] = Rat(v); }
    QTCoeff(Rat v) {
        v.canonicalize();
        if (v != 0) terms_[{0, 0}] = std::move(v);
    }

    static QTCoeff monomial(int qe, int te, Rat c = Rat(1));
    static QTCoeff q_power(int e) { return monomial(e, 0); }
    static QTCoeff t_power(int e) { return monomial(0, e); }
    /// (-q)^e, e may be negative.
    static QTCoeff neg_q_power(int e);
    static QTCoeff one_minus_t() { QTCoeff r(1); r += monomial(0, 1, Rat(-1)); return r; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<Key, Rat>& terms() const { return terms_; }

    QTCoeff& operator+=(const QTCoeff& o);
    QTCoeff& operator-=(const QTCoeff& o);
    QTCoeff operator-() const;
    friend QTCoeff operator+(QTCoeff a, const QTCoeff& b) { a += b; return a; }
    friend QTCoeff operator-(QTCoeff a, const QTCoeff& b) { a -= b; return a; }
    friend QTCoeff operator*(const QTCoeff& a, const QTCoeff& b);
    QTCoeff& operator*=(const QTCoeff& o) { *this = *this * o; return *this; }
    friend bool operator==(const QTCoeff& a, const QTCoeff& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QTCoeff& a, const QTCoeff& b) { return !(a == b); }
    friend bool operator<(const QTCoeff& a, const QTCoeff& b);

    /// Exact coefficient of q^qe t^te, zero if absent.
    Rat coeff(int qe, int te) const;
    /// The pure-q Laurent polynomial sitting in front of t^te.
    QTCoeff t_slice(int te) const;
    int t_degree_max() const;  // -1 for zero
    int q_degree_min() const;  // 0 for zero

    /// Exact evaluation at q=q0, t=t0. Throws PoleAtZero when q0 (or t0) is
    /// zero and a matching negative exponent is present.
    Rat specialize(const Rat& q0, const Rat& t0) const;

    QTCoeff pow(int e) const;  // e >= 0

    std::string str() const;

private:
    void set(int qe, int te, const Rat& c);
    std::map<Key, Rat> terms_;
};

/// Reduced fraction num/den of Laurent polynomials. Canonical form: den is a
/// true polynomial with minimal exponents (0,0), rational content 1 and
/// positive lexicographically-leading coefficient; the gcd of num and den is
/// trivial. Equality is structural.
class QTRatFun {
public:
    QTRatFun() : num_(), den_(1) {}
    QTRatFun(long v) : num_(v), den_(1) {}
    QTRatFun(const Rat& v) : num_(v), den_(1) {}
    QTRatFun(const QTCoeff& p) : num_(p), den_(1) {}
    QTRatFun(QTCoeff num, QTCoeff den);

    const QTCoeff& num() const { return num_; }
    const QTCoeff& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend QTRatFun operator+(const QTRatFun& a, const QTRatFun& b);
    friend QTRatFun operator-(const QTRatFun& a, const QTRatFun& b);
    friend QTRatFun operator*(const QTRatFun& a, const QTRatFun& b);
    friend QTRatFun operator/(const QTRatFun& a, const QTRatFun& b);
    QTRatFun operator-() const;
    QTRatFun& operator+=(const QTRatFun& o) { *this = *this + o; return *this; }
    QTRatFun& operator-=(const QTRatFun& o) { *this = *this - o; return *this; }
    QTRatFun& operator*=(const QTRatFun& o) { *this = *this * o; return *this; }
    QTRatFun& operator/=(const QTRatFun& o) { *this = *this / o; return *this; }
    friend bool operator==(const QTRatFun& a, const QTRatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QTRatFun& a, const QTRatFun& b) { return !(a == b); }
    friend bool operator<(const QTRatFun& a, const QTRatFun& b);

    std::string str() const;

private:
    void reduce();
    QTCoeff num_, den_;
};

}  // namespace cparking
