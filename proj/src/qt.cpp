#include "cparking/qt.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace cparking {

QTCoeff QTCoeff::monomial(int qe, int te, Rat c) {
    QTCoeff r;
    c.canonicalize();
    if (c != 0) r.terms_[{qe, te}] = std::move(c);
    return r;
}

QTCoeff QTCoeff::neg_q_power(int e) {
    return monomial(e, 0, (e % 2 == 0) ? Rat(1) : Rat(-1));
}

bool QTCoeff::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} && terms_.begin()->second == 1;
}

void QTCoeff::set(int qe, int te, const Rat& c) {
    if (c == 0)
        terms_.erase({qe, te});
    else
        terms_[{qe, te}] = c;
}

QTCoeff& QTCoeff::operator+=(const QTCoeff& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QTCoeff& QTCoeff::operator-=(const QTCoeff& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QTCoeff QTCoeff::operator-() const {
    QTCoeff r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

QTCoeff operator*(const QTCoeff& a, const QTCoeff& b) {
    QTCoeff r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            QTCoeff::Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                Rat c = ca * cb;
                if (c != 0) r.terms_.emplace(k, std::move(c));
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

bool operator<(const QTCoeff& a, const QTCoeff& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

Rat QTCoeff::coeff(int qe, int te) const {
    auto it = terms_.find({qe, te});
    return it == terms_.end() ? Rat(0) : it->second;
}

QTCoeff QTCoeff::t_slice(int te) const {
    QTCoeff r;
    for (const auto& [k, c] : terms_)
        if (k.second == te) r.terms_.emplace(Key{k.first, 0}, c);
    return r;
}

int QTCoeff::t_degree_max() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

int QTCoeff::q_degree_min() const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.first;
    for (const auto& [k, c] : terms_) d = std::min(d, k.first);
    return d;
}

namespace {
Rat rat_int_pow(const Rat& base, int e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long ue = inv ? -(long)e : (long)e;
    if (inv && base == 0) throw PoleAtZero();
    Rat r(1), b = base;
    while (ue) {
        if (ue & 1) r *= b;
        b *= b;
        ue >>= 1;
    }
    if (inv) return Rat(1) / r;
    return r;
}
}  // namespace

Rat QTCoeff::specialize(const Rat& q0, const Rat& t0) const {
    Rat acc(0);
    for (const auto& [k, c] : terms_) {
        if (q0 == 0 && k.first < 0) throw PoleAtZero();
        if (t0 == 0 && k.second < 0) throw PoleAtZero();
        acc += c * rat_int_pow(q0, k.first) * rat_int_pow(t0, k.second);
    }
    return acc;
}

QTCoeff QTCoeff::pow(int e) const {
    if (e < 0) throw std::domain_error("QTCoeff::pow: negative exponent");
    QTCoeff r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

std::string QTCoeff::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool have_var = k.first != 0 || k.second != 0;
        if (ac != 1 || !have_var) {
            os << ac.get_str();
            if (have_var) os << "*";
        }
        if (k.first != 0) {
            os << "q";
            if (k.first != 1) os << "^" << k.first;
        }
        if (k.second != 0) {
            if (k.first != 0) os << "*";
            os << "t";
            if (k.second != 1) os << "^" << k.second;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// QTRatFun reduction: exact bivariate gcd over Q[q][t].
// ---------------------------------------------------------------------------

namespace {

// Dense univariate polynomial over Q, coeffs[i] = coefficient of q^i.
using UniQ = std::vector<Rat>;

void uni_trim(UniQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UniQ uni_mul(const UniQ& a, const UniQ& b) {
    if (a.empty() || b.empty()) return {};
    UniQ r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}

UniQ uni_sub(UniQ a, const UniQ& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    uni_trim(a);
    return a;
}

// Remainder of a by b (b nonzero), exact arithmetic over Q.
UniQ uni_rem(UniQ a, const UniQ& b) {
    uni_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        uni_trim(a);
    }
    return a;
}

// Exact division; caller guarantees divisibility.
UniQ uni_div(UniQ a, const UniQ& b) {
    UniQ q;
    if (a.size() < b.size()) return {};
    q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        uni_trim(a);
    }
    return q;
}

UniQ uni_gcd(UniQ a, UniQ b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniQ r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;  // monic
    }
    return a;
}

// Bivariate polynomial as t-exponent -> q-polynomial.
using BiPoly = std::map<int, UniQ>;

bool bi_is_zero(const BiPoly& p) { return p.empty(); }

int bi_deg_t(const BiPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }

BiPoly bi_mul(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ta, pa] : a)
        for (const auto& [tb, pb] : b) {
            UniQ prod = uni_mul(pa, pb);
            if (prod.empty()) continue;
            auto it = r.find(ta + tb);
            if (it == r.end())
                r[ta + tb] = std::move(prod);
            else {
                UniQ s = it->second;
                if (s.size() < prod.size()) s.resize(prod.size(), Rat(0));
                for (size_t i = 0; i < prod.size(); ++i) s[i] += prod[i];
                uni_trim(s);
                if (s.empty())
                    r.erase(it);
                else
                    it->second = std::move(s);
            }
        }
    return r;
}

BiPoly bi_scale(const BiPoly& a, const UniQ& c) {
    BiPoly r;
    for (const auto& [te, p] : a) {
        UniQ prod = uni_mul(p, c);
        if (!prod.empty()) r[te] = std::move(prod);
    }
    return r;
}

BiPoly bi_sub(BiPoly a, const BiPoly& b) {
    for (const auto& [te, p] : b) {
        auto it = a.find(te);
        if (it == a.end()) {
            UniQ neg = p;
            for (auto& c : neg) c = -c;
            a[te] = std::move(neg);
        } else {
            it->second = uni_sub(it->second, p);
            if (it->second.empty()) a.erase(it);
        }
    }
    return a;
}

UniQ bi_content(const BiPoly& p) {
    UniQ g;
    for (const auto& [te, c] : p) g = uni_gcd(g, c);
    return g;
}

BiPoly bi_div_content(const BiPoly& p, const UniQ& g) {
    if (g.size() == 1 && g[0] == 1) return p;
    BiPoly r;
    for (const auto& [te, c] : p) r[te] = uni_div(c, g);
    return r;
}

// Pseudo-remainder of a by b in (Q[q])[t].
BiPoly bi_prem(BiPoly a, const BiPoly& b) {
    int db = bi_deg_t(b);
    const UniQ& lb = b.rbegin()->second;
    while (!a.empty() && bi_deg_t(a) >= db) {
        int da = bi_deg_t(a);
        UniQ la = a.rbegin()->second;
        // a <- lb*a - la * t^(da-db) * b
        a = bi_scale(a, lb);
        BiPoly shifted;
        for (const auto& [te, c] : b) shifted[te + (da - db)] = c;
        a = bi_sub(a, bi_scale(shifted, la));
    }
    return a;
}

BiPoly bi_gcd(BiPoly a, BiPoly b) {
    if (bi_is_zero(a)) return b;
    if (bi_is_zero(b)) return a;
    UniQ ca = bi_content(a), cb = bi_content(b);
    UniQ cg = uni_gcd(ca, cb);
    a = bi_div_content(a, ca);
    b = bi_div_content(b, cb);
    if (bi_deg_t(a) < bi_deg_t(b)) std::swap(a, b);
    while (!bi_is_zero(b)) {
        BiPoly r = bi_prem(a, b);
        if (!bi_is_zero(r)) r = bi_div_content(r, bi_content(r));
        a = std::move(b);
        b = std::move(r);
    }
    return bi_mul(a, BiPoly{{0, cg}});
}

// QTCoeff (assumed min exponents >= 0) -> BiPoly
BiPoly to_bipoly(const QTCoeff& p) {
    BiPoly r;
    for (const auto& [k, c] : p.terms()) {
        UniQ& u = r[k.second];
        if ((int)u.size() <= k.first) u.resize(k.first + 1, Rat(0));
        u[k.first] = c;
    }
    for (auto& [te, u] : r) uni_trim(u);
    return r;
}

QTCoeff from_bipoly(const BiPoly& p) {
    QTCoeff r;
    for (const auto& [te, u] : p)
        for (size_t i = 0; i < u.size(); ++i)
            if (u[i] != 0) r += QTCoeff::monomial((int)i, te, u[i]);
    return r;
}

// Exact division num/g in the polynomial ring, caller guarantees divisibility.
BiPoly bi_exact_div(const BiPoly& num, const BiPoly& g) {
    // divide in (Q(q))[t] by repeated leading-term elimination; exactness is
    // guaranteed, so remainders of the q-divisions vanish.
    BiPoly a = num, q;
    int dg = bi_deg_t(g);
    const UniQ& lg = g.rbegin()->second;
    while (!bi_is_zero(a) && bi_deg_t(a) >= dg) {
        int da = bi_deg_t(a);
        UniQ f = uni_div(a.rbegin()->second, lg);
        q[da - dg] = f;
        BiPoly shifted;
        for (const auto& [te, c] : g) shifted[te + (da - dg)] = c;
        a = bi_sub(a, bi_scale(shifted, f));
    }
    return q;
}

void min_exponents(const QTCoeff& p, int& qmin, int& tmin) {
    qmin = 0;
    tmin = 0;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        if (first) {
            qmin = k.first;
            tmin = k.second;
            first = false;
        } else {
            qmin = std::min(qmin, k.first);
            tmin = std::min(tmin, k.second);
        }
    }
}

QTCoeff shift_exponents(const QTCoeff& p, int dq, int dt) {
    return p * QTCoeff::monomial(dq, dt);
}

}  // namespace

QTRatFun::QTRatFun(QTCoeff num, QTCoeff den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    reduce();
}

void QTRatFun::reduce() {
    if (num_.is_zero()) {
        den_ = QTCoeff(1);
        return;
    }
    int nq, nt, dq, dt;
    min_exponents(num_, nq, nt);
    min_exponents(den_, dq, dt);
    QTCoeff n = shift_exponents(num_, -nq, -nt);
    QTCoeff d = shift_exponents(den_, -dq, -dt);
    // net monomial factor carried by the numerator at the end
    int mq = nq - dq, mt = nt - dt;
    if (!d.is_one()) {
        BiPoly bn = to_bipoly(n), bd = to_bipoly(d);
        BiPoly g = bi_gcd(bn, bd);
        bool trivial = g.size() == 1 && g.begin()->first == 0 && g.begin()->second.size() == 1;
        if (!trivial) {
            bn = bi_exact_div(bn, g);
            bd = bi_exact_div(bd, g);
            n = from_bipoly(bn);
            d = from_bipoly(bd);
            // the quotients may have picked up a monomial content again
            int aq, at;
            min_exponents(d, aq, at);
            if (aq != 0 || at != 0) {
                d = shift_exponents(d, -aq, -at);
                mq -= aq;
                mt -= at;
            }
            min_exponents(n, aq, at);
            if (aq < 0 || at < 0) {  // keep n a polynomial; fold into monomial
                int sq = std::min(aq, 0), st = std::min(at, 0);
                n = shift_exponents(n, -sq, -st);
                mq += sq;
                mt += st;
            }
        }
    }
    // normalize: den content 1 with positive lexicographically-leading coeff
    Rat lead = d.terms().rbegin()->second;
    mpz_class gnum = 0, gden = 1;
    for (const auto& [k, c] : d.terms()) {
        gnum = gcd(gnum, c.get_num());
        gden = lcm(gden, c.get_den());
    }
    Rat content(gnum, gden);
    content.canonicalize();
    if (lead < 0) content = -content;
    if (content != 1) {
        QTCoeff inv(Rat(1) / content);
        d = d * inv;
        n = n * inv;
    }
    num_ = shift_exponents(n, mq, mt);
    den_ = d;
}

QTRatFun operator+(const QTRatFun& a, const QTRatFun& b) {
    return QTRatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
QTRatFun operator-(const QTRatFun& a, const QTRatFun& b) {
    return QTRatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
QTRatFun operator*(const QTRatFun& a, const QTRatFun& b) {
    return QTRatFun(a.num_ * b.num_, a.den_ * b.den_);
}
QTRatFun operator/(const QTRatFun& a, const QTRatFun& b) {
    if (b.is_zero()) throw DivisionByZero();
    return QTRatFun(a.num_ * b.den_, a.den_ * b.num_);
}
QTRatFun QTRatFun::operator-() const {
    QTRatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

bool operator<(const QTRatFun& a, const QTRatFun& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
}

std::string QTRatFun::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace cparking
