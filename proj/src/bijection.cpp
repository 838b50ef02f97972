#include "cparking/bijection.hpp"

#include <algorithm>
#include <numeric>

namespace cparking {

Diagnostics validate_global(const GlobalParkingFunction& g) {
    auto fail = [](std::string why) { return Diagnostics{false, std::move(why)}; };
    if (g.k < 1 || g.m < 1 || g.n < 1) return fail("k, m, n must be positive");
    if (std::gcd(g.m, g.n) != 1) return fail("m and n must be coprime");
    const int kn = g.k * g.n;
    if ((int)g.north_x.size() != kn || (int)g.labels.size() != kn)
        return fail("need exactly k*n north steps and labels");
    if (g.north_x[0] != 0) return fail("path must start at the origin");
    for (int i = 0; i + 1 < kn; ++i)
        if (g.north_x[i] > g.north_x[i + 1]) return fail("north_x must be weakly increasing");
    for (int i = 0; i < kn; ++i)
        if (g.n * g.north_x[i] > g.m * i)
            return fail("path dips below my = nx at row " + std::to_string(i + 1));
    if (g.north_x[kn - 1] > g.k * g.m) return fail("path overshoots the rectangle");
    for (int i = 0; i < kn; ++i)
        if (g.labels[i] < 1) return fail("labels must be positive");
    for (int i = 0; i + 1 < kn; ++i)
        if (g.north_x[i] == g.north_x[i + 1] && g.labels[i] >= g.labels[i + 1])
            return fail("labels must strictly increase along consecutive north steps");
    return {};
}

std::vector<CrossingPoint> crossings(const LabeledPath& a, int ext_label_a, const LabeledPath& b,
                                     int ext_label_b) {
    const int n = a.n;
    auto north_x = [&](const LabeledPath& p, int y) {  // y in 1..n+1
        return y <= n ? p.north_x[y - 1] : p.end_x;
    };
    auto north_label = [&](const LabeledPath& p, int ext, int y) {
        return y <= n ? p.labels[y - 1] : ext;
    };
    auto extends = [](int x1, int l1, int x2, int l2) {
        return x1 < x2 || (x1 == x2 && l1 < l2);
    };
    std::vector<CrossingPoint> out;
    for (int y = 1; y <= n; ++y) {
        bool c1 = extends(north_x(a, y), north_label(a, ext_label_a, y), north_x(b, y + 1),
                          north_label(b, ext_label_b, y + 1));
        bool c2 = extends(north_x(b, y), north_label(b, ext_label_b, y), north_x(a, y + 1),
                          north_label(a, ext_label_a, y + 1));
        if (c1 && c2) out.push_back({y, std::min(north_x(a, y + 1), north_x(b, y + 1))});
    }
    return out;
}

long pos_crossings(const PathTuple& t) {
    const int k = t.order();
    std::vector<int> perm = t.perm;
    if (perm.empty()) {
        perm.resize(k);
        std::iota(perm.begin(), perm.end(), 1);
    }
    Diagnostics d = validate_perm(t, perm);
    if (!d.ok) throw InvalidConnectingPermutation(d.reason);
    std::vector<int> ext(k);
    for (int l = 0; l < k; ++l) ext[l] = t.comps[perm[l] - 1].labels.front();
    long total = 0;
    for (int l = 0; l < k; ++l)
        for (int lp = l + 1; lp < k; ++lp) {
            const LabeledPath& a = t.comps[l];
            const LabeledPath& b = t.comps[lp];
            for (const auto& cp : crossings(a, ext[l], b, ext[lp])) {
                int xa = a.north_x[cp.y - 1], xb = b.north_x[cp.y - 1];
                if (xa < xb || (xa == xb && a.labels[cp.y - 1] < b.labels[cp.y - 1])) ++total;
            }
        }
    return total;
}

PathTuple decompose_pf(const GlobalParkingFunction& g) {
    Diagnostics d = validate_global(g);
    if (!d.ok) throw StripConditionViolated(d.reason);
    PathTuple t;
    t.m = g.m;
    t.n = g.n;
    for (int l = 0; l < g.k; ++l) {
        LabeledPath p;
        p.m = g.m;
        p.n = g.n;
        for (int r = 0; r < g.n; ++r) {
            p.north_x.push_back(g.north_x[l * g.n + r] - l * g.m);
            p.labels.push_back(g.labels[l * g.n + r]);
        }
        p.end_x = (l + 1 < g.k ? g.north_x[(l + 1) * g.n] : g.k * g.m) - l * g.m;
        t.comps.push_back(std::move(p));
    }
    t.perm.resize(g.k);
    for (int l = 0; l < g.k; ++l) t.perm[l] = l + 2 <= g.k ? l + 2 : 1;
    return t;
}

GlobalParkingFunction recompose(const PathTuple& t) {
    const int k = t.order();
    if (k < 1) throw StripConditionViolated("empty tuple");
    GlobalParkingFunction g;
    g.k = k;
    g.m = t.m;
    g.n = t.n;
    if (t.comps[0].start_x() != 0) throw StripConditionViolated("first strip must start at origin");
    for (int l = 0; l < k; ++l) {
        const LabeledPath& p = t.comps[l];
        Diagnostics d = validate_path(p);
        if (!d.ok) throw StripConditionViolated("strip " + std::to_string(l + 1) + ": " + d.reason);
        const LabeledPath& next = t.comps[(l + 1) % k];
        if (p.end_x != next.start_x() + t.m)
            throw StripConditionViolated("boundary mismatch after strip " + std::to_string(l + 1));
        if (l + 1 < k && p.ends_with_north() && p.labels.back() >= next.labels.front())
            throw StripConditionViolated("labels must increase across strip boundary " +
                                         std::to_string(l + 1));
        for (int r = 0; r < t.n; ++r) {
            g.north_x.push_back(p.north_x[r] + l * t.m);
            g.labels.push_back(p.labels[r]);
        }
    }
    Diagnostics d = validate_global(g);
    if (!d.ok) throw StripConditionViolated(d.reason);
    return g;
}

TupleStats global_stats(const GlobalParkingFunction& g) { return tuple_stats(decompose_pf(g)); }

Skeleton global_skeleton(const GlobalParkingFunction& g) { return skeleton(decompose_pf(g)); }

Composition touch(const GlobalParkingFunction& g) {
    std::vector<int> contacts{0};
    for (int i = 1; i < g.k; ++i)
        if (g.north_x[i * g.n] == i * g.m) contacts.push_back(i);
    contacts.push_back(g.k);
    Composition out;
    for (size_t j = 0; j + 1 < contacts.size(); ++j) out.push_back(contacts[j + 1] - contacts[j]);
    return out;
}

namespace {

LabeledPath splice(const LabeledPath& before, const LabeledPath& after, int y) {
    LabeledPath r;
    r.m = before.m;
    r.n = before.n;
    r.north_x.assign(before.north_x.begin(), before.north_x.begin() + y);
    r.north_x.insert(r.north_x.end(), after.north_x.begin() + y, after.north_x.end());
    r.labels.assign(before.labels.begin(), before.labels.begin() + y);
    r.labels.insert(r.labels.end(), after.labels.begin() + y, after.labels.end());
    r.end_x = after.end_x;
    return r;
}

std::vector<int> cyclic_ext_labels(const PathTuple& t) {
    const int k = t.order();
    std::vector<int> ext(k);
    for (int l = 0; l < k; ++l) ext[l] = t.comps[(l + 1) % k].labels.front();
    return ext;
}

}  // namespace

GlobalParkingFunction mix(const LabeledPath& tau, const GlobalParkingFunction& g) {
    PathTuple t = decompose_pf(g);
    std::vector<int> ext = cyclic_ext_labels(t);
    const int ext_tau = tau.labels.front();
    int lmax = -1;
    std::vector<CrossingPoint> last_crossings;
    for (int l = 0; l < g.k; ++l) {
        auto cps = crossings(t.comps[l], ext[l], tau, ext_tau);
        if (!cps.empty()) {
            lmax = l;
            last_crossings = std::move(cps);
        }
    }
    if (lmax < 0) throw NoCrossing();
    const CrossingPoint v = last_crossings.back();  // max height

    PathTuple out;
    out.m = g.m;
    out.n = g.n;
    for (int l = 0; l < lmax; ++l) out.comps.push_back(t.comps[l]);
    out.comps.push_back(splice(t.comps[lmax], tau, v.y));
    out.comps.push_back(splice(tau, t.comps[lmax], v.y));
    for (int l = lmax + 1; l < g.k; ++l) out.comps.push_back(t.comps[l]);
    return recompose(out);
}

GlobalParkingFunction gamma(const PathTuple& t) {
    if (t.order() < 1) throw StripConditionViolated("empty tuple");
    PathTuple first;
    first.m = t.m;
    first.n = t.n;
    first.comps.push_back(t.comps[0]);
    GlobalParkingFunction g = recompose(first);
    for (int l = 1; l < t.order(); ++l) g = mix(t.comps[l], g);
    return g;
}

PathTuple psi(const GlobalParkingFunction& g) {
    PathTuple result;
    result.m = g.m;
    result.n = g.n;
    result.comps.resize(g.k);
    GlobalParkingFunction cur = g;
    for (int level = g.k; level >= 2; --level) {
        PathTuple t = decompose_pf(cur);
        std::vector<int> ext = cyclic_ext_labels(t);
        int imax = -1;
        std::vector<CrossingPoint> cps_max;
        for (int i = 0; i + 1 < level; ++i) {
            auto cps = crossings(t.comps[i], ext[i], t.comps[i + 1], ext[i + 1]);
            if (!cps.empty()) {
                imax = i;
                cps_max = std::move(cps);
            }
        }
        if (imax < 0) throw NoCrossing();
        const CrossingPoint v = cps_max.back();
        result.comps[level - 1] = splice(t.comps[imax + 1], t.comps[imax], v.y);
        PathTuple rest;
        rest.m = g.m;
        rest.n = g.n;
        for (int l = 0; l < level; ++l) {
            if (l == imax)
                rest.comps.push_back(splice(t.comps[imax], t.comps[imax + 1], v.y));
            else if (l != imax + 1)
                rest.comps.push_back(t.comps[l]);
        }
        cur = recompose(rest);
    }
    result.comps[0] = decompose_pf(cur).comps[0];
    return result;
}

bool is_ptab(const PathTuple& t) {
    if (t.order() < 1) return false;
    for (const auto& c : t.comps)
        if (!validate_cpf(c).ok) return false;
    if (t.comps[0].start_x() != 0) return false;
    for (int l = 0; l + 1 < t.order(); ++l)
        if (precedes(t.comps[l], t.comps[l + 1])) return false;
    return true;
}

bool matches_alpha(const PathTuple& t, const Composition& alpha) {
    const int k = t.order();
    if (part_size(alpha) != k) return false;
    std::vector<char> want(k, 0);
    int pos = 0;
    for (size_t j = 0; j < alpha.size(); ++j) {
        want[pos] = 1;
        pos += alpha[j];
    }
    for (int l = 0; l < k; ++l) {
        bool zero = t.comps[l].aseq(0) == 0;
        if (zero != (bool)want[l]) return false;
    }
    return true;
}

std::vector<PathTuple> ptab_filter(const std::vector<PathTuple>& tuples,
                                   const Composition& alpha) {
    std::vector<PathTuple> out;
    for (const auto& t : tuples)
        if (is_ptab(t) && matches_alpha(t, alpha)) out.push_back(t);
    return out;
}

std::vector<PathTuple> enumerate_ptab(int m, int n, int k, int A, int nlabels) {
    std::vector<PathTuple> out;
    auto paths = enumerate_cpf(m, n, A, nlabels);
    const int P = (int)paths.size();
    std::vector<int> pick;
    auto dfs = [&](auto&& self, int depth, int used) -> void {
        if (depth == k) {
            PathTuple t;
            t.m = m;
            t.n = n;
            for (int idx : pick) t.comps.push_back(paths[idx]);
            out.push_back(std::move(t));
            return;
        }
        for (int j = 0; j < P; ++j) {
            if (used + paths[j].area() > A) continue;
            if (depth == 0 && paths[j].start_x() != 0) continue;
            if (depth > 0 && precedes(paths[pick.back()], paths[j])) continue;
            pick.push_back(j);
            self(self, depth + 1, used + paths[j].area());
            pick.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GlobalParkingFunction> enumerate_pf(int m, int n, int k, int nlabels) {
    std::vector<GlobalParkingFunction> out;
    const int kn = k * n;
    std::vector<int> gx(kn), labs(kn);
    auto label_dfs = [&](auto&& self, int i) -> void {
        if (i == kn) {
            GlobalParkingFunction g;
            g.k = k;
            g.m = m;
            g.n = n;
            g.north_x = gx;
            g.labels = labs;
            out.push_back(std::move(g));
            return;
        }
        int lo = (i > 0 && gx[i] == gx[i - 1]) ? labs[i - 1] + 1 : 1;
        for (int v = lo; v <= nlabels; ++v) {
            labs[i] = v;
            self(self, i + 1);
        }
    };
    auto shape_dfs = [&](auto&& self, int i) -> void {
        if (i == kn) {
            label_dfs(label_dfs, 0);
            return;
        }
        int lo = i > 0 ? gx[i - 1] : 0;
        int hi = (m * i) / n;
        for (int x = lo; x <= hi; ++x) {
            gx[i] = x;
            self(self, i + 1);
        }
    };
    if (nlabels >= 1) shape_dfs(shape_dfs, 0);
    std::sort(out.begin(), out.end());
    return out;
}

int max_global_area(int m, int n, int k) {
    int a = 0;
    for (int i = 0; i < k * n; ++i) a += (m * i) / n;
    return a;
}

LabeledPath up(const LabeledPath& p) {
    const int m = p.m, n = p.n;
    int a = -1, b = -1;
    for (int bb = 0; bb < n; ++bb)
        if ((1 + (long)m * bb) % n == 0) {
            b = bb;
            a = (int)((1 + (long)m * bb) / n);
            break;
        }
    LabeledPath r;
    r.m = m;
    r.n = n;
    for (int row = 0; row < n; ++row) {
        int src = row + b;
        if (src < n) {
            r.north_x.push_back(p.north_x[src] - a);
            r.labels.push_back(p.labels[src]);
        } else {
            r.north_x.push_back(p.north_x[src - n] + m - a);
            r.labels.push_back(p.labels[src - n]);
        }
    }
    r.end_x = r.north_x.front() + m;
    return r;
}

}  // namespace cparking
