#include "cparking/paths.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cparking {

int LabeledPath::area() const {
    int a = 0;
    for (int r = 0; r < n; ++r) a += aseq(r);
    return a;
}

LabeledPath make_cpf(int m, int n, std::vector<int> north_x, std::vector<int> labels) {
    LabeledPath p;
    p.m = m;
    p.n = n;
    p.end_x = north_x.front() + m;
    p.north_x = std::move(north_x);
    p.labels = std::move(labels);
    return p;
}

int PathTuple::area() const {
    int a = 0;
    for (const auto& c : comps) a += c.area();
    return a;
}

Diagnostics validate_path(const LabeledPath& p) {
    auto fail = [](std::string why) { return Diagnostics{false, std::move(why)}; };
    if (p.m < 1 || p.n < 1) return fail("m and n must be positive");
    if (std::gcd(p.m, p.n) != 1) return fail("m and n must be coprime");
    if ((int)p.north_x.size() != p.n || (int)p.labels.size() != p.n)
        return fail("need exactly n north steps and labels");
    if (p.start_x() > 0) return fail("start_x must be <= 0");
    for (int r = 0; r + 1 < p.n; ++r)
        if (p.north_x[r] > p.north_x[r + 1]) return fail("north_x must be weakly increasing");
    for (int r = 0; r < p.n; ++r)
        if (p.n * p.north_x[r] > p.m * r)
            return fail("path dips below my = nx at row " + std::to_string(r + 1));
    if (p.end_x < p.north_x.back()) return fail("negative east count after last north step");
    if (p.n * p.end_x > p.m * p.n) return fail("end point lies below my = nx");
    for (int r = 0; r < p.n; ++r)
        if (p.labels[r] < 1) return fail("labels must be positive");
    for (int r = 0; r + 1 < p.n; ++r)
        if (p.north_x[r] == p.north_x[r + 1] && p.labels[r] >= p.labels[r + 1])
            return fail("labels must strictly increase along consecutive north steps");
    return {};
}

Diagnostics validate_cpf(const LabeledPath& p) {
    Diagnostics d = validate_path(p);
    if (!d.ok) return d;
    if (!p.is_cyclic()) return {false, "east-step count differs from m"};
    if (p.ends_with_north() && p.labels.front() <= p.labels.back())
        return {false, "cyclic label condition: first label must exceed last"};
    return {};
}

Diagnostics validate_perm(const PathTuple& t, const std::vector<int>& perm) {
    const int k = t.order();
    if ((int)perm.size() != k) return {false, "permutation size mismatch"};
    std::vector<char> seen(k + 1, 0);
    for (int v : perm) {
        if (v < 1 || v > k || seen[v]) return {false, "not a permutation"};
        seen[v] = 1;
    }
    for (int l = 0; l < k; ++l) {
        const LabeledPath& a = t.comps[l];
        const LabeledPath& b = t.comps[perm[l] - 1];
        if (a.end_x != b.start_x() + t.m)
            return {false, "boundary condition fails at component " + std::to_string(l + 1)};
        if (a.ends_with_north() && a.labels.back() >= b.labels.front())
            return {false, "boundary label condition fails at component " + std::to_string(l + 1)};
    }
    return {};
}

StepContents step_contents(const PathTuple& t) {
    const int k = t.order(), m = t.m, n = t.n;
    StepContents sc;
    sc.north.resize(k);
    sc.east.resize(k);
    for (int l = 0; l < k; ++l) {
        const LabeledPath& p = t.comps[l];
        for (int r = 0; r < n; ++r) sc.north[l].push_back(k * (m * r - n * p.north_x[r]) + l);
        for (int h = 1; h <= n; ++h) {
            int from = p.north_x[h - 1];
            int to = h < n ? p.north_x[h] : p.end_x;
            for (int x = from; x < to; ++x) sc.east[l].push_back(k * (m * (h - 1) - n * (x + 1)) + l);
        }
    }
    return sc;
}

long stat_constant(int m, int n, int k) {
    long num = (long)(m * k - 1) * (n * k - 1) + k - 1;
    return num / 2;
}

TupleStats tuple_stats(const PathTuple& t) {
    const int k = t.order();
    StepContents sc = step_contents(t);
    std::vector<int> easts;
    std::vector<std::pair<int, int>> norths;  // (content, label)
    for (int l = 0; l < k; ++l) {
        for (int c : sc.east[l]) easts.push_back(c);
        for (int r = 0; r < t.n; ++r) norths.push_back({sc.north[l][r], t.comps[l].labels[r]});
    }
    std::sort(easts.begin(), easts.end());
    TupleStats s;
    for (const auto& [c, lab] : norths)
        s.pdinv += easts.end() - std::upper_bound(easts.begin(), easts.end(), c);
    const long window = (long)k * t.m;
    for (const auto& [c1, lab1] : norths)
        for (const auto& [c2, lab2] : norths)
            if (c1 < c2 && c2 < c1 + window && lab1 >= lab2) s.ldinv++;
    s.stat = stat_constant(t.m, t.n, k) - s.pdinv - s.ldinv;
    return s;
}

Skeleton skeleton(const LabeledPath& p) {
    Skeleton z;
    for (int r = 0; r < p.n; ++r) z.push_back({r + 1, p.aseq(r), p.labels[r]});
    std::sort(z.begin(), z.end());
    return z;
}

Skeleton skeleton(const PathTuple& t) {
    Skeleton z;
    for (const auto& c : t.comps)
        for (int r = 0; r < t.n; ++r) z.push_back({r + 1, c.aseq(r), c.labels[r]});
    std::sort(z.begin(), z.end());
    return z;
}

std::string skeleton_str(const Skeleton& z) {
    std::ostringstream os;
    for (const auto& [i, j, k] : z) os << "z_{" << i << "," << j << "," << k << "}";
    return os.str();
}

bool precedes(const LabeledPath& a, const LabeledPath& b) {
    const int n = a.n, m = a.m;
    // east steps must be disjoint, with b weakly left of a
    for (int r = 0; r + 1 < n; ++r)
        if (b.north_x[r + 1] > a.north_x[r]) return false;
    if (b.north_x[0] + m > a.north_x[n - 1]) return false;
    // label clause at every meeting vertex (equality cases above)
    for (int r = 0; r + 1 < n; ++r)
        if (b.north_x[r + 1] == a.north_x[r] && a.labels[r] < b.labels[r + 1]) return false;
    if (b.north_x[0] + m == a.north_x[n - 1] && a.labels[n - 1] < b.labels[0]) return false;
    return true;
}

std::vector<LabeledPath> enumerate_cpf(int m, int n, int A, int nlabels) {
    std::vector<LabeledPath> out;
    if (nlabels < 1 || A < 0) return out;
    std::vector<int> nx(n), labs(n);

    auto label_dfs = [&](auto&& self, int r) -> void {
        if (r == n) {
            // wrap clause
            if (nx[n - 1] == nx[0] + m && labs[0] <= labs[n - 1]) return;
            out.push_back(make_cpf(m, n, nx, labs));
            return;
        }
        int lo = (r > 0 && nx[r] == nx[r - 1]) ? labs[r - 1] + 1 : 1;
        for (int v = lo; v <= nlabels; ++v) {
            labs[r] = v;
            self(self, r + 1);
        }
    };

    auto shape_dfs = [&](auto&& self, int r, int used) -> void {
        if (r == n) {
            if (nx[0] + m < nx[n - 1]) return;  // east count must be m
            label_dfs(label_dfs, 0);
            return;
        }
        int hi = (m * r) / n;  // above-line bound
        int lo_area = 0;       // aseq entries are >= 0, so x <= hi always
        (void)lo_area;
        for (int x = hi - (A - used); x <= hi; ++x) {
            if (r > 0 && x < nx[r - 1]) continue;
            if (r == 0 && x > 0) continue;
            nx[r] = x;
            self(self, r + 1, used + (hi - x));
        }
    };
    shape_dfs(shape_dfs, 0, 0);

    std::sort(out.begin(), out.end(), [](const LabeledPath& a, const LabeledPath& b) {
        int aa = a.area(), ab = b.area();
        if (aa != ab) return aa < ab;
        if (a.north_x != b.north_x) return a.north_x < b.north_x;
        return a.labels < b.labels;
    });
    return out;
}

std::vector<PathTuple> enumerate_chains(ChainKind kind, int len, int m, int n, int A,
                                        int nlabels) {
    std::vector<PathTuple> out;
    if (len < 1) return out;
    auto paths = enumerate_cpf(m, n, A, nlabels);
    const int P = (int)paths.size();
    std::vector<std::vector<int>> succ(P);
    if (len > 1)
        for (int i = 0; i < P; ++i)
            for (int j = 0; j < P; ++j)
                if (paths[i].area() + paths[j].area() <= A && precedes(paths[i], paths[j]))
                    succ[i].push_back(j);

    std::vector<int> chain;
    auto dfs = [&](auto&& self, int last, int used) -> void {
        if ((int)chain.size() == len) {
            PathTuple t;
            t.m = m;
            t.n = n;
            for (int idx : chain) t.comps.push_back(paths[idx]);
            out.push_back(std::move(t));
            return;
        }
        for (int j : succ[last]) {
            if (used + paths[j].area() > A) continue;
            chain.push_back(j);
            self(self, j, used + paths[j].area());
            chain.pop_back();
        }
    };
    for (int i = 0; i < P; ++i) {
        bool bar = paths[i].start_x() == 0;
        if (kind == ChainKind::bar && !bar) continue;
        if (kind == ChainKind::hat && bar) continue;
        chain.assign(1, i);
        dfs(dfs, i, paths[i].area());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cparking
