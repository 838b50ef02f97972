#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cparking/bijection.hpp"

using namespace cparking;

namespace {

// labeled realization of the (8,5) worked example: the geometric splice
// points are (0,3) and then (0,4)
LabeledPath ex_pi() { return make_cpf(8, 5, {0, 0, 0, 3, 3}, {1, 2, 3, 1, 2}); }
LabeledPath ex_pi1() { return make_cpf(8, 5, {-6, -6, -6, 0, 1}, {1, 2, 3, 4, 9}); }
LabeledPath ex_pi2() { return make_cpf(8, 5, {-8, -8, -8, -8, 0}, {6, 7, 8, 9, 5}); }

GlobalParkingFunction single(const LabeledPath& p) {
    PathTuple t;
    t.m = p.m;
    t.n = p.n;
    t.comps = {p};
    return recompose(t);
}

}  // namespace

TEST_CASE("crossings of the worked example") {
    LabeledPath pi = ex_pi(), tau = ex_pi1();
    auto cps = crossings(pi, pi.labels.front(), tau, tau.labels.front());
    REQUIRE(cps.size() == 1);
    CHECK(cps[0].y == 3);
    CHECK(cps[0].x == 0);
}

TEST_CASE("mix splices the worked example at (0,3) then (0,4)") {
    GlobalParkingFunction g1 = single(ex_pi());
    GlobalParkingFunction g2 = mix(ex_pi1(), g1);
    CHECK(g2.north_x == std::vector<int>{0, 0, 0, 0, 1, 2, 2, 2, 11, 11});
    CHECK(g2.labels == std::vector<int>{1, 2, 3, 4, 9, 1, 2, 3, 1, 2});

    GlobalParkingFunction g3 = mix(ex_pi2(), g2);
    CHECK(g3.north_x == std::vector<int>{0, 0, 0, 0, 0, 0, 0, 0, 0, 9, 10, 10, 10, 19, 19});
    CHECK(g3.labels == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 9, 1, 2, 3, 1, 2});
    // the assembled path passes through the displayed corner points
    // (0,9), (9,9), (9,10), (10,10), (10,13), (19,13), (19,15)
    CHECK(validate_global(g3).ok);
}

TEST_CASE("gamma on the worked example and its inverse") {
    PathTuple T;
    T.m = 8;
    T.n = 5;
    T.comps = {ex_pi(), ex_pi1(), ex_pi2()};
    REQUIRE(is_ptab(T));
    GlobalParkingFunction g = gamma(T);
    CHECK(g.north_x == std::vector<int>{0, 0, 0, 0, 0, 0, 0, 0, 0, 9, 10, 10, 10, 19, 19});
    CHECK(psi(g) == T);
    CHECK(global_skeleton(g) == skeleton(T));
    TupleStats st = tuple_stats(T), sg = global_stats(g);
    CHECK(st.pdinv + st.ldinv == sg.pdinv + sg.ldinv);
}

TEST_CASE("mix appends an origin-passing path on top") {
    // when tau starts at the origin, mix(tau, g) = (g, tau)
    GlobalParkingFunction g = single(make_cpf(3, 2, {0, 1}, {1, 1}));
    LabeledPath tau = make_cpf(3, 2, {0, 0}, {1, 2});
    GlobalParkingFunction gm = mix(tau, g);
    CHECK(gm.k == 2);
    PathTuple t = decompose_pf(gm);
    CHECK(t.comps[0] == decompose_pf(g).comps[0]);
    CHECK(t.comps[1] == tau);
}

TEST_CASE("no crossing raises") {
    // tau strictly left of an origin-hugging component with no meeting:
    // precedes holds, so mix must fail
    GlobalParkingFunction g = single(make_cpf(2, 1, {0}, {1}));
    LabeledPath tau = make_cpf(2, 1, {-3}, {1});
    CHECK(precedes(decompose_pf(g).comps[0], tau));
    CHECK_THROWS_AS(mix(tau, g), NoCrossing);
}

TEST_CASE("pos examples") {
    PathTuple solo;
    solo.m = 3;
    solo.n = 2;
    solo.comps = {make_cpf(3, 2, {0, 1}, {1, 2})};
    CHECK(pos_crossings(solo) == 0);

    PathTuple twin;
    twin.m = 3;
    twin.n = 2;
    twin.comps = {make_cpf(3, 2, {-1, 0}, {1, 2}), make_cpf(3, 2, {-1, 0}, {1, 2})};
    CHECK(pos_crossings(twin) == 0);  // ties require strictly smaller labels

    PathTuple bad = twin;
    bad.perm = {1, 1};
    CHECK_THROWS_AS(pos_crossings(bad), InvalidConnectingPermutation);
}

TEST_CASE("decompose and recompose are inverse") {
    // staircase-hugging path with standard labels
    for (auto [m, n, k] : {std::tuple{2, 1, 2}, {3, 2, 2}, {1, 1, 3}}) {
        GlobalParkingFunction g;
        g.k = k;
        g.m = m;
        g.n = n;
        for (int i = 0; i < k * n; ++i) {
            g.north_x.push_back((m * i) / n);
            g.labels.push_back(i % n + 1);
        }
        // hugging path: label runs may collide; relabel increasing
        for (int i = 0; i < k * n; ++i) g.labels[i] = i + 1;
        REQUIRE(validate_global(g).ok);
        CHECK(recompose(decompose_pf(g)) == g);
    }
    for (const auto& g : enumerate_pf(3, 2, 2, 3)) {
        CHECK(recompose(decompose_pf(g)) == g);
        // area is preserved under decomposition
        int global_area = 0;
        for (int i = 0; i < g.k * g.n; ++i) global_area += (g.m * i) / g.n - g.north_x[i];
        CHECK(global_area == decompose_pf(g).area());
    }
}

TEST_CASE("touch") {
    // strictly above except the endpoints
    GlobalParkingFunction g;
    g.k = 2;
    g.m = 2;
    g.n = 1;
    g.north_x = {0, 1};
    g.labels = {1, 1};
    CHECK(touch(g) == Composition{2});
    // touching at every multiple: (km,kn) = (2,2) path N E N E
    GlobalParkingFunction h;
    h.k = 2;
    h.m = 1;
    h.n = 1;
    h.north_x = {0, 1};
    h.labels = {1, 1};
    CHECK(touch(h) == Composition{1, 1});
    GlobalParkingFunction s;
    s.k = 2;
    s.m = 1;
    s.n = 1;
    s.north_x = {0, 0};
    s.labels = {1, 2};
    CHECK(touch(s) == Composition{2});
}

TEST_CASE("gamma and psi are mutually inverse at (1,1), k = 2") {
    int m = 1, n = 1, k = 2, N = 2;
    auto ptabs = enumerate_ptab(m, n, k, max_global_area(m, n, k), N);
    auto pfs = enumerate_pf(m, n, k, N);
    CHECK(ptabs.size() == pfs.size());
    std::set<GlobalParkingFunction> images;
    for (const auto& t : ptabs) {
        GlobalParkingFunction g = gamma(t);
        CHECK(psi(g) == t);
        CHECK(images.insert(g).second);
    }
    for (const auto& g : pfs) CHECK(gamma(psi(g)) == g);
}

TEST_CASE("ptab filters") {
    int m = 2, n = 1, k = 2, N = 2;
    auto ptabs = enumerate_ptab(m, n, k, max_global_area(m, n, k), N);
    size_t total = 0;
    for (const auto& alpha : compositions_of(k)) {
        auto filtered = ptab_filter(ptabs, alpha);
        total += filtered.size();
        for (const auto& t : filtered) {
            if (alpha == Composition{(int)k}) {
                CHECK(t.comps[0].aseq(0) == 0);
                for (int l = 1; l < k; ++l) CHECK(t.comps[l].aseq(0) > 0);
            }
            CHECK(touch(gamma(t)) == alpha);
        }
    }
    CHECK(total == ptabs.size());  // the alpha conditions partition PTab
}

TEST_CASE("up map") {
    // (2,1): Bezout pair (1,0); the start offset grows by one
    LabeledPath p = make_cpf(2, 1, {-1}, {5});
    LabeledPath u = up(p);
    CHECK(u.north_x == std::vector<int>{-2});
    CHECK(u.labels == std::vector<int>{5});
    CHECK(u.area() == p.area() + 1);

    // (3,2) figure: aseq (0,0), labels (r1,r2) -> labels read (r2,r1)
    LabeledPath q = make_cpf(3, 2, {0, 1}, {1, 2});
    LabeledPath uq = up(q);
    CHECK(uq.north_x == std::vector<int>{-1, 1});
    CHECK(uq.labels == std::vector<int>{2, 1});
    CHECK(uq.area() == q.area() + 1);

    for (auto [m, n] : {std::pair{2, 1}, {3, 2}, {2, 3}})
        for (const auto& pi : enumerate_cpf(m, n, 3, 3)) {
            LabeledPath img = up(pi);
            CHECK(validate_cpf(img).ok);
            CHECK(img.area() == pi.area() + 1);
            CHECK(img.aseq(0) > 0);  // the image never passes the origin
        }
}
