/**
 * @file bijection.hpp
 * @brief Crossings and the pos statistic, (km,kn)-parking functions and
 *        their strip decomposition, touch, the mix splice, the bijection
 *        Gamma with inverse Psi, P-tableau filters, and the up map.
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "cparking/partition.hpp"
#include "cparking/paths.hpp"

namespace cparking {

struct InvalidConnectingPermutation : std::domain_error {
    explicit InvalidConnectingPermutation(const std::string& why)
        : std::domain_error("InvalidConnectingPermutation: " + why) {}
};
struct StripConditionViolated : std::domain_error {
    explicit StripConditionViolated(const std::string& why)
        : std::domain_error("StripConditionViolated: " + why) {}
};
struct NoCrossing : std::runtime_error {
    NoCrossing() : std::runtime_error("NoCrossing") {}
};

/// A (km,kn)-parking function: path from (0,0) to (km,kn) weakly above
/// my = nx, labels strictly increasing on runs of north steps.
struct GlobalParkingFunction {
    int k = 0, m = 0, n = 0;
    std::vector<int> north_x;  // global coordinates, length k*n
    std::vector<int> labels;

    friend bool operator<(const GlobalParkingFunction& a, const GlobalParkingFunction& b) {
        if (a.north_x != b.north_x) return a.north_x < b.north_x;
        return a.labels < b.labels;
    }
    friend bool operator==(const GlobalParkingFunction& a, const GlobalParkingFunction& b) {
        return a.k == b.k && a.m == b.m && a.n == b.n && a.north_x == b.north_x &&
               a.labels == b.labels;
    }
};

Diagnostics validate_global(const GlobalParkingFunction& g);

/// Crossing between two labeled paths drawn in the same strip. ext_label_*
/// is the label carried by the appended north step of the extension.
struct CrossingPoint {
    int y;  // 1..n
    int x;
};
std::vector<CrossingPoint> crossings(const LabeledPath& a, int ext_label_a, const LabeledPath& b,
                                     int ext_label_b);

/// Number of positive crossings over all extended component pairs; the
/// extension of component l carries the first label of component perm(l).
long pos_crossings(const PathTuple& t);

/// Strip decomposition; connecting permutation is the cyclic shift.
PathTuple decompose_pf(const GlobalParkingFunction& g);
GlobalParkingFunction recompose(const PathTuple& t);

/// Statistics of a global parking function via its strip decomposition.
TupleStats global_stats(const GlobalParkingFunction& g);
Skeleton global_skeleton(const GlobalParkingFunction& g);

/// Diagonal-contact composition.
Composition touch(const GlobalParkingFunction& g);

/// Splice tau into g at the last crossing with the highest crossing
/// component; throws NoCrossing when tau crosses no component.
GlobalParkingFunction mix(const LabeledPath& tau, const GlobalParkingFunction& g);

/// The bijection PTab_{m,n}(k) -> PF_{km,kn} and its inverse.
GlobalParkingFunction gamma(const PathTuple& t);
PathTuple psi(const GlobalParkingFunction& g);

/// PTab membership: aseq(first)_1 = 0 and no component precedes its successor.
bool is_ptab(const PathTuple& t);
/// PTab_{m,n}(k; alpha): origin rows exactly at 1 + partial sums of alpha.
bool matches_alpha(const PathTuple& t, const Composition& alpha);
std::vector<PathTuple> ptab_filter(const std::vector<PathTuple>& tuples, const Composition& alpha);

/// All P-tableaux with total area <= A and labels <= nlabels.
std::vector<PathTuple> enumerate_ptab(int m, int n, int k, int A, int nlabels);

/// All (km,kn)-parking functions with labels <= nlabels.
std::vector<GlobalParkingFunction> enumerate_pf(int m, int n, int k, int nlabels);

/// Largest possible area of a (km,kn)-parking function.
int max_global_area(int m, int n, int k);

/// Bezout shift: area(up(p)) = area(p) + 1; bijection CH_1 -> hat CH_1.
LabeledPath up(const LabeledPath& p);

}  // namespace cparking
