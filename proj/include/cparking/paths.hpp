/**
 * @file paths.hpp
 * @brief Cyclic (m,n)-parking functions and labeled lattice-path tuples:
 *        validation, the area/aseq/content/pdinv/ldinv/stat statistics, the
 *        partial order on cyclic parking functions, and bounded enumeration.
 *
 * A labeled (m,n)-lattice path starts at (start_x, 0) with a north step,
 * has n north steps (north_x[r] is the x-coordinate of the north step
 * spanning heights [r, r+1]) and ends at (end_x, n). Cyclic parking
 * functions have exactly m east steps (end_x = start_x + m); components of
 * general tuples may have any east count.
 */
#pragma once

#include <array>
#include <string>
#include <vector>

#include "cparking/qt.hpp"

namespace cparking {

struct LabeledPath {
    int m = 0, n = 0;
    std::vector<int> north_x;
    std::vector<int> labels;
    int end_x = 0;

    int start_x() const { return north_x.front(); }
    bool is_cyclic() const { return end_x == start_x() + m; }
    bool ends_with_north() const { return north_x.back() == end_x; }
    int east_count() const { return end_x - start_x(); }
    /// Area entry of row r (0-based): cells with nonnegative content.
    int aseq(int r) const { return (m * r) / n - north_x[r]; }
    int area() const;

    friend bool operator<(const LabeledPath& a, const LabeledPath& b) {
        if (a.north_x != b.north_x) return a.north_x < b.north_x;
        if (a.labels != b.labels) return a.labels < b.labels;
        return a.end_x < b.end_x;
    }
    friend bool operator==(const LabeledPath& a, const LabeledPath& b) {
        return a.m == b.m && a.n == b.n && a.north_x == b.north_x && a.labels == b.labels &&
               a.end_x == b.end_x;
    }
};

/// Convenience constructor for cyclic parking functions (end_x = start + m).
LabeledPath make_cpf(int m, int n, std::vector<int> north_x, std::vector<int> labels);

struct PathTuple {
    int m = 0, n = 0;
    std::vector<LabeledPath> comps;
    std::vector<int> perm;  // connecting permutation (1-based images); empty = none

    int order() const { return (int)comps.size(); }
    int area() const;

    friend bool operator<(const PathTuple& a, const PathTuple& b) { return a.comps < b.comps; }
    friend bool operator==(const PathTuple& a, const PathTuple& b) {
        return a.m == b.m && a.n == b.n && a.comps == b.comps;
    }
};

struct Diagnostics {
    bool ok = true;
    std::string reason;
};

/// Structural validity of a labeled (m,n)-lattice path (any east count).
Diagnostics validate_path(const LabeledPath& p);
/// Cyclic parking function: adds the east-count and wrap-label clauses.
Diagnostics validate_cpf(const LabeledPath& p);
/// Boundary and boundary-label conditions of a connecting permutation.
Diagnostics validate_perm(const PathTuple& t, const std::vector<int>& perm);

/// Content of every north and east step, sheet-indexed, tuple order k.
struct StepContents {
    std::vector<std::vector<int>> north;  // per component, per row
    std::vector<std::vector<int>> east;   // per component, per east step
};
StepContents step_contents(const PathTuple& t);

struct TupleStats {
    long pdinv = 0, ldinv = 0, stat = 0;
};
/// C(m,n,k) = ((mk-1)(nk-1)+k-1)/2.
long stat_constant(int m, int n, int k);
TupleStats tuple_stats(const PathTuple& t);

/// Skeleton: sorted multiset of (row 1..n, area entry, label) triples.
using Skeleton = std::vector<std::array<int, 3>>;
Skeleton skeleton(const PathTuple& t);
Skeleton skeleton(const LabeledPath& p);
std::string skeleton_str(const Skeleton& z);

/// The partial order on cyclic parking functions, evaluated on the periodic
/// extensions: a < b iff P_b lies weakly left of P_a, the paths share no
/// east step, and labels agree downward at every meeting vertex.
bool precedes(const LabeledPath& a, const LabeledPath& b);

/// All cyclic (m,n)-parking functions with area <= A and labels <= nlabels,
/// sorted by (area, north_x, labels).
std::vector<LabeledPath> enumerate_cpf(int m, int n, int A, int nlabels);

enum class ChainKind { all, hat, bar };

/// Chains pi1 < pi2 < ... < pi_len with total area <= A; bar keeps chains
/// whose first path passes through the origin, hat the complement.
std::vector<PathTuple> enumerate_chains(ChainKind kind, int len, int m, int n, int A, int nlabels);

}  // namespace cparking
