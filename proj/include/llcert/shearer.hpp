#pragma once

#include <cstddef>
#include <optional>

#include "llcert/prob.hpp"

namespace llcert {

template <class Num>
struct ShearerReport {
    bool holds = false;
    std::optional<VertexSet> violating_set; // first negative entry, canonical order
    Num bound{};                            // avoidance value of the full set; valid when holds
    bool degenerate = false;                // holds with bound == 0: the certificate is vacuous
    std::size_t entries_computed = 0;
    double build_seconds = 0;
};

// Avoidance coefficients for every S: the alternating sum over independent
// subsets I of S of (-1)^|I| * prod_{i in I} p_i. Entry S lower-bounds the
// probability that none of the events indexed by S occur, provided all
// entries are nonnegative (Shearer's condition). Filled by the pivot
// recursion on the lowest vertex of each set, O(2^n) time and space.
template <class Num>
CoefficientTable<Num> avoidance_table(const Graph& g, const ProbVector<Num>& p);

// Tight-instance atom weights: entry S is the signed sum over independent
// supersets I of S of (-1)^|I \ S| * prod_{i in I} p_i, which in the tight
// instance is the probability that exactly the events in S occur. Zero for
// every non-independent S. Built by direct enumeration of the independent
// sets; oracle-grade.
template <class Num>
CoefficientTable<Num> tight_weight_table(const Graph& g, const ProbVector<Num>& p);

// Decides Shearer's condition: every avoidance entry nonnegative. Scans in
// canonical order and stops at the first negative entry.
template <class Num>
ShearerReport<Num> check_shearer(const Graph& g, const ProbVector<Num>& p,
                                 double epsilon = kDefaultEpsilon);

// Inclusion-exclusion duality between the two tables: for every S the
// avoidance entry equals the sum of tight weights over subsets of the
// complement of S. Also asserts the full-set/empty-set corner explicitly.
template <class Num>
bool verify_table_duality(const Graph& g, const ProbVector<Num>& p,
                          double epsilon = kDefaultEpsilon, int oracle_cap = kOracleCap);

} // namespace llcert
