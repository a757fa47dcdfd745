#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "llcert/prob.hpp"

namespace llcert {

namespace detail {

// Memoizing evaluator for the weighted independence polynomial of one
// (graph, weights) pair: Y(S) = sum over independent I subseteq S of
// prod_{i in I} y_i. Splits into induced components and recurses on the
// lowest vertex. Weights are not validated here; the public wrappers are.
template <class Num>
class YEvaluator {
public:
    YEvaluator(const Graph& g, std::vector<Num> y) : g_(&g), y_(std::move(y)) {}

    const Num& at(VertexSet s);
    const std::vector<Num>& weights() const { return y_; }

private:
    Num eval(VertexSet s);

    const Graph* g_;
    std::vector<Num> y_;
    std::unordered_map<std::uint64_t, Num> memo_;
};

} // namespace detail

// Y(S) for a single set. Always >= 1 (the empty set contributes 1).
template <class Num>
Num independence_polynomial(const Graph& g, VertexSet s, const WeightVector<Num>& y);

// Full 2^n table of Y values, same DP shape as the avoidance table.
template <class Num>
CoefficientTable<Num> independence_table(const Graph& g, const WeightVector<Num>& y);

template <class Num>
struct ClusterReport {
    bool holds = false;
    std::vector<Num> slack; // y_i / Y(closed nbhd of i) - p_i, per vertex
    Num bound{};            // 1 / Y(full set); valid when holds
};

// The cluster-expansion condition at weights y: p_i <= y_i / Y(closed
// neighborhood of i) for every vertex. Slacks are reported regardless of
// the verdict; the bound only when it holds.
template <class Num>
ClusterReport<Num> check_cluster(const Graph& g, const ProbVector<Num>& p,
                                 const WeightVector<Num>& y,
                                 double epsilon = kDefaultEpsilon);

template <class Num>
Num cluster_bound(const Graph& g, const WeightVector<Num>& y); // 1 / Y(full)

struct FindYOptions {
    double tol = 1e-10;  // per-coordinate relative-change convergence test
    double cap = 1e6;    // any iterate above this means "no certificate found"
    int max_iter = 10000;
    double epsilon = kDefaultEpsilon; // tolerance of the float validation
};

// Outcome of the fixed-point search. converged == false means no
// certificate was found; it never means the condition is disproved.
struct FindYResult {
    bool converged = false;
    int iterations = 0;
    std::vector<double> y; // full length; 0.0 on vertices with p_i = 0

    // Float validation of the converged y (meaningful when converged).
    ClusterReport<double> report;

    // Exact re-validation: y refit with a small inflation of p, rationalized
    // by continued fractions, slacks checked in exact arithmetic. Failure
    // downgrades the certificate to float-only; it does not revoke it.
    bool exact_validated = false;
    std::vector<Rational> y_exact;
    ClusterReport<Rational> exact_report;
};

// Monotone fixed-point search for certificate weights: start at y = p and
// iterate y_i <- p_i * Y(closed nbhd of i) until the relative change drops
// below opts.tol everywhere, an iterate escapes past opts.cap, or the
// iteration budget runs out. Iterates are coordinatewise nondecreasing;
// that invariant is asserted every round.
FindYResult find_y(const Graph& g, const ProbVector<Rational>& p,
                   const FindYOptions& opts = {});

// Ratio domination between the avoidance table and the independence table
// on complements: for all nonempty S and a in S with positive avoidance at
// S - a, avoid(S) * Y((S-a)^c) >= Y(S^c) * avoid(S-a). Telescoping makes
// the full-set avoidance value dominate 1/Y(full); that corner is asserted
// directly as well.
template <class Num>
bool verify_ratio_domination(const Graph& g, const ProbVector<Num>& p,
                             const WeightVector<Num>& y,
                             double epsilon = kDefaultEpsilon,
                             int oracle_cap = kOracleCap);

} // namespace llcert
