#pragma once

#include "llcert/cluster.hpp"

namespace llcert {

// Classical symmetric-LLL thresholds at maximum degree d. The first three
// are exact rationals; 1/(e d) is the only irrational constant in the
// library and stays quarantined in float.
struct ThresholdSet {
    int d = 0;
    Rational erdos_lovasz; // 1/(4d)
    Rational spencer;      // d^d / (d+1)^(d+1)
    Rational shearer;      // (d-1)^(d-1) / d^d
    double cluster_ed = 0; // 1/(e d)
};

ThresholdSet symmetric_thresholds(int d); // requires d >= 2

// e >= 1/d + (d/(d-1))^(d-1), evaluated in float. Expected to hold for
// every d >= 2.
bool check_symm_inequality(long long d);

// Uniform p = p_val and uniform y = 1/(d-1) at the graph's true maximum
// degree d, delegated to check_cluster. For p_val <= 1/(e d) the report
// holds; larger p_val still produces a report, possibly negative.
template <class Num>
ClusterReport<Num> symmetric_certificate(const Graph& g, const Num& p_val,
                                         double epsilon = kDefaultEpsilon);

} // namespace llcert
