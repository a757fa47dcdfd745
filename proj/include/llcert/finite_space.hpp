#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "llcert/shearer.hpp"

namespace llcert {

// Explicit finite probability space over events E_1..E_n: atoms with
// nonnegative weights summing to 1, each carrying the set of events it
// belongs to. Ground truth for every probability-side check.
template <class Num>
struct FiniteSpace {
    struct Atom {
        Num weight{};
        VertexSet events; // atom lies in E_i iff events contains i
    };

    int n = 0;
    std::vector<Atom> atoms;

    // Validates weights (nonnegative, total exactly 1; float within eps)
    // and event ranges.
    static FiniteSpace validated(int n, std::vector<Atom> atoms,
                                 double epsilon = kDefaultEpsilon);

    // Probability that no event indexed by a occurs. Linear scan; the
    // verification routines use the precomputed table below instead.
    Num prob_none(VertexSet a) const;

    Num marginal(int i) const; // Pr[E_i]

    // Pr[E_i | no event in j occurs]. i must not lie in j; throws when the
    // conditioning event has probability zero.
    Num conditional_prob(int i, VertexSet j, double epsilon = kDefaultEpsilon) const;
};

// All 2^n avoid-probabilities of a space, built once by a subset-sum DP.
template <class Num>
class NoneProbTable {
public:
    explicit NoneProbTable(const FiniteSpace<Num>& space);

    const Num& at(VertexSet a) const { return table_[a.complement_in(n_).bits()]; }

    // Pr[E_i and no event in j], for i not in j.
    Num joint(int i, VertexSet j) const { return at(j) - at(j.with(i)); }

    int n() const { return n_; }

private:
    int n_;
    std::vector<Num> table_; // indexed by the allowed-pattern mask
};

// Shearer's extremal space for (g, p): one atom per independent set I,
// weighted by the tight-weight table, lying exactly in the events of I.
// Requires Shearer's condition; otherwise some weight would be negative.
template <class Num>
FiniteSpace<Num> tight_instance(const Graph& g, const ProbVector<Num>& p,
                                double epsilon = kDefaultEpsilon);

struct LopsidedReport {
    bool holds = false;           // every conditional bounded by p_i
    bool equality_regime = false; // every conditional equals the marginal Pr[E_i]
    long skipped = 0;             // conditionals with a zero-probability condition
    std::optional<std::pair<int, VertexSet>> witness; // first violating (i, J)
};

// Checks, for every vertex i and every J avoiding the closed neighborhood
// of i with Pr[no event in J] > 0, that Pr[E_i | none of J] <= p_i; also
// reports whether equality with the marginal holds throughout.
template <class Num>
LopsidedReport check_lopsided_condition(const FiniteSpace<Num>& space, const Graph& g,
                                        const ProbVector<Num>& p,
                                        double epsilon = kDefaultEpsilon,
                                        int oracle_cap = kOracleCap);

template <class Num>
struct BoundReport {
    bool all_hold = false;
    Num worst_gap{}; // min over A of prob_none(A) - avoidance(A)
    VertexSet worst_set;
};

// Avoidance lower bounds against the space: prob_none(A) >= avoidance(A)
// for every A. On the tight instance the gap is exactly zero everywhere.
template <class Num>
BoundReport<Num> verify_avoidance_bound(const FiniteSpace<Num>& space, const Graph& g,
                                        const ProbVector<Num>& p,
                                        double epsilon = kDefaultEpsilon,
                                        int oracle_cap = kOracleCap);

// One-step peeling inequality on the space: for every nonempty A and every
// a in A, prob_none(A) >= prob_none(A - a) - p_a * prob_none(A minus the
// closed neighborhood of a).
template <class Num>
bool verify_peeling_inequality(const FiniteSpace<Num>& space, const Graph& g,
                               const ProbVector<Num>& p,
                               double epsilon = kDefaultEpsilon,
                               int oracle_cap = kOracleCap);

// Deterministic variable-model test instance: one private coin per vertex
// and one shared coin per edge, an event being the AND of its coins. Events
// with no shared coin are independent, so the space satisfies the lopsided
// condition at its exact marginals, which are returned alongside.
std::pair<FiniteSpace<Rational>, ProbVector<Rational>>
random_product_space(const Graph& g, std::uint64_t seed, int oracle_cap = kOracleCap);

} // namespace llcert
