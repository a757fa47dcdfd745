#pragma once

// Shared test helpers: deterministic instance generators and the
// brute-force oracles the table DPs are checked against. The oracles only
// use independent-subset enumeration and direct arithmetic; they never go
// through the pivot recursions they are meant to validate.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "llcert/cluster.hpp"
#include "llcert/shearer.hpp"

namespace testsupport {

using llcert::Graph;
using llcert::ProbVector;
using llcert::Rational;
using llcert::VertexSet;
using llcert::WeightVector;

using Rng = std::mt19937_64;

// Uniform in [0, 1); avoids std::uniform_real_distribution so sequences are
// identical across standard libraries.
inline double uniform(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int pick(Rng& rng, int lo, int hi) { // inclusive
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Graph random_graph(Rng& rng, int n, double edge_prob) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uniform(rng) < edge_prob) edges.emplace_back(i, j);
    return Graph(n, edges);
}

inline Graph random_tree(Rng& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(pick(rng, 0, v - 1), v);
    return Graph(n, edges);
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

inline Graph edgeless(int n) { return Graph(n, {}); }

inline Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        edges.emplace_back(i, 5 + i);               // spokes
    }
    return Graph(10, edges);
}

// Random rationals capped at 1/(4 d); such vectors satisfy Shearer's
// condition with every avoidance entry strictly positive, which the
// tight-instance checks rely on.
inline ProbVector<Rational> random_certified_p(Rng& rng, const Graph& g) {
    const int n = g.vertex_count();
    const long d = std::max(1, g.max_degree());
    const long k = pick(rng, 2, 6);
    std::vector<Rational> p;
    for (int i = 0; i < n; ++i)
        p.push_back(llcert::make_rational(pick(rng, 1, static_cast<int>(k)), 4 * d * k));
    return ProbVector<Rational>(std::move(p));
}

// Unrestricted random rationals in (0, ~0.85]; mixes certified and
// violated instances.
inline ProbVector<Rational> random_p(Rng& rng, int n) {
    std::vector<Rational> p;
    for (int i = 0; i < n; ++i) {
        const long den = pick(rng, 8, 32);
        const long num = pick(rng, 1, std::max(1, static_cast<int>(den * 85 / 100)));
        p.push_back(llcert::make_rational(num, den));
    }
    return ProbVector<Rational>(std::move(p));
}

inline WeightVector<Rational> random_weights(Rng& rng, int n) {
    std::vector<Rational> y;
    for (int i = 0; i < n; ++i) y.push_back(llcert::make_rational(pick(rng, 1, 16), pick(rng, 4, 16)));
    return WeightVector<Rational>(std::move(y));
}

// Defining alternating sum for one set, straight off the enumeration.
inline Rational brute_avoidance(const Graph& g, const ProbVector<Rational>& p, VertexSet s) {
    Rational total(0);
    for (VertexSet ind : g.independent_subsets(s)) {
        Rational term(1);
        for (int i : ind.elements()) term *= p[i];
        if (ind.size() % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

// Whole-table variant of the same sum with the products precomputed once;
// still definitional, just not quadratic in the enumeration.
inline std::vector<Rational> brute_avoidance_table(const Graph& g,
                                                   const ProbVector<Rational>& p) {
    const int n = g.vertex_count();
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<char> independent(count, 0);
    std::vector<Rational> prod(count, Rational(0));
    for (VertexSet ind : g.independent_subsets(g.vertices())) {
        independent[ind.bits()] = 1;
        Rational term(1);
        for (int i : ind.elements()) term *= p[i];
        prod[ind.bits()] = term;
    }
    std::vector<Rational> table(count, Rational(0));
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        Rational total(0);
        llcert::for_each_subset(VertexSet::of_bits(mask), [&](VertexSet sub) {
            if (!independent[sub.bits()]) return;
            if (sub.size() % 2 == 0)
                total += prod[sub.bits()];
            else
                total -= prod[sub.bits()];
        });
        table[mask] = total;
    }
    return table;
}

// Defining sum for the weighted independence polynomial of one set.
inline Rational brute_independence_polynomial(const Graph& g, const WeightVector<Rational>& y,
                                              VertexSet s) {
    Rational total(0);
    for (VertexSet ind : g.independent_subsets(s)) {
        Rational term(1);
        for (int i : ind.elements()) term *= y[i];
        total += term;
    }
    return total;
}

} // namespace testsupport
