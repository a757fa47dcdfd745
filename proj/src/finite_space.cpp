#include "llcert/finite_space.hpp"

#include <array>
#include <random>

namespace llcert {

namespace {

void require_oracle(int n, int cap, const char* what) {
    if (n > cap)
        throw Error(std::string(what) + " is capped at n = " + std::to_string(cap) +
                    " (all-subset scan); got n = " + std::to_string(n));
}

template <class Num>
void require_space_match(const FiniteSpace<Num>& space, const Graph& g,
                         const ProbVector<Num>& p) {
    if (space.n != g.vertex_count() || p.size() != g.vertex_count())
        throw Error("space, graph and probability vector disagree on the event count");
}

} // namespace

template <class Num>
FiniteSpace<Num> FiniteSpace<Num>::validated(int n, std::vector<Atom> atoms, double epsilon) {
    if (n < 1 || n > kMaxVertices)
        throw Error("event count must lie in [1, " + std::to_string(kMaxVertices) + "], got " +
                    std::to_string(n));
    const VertexSet range = VertexSet::full(n);
    Num total(0);
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (!atoms[k].events.subset_of(range))
            throw Error("atom " + std::to_string(k) + " references events past n = " +
                        std::to_string(n));
        if (NumOps<Num>::sign(atoms[k].weight, epsilon) == Sign::Negative)
            throw Error("atom " + std::to_string(k) + " has negative weight");
        total += atoms[k].weight;
    }
    if (!NumOps<Num>::eq(total, Num(1), epsilon))
        throw Error("atom weights must sum to 1");
    FiniteSpace space;
    space.n = n;
    space.atoms = std::move(atoms);
    return space;
}

template <class Num>
Num FiniteSpace<Num>::prob_none(VertexSet a) const {
    Num total(0);
    for (const auto& atom : atoms)
        if (!atom.events.intersects(a)) total += atom.weight;
    return total;
}

template <class Num>
Num FiniteSpace<Num>::marginal(int i) const {
    Num total(0);
    for (const auto& atom : atoms)
        if (atom.events.contains(i)) total += atom.weight;
    return total;
}

template <class Num>
Num FiniteSpace<Num>::conditional_prob(int i, VertexSet j, double epsilon) const {
    if (j.contains(i)) throw Error("conditional event overlaps the condition");
    const Num denom = prob_none(j);
    if (NumOps<Num>::sign(denom, epsilon) != Sign::Positive)
        throw Error("conditional undefined: the conditioning event has probability 0");
    Num joint(0);
    for (const auto& atom : atoms)
        if (atom.events.contains(i) && !atom.events.intersects(j)) joint += atom.weight;
    return joint / denom;
}

template <class Num>
NoneProbTable<Num>::NoneProbTable(const FiniteSpace<Num>& space) : n_(space.n) {
    require_table_size(n_);
    const std::uint64_t count = std::uint64_t{1} << n_;
    table_.assign(count, Num(0));
    for (const auto& atom : space.atoms) table_[atom.events.bits()] += atom.weight;
    // Subset sums: afterwards table_[m] is the weight of atoms whose event
    // pattern fits inside m, i.e. the avoid-probability of the complement.
    for (int b = 0; b < n_; ++b)
        for (std::uint64_t mask = 0; mask < count; ++mask)
            if (mask >> b & 1) table_[mask] += table_[mask ^ (std::uint64_t{1} << b)];
}

template <class Num>
FiniteSpace<Num> tight_instance(const Graph& g, const ProbVector<Num>& p, double epsilon) {
    const auto shearer = check_shearer(g, p, epsilon);
    if (!shearer.holds)
        throw Error("Shearer's condition fails (first negative set " +
                    set_str(*shearer.violating_set) + "); tight-instance weights would be negative");
    const auto weights = tight_weight_table(g, p);

    std::vector<typename FiniteSpace<Num>::Atom> atoms;
    for (VertexSet ind : g.independent_subsets(g.vertices())) {
        const Num& w = weights.at(ind);
        if (NumOps<Num>::sign(w, epsilon) == Sign::Negative)
            throw Error("negative tight weight at " + set_str(ind) +
                        " although Shearer's condition holds; this indicates a defect in the "
                        "positivity equivalence between the two coefficient families");
        atoms.push_back({w, ind});
    }
    return FiniteSpace<Num>::validated(g.vertex_count(), std::move(atoms), epsilon);
}

template <class Num>
LopsidedReport check_lopsided_condition(const FiniteSpace<Num>& space, const Graph& g,
                                        const ProbVector<Num>& p, double epsilon, int oracle_cap) {
    require_space_match(space, g, p);
    require_oracle(space.n, oracle_cap, "lopsided-condition check");
    const NoneProbTable<Num> table(space);
    const int n = space.n;

    LopsidedReport report;
    report.holds = true;
    report.equality_regime = true;
    for (int i = 0; i < n && report.holds; ++i) {
        const VertexSet allowed = g.closed_neighborhood(i).complement_in(n);
        const Num marginal = Num(1) - table.at(VertexSet::single(i));
        for_each_subset(allowed, [&](VertexSet j) {
            if (!report.holds) return;
            const Num denom = table.at(j);
            if (NumOps<Num>::sign(denom, epsilon) != Sign::Positive) {
                ++report.skipped;
                return;
            }
            // Pr[E_i | none of J] <= p_i, cross-multiplied by the positive
            // denominator; same for the equality-regime comparison.
            const Num joint = table.joint(i, j);
            if (!NumOps<Num>::ge(p[i] * denom, joint, epsilon)) {
                report.holds = false;
                report.equality_regime = false;
                report.witness = {i, j};
                return;
            }
            if (!NumOps<Num>::eq(joint, marginal * denom, epsilon)) report.equality_regime = false;
        });
    }
    return report;
}

template <class Num>
BoundReport<Num> verify_avoidance_bound(const FiniteSpace<Num>& space, const Graph& g,
                                        const ProbVector<Num>& p, double epsilon, int oracle_cap) {
    require_space_match(space, g, p);
    require_oracle(space.n, oracle_cap, "avoidance-bound check");
    const NoneProbTable<Num> table(space);
    const auto avoid = avoidance_table(g, p);

    BoundReport<Num> report;
    report.worst_gap = Num(0); // the empty set: both sides are 1
    report.worst_set = VertexSet{};
    const std::uint64_t count = std::uint64_t{1} << space.n;
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        const VertexSet a = VertexSet::of_bits(mask);
        const Num gap = table.at(a) - avoid.at(a);
        if (gap < report.worst_gap) {
            report.worst_gap = gap;
            report.worst_set = a;
        }
    }
    report.all_hold = NumOps<Num>::ge(report.worst_gap, Num(0), epsilon);
    return report;
}

template <class Num>
bool verify_peeling_inequality(const FiniteSpace<Num>& space, const Graph& g,
                               const ProbVector<Num>& p, double epsilon, int oracle_cap) {
    require_space_match(space, g, p);
    require_oracle(space.n, oracle_cap, "peeling-inequality check");
    const NoneProbTable<Num> table(space);
    const std::uint64_t count = std::uint64_t{1} << space.n;
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        const VertexSet a = VertexSet::of_bits(mask);
        for (int v : a.elements()) {
            const Num lhs = table.at(a) + p[v] * table.at(a - g.closed_neighborhood(v));
            if (!NumOps<Num>::ge(lhs, table.at(a.without(v)), epsilon)) return false;
        }
    }
    return true;
}

std::pair<FiniteSpace<Rational>, ProbVector<Rational>>
random_product_space(const Graph& g, std::uint64_t seed, int oracle_cap) {
    const int n = g.vertex_count();
    require_oracle(n, oracle_cap, "product-space construction");

    std::mt19937_64 rng(seed);
    const std::array<Rational, 7> biases = {Rational(1, 2), Rational(1, 3), Rational(2, 3),
                                            Rational(1, 4), Rational(3, 4), Rational(2, 5),
                                            Rational(3, 5)};
    auto draw = [&]() { return biases[rng() % biases.size()]; };

    // One private coin per vertex, one shared coin per edge; event i is the
    // AND of its incident coins, so events joined by an edge share a coin
    // and all other pairs are independent.
    std::vector<Rational> vertex_bias;
    for (int i = 0; i < n; ++i) vertex_bias.push_back(draw());
    const auto edge_list = g.edges();
    std::vector<Rational> edge_bias;
    for (std::size_t e = 0; e < edge_list.size(); ++e) edge_bias.push_back(draw());

    // occ[T] = Pr[all events in T occur]: the product of the vertex coins in
    // T and every edge coin touching T. Built by inserting the lowest vertex
    // of T, which newly touches exactly its edges toward vertices outside
    // the rest of T.
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Rational> occ(count, Rational(0));
    occ[0] = Rational(1);
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        const int v = std::countr_zero(mask);
        const std::uint64_t rest = mask & (mask - 1);
        Rational w = occ[rest] * vertex_bias[v];
        for (std::size_t e = 0; e < edge_list.size(); ++e) {
            const auto& [a, b] = edge_list[e];
            const int other = a == v ? b : a;
            if ((a == v || b == v) && !((rest >> other) & 1)) w *= edge_bias[e];
        }
        occ[mask] = w;
    }

    // Moebius over supersets: weight of "exactly the events in S occur".
    std::vector<Rational> w = occ;
    for (int b = 0; b < n; ++b)
        for (std::uint64_t mask = 0; mask < count; ++mask)
            if (!(mask >> b & 1)) w[mask] -= w[mask | (std::uint64_t{1} << b)];

    std::vector<FiniteSpace<Rational>::Atom> atoms;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        if (sgn(w[mask]) < 0)
            throw Error("internal: negative pattern weight in the product-space construction");
        if (sgn(w[mask]) > 0) atoms.push_back({w[mask], VertexSet::of_bits(mask)});
    }
    auto space = FiniteSpace<Rational>::validated(n, std::move(atoms));

    std::vector<Rational> marginals;
    for (int i = 0; i < n; ++i) marginals.push_back(occ[VertexSet::single(i).bits()]);
    return {std::move(space), ProbVector<Rational>(std::move(marginals))};
}

template struct FiniteSpace<Rational>;
template struct FiniteSpace<double>;
template class NoneProbTable<Rational>;
template class NoneProbTable<double>;
template FiniteSpace<Rational> tight_instance(const Graph&, const ProbVector<Rational>&, double);
template FiniteSpace<double> tight_instance(const Graph&, const ProbVector<double>&, double);
template LopsidedReport check_lopsided_condition(const FiniteSpace<Rational>&, const Graph&,
                                                 const ProbVector<Rational>&, double, int);
template LopsidedReport check_lopsided_condition(const FiniteSpace<double>&, const Graph&,
                                                 const ProbVector<double>&, double, int);
template BoundReport<Rational> verify_avoidance_bound(const FiniteSpace<Rational>&, const Graph&,
                                                      const ProbVector<Rational>&, double, int);
template BoundReport<double> verify_avoidance_bound(const FiniteSpace<double>&, const Graph&,
                                                    const ProbVector<double>&, double, int);
template bool verify_peeling_inequality(const FiniteSpace<Rational>&, const Graph&,
                                        const ProbVector<Rational>&, double, int);
template bool verify_peeling_inequality(const FiniteSpace<double>&, const Graph&,
                                        const ProbVector<double>&, double, int);

} // namespace llcert
