#include "llcert/shearer.hpp"

#include <chrono>
#include <cstdint>
#include <unordered_map>

namespace llcert {

namespace {

template <class Num>
void require_sizes(const Graph& g, const ProbVector<Num>& p) {
    if (p.size() != g.vertex_count())
        throw Error("probability vector has " + std::to_string(p.size()) + " entries, graph has " +
                    std::to_string(g.vertex_count()) + " vertices");
    require_table_size(g.vertex_count());
}

// Fills the avoidance values in ascending canonical order. Each nonempty A
// splits its independent subsets by membership of the lowest vertex a: the
// ones without a sum to the entry at A - a, the ones with a contribute
// -p_a times the entry at A minus the closed neighborhood of a.
// on_entry(mask, value) may stop the fill early by returning false.
template <class Num, class F>
void fill_avoidance(const Graph& g, const ProbVector<Num>& p, std::vector<Num>& out, F&& on_entry) {
    const int n = g.vertex_count();
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::uint64_t> gamma_plus(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) gamma_plus[i] = g.closed_neighborhood(i).bits();

    out.assign(count, Num(0));
    out[0] = Num(1);
    if (!on_entry(std::uint64_t{0}, out[0])) return;
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        const int a = std::countr_zero(mask);
        const std::uint64_t without_a = mask & (mask - 1);
        const std::uint64_t far = mask & ~gamma_plus[a];
        out[mask] = out[without_a] - p[a] * out[far];
        if (!on_entry(mask, out[mask])) return;
    }
}

} // namespace

template <class Num>
CoefficientTable<Num> avoidance_table(const Graph& g, const ProbVector<Num>& p) {
    require_sizes(g, p);
    CoefficientTable<Num> t{TableKind::Avoidance, g.vertex_count(), {}};
    fill_avoidance(g, p, t.value, [](std::uint64_t, const Num&) { return true; });
    return t;
}

template <class Num>
CoefficientTable<Num> tight_weight_table(const Graph& g, const ProbVector<Num>& p) {
    require_sizes(g, p);
    const int n = g.vertex_count();
    CoefficientTable<Num> t{TableKind::TightWeight, n, {}};
    t.value.assign(std::uint64_t{1} << n, Num(0));

    // Products prod_{i in I} p_i over the independent sets only, built
    // incrementally; everything else is zero.
    std::unordered_map<std::uint64_t, Num> prod;
    prod.emplace(0, Num(1));
    for (VertexSet ind : g.independent_subsets(g.vertices())) {
        if (ind.empty()) continue;
        const int a = ind.lowest();
        prod.emplace(ind.bits(), prod.at(ind.without(a).bits()) * p[a]);
    }

    // Scatter each independent I into all of its subsets with the parity
    // sign of |I \ S|.
    for (const auto& [ibits, value] : prod) {
        const VertexSet ind = VertexSet::of_bits(ibits);
        const int isize = ind.size();
        for_each_subset(ind, [&](VertexSet s) {
            if (((isize - s.size()) & 1) == 0)
                t.value[s.bits()] += value;
            else
                t.value[s.bits()] -= value;
        });
    }
    return t;
}

template <class Num>
ShearerReport<Num> check_shearer(const Graph& g, const ProbVector<Num>& p, double epsilon) {
    require_sizes(g, p);
    const auto start = std::chrono::steady_clock::now();
    ShearerReport<Num> report;
    std::vector<Num> table;
    fill_avoidance(g, p, table, [&](std::uint64_t mask, const Num& v) {
        ++report.entries_computed;
        if (NumOps<Num>::sign(v, epsilon) == Sign::Negative) {
            report.violating_set = VertexSet::of_bits(mask);
            return false;
        }
        return true;
    });
    if (!report.violating_set) {
        report.holds = true;
        report.bound = table[g.vertices().bits()];
        report.degenerate = NumOps<Num>::sign(report.bound, epsilon) == Sign::Zero;
    }
    report.build_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

template <class Num>
bool verify_table_duality(const Graph& g, const ProbVector<Num>& p, double epsilon,
                          int oracle_cap) {
    const int n = g.vertex_count();
    if (n > oracle_cap)
        throw Error("duality check is capped at n = " + std::to_string(oracle_cap) +
                    " (all-subset scan); got n = " + std::to_string(n));
    const auto avoid = avoidance_table(g, p);
    const auto weights = tight_weight_table(g, p);

    // Subset sums of the tight weights: after the transform, z[S] is the
    // total weight over subsets of S.
    std::vector<Num> z = weights.value;
    for (int b = 0; b < n; ++b)
        for (std::uint64_t mask = 0; mask < z.size(); ++mask)
            if (mask >> b & 1) z[mask] += z[mask ^ (std::uint64_t{1} << b)];

    for (std::uint64_t mask = 0; mask < z.size(); ++mask) {
        const VertexSet s = VertexSet::of_bits(mask);
        if (!NumOps<Num>::eq(avoid.at(s), z[s.complement_in(n).bits()], epsilon)) return false;
    }
    // The corner relating the full avoidance value to the empty tight weight.
    return NumOps<Num>::eq(avoid.at(g.vertices()), weights.at(VertexSet{}), epsilon);
}

template CoefficientTable<Rational> avoidance_table(const Graph&, const ProbVector<Rational>&);
template CoefficientTable<double> avoidance_table(const Graph&, const ProbVector<double>&);
template CoefficientTable<Rational> tight_weight_table(const Graph&, const ProbVector<Rational>&);
template CoefficientTable<double> tight_weight_table(const Graph&, const ProbVector<double>&);
template ShearerReport<Rational> check_shearer(const Graph&, const ProbVector<Rational>&, double);
template ShearerReport<double> check_shearer(const Graph&, const ProbVector<double>&, double);
template bool verify_table_duality(const Graph&, const ProbVector<Rational>&, double, int);
template bool verify_table_duality(const Graph&, const ProbVector<double>&, double, int);

} // namespace llcert
