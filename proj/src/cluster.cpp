#include "llcert/cluster.hpp"

#include <algorithm>
#include <cmath>

#include "llcert/shearer.hpp"

namespace llcert {

namespace detail {

template <class Num>
const Num& YEvaluator<Num>::at(VertexSet s) {
    if (s.size() > kTableCap)
        throw Error("independence-polynomial queries are capped at sets of " +
                    std::to_string(kTableCap) + " vertices; got " + std::to_string(s.size()));
    auto it = memo_.find(s.bits());
    if (it == memo_.end()) it = memo_.emplace(s.bits(), eval(s)).first;
    return it->second;
}

template <class Num>
Num YEvaluator<Num>::eval(VertexSet s) {
    if (s.empty()) return Num(1);
    const auto comps = g_->induced_components(s);
    if (comps.size() > 1) {
        Num r(1);
        for (VertexSet c : comps) r *= at(c);
        return r;
    }
    // Connected: recurse on the lowest vertex. Independent subsets without
    // it live in s - a; the ones containing it avoid its neighborhood.
    const int a = s.lowest();
    const Num tail = at(s - g_->closed_neighborhood(a));
    return at(s.without(a)) + y_[a] * tail;
}

template class YEvaluator<Rational>;
template class YEvaluator<double>;

} // namespace detail

namespace {

void require_sizes(const Graph& g, int len, const char* what) {
    if (len != g.vertex_count())
        throw Error(std::string(what) + " has " + std::to_string(len) + " entries, graph has " +
                    std::to_string(g.vertex_count()) + " vertices");
}

// Core of check_cluster, shared with find_y where weights may legitimately
// be zero on vertices whose p is zero.
template <class Num>
ClusterReport<Num> cluster_slacks(const Graph& g, const std::vector<Num>& p,
                                  const std::vector<Num>& y, double epsilon) {
    const int n = g.vertex_count();
    detail::YEvaluator<Num> eval(g, y);
    ClusterReport<Num> report;
    report.slack.reserve(static_cast<std::size_t>(n));
    bool holds = true;
    for (int i = 0; i < n; ++i) {
        const Num slack = y[i] / eval.at(g.closed_neighborhood(i)) - p[i];
        if (!NumOps<Num>::ge(slack, Num(0), epsilon)) holds = false;
        report.slack.push_back(slack);
    }
    report.holds = holds;
    if (holds) report.bound = Num(1) / eval.at(g.vertices());
    return report;
}

} // namespace

template <class Num>
Num independence_polynomial(const Graph& g, VertexSet s, const WeightVector<Num>& y) {
    require_sizes(g, y.size(), "weight vector");
    if (!s.subset_of(g.vertices())) throw Error("set extends past the vertex range");
    detail::YEvaluator<Num> eval(g, y.values());
    return eval.at(s);
}

template <class Num>
CoefficientTable<Num> independence_table(const Graph& g, const WeightVector<Num>& y) {
    require_sizes(g, y.size(), "weight vector");
    const int n = g.vertex_count();
    require_table_size(n);
    CoefficientTable<Num> t{TableKind::Independence, n, {}};
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::uint64_t> gamma_plus(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) gamma_plus[i] = g.closed_neighborhood(i).bits();
    t.value.assign(count, Num(0));
    t.value[0] = Num(1);
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        const int a = std::countr_zero(mask);
        t.value[mask] = t.value[mask & (mask - 1)] + y[a] * t.value[mask & ~gamma_plus[a]];
    }
    return t;
}

template <class Num>
ClusterReport<Num> check_cluster(const Graph& g, const ProbVector<Num>& p,
                                 const WeightVector<Num>& y, double epsilon) {
    require_sizes(g, p.size(), "probability vector");
    require_sizes(g, y.size(), "weight vector");
    return cluster_slacks(g, p.values(), y.values(), epsilon);
}

template <class Num>
Num cluster_bound(const Graph& g, const WeightVector<Num>& y) {
    require_sizes(g, y.size(), "weight vector");
    detail::YEvaluator<Num> eval(g, y.values());
    return Num(1) / eval.at(g.vertices());
}

namespace {

// One monotone fixed-point run in float arithmetic. Returns true on
// convergence, filling y with the final iterate; false once an iterate
// escapes the cap or the budget runs out.
bool run_iteration(const Graph& g, const std::vector<double>& p, std::vector<double>& y,
                   const FindYOptions& opts, int& iterations) {
    const int n = g.vertex_count();
    std::vector<double> next(static_cast<std::size_t>(n), 0.0);
    for (iterations = 1; iterations <= opts.max_iter; ++iterations) {
        detail::YEvaluator<double> eval(g, y);
        bool converged = true;
        for (int i = 0; i < n; ++i) {
            if (p[i] == 0.0) {
                next[i] = 0.0;
                continue;
            }
            next[i] = p[i] * eval.at(g.closed_neighborhood(i));
            // The map is monotone from y = p upward; a decrease beyond
            // rounding noise means a bug, not a numerical accident.
            if (next[i] < y[i] * (1.0 - 1e-13))
                throw Error("fixed-point iterate decreased; monotonicity violated");
            if (next[i] > opts.cap) return false;
            if (std::fabs(next[i] - y[i]) > opts.tol * std::max(next[i], 1e-300))
                converged = false;
        }
        y.swap(next);
        if (converged) return true;
    }
    iterations = opts.max_iter;
    return false;
}

} // namespace

FindYResult find_y(const Graph& g, const ProbVector<Rational>& p, const FindYOptions& opts) {
    require_sizes(g, p.size(), "probability vector");
    if (opts.tol <= 0) throw Error("find_y: tol must be positive");
    if (opts.cap <= 1) throw Error("find_y: cap must exceed 1");
    if (opts.max_iter < 1) throw Error("find_y: max_iter must be positive");

    const int n = g.vertex_count();
    FindYResult result;
    result.y.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        if (p[i] == Rational(1)) return result; // no positive slack is possible

    std::vector<double> pd(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) pd[i] = p[i].get_d();

    std::vector<double> base = pd;
    if (!run_iteration(g, pd, base, opts, result.iterations)) {
        result.y = base; // last completed iterate, for inspection
        return result;
    }
    result.converged = true;

    // The iteration approaches the least fixed point from below, where the
    // slack is exactly zero, so the raw iterate sits a hair on the negative
    // side. Refit against a slightly inflated p: its fixed point carries
    // positive slack against the original p, validates at plain epsilon,
    // and survives rationalization for the exact check. Only probabilities
    // within the inflation of the certifiable boundary fall through to the
    // raw iterate, which is then judged at the search tolerance.
    for (double pad : {1e-6, 1e-9}) {
        std::vector<double> padded = pd;
        bool feasible = true;
        for (auto& v : padded) {
            v *= 1.0 + pad;
            if (v >= 1.0) feasible = false;
        }
        if (!feasible) continue;
        std::vector<double> yp = padded;
        int iters = 0;
        if (!run_iteration(g, padded, yp, opts, iters)) continue;

        auto report = cluster_slacks(g, pd, yp, opts.epsilon);
        if (!report.holds) continue;
        result.y = yp;
        result.report = std::move(report);

        std::vector<Rational> ye(static_cast<std::size_t>(n), Rational(0));
        for (int i = 0; i < n; ++i)
            if (pd[i] > 0.0) ye[i] = rationalize(yp[i]);
        auto exact = cluster_slacks<Rational>(g, p.values(), ye, 0.0);
        if (exact.holds) {
            result.exact_validated = true;
            result.y_exact = std::move(ye);
            result.exact_report = std::move(exact);
        }
        return result;
    }

    result.y = base;
    result.report = cluster_slacks(g, pd, base, std::max(opts.epsilon, 16.0 * opts.tol));
    return result;
}

template <class Num>
bool verify_ratio_domination(const Graph& g, const ProbVector<Num>& p, const WeightVector<Num>& y,
                             double epsilon, int oracle_cap) {
    const int n = g.vertex_count();
    if (n > oracle_cap)
        throw Error("ratio-domination check is capped at n = " + std::to_string(oracle_cap) +
                    "; got n = " + std::to_string(n));
    const auto avoid = avoidance_table(g, p);
    const auto ytab = independence_table(g, y);

    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        const VertexSet s = VertexSet::of_bits(mask);
        for (int a : s.elements()) {
            const VertexSet sa = s.without(a);
            if (NumOps<Num>::sign(avoid.at(sa), epsilon) != Sign::Positive) continue;
            // avoid(S)/avoid(S-a) >= Y(S^c)/Y((S-a)^c), cross-multiplied.
            const Num lhs = avoid.at(s) * ytab.at(sa.complement_in(n));
            const Num rhs = ytab.at(s.complement_in(n)) * avoid.at(sa);
            if (!NumOps<Num>::ge(lhs, rhs, epsilon)) return false;
        }
    }
    // Telescoped corner: full avoidance value dominates 1/Y(full).
    return NumOps<Num>::ge(avoid.at(g.vertices()) * ytab.at(g.vertices()), Num(1), epsilon);
}

template Rational independence_polynomial(const Graph&, VertexSet, const WeightVector<Rational>&);
template double independence_polynomial(const Graph&, VertexSet, const WeightVector<double>&);
template CoefficientTable<Rational> independence_table(const Graph&, const WeightVector<Rational>&);
template CoefficientTable<double> independence_table(const Graph&, const WeightVector<double>&);
template ClusterReport<Rational> check_cluster(const Graph&, const ProbVector<Rational>&,
                                               const WeightVector<Rational>&, double);
template ClusterReport<double> check_cluster(const Graph&, const ProbVector<double>&,
                                             const WeightVector<double>&, double);
template Rational cluster_bound(const Graph&, const WeightVector<Rational>&);
template double cluster_bound(const Graph&, const WeightVector<double>&);
template bool verify_ratio_domination(const Graph&, const ProbVector<Rational>&,
                                      const WeightVector<Rational>&, double, int);
template bool verify_ratio_domination(const Graph&, const ProbVector<double>&,
                                      const WeightVector<double>&, double, int);

} // namespace llcert
