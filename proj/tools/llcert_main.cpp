// llcert: decide Shearer's condition and the cluster-expansion condition of
// the Lovász Local Lemma for a dependency graph, produce certified bounds,
// and verify the identities behind them on explicit probability spaces.
//
// Exit codes: 0 condition holds / certificate found, 1 not certified or
// violated, 2 usage or input error.

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "llcert/json_io.hpp"

namespace {

using namespace llcert;

struct CommonOpts {
    std::string graph_path;
    std::string p_spec;
    std::string y_spec;
    std::string mode = "exact";
    double epsilon = kDefaultEpsilon;
    std::string output = "json";
};

Graph load_graph(const std::string& path) {
    return parse_graph(read_file(path));
}

void emit(const Json& j, const std::string& output) {
    if (output == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // Plain two-column table of the top-level fields.
    for (const auto& [key, value] : j.items())
        std::cout << std::left << std::setw(16) << key
                  << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

template <class Num>
int run_check_shearer(const Graph& g, const std::vector<Rational>& p_in, const CommonOpts& opts) {
    ProbVector<Num> p(from_rationals<Num>(p_in));
    const auto report = check_shearer(g, p, opts.epsilon);
    emit(shearer_report_json(report, g.vertex_count()), opts.output);
    return report.holds ? 0 : 1;
}

template <class Num>
int run_check_cluster(const Graph& g, const std::vector<Rational>& p_in,
                      const std::vector<Rational>& y_in, const CommonOpts& opts) {
    ProbVector<Num> p(from_rationals<Num>(p_in));
    WeightVector<Num> y(from_rationals<Num>(y_in));
    const auto report = check_cluster(g, p, y, opts.epsilon);
    emit(cluster_report_json(report, y, g.vertex_count()), opts.output);
    return report.holds ? 0 : 1;
}

template <class Num>
int run_bound(const Graph& g, const std::vector<Rational>& y_in, const CommonOpts& opts) {
    WeightVector<Num> y(from_rationals<Num>(y_in));
    Json j;
    j["bound"] = scalar_json(cluster_bound(g, y));
    j["n"] = g.vertex_count();
    j["mode"] = mode_name<Num>();
    emit(j, opts.output);
    return 0;
}

int run_find_y(const Graph& g, const std::vector<Rational>& p_in, const FindYOptions& fopts,
               bool require_exact, const CommonOpts& opts) {
    ProbVector<Rational> p(p_in);
    const auto result = find_y(g, p, fopts);
    emit(find_y_report_json(result, g.vertex_count()), opts.output);
    // The search itself runs in float; --mode exact additionally insists on
    // an exactly validated certificate.
    const bool certified =
        result.converged && (require_exact ? result.exact_validated : result.report.holds);
    return certified ? 0 : 1;
}

int run_thresholds(int d_lo, int d_hi, const CommonOpts& opts) {
    if (d_hi < d_lo) throw Error("empty degree range");
    Json rows = Json::array();
    for (int d = d_lo; d <= d_hi; ++d) rows.push_back(thresholds_json(symmetric_thresholds(d)));
    if (opts.output == "json") {
        Json j;
        j["rows"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << std::left << std::setw(6) << "d" << std::setw(14) << "erdos_lovasz"
                  << std::setw(16) << "spencer" << std::setw(16) << "shearer"
                  << "cluster_ed" << "\n";
        for (const auto& row : rows)
            std::cout << std::left << std::setw(6) << row["d"].dump() << std::setw(14)
                      << row["erdos_lovasz"].get<std::string>() << std::setw(16)
                      << row["spencer"].get<std::string>() << std::setw(16)
                      << row["shearer"].get<std::string>() << row["cluster_ed"].dump() << "\n";
    }
    return 0;
}

template <class Num>
int run_tight_instance(const Graph& g, const std::vector<Rational>& p_in,
                       const CommonOpts& opts) {
    ProbVector<Num> p(from_rationals<Num>(p_in));
    // A violated condition is a negative verdict, not an input error.
    const auto shearer = check_shearer(g, p, opts.epsilon);
    if (!shearer.holds) {
        std::cerr << "not constructed: Shearer's condition fails (first negative set "
                  << set_str(*shearer.violating_set) << ")\n";
        return 1;
    }
    const auto space = tight_instance(g, p, opts.epsilon);
    emit(space_json(space), opts.output);
    return 0;
}

// Runs the space-verification suite: weight sanity, the lopsided condition
// with its equality regime, the avoidance lower bounds when Shearer's
// condition holds, and the peeling inequality. For tight instances the
// bound gaps must vanish and the marginals must reproduce p.
int run_verify(const Graph& g, const std::optional<std::vector<Rational>>& p_in,
               const std::optional<std::string>& space_path, std::uint64_t seed,
               const CommonOpts& opts) {
    const int n = g.vertex_count();
    FiniteSpace<Rational> space;
    std::optional<ProbVector<Rational>> p;
    std::string source;
    bool expect_tight = false;

    if (space_path) {
        space = space_from_json(Json::parse(read_file(*space_path)));
        if (space.n != n) throw Error("space and graph disagree on the event count");
        if (p_in) p.emplace(*p_in);
        source = "file";
    } else if (p_in) {
        p.emplace(*p_in);
        const auto shearer = check_shearer(g, *p, opts.epsilon);
        if (!shearer.holds) {
            Json j;
            j["n"] = n;
            j["source"] = "tight-instance";
            Json sj;
            sj["holds"] = false;
            sj["violating_set"] = to_one_based(*shearer.violating_set);
            Json checks;
            checks["shearer"] = std::move(sj);
            j["checks"] = std::move(checks);
            j["all_pass"] = false;
            emit(j, opts.output);
            return 1;
        }
        space = tight_instance(g, *p);
        source = "tight-instance";
        expect_tight = true;
    } else {
        auto [s, marginals] = random_product_space(g, seed);
        space = std::move(s);
        p.emplace(std::move(marginals));
        source = "random-product";
    }

    Json checks;
    bool all_pass = true;

    if (!p) {
        // Without probabilities only the structural weight checks apply;
        // validated() already enforced them during construction.
        checks["weights"] = true;
    } else {
        checks["weights"] = true;

        bool marginals_match = true;
        for (int i = 0; i < n; ++i)
            if (space.marginal(i) != (*p)[i]) marginals_match = false;
        checks["marginals_match_p"] = marginals_match;
        if (expect_tight && !marginals_match) all_pass = false;

        const auto lopsided = check_lopsided_condition(space, g, *p, opts.epsilon);
        Json lj;
        lj["holds"] = lopsided.holds;
        lj["equality_regime"] = lopsided.equality_regime;
        lj["skipped"] = lopsided.skipped;
        lj["witness"] = Json(nullptr);
        if (lopsided.witness) {
            Json w;
            w["i"] = lopsided.witness->first + 1;
            w["J"] = to_one_based(lopsided.witness->second);
            lj["witness"] = std::move(w);
        }
        checks["lopsided"] = std::move(lj);
        if (!lopsided.holds) all_pass = false;

        const auto shearer = check_shearer(g, *p, opts.epsilon);
        Json sj;
        sj["holds"] = shearer.holds;
        sj["bound"] = shearer.holds ? scalar_json(shearer.bound) : Json(nullptr);
        checks["shearer"] = std::move(sj);

        if (shearer.holds && lopsided.holds) {
            const auto bound = verify_avoidance_bound(space, g, *p, opts.epsilon);
            Json bj;
            bj["all_hold"] = bound.all_hold;
            bj["worst_gap"] = scalar_json(bound.worst_gap);
            bj["worst_set"] = to_one_based(bound.worst_set);
            checks["avoidance_bound"] = std::move(bj);
            if (!bound.all_hold) all_pass = false;
            if (expect_tight) {
                const bool tight_gap_zero = bound.worst_gap == Rational(0);
                checks["tight_gap_zero"] = tight_gap_zero;
                if (!tight_gap_zero) all_pass = false;
            }
        }

        const bool peeling = lopsided.holds && verify_peeling_inequality(space, g, *p, opts.epsilon);
        checks["peeling_inequality"] = peeling;
        if (!peeling) all_pass = false;
    }

    Json j;
    j["n"] = n;
    j["source"] = source;
    j["atoms"] = space.atoms.size();
    j["checks"] = std::move(checks);
    j["all_pass"] = all_pass;
    emit(j, opts.output);
    return all_pass ? 0 : 1;
}

// Side-by-side view: the Shearer bound, the cluster bound at searched
// weights, and the symmetric thresholds at the graph's maximum degree.
int run_compare(const Graph& g, const std::vector<Rational>& p_in, const FindYOptions& fopts,
                const CommonOpts& opts) {
    const int n = g.vertex_count();
    ProbVector<Rational> p(p_in);
    Json rows = Json::array();
    bool shearer_holds = false;

    {
        const auto r = check_shearer(g, p, opts.epsilon);
        shearer_holds = r.holds;
        Json row;
        row["method"] = "shearer";
        row["holds"] = r.holds;
        row["bound"] = r.holds ? scalar_json(r.bound) : Json(nullptr);
        row["degenerate"] = r.degenerate;
        rows.push_back(std::move(row));
    }
    {
        const auto r = find_y(g, p, fopts);
        Json row;
        row["method"] = "cluster";
        row["status"] = r.converged ? "certified" : "no certificate found";
        row["holds"] = r.converged && r.report.holds;
        row["bound"] = (r.converged && r.report.holds) ? scalar_json(r.report.bound) : Json(nullptr);
        row["iterations"] = r.iterations;
        rows.push_back(std::move(row));
    }
    {
        const int d = g.max_degree();
        Json row;
        row["method"] = "symmetric-thresholds";
        row["max_degree"] = d;
        Rational max_p(0);
        for (int i = 0; i < n; ++i) max_p = std::max(max_p, p[i]);
        row["max_p"] = scalar_json(max_p);
        if (d >= 2) {
            const auto t = symmetric_thresholds(d);
            row["erdos_lovasz"] = scalar_json(t.erdos_lovasz);
            row["within_erdos_lovasz"] = max_p <= t.erdos_lovasz;
            row["spencer"] = scalar_json(t.spencer);
            row["within_spencer"] = max_p <= t.spencer;
            row["shearer"] = scalar_json(t.shearer);
            row["within_shearer"] = max_p <= t.shearer;
            row["cluster_ed"] = scalar_json(t.cluster_ed);
            row["within_cluster_ed"] = max_p.get_d() <= t.cluster_ed;
        } else {
            row["note"] = "symmetric thresholds need maximum degree >= 2";
        }
        rows.push_back(std::move(row));
    }

    Json j;
    j["n"] = n;
    j["rows"] = std::move(rows);
    emit(j, opts.output);
    return shearer_holds ? 0 : 1;
}

// "2" or "2..6".
std::pair<int, int> parse_degree_range(const std::string& spec) {
    try {
        const auto dots = spec.find("..");
        if (dots == std::string::npos) {
            const int d = std::stoi(spec);
            return {d, d};
        }
        return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
    } catch (const std::exception&) {
        throw Error("malformed degree range '" + spec + "'; use D or LO..HI");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lovász Local Lemma certifier: Shearer and cluster-expansion conditions"};
    app.require_subcommand(1);

    CommonOpts opts;
    FindYOptions fopts;
    std::string d_range = "2";
    std::uint64_t seed = 0;
    std::string space_path;

    auto add_common = [&](CLI::App* cmd, bool needs_graph) {
        if (needs_graph)
            cmd->add_option("--graph", opts.graph_path, "graph file (JSON or edge list)")
                ->required();
        cmd->add_option("--mode", opts.mode, "numeric mode")
            ->check(CLI::IsMember({"exact", "float"}));
        cmd->add_option("--eps", opts.epsilon, "float-mode comparison tolerance");
        cmd->add_option("--output", opts.output, "report format")
            ->check(CLI::IsMember({"json", "table"}));
    };
    auto add_search = [&](CLI::App* cmd) {
        cmd->add_option("--tol", fopts.tol, "fixed-point convergence tolerance");
        cmd->add_option("--cap", fopts.cap, "divergence cap on the iterates");
        cmd->add_option("--max-iter", fopts.max_iter, "iteration budget");
    };

    auto* shearer = app.add_subcommand("check-shearer", "decide Shearer's condition");
    add_common(shearer, true);
    shearer->add_option("--p", opts.p_spec, "probabilities: file, value, or comma list")
        ->required();

    auto* cluster = app.add_subcommand("check-cluster",
                                       "check the cluster-expansion condition at given weights");
    add_common(cluster, true);
    cluster->add_option("--p", opts.p_spec, "probabilities")->required();
    cluster->add_option("--y", opts.y_spec, "weights")->required();
    cluster->get_option("--mode")->default_str("float");

    auto* findy = app.add_subcommand("find-y", "search for certificate weights");
    add_common(findy, true);
    findy->add_option("--p", opts.p_spec, "probabilities")->required();
    add_search(findy);

    auto* bound = app.add_subcommand("bound", "1 / Y(full set) at given weights");
    add_common(bound, true);
    bound->add_option("--y", opts.y_spec, "weights")->required();

    auto* thresholds = app.add_subcommand("thresholds", "symmetric-LLL threshold table");
    thresholds->add_option("--d", d_range, "degree or range LO..HI")->required();
    thresholds->add_option("--output", opts.output, "report format")
        ->check(CLI::IsMember({"json", "table"}));

    auto* tight = app.add_subcommand("tight-instance", "emit Shearer's extremal space as JSON");
    add_common(tight, true);
    tight->add_option("--p", opts.p_spec, "probabilities")->required();

    auto* verify = app.add_subcommand("verify", "run the space-verification suite");
    add_common(verify, true);
    verify->add_option("--p", opts.p_spec, "probabilities (builds the tight instance)");
    verify->add_option("--space", space_path, "space JSON to verify instead");
    verify->add_option("--seed", seed, "generate a product space with this seed");

    auto* compare = app.add_subcommand("compare", "all methods side by side");
    add_common(compare, true);
    compare->add_option("--p", opts.p_spec, "probabilities")->required();
    add_search(compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const bool exact = opts.mode == "exact";
        if (shearer->parsed()) {
            const Graph g = load_graph(opts.graph_path);
            const auto p = parse_scalar_vector_spec(opts.p_spec, g.vertex_count(), "--p");
            return exact ? run_check_shearer<Rational>(g, p, opts)
                         : run_check_shearer<double>(g, p, opts);
        }
        if (cluster->parsed()) {
            const Graph g = load_graph(opts.graph_path);
            const auto p = parse_scalar_vector_spec(opts.p_spec, g.vertex_count(), "--p");
            const auto y = parse_scalar_vector_spec(opts.y_spec, g.vertex_count(), "--y");
            const bool cluster_exact = cluster->get_option("--mode")->count()
                                           ? exact
                                           : false; // float unless asked otherwise
            return cluster_exact ? run_check_cluster<Rational>(g, p, y, opts)
                                 : run_check_cluster<double>(g, p, y, opts);
        }
        if (findy->parsed()) {
            const Graph g = load_graph(opts.graph_path);
            const auto p = parse_scalar_vector_spec(opts.p_spec, g.vertex_count(), "--p");
            fopts.epsilon = opts.epsilon;
            const bool require_exact = findy->get_option("--mode")->count() > 0 && exact;
            return run_find_y(g, p, fopts, require_exact, opts);
        }
        if (bound->parsed()) {
            const Graph g = load_graph(opts.graph_path);
            const auto y = parse_scalar_vector_spec(opts.y_spec, g.vertex_count(), "--y");
            const bool bound_exact = bound->get_option("--mode")->count() ? exact : false;
            return bound_exact ? run_bound<Rational>(g, y, opts) : run_bound<double>(g, y, opts);
        }
        if (thresholds->parsed()) {
            const auto [lo, hi] = parse_degree_range(d_range);
            return run_thresholds(lo, hi, opts);
        }
        if (tight->parsed()) {
            const Graph g = load_graph(opts.graph_path);
            const auto p = parse_scalar_vector_spec(opts.p_spec, g.vertex_count(), "--p");
            return exact ? run_tight_instance<Rational>(g, p, opts)
                         : run_tight_instance<double>(g, p, opts);
        }
        if (verify->parsed()) {
            const Graph g = load_graph(opts.graph_path);
            std::optional<std::vector<Rational>> p;
            if (!opts.p_spec.empty())
                p = parse_scalar_vector_spec(opts.p_spec, g.vertex_count(), "--p");
            std::optional<std::string> space;
            if (!space_path.empty()) space = space_path;
            if (!p && !space && verify->get_option("--seed")->count() == 0)
                throw Error("verify needs --p, --space, or --seed");
            return run_verify(g, p, space, seed, opts);
        }
        if (compare->parsed()) {
            const Graph g = load_graph(opts.graph_path);
            const auto p = parse_scalar_vector_spec(opts.p_spec, g.vertex_count(), "--p");
            fopts.epsilon = opts.epsilon;
            return run_compare(g, p, fopts, opts);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
