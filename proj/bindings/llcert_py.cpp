// Python bindings for the main certifier operations. Reports cross the
// boundary as plain dicts/lists mirroring the CLI JSON schemas.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "llcert/json_io.hpp"

namespace py = pybind11;
using namespace llcert;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
        default: throw Error("unsupported JSON value");
    }
}

std::vector<Rational> parse_values(const py::object& spec, int n, const char* what) {
    if (py::isinstance<py::str>(spec))
        return parse_scalar_vector_spec(spec.cast<std::string>(), n, what);
    if (py::isinstance<py::list>(spec) || py::isinstance<py::tuple>(spec)) {
        std::vector<Rational> out;
        for (const auto& item : spec.cast<py::sequence>()) {
            if (py::isinstance<py::str>(item))
                out.push_back(parse_rational(item.cast<std::string>()));
            else if (py::isinstance<py::int_>(item))
                out.push_back(Rational(item.cast<long>()));
            else
                throw Error(std::string(what) +
                            ": encode entries as strings like \"1/4\" so they convert exactly");
        }
        if (static_cast<int>(out.size()) != n)
            throw Error(std::string(what) + ": expected " + std::to_string(n) + " values, got " +
                        std::to_string(out.size()));
        return out;
    }
    throw Error(std::string(what) + ": expected a string spec or a list of strings");
}

bool exact_mode(const std::string& mode) {
    if (mode == "exact") return true;
    if (mode == "float") return false;
    throw Error("mode must be \"exact\" or \"float\"");
}

VertexSet set_from_list(const std::vector<int>& ids, int n) {
    VertexSet s;
    for (int v : ids) {
        if (v < 1 || v > n)
            throw Error("vertex " + std::to_string(v) + " out of range [1, " + std::to_string(n) +
                        "]");
        s = s.with(v - 1);
    }
    return s;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lovász Local Lemma certifier: Shearer and cluster-expansion conditions";

    py::register_exception<Error>(m, "CertifierError");

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("max_degree", &Graph::max_degree)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (auto [i, j] : g.edges()) out.emplace_back(i + 1, j + 1);
                 return out;
             })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", edges=" +
                   std::to_string(g.edges().size()) + ")";
        });

    m.def(
        "graph",
        [](int n, const std::vector<std::pair<int, int>>& edges) {
            std::vector<std::pair<int, int>> zero_based;
            for (auto [i, j] : edges) zero_based.emplace_back(i - 1, j - 1);
            return Graph(n, zero_based);
        },
        py::arg("n"), py::arg("edges"), "Build a graph from 1-based edge pairs.");

    m.def(
        "parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"),
        "Parse a graph document (JSON or edge-list text).");

    m.def(
        "check_shearer",
        [](const Graph& g, const py::object& p, const std::string& mode, double eps) {
            const auto values = parse_values(p, g.vertex_count(), "p");
            if (exact_mode(mode)) {
                ProbVector<Rational> pv(values);
                return json_to_py(shearer_report_json(check_shearer(g, pv, eps), g.vertex_count()));
            }
            ProbVector<double> pv(from_rationals<double>(values));
            return json_to_py(shearer_report_json(check_shearer(g, pv, eps), g.vertex_count()));
        },
        py::arg("g"), py::arg("p"), py::arg("mode") = "exact", py::arg("eps") = kDefaultEpsilon,
        "Decide Shearer's condition; returns the report as a dict.");

    m.def(
        "check_cluster",
        [](const Graph& g, const py::object& p, const py::object& y, const std::string& mode,
           double eps) {
            const int n = g.vertex_count();
            const auto pv = parse_values(p, n, "p");
            const auto yv = parse_values(y, n, "y");
            if (exact_mode(mode)) {
                ProbVector<Rational> pr(pv);
                WeightVector<Rational> yr(yv);
                return json_to_py(cluster_report_json(check_cluster(g, pr, yr, eps), yr, n));
            }
            ProbVector<double> pr(from_rationals<double>(pv));
            WeightVector<double> yr(from_rationals<double>(yv));
            return json_to_py(cluster_report_json(check_cluster(g, pr, yr, eps), yr, n));
        },
        py::arg("g"), py::arg("p"), py::arg("y"), py::arg("mode") = "float",
        py::arg("eps") = kDefaultEpsilon,
        "Check the cluster-expansion condition at explicit weights.");

    m.def(
        "find_y",
        [](const Graph& g, const py::object& p, double tol, double cap, int max_iter, double eps) {
            ProbVector<Rational> pv(parse_values(p, g.vertex_count(), "p"));
            FindYOptions opts;
            opts.tol = tol;
            opts.cap = cap;
            opts.max_iter = max_iter;
            opts.epsilon = eps;
            return json_to_py(find_y_report_json(find_y(g, pv, opts), g.vertex_count()));
        },
        py::arg("g"), py::arg("p"), py::arg("tol") = 1e-10, py::arg("cap") = 1e6,
        py::arg("max_iter") = 10000, py::arg("eps") = kDefaultEpsilon,
        "Search for certificate weights by monotone fixed-point iteration.");

    m.def(
        "cluster_bound",
        [](const Graph& g, const py::object& y, const std::string& mode) {
            const auto yv = parse_values(y, g.vertex_count(), "y");
            if (exact_mode(mode)) {
                WeightVector<Rational> yr(yv);
                return json_to_py(scalar_json(cluster_bound(g, yr)));
            }
            WeightVector<double> yr(from_rationals<double>(yv));
            return json_to_py(scalar_json(cluster_bound(g, yr)));
        },
        py::arg("g"), py::arg("y"), py::arg("mode") = "float",
        "1 / Y(full vertex set) at the given weights.");

    m.def(
        "independence_polynomial",
        [](const Graph& g, const std::vector<int>& s, const py::object& y,
           const std::string& mode) {
            const int n = g.vertex_count();
            const auto yv = parse_values(y, n, "y");
            const VertexSet set = set_from_list(s, n);
            if (exact_mode(mode)) {
                WeightVector<Rational> yr(yv);
                return json_to_py(scalar_json(independence_polynomial(g, set, yr)));
            }
            WeightVector<double> yr(from_rationals<double>(yv));
            return json_to_py(scalar_json(independence_polynomial(g, set, yr)));
        },
        py::arg("g"), py::arg("s"), py::arg("y"), py::arg("mode") = "exact",
        "Weighted independence polynomial over the 1-based vertex list s.");

    m.def(
        "thresholds", [](int d) { return json_to_py(thresholds_json(symmetric_thresholds(d))); },
        py::arg("d"), "Symmetric-LLL thresholds at maximum degree d.");

    m.def("check_symm_inequality", &check_symm_inequality, py::arg("d"));

    m.def(
        "symmetric_certificate",
        [](const Graph& g, const std::string& p, const std::string& mode, double eps) {
            const int n = g.vertex_count();
            if (exact_mode(mode)) {
                const auto report = symmetric_certificate<Rational>(g, parse_rational(p), eps);
                WeightVector<Rational> y(std::vector<Rational>(
                    static_cast<std::size_t>(n), Rational(1, g.max_degree() - 1)));
                return json_to_py(cluster_report_json(report, y, n));
            }
            const double pv = parse_rational(p).get_d();
            const auto report = symmetric_certificate<double>(g, pv, eps);
            WeightVector<double> y(std::vector<double>(static_cast<std::size_t>(n),
                                                       1.0 / (g.max_degree() - 1)));
            return json_to_py(cluster_report_json(report, y, n));
        },
        py::arg("g"), py::arg("p"), py::arg("mode") = "exact", py::arg("eps") = kDefaultEpsilon,
        "Uniform-p certificate at weights 1/(d-1), d the graph's maximum degree.");

    m.def(
        "tight_instance",
        [](const Graph& g, const py::object& p) {
            ProbVector<Rational> pv(parse_values(p, g.vertex_count(), "p"));
            return json_to_py(space_json(tight_instance(g, pv)));
        },
        py::arg("g"), py::arg("p"), "Shearer's extremal space for (g, p) as a dict.");

    m.def(
        "random_product_space",
        [](const Graph& g, std::uint64_t seed) {
            auto [space, p] = random_product_space(g, seed);
            py::dict out;
            out["space"] = json_to_py(space_json(space));
            Json marginals = Json::array();
            for (const auto& v : p.values()) marginals.push_back(scalar_json(v));
            out["p"] = json_to_py(marginals);
            return out;
        },
        py::arg("g"), py::arg("seed"),
        "Deterministic variable-model space with exact marginals.");

    m.def(
        "verify_tight_instance",
        [](const Graph& g, const py::object& p, double eps) {
            ProbVector<Rational> pv(parse_values(p, g.vertex_count(), "p"));
            const auto space = tight_instance(g, pv, eps);
            const auto lopsided = check_lopsided_condition(space, g, pv, eps);
            const auto bound = verify_avoidance_bound(space, g, pv, eps);
            py::dict out;
            out["lopsided_holds"] = lopsided.holds;
            out["equality_regime"] = lopsided.equality_regime;
            out["bound_all_hold"] = bound.all_hold;
            out["worst_gap"] = json_to_py(scalar_json(bound.worst_gap));
            out["peeling_inequality"] = verify_peeling_inequality(space, g, pv, eps);
            return out;
        },
        py::arg("g"), py::arg("p"), py::arg("eps") = kDefaultEpsilon,
        "Run the oracle checks against the tight instance of (g, p).");
}
