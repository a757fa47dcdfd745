#include "llcert/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace llcert {

Json scalar_json(const Rational& x) { return fraction_str(x); }
Json scalar_json(double x) { return x; }

namespace {

Rational scalar_from_json(const Json& v, const char* what) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return parse_rational(v.dump());
    if (v.is_number())
        throw Error(std::string(what) +
                    ": encode values as strings (\"1/4\" or \"0.25\"), not JSON floats, so they "
                    "convert exactly");
    throw Error(std::string(what) + ": expected a string-encoded number");
}

template <class Num>
Json scalar_list_json(const std::vector<Num>& xs) {
    Json arr = Json::array();
    for (const auto& x : xs) arr.push_back(scalar_json(x));
    return arr;
}

} // namespace

std::vector<Rational> parse_scalar_vector_json(const Json& doc, int n, const char* what) {
    if (!doc.is_object()) throw Error(std::string(what) + ": expected a JSON object");
    if (doc.contains("uniform")) {
        const Rational v = scalar_from_json(doc["uniform"], what);
        return std::vector<Rational>(static_cast<std::size_t>(n), v);
    }
    if (doc.contains("values")) {
        const auto& vals = doc["values"];
        if (!vals.is_array())
            throw Error(std::string(what) + ": \"values\" must be an array");
        if (static_cast<int>(vals.size()) != n)
            throw Error(std::string(what) + ": expected " + std::to_string(n) + " values, got " +
                        std::to_string(vals.size()));
        std::vector<Rational> out;
        for (const auto& v : vals) out.push_back(scalar_from_json(v, what));
        return out;
    }
    throw Error(std::string(what) + ": expected {\"uniform\": ...} or {\"values\": [...]}");
}

std::vector<Rational> parse_scalar_vector_spec(const std::string& spec, int n, const char* what) {
    if (spec.empty()) throw Error(std::string(what) + ": empty value");

    if (std::filesystem::exists(spec)) {
        Json doc;
        try {
            doc = Json::parse(read_file(spec));
        } catch (const Json::exception& e) {
            throw Error(std::string(what) + ": malformed JSON in " + spec + ": " + e.what());
        }
        return parse_scalar_vector_json(doc, n, what);
    }

    if (spec.find(',') == std::string::npos)
        return std::vector<Rational>(static_cast<std::size_t>(n), parse_rational(spec));

    std::vector<Rational> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (static_cast<int>(out.size()) != n)
        throw Error(std::string(what) + ": expected " + std::to_string(n) + " values, got " +
                    std::to_string(out.size()));
    return out;
}

template <class Num>
Json shearer_report_json(const ShearerReport<Num>& r, int n) {
    Json j;
    j["holds"] = r.holds;
    j["bound"] = r.holds ? scalar_json(r.bound) : Json(nullptr);
    j["violating_set"] = r.violating_set ? Json(to_one_based(*r.violating_set)) : Json(nullptr);
    j["degenerate"] = r.degenerate;
    j["n"] = n;
    j["mode"] = mode_name<Num>();
    return j;
}

template <class Num>
Json cluster_report_json(const ClusterReport<Num>& r, const WeightVector<Num>& y, int n) {
    Json j;
    j["holds"] = r.holds;
    j["bound"] = r.holds ? scalar_json(r.bound) : Json(nullptr);
    j["slack"] = scalar_list_json(r.slack);
    j["y"] = scalar_list_json(y.values());
    j["n"] = n;
    j["mode"] = mode_name<Num>();
    return j;
}

Json find_y_report_json(const FindYResult& r, int n) {
    Json j;
    j["y"] = scalar_list_json(r.y);
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    j["holds"] = r.converged && r.report.holds;
    j["bound"] = (r.converged && r.report.holds) ? scalar_json(r.report.bound) : Json(nullptr);
    j["slack"] = r.converged ? scalar_list_json(r.report.slack) : Json::array();
    j["status"] = r.converged ? "certified" : "no certificate found";
    j["validation"] = !r.converged ? Json(nullptr)
                      : r.exact_validated ? Json("exact")
                                          : Json("float-only");
    if (r.exact_validated) {
        j["y_exact"] = scalar_list_json(r.y_exact);
        j["bound_exact"] = scalar_json(r.exact_report.bound);
    } else {
        j["y_exact"] = nullptr;
        j["bound_exact"] = nullptr;
    }
    j["n"] = n;
    j["mode"] = "float";
    return j;
}

Json thresholds_json(const ThresholdSet& t) {
    Json j;
    j["d"] = t.d;
    j["erdos_lovasz"] = scalar_json(t.erdos_lovasz);
    j["spencer"] = scalar_json(t.spencer);
    j["shearer"] = scalar_json(t.shearer);
    j["cluster_ed"] = scalar_json(t.cluster_ed);
    return j;
}

template <class Num>
Json space_json(const FiniteSpace<Num>& space) {
    Json atoms = Json::array();
    for (const auto& atom : space.atoms) {
        Json a;
        a["w"] = scalar_json(atom.weight);
        a["events"] = to_one_based(atom.events);
        atoms.push_back(std::move(a));
    }
    Json j;
    j["atoms"] = std::move(atoms);
    j["n"] = space.n;
    return j;
}

FiniteSpace<Rational> space_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw Error("space JSON needs an integer field \"n\"");
    const int n = doc["n"].get<int>();
    if (!doc.contains("atoms") || !doc["atoms"].is_array())
        throw Error("space JSON needs an array field \"atoms\"");
    std::vector<FiniteSpace<Rational>::Atom> atoms;
    int k = 0;
    for (const auto& a : doc["atoms"]) {
        const std::string where = "atoms[" + std::to_string(k) + "]";
        if (!a.is_object() || !a.contains("w") || !a.contains("events"))
            throw Error(where + ": expected {\"w\": ..., \"events\": [...]}");
        const Rational w = scalar_from_json(a["w"], where.c_str());
        if (!a["events"].is_array()) throw Error(where + ": \"events\" must be an array");
        VertexSet events;
        for (const auto& e : a["events"]) {
            if (!e.is_number_integer())
                throw Error(where + ": event ids must be integers");
            const long long v = e.get<long long>();
            if (v < 1 || v > n)
                throw Error(where + ": event " + std::to_string(v) + " out of range [1, " +
                            std::to_string(n) + "]");
            events = events.with(static_cast<int>(v - 1));
        }
        atoms.push_back({w, events});
        ++k;
    }
    return FiniteSpace<Rational>::validated(n, std::move(atoms));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template Json shearer_report_json(const ShearerReport<Rational>&, int);
template Json shearer_report_json(const ShearerReport<double>&, int);
template Json cluster_report_json(const ClusterReport<Rational>&, const WeightVector<Rational>&,
                                  int);
template Json cluster_report_json(const ClusterReport<double>&, const WeightVector<double>&, int);
template Json space_json(const FiniteSpace<Rational>&);
template Json space_json(const FiniteSpace<double>&);

} // namespace llcert
