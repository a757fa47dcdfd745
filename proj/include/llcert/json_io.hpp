#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "llcert/cluster.hpp"
#include "llcert/finite_space.hpp"
#include "llcert/shearer.hpp"
#include "llcert/symmetric.hpp"

namespace llcert {

// Reports keep insertion order so identical runs serialize byte-identically.
using Json = nlohmann::ordered_json;

// Scalars serialize as exact fraction strings or plain JSON numbers
// depending on the mode.
Json scalar_json(const Rational& x);
Json scalar_json(double x);

template <class Num>
const char* mode_name() {
    return NumOps<Num>::is_exact ? "exact" : "float";
}

// {"uniform": "1/4"} or {"values": ["1/4", ...]} of length n. Values are
// strings (or integer numbers); fractional JSON numbers are rejected so
// exact inputs never inherit binary rounding.
std::vector<Rational> parse_scalar_vector_json(const Json& doc, int n, const char* what);

// CLI-facing form of the same: a path to a JSON file, an inline uniform
// value like "1/4", or an inline comma list "1/4,1/3,...".
std::vector<Rational> parse_scalar_vector_spec(const std::string& spec, int n, const char* what);

template <class Num>
Json shearer_report_json(const ShearerReport<Num>& r, int n);

template <class Num>
Json cluster_report_json(const ClusterReport<Num>& r, const WeightVector<Num>& y, int n);

Json find_y_report_json(const FindYResult& r, int n);

Json thresholds_json(const ThresholdSet& t);

template <class Num>
Json space_json(const FiniteSpace<Num>& space);

FiniteSpace<Rational> space_from_json(const Json& doc);

std::string read_file(const std::string& path);

} // namespace llcert
