#pragma once

#include <vector>

#include "llcert/graph.hpp"
#include "llcert/scalar.hpp"

namespace llcert {

// Per-vertex probability bounds. Entries validated into [0, 1]; the
// endpoints are permitted (p_i = 0 makes a vertex inert, p_i = 1 forces a
// zero certificate at that vertex).
template <class Num>
class ProbVector {
public:
    explicit ProbVector(std::vector<Num> p);

    int size() const { return static_cast<int>(p_.size()); }
    const Num& operator[](int i) const { return p_[i]; }
    const std::vector<Num>& values() const { return p_; }

private:
    std::vector<Num> p_;
};

// Per-vertex weights for the independence polynomial; strictly positive.
template <class Num>
class WeightVector {
public:
    explicit WeightVector(std::vector<Num> y);

    int size() const { return static_cast<int>(y_.size()); }
    const Num& operator[](int i) const { return y_[i]; }
    const std::vector<Num>& values() const { return y_; }

private:
    std::vector<Num> y_;
};

enum class TableKind {
    Avoidance,   // alternating sums; entry S lower-bounds Pr[no event in S]
    TightWeight, // atom weights of the tight instance; zero off Ind(G)
    Independence // weighted independence polynomial
};

// Dense map VertexSet -> Num over all 2^n subsets, indexed by the canonical
// set encoding.
template <class Num>
struct CoefficientTable {
    TableKind kind = TableKind::Avoidance;
    int n = 0;
    std::vector<Num> value;

    const Num& at(VertexSet s) const { return value[s.bits()]; }
    Num& at(VertexSet s) { return value[s.bits()]; }
};

template <class Num>
std::vector<Num> from_rationals(const std::vector<Rational>& xs) {
    std::vector<Num> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(NumOps<Num>::from(x));
    return out;
}

void require_table_size(int n);

} // namespace llcert
