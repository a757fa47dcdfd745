#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "llcert/error.hpp"

namespace llcert {

inline constexpr int kMaxVertices = 64; // VertexSet is one machine word
inline constexpr int kTableCap = 24;    // 2^n coefficient-table entries
inline constexpr int kOracleCap = 12;   // default cap for all-subset checks

// Subset of the vertex range [0, n). The bit pattern is the canonical
// encoding: table index, enumeration order and tie-breaks all follow it.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet of_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }
    static constexpr VertexSet single(int i) { return of_bits(std::uint64_t{1} << i); }
    static constexpr VertexSet full(int n) {
        return of_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet with(int i) const { return of_bits(bits_ | (std::uint64_t{1} << i)); }
    constexpr VertexSet without(int i) const { return of_bits(bits_ & ~(std::uint64_t{1} << i)); }
    constexpr VertexSet operator|(VertexSet o) const { return of_bits(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return of_bits(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return of_bits(bits_ & ~o.bits_); }
    constexpr VertexSet complement_in(int n) const { return full(n) - *this; }

    // Lowest-index element; only valid on a nonempty set.
    int lowest() const { return std::countr_zero(bits_); }

    std::vector<int> elements() const; // ascending, 0-based

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

// Visits every subset of s in ascending canonical order, starting with the
// empty set and ending with s itself.
template <class F>
void for_each_subset(VertexSet s, F&& f) {
    const std::uint64_t m = s.bits();
    std::uint64_t sub = 0;
    while (true) {
        f(VertexSet::of_bits(sub));
        if (sub == m) break;
        sub = (sub - m) & m;
    }
}

// Undirected dependency graph on vertices [0, n). Symmetric, irreflexive,
// immutable after construction.
class Graph {
public:
    // Edges are 0-based; duplicates collapse, self-loops are rejected.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return VertexSet::full(n_); }

    VertexSet neighbors(int i) const;
    VertexSet closed_neighborhood(int i) const; // neighbors(i) plus i itself
    int degree(int i) const;
    int max_degree() const;
    std::vector<std::pair<int, int>> edges() const; // i < j, ascending

    // True iff no edge has both endpoints inside s.
    bool is_independent(VertexSet s) const;

    // All independent subsets of s, each once, ascending canonical order.
    // Brute-force filter over the subset lattice; this is the oracle path,
    // not the table DP.
    std::vector<VertexSet> independent_subsets(VertexSet s) const;

    // Connected components of the subgraph induced on s, ordered by their
    // lowest vertex.
    std::vector<VertexSet> induced_components(VertexSet s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int i) const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Parses either the JSON form {"n": 3, "edges": [[1,2],[2,3]]} or edge-list
// text ("n 3" first, then "i j" lines; '#' starts a comment). Vertices are
// 1-based in both formats.
Graph parse_graph(std::string_view text);

// "{1,3}" with 1-based vertex ids, for messages and reports.
std::string set_str(VertexSet s);

std::vector<int> to_one_based(VertexSet s);

std::ostream& operator<<(std::ostream& os, VertexSet s);

} // namespace llcert
