#ifndef WORPITZKY_GRAPH_HPP
#define WORPITZKY_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace worpitzky {

// Vertices are 1..n throughout. n is capped so that per-vertex adjacency
// fits a 64-bit mask; everything here runs at enumeration scale anyway.
inline constexpr int kMaxVertices = 64;

// Default cap for exhaustive enumeration of all labeled graphs on n vertices.
inline constexpr int kGraphEnumerationBound = 6;

// An edge or a positive root, stored normalized with first < second.
using Edge = std::pair<int, int>;

// Index of the pair (i,j), 1 <= i < j <= n, in lexicographic pair order
// (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).
int pair_index(int n, int i, int j);
Edge pair_at(int n, int idx);

// A permutation of 1..n. order()[p-1] is the vertex at position p, and the
// same data acts as the map v -> order()[v-1] when used for relabeling.
class VertexOrdering {
public:
    explicit VertexOrdering(std::vector<int> order);
    static VertexOrdering identity(int n);

    int size() const { return static_cast<int>(order_.size()); }
    int vertex_at(int pos) const { return order_[pos - 1]; }   // 1-based position
    int image(int v) const { return order_[v - 1]; }           // as a map
    int position_of(int v) const { return pos_[v - 1]; }
    const std::vector<int>& order() const { return order_; }

    VertexOrdering inverse() const;
    std::string str() const;

    bool operator==(const VertexOrdering&) const = default;

private:
    std::vector<int> order_;
    std::vector<int> pos_;   // pos_[v-1] = position of vertex v
};

// Simple graph on vertices 1..n. Immutable after construction; edges are kept
// sorted and deduplicated, and adjacency is mirrored into per-vertex bitmasks
// (bit v-1) because permutation statistics query adjacency in a hot loop.
class LabeledGraph {
public:
    explicit LabeledGraph(int n);
    LabeledGraph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int i, int j) const;
    std::uint64_t neighbors(int v) const { return adj_[v - 1]; }

    LabeledGraph complement() const;
    LabeledGraph relabel(const VertexOrdering& sigma) const;

    // Upper-triangle edge bits in pair_index order, as a little mask.
    std::uint64_t edge_mask() const;

    bool operator==(const LabeledGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
};

// A set of type-A positive roots e_i - e_j, i < j, inside rank parameter n
// (graphs on n vertices correspond to roots of A_{n-1}).
struct RootSubset {
    int n = 0;
    std::vector<Edge> roots;   // sorted, deduplicated, i < j

    RootSubset() = default;
    RootSubset(int n, std::vector<Edge> roots);

    bool contains(int i, int j) const;
    LabeledGraph to_graph() const;
};

RootSubset to_root_subset(const LabeledGraph& g);

// Text format: first nonblank line "n", then one "i j" line per edge.
// Throws std::runtime_error on malformed lines, out-of-range vertices, loops.
LabeledGraph parse_edge_list(const std::string& text);

// graph6, bit-exact per the standard definition: big-endian 6-bit groups over
// the column-major upper triangle. An optional ">>graph6<<" header and
// trailing whitespace are tolerated; nonzero padding bits are rejected.
LabeledGraph parse_graph6(const std::string& text);
std::string to_graph6(const LabeledGraph& g);

// Streams all 2^(n(n-1)/2) labeled graphs on n vertices in edge-mask order.
class LabeledGraphStream {
public:
    explicit LabeledGraphStream(int n, int max_n = kGraphEnumerationBound);
    std::optional<LabeledGraph> next();
    std::uint64_t total() const { return total_; }

private:
    int n_;
    std::uint64_t total_;
    std::uint64_t cursor_ = 0;
};

LabeledGraph graph_from_edge_mask(int n, std::uint64_t mask);

}  // namespace worpitzky

#endif
