#ifndef WORPITZKY_ORDERINGS_HPP
#define WORPITZKY_ORDERINGS_HPP

#include <optional>
#include <vector>

#include "worpitzky/graph.hpp"

namespace worpitzky {

// A direction for every edge of a base graph.
struct Orientation {
    LabeledGraph graph;
    std::vector<Edge> arcs;   // (from, to), one per edge of graph

    explicit Orientation(LabeledGraph g);

    bool has_arc(int u, int v) const { return (out_[u - 1] >> (v - 1)) & 1; }
    std::uint64_t out_neighbors(int u) const { return out_[u - 1]; }
    void add_arc(int u, int v);

    // u->v and v->w imply u->w.
    bool is_transitive() const;

private:
    std::vector<std::uint64_t> out_;
};

// Ordering predicates. Positions i < k < j range over sigma; v_p denotes the
// vertex at position p.
//
//   umbrella-free:  {v_i,v_j} in E  =>  {v_i,v_k} in E or {v_k,v_j} in E
//   interval:       {v_i,v_j} in E  =>  {v_i,v_k} in E
//   unit interval:  {v_i,v_j} in E  =>  {v_i,v_k} in E and {v_k,v_j} in E
bool is_umbrella_free(const LabeledGraph& g, const VertexOrdering& sigma);
bool is_interval_ordering(const LabeledGraph& g, const VertexOrdering& sigma);
bool is_unit_interval_ordering(const LabeledGraph& g, const VertexOrdering& sigma);

// Transitive orientation by the classical implication-class (edge-forcing)
// method; the returned orientation is verified transitive. nullopt iff G is
// not a comparability graph.
std::optional<Orientation> transitive_orientation(const LabeledGraph& g);

// Topological order of an orientation's arcs, smallest vertex index first.
VertexOrdering linear_extension(const Orientation& o);

// Witness orderings for the graph classes. Each returns an ordering passing
// the matching predicate above iff the graph is in the class; every witness
// is re-verified before being returned.
std::optional<VertexOrdering> find_umbrella_free_ordering(const LabeledGraph& g);
std::optional<VertexOrdering> find_interval_ordering(const LabeledGraph& g);
std::optional<VertexOrdering> find_unit_interval_ordering(const LabeledGraph& g);

// Maximum-cardinality search; returns a perfect elimination ordering iff the
// graph is chordal.
std::optional<VertexOrdering> perfect_elimination_ordering(const LabeledGraph& g);
bool is_chordal(const LabeledGraph& g);

// Vertex sets of the maximal cliques of a chordal graph, as bitmasks.
std::vector<std::uint64_t> maximal_cliques_chordal(const LabeledGraph& g,
                                                   const VertexOrdering& peo);

}  // namespace worpitzky

#endif
