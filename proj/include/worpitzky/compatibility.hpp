#ifndef WORPITZKY_COMPATIBILITY_HPP
#define WORPITZKY_COMPATIBILITY_HPP

#include <optional>
#include <vector>

#include "worpitzky/graph.hpp"

namespace worpitzky {

inline constexpr int kDecompositionBound = 12;

// Identity ordering 1 < 2 < ... < n is umbrella-free for g.
bool is_compatible_triples(const LabeledGraph& g);

// No member (i,j) of psi admits a strictly increasing chain
// i = p_1 < ... < p_m = j, m >= 3, whose consecutive pairs all avoid psi.
// Decided by reachability in the DAG of non-psi increasing pairs; note the
// m = 2 chain is (i,j) itself, whose single consecutive pair lies in psi.
bool is_strongly_compatible(const RootSubset& psi);

// psi is downward closed: (i,j) in psi forces (p,q) in psi for i <= p < q <= j.
bool is_root_ideal(const RootSubset& psi);

// Every strictly increasing integer chain from alpha.first to alpha.second
// (the decompositions of e_i - e_j into positive roots). Exponential; kept
// at desk scale for the brute-force compatibility oracle.
std::vector<std::vector<int>> enumerate_decompositions(Edge alpha, int n,
                                                       int max_n = kDecompositionBound);

// A relabeling sigma with is_compatible_triples(g.relabel(sigma)), or nullopt
// iff no labeling of g is compatible (iff g is not a cocomparability graph).
std::optional<VertexOrdering> find_compatible_labeling(const LabeledGraph& g);

}  // namespace worpitzky

#endif
