#include "worpitzky/compatibility.hpp"

#include <stdexcept>

#include "worpitzky/orderings.hpp"

namespace worpitzky {

bool is_compatible_triples(const LabeledGraph& g) {
    return is_umbrella_free(g, VertexOrdering::identity(g.vertex_count()));
}

bool is_strongly_compatible(const RootSubset& psi) {
    for (auto [i, j] : psi.roots) {
        // reach[q]: q reachable from i by arcs p->q with (p,q) not in psi.
        // The arc (i,j) itself is never present, so reaching j means a chain
        // of length >= 3 with every consecutive pair outside psi.
        std::vector<char> reach(j + 1, 0);
        reach[i] = 1;
        for (int q = i + 1; q <= j; ++q)
            for (int p = i; p < q; ++p)
                if (reach[p] && !psi.contains(p, q)) {
                    reach[q] = 1;
                    break;
                }
        if (reach[j]) return false;
    }
    return true;
}

bool is_root_ideal(const RootSubset& psi) {
    for (auto [i, j] : psi.roots)
        for (int p = i; p < j; ++p)
            for (int q = p + 1; q <= j; ++q)
                if (!psi.contains(p, q)) return false;
    return true;
}

std::vector<std::vector<int>> enumerate_decompositions(Edge alpha, int n, int max_n) {
    auto [i, j] = alpha;
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("bad root pair");
    if (n > max_n) throw std::invalid_argument("decomposition enumeration bound exceeded");
    int interior = j - i - 1;
    std::vector<std::vector<int>> chains;
    chains.reserve(std::size_t{1} << interior);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << interior); ++mask) {
        std::vector<int> chain{i};
        for (int t = 0; t < interior; ++t)
            if ((mask >> t) & 1) chain.push_back(i + 1 + t);
        chain.push_back(j);
        chains.push_back(std::move(chain));
    }
    return chains;
}

std::optional<VertexOrdering> find_compatible_labeling(const LabeledGraph& g) {
    auto ordering = find_umbrella_free_ordering(g);
    if (!ordering) return std::nullopt;
    // Labeling the vertex at position p with p turns the umbrella-free
    // ordering into the identity ordering.
    VertexOrdering sigma = ordering->inverse();
    if (!is_compatible_triples(g.relabel(sigma)))
        throw std::logic_error("compatible labeling failed verification");
    return sigma;
}

}  // namespace worpitzky
