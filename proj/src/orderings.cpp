#include "worpitzky/orderings.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace worpitzky {

Orientation::Orientation(LabeledGraph g) : graph(std::move(g)) {
    out_.assign(graph.vertex_count(), 0);
}

void Orientation::add_arc(int u, int v) {
    arcs.emplace_back(u, v);
    out_[u - 1] |= std::uint64_t{1} << (v - 1);
}

bool Orientation::is_transitive() const {
    int n = graph.vertex_count();
    for (int u = 1; u <= n; ++u) {
        std::uint64_t outs = out_[u - 1];
        for (int v = 1; v <= n; ++v)
            if ((outs >> (v - 1)) & 1)
                if (out_[v - 1] & ~outs) return false;
    }
    return true;
}

bool is_umbrella_free(const LabeledGraph& g, const VertexOrdering& sigma) {
    int n = g.vertex_count();
    if (sigma.size() != n) throw std::invalid_argument("ordering size mismatch");
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) {
            if (!g.has_edge(sigma.vertex_at(i), sigma.vertex_at(j))) continue;
            for (int k = i + 1; k < j; ++k) {
                int vk = sigma.vertex_at(k);
                if (!g.has_edge(sigma.vertex_at(i), vk) && !g.has_edge(vk, sigma.vertex_at(j)))
                    return false;
            }
        }
    return true;
}

bool is_interval_ordering(const LabeledGraph& g, const VertexOrdering& sigma) {
    int n = g.vertex_count();
    if (sigma.size() != n) throw std::invalid_argument("ordering size mismatch");
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) {
            if (!g.has_edge(sigma.vertex_at(i), sigma.vertex_at(j))) continue;
            for (int k = i + 1; k < j; ++k)
                if (!g.has_edge(sigma.vertex_at(i), sigma.vertex_at(k))) return false;
        }
    return true;
}

bool is_unit_interval_ordering(const LabeledGraph& g, const VertexOrdering& sigma) {
    int n = g.vertex_count();
    if (sigma.size() != n) throw std::invalid_argument("ordering size mismatch");
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) {
            if (!g.has_edge(sigma.vertex_at(i), sigma.vertex_at(j))) continue;
            for (int k = i + 1; k < j; ++k) {
                int vk = sigma.vertex_at(k);
                if (!g.has_edge(sigma.vertex_at(i), vk) || !g.has_edge(vk, sigma.vertex_at(j)))
                    return false;
            }
        }
    return true;
}

std::optional<Orientation> transitive_orientation(const LabeledGraph& g) {
    int n = g.vertex_count();
    Orientation ori(g);

    // rem: edges not yet assigned to an implication class. Forcing within a
    // class uses non-adjacency w.r.t. rem (the spanned subgraph left after
    // removing earlier classes), per the classical decomposition scheme.
    std::vector<std::uint64_t> rem(n);
    for (int v = 1; v <= n; ++v) rem[v - 1] = g.neighbors(v);

    std::vector<std::uint64_t> fwd(n, 0);   // arcs chosen in the current class

    for (const auto& [si, sj] : g.edges()) {
        if (!((rem[si - 1] >> (sj - 1)) & 1)) continue;   // already classified

        std::deque<Edge> queue;
        std::vector<Edge> cls;
        auto force = [&](int u, int v) -> bool {
            if ((fwd[v - 1] >> (u - 1)) & 1) return false;   // both directions forced
            if ((fwd[u - 1] >> (v - 1)) & 1) return true;
            fwd[u - 1] |= std::uint64_t{1} << (v - 1);
            queue.emplace_back(u, v);
            cls.emplace_back(u, v);
            return true;
        };
        force(si, sj);
        while (!queue.empty()) {
            auto [a, b] = queue.front();
            queue.pop_front();
            // a->b forces a->c when {a,c} remains and {b,c} does not,
            // and c->b when {c,b} remains and {a,c} does not.
            std::uint64_t ac = rem[a - 1] & ~rem[b - 1];
            std::uint64_t cb = rem[b - 1] & ~rem[a - 1];
            for (int c = 1; c <= n; ++c) {
                if (c != b && ((ac >> (c - 1)) & 1))
                    if (!force(a, c)) return std::nullopt;
                if (c != a && ((cb >> (c - 1)) & 1))
                    if (!force(c, b)) return std::nullopt;
            }
        }
        for (auto [u, v] : cls) {
            ori.add_arc(u, v);
            rem[u - 1] &= ~(std::uint64_t{1} << (v - 1));
            rem[v - 1] &= ~(std::uint64_t{1} << (u - 1));
        }
    }

    if (!ori.is_transitive()) return std::nullopt;
    return ori;
}

VertexOrdering linear_extension(const Orientation& o) {
    int n = o.graph.vertex_count();
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : o.arcs) ++indeg[v - 1];
    std::vector<bool> placed(n, false);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 1; v <= n; ++v)
            if (!placed[v - 1] && indeg[v - 1] == 0) {
                pick = v;
                break;
            }
        if (pick < 0) throw std::logic_error("linear_extension: orientation has a cycle");
        placed[pick - 1] = true;
        order.push_back(pick);
        std::uint64_t outs = o.out_neighbors(pick);
        for (int v = 1; v <= n; ++v)
            if ((outs >> (v - 1)) & 1) --indeg[v - 1];
    }
    return VertexOrdering(std::move(order));
}

std::optional<VertexOrdering> find_umbrella_free_ordering(const LabeledGraph& g) {
    auto co = transitive_orientation(g.complement());
    if (!co) return std::nullopt;
    // In a topological order of the oriented complement, a middle vertex
    // nonadjacent (in g) to both endpoints of an umbrella would force, by
    // transitivity, a complement arc across the umbrella's edge.
    VertexOrdering sigma = linear_extension(*co);
    if (!is_umbrella_free(g, sigma))
        throw std::logic_error("umbrella-free witness failed verification");
    return sigma;
}

std::optional<VertexOrdering> perfect_elimination_ordering(const LabeledGraph& g) {
    int n = g.vertex_count();
    // Maximum cardinality search, visiting from the back of the elimination
    // order; ties broken by smallest index.
    std::vector<int> weight(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<int> elim(n, 0);
    for (int step = n; step >= 1; --step) {
        int pick = -1;
        for (int v = 1; v <= n; ++v)
            if (!visited[v - 1] && (pick < 0 || weight[v - 1] > weight[pick - 1])) pick = v;
        visited[pick - 1] = true;
        elim[step - 1] = pick;
        std::uint64_t nb = g.neighbors(pick);
        for (int v = 1; v <= n; ++v)
            if (!visited[v - 1] && ((nb >> (v - 1)) & 1)) ++weight[v - 1];
    }

    // Validate: later neighbors of each vertex minus the earliest of them must
    // lie in that earliest neighbor's adjacency.
    std::vector<std::uint64_t> later(n + 1, 0);
    std::uint64_t seen = 0;
    for (int p = n; p >= 1; --p) {
        int v = elim[p - 1];
        later[p] = g.neighbors(v) & seen;
        seen |= std::uint64_t{1} << (v - 1);
    }
    std::vector<int> pos(n + 1, 0);
    for (int p = 1; p <= n; ++p) pos[elim[p - 1]] = p;
    for (int p = 1; p <= n; ++p) {
        std::uint64_t L = later[p];
        if (!L) continue;
        int m = -1;
        for (int v = 1; v <= n; ++v)
            if ((L >> (v - 1)) & 1)
                if (m < 0 || pos[v] < pos[m]) m = v;
        std::uint64_t rest = L & ~(std::uint64_t{1} << (m - 1));
        if (rest & ~g.neighbors(m)) return std::nullopt;
    }
    return VertexOrdering(std::move(elim));
}

bool is_chordal(const LabeledGraph& g) {
    return perfect_elimination_ordering(g).has_value();
}

std::vector<std::uint64_t> maximal_cliques_chordal(const LabeledGraph& g,
                                                   const VertexOrdering& peo) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> cand;
    std::uint64_t seen = 0;
    for (int p = n; p >= 1; --p) {
        int v = peo.vertex_at(p);
        cand.push_back((g.neighbors(v) & seen) | (std::uint64_t{1} << (v - 1)));
        seen |= std::uint64_t{1} << (v - 1);
    }
    std::vector<std::uint64_t> out;
    for (size_t a = 0; a < cand.size(); ++a) {
        bool maximal = true;
        for (size_t b = 0; b < cand.size() && maximal; ++b)
            if (a != b && (cand[a] | cand[b]) == cand[b] && cand[a] != cand[b]) maximal = false;
        if (maximal && std::find(out.begin(), out.end(), cand[a]) == out.end())
            out.push_back(cand[a]);
    }
    return out;
}

namespace {

// Clique path of an interval graph: the maximal cliques of a chordal
// cocomparability graph are totally ordered by the direction of the
// complement's transitive orientation across their symmetric differences.
// Returns per-vertex (first, last) clique indices, or nullopt when the input
// is not chordal or its complement is not transitively orientable.
struct CliqueIntervals {
    std::vector<int> first, last;   // indexed by vertex-1, clique indices 0-based
};

std::optional<CliqueIntervals> clique_intervals(const LabeledGraph& g) {
    auto peo = perfect_elimination_ordering(g);
    if (!peo) return std::nullopt;
    auto co = transitive_orientation(g.complement());
    if (!co) return std::nullopt;

    auto cliques = maximal_cliques_chordal(g, *peo);
    int q = static_cast<int>(cliques.size());
    int n = g.vertex_count();

    // precedes[a][b]: some complement arc runs from A\B into B\A. Distinct
    // maximal cliques always have a nonadjacent cross pair, so the relation
    // is total; for interval graphs it is a linear order.
    std::vector<std::vector<bool>> precedes(q, std::vector<bool>(q, false));
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            std::uint64_t onlyA = cliques[a] & ~cliques[b];
            std::uint64_t onlyB = cliques[b] & ~cliques[a];
            bool decided = false;
            for (int u = 1; u <= n && !decided; ++u) {
                if (!((onlyA >> (u - 1)) & 1)) continue;
                for (int v = 1; v <= n && !decided; ++v) {
                    if (!((onlyB >> (v - 1)) & 1)) continue;
                    if (co->has_arc(u, v)) {
                        precedes[a][b] = true;
                        decided = true;
                    } else if (co->has_arc(v, u)) {
                        precedes[b][a] = true;
                        decided = true;
                    }
                }
            }
            if (!decided) throw std::logic_error("maximal cliques without a separating arc");
        }

    // Order cliques; smallest candidate index first for determinism.
    std::vector<int> seq;
    std::vector<bool> used(q, false);
    for (int step = 0; step < q; ++step) {
        int pick = -1;
        for (int a = 0; a < q && pick < 0; ++a) {
            if (used[a]) continue;
            bool source = true;
            for (int b = 0; b < q && source; ++b)
                if (!used[b] && precedes[b][a]) source = false;
            if (source) pick = a;
        }
        if (pick < 0) throw std::logic_error("clique precedence has a cycle");
        used[pick] = true;
        seq.push_back(pick);
    }

    CliqueIntervals ci;
    ci.first.assign(n, -1);
    ci.last.assign(n, -1);
    for (int idx = 0; idx < q; ++idx) {
        std::uint64_t c = cliques[seq[idx]];
        for (int v = 1; v <= n; ++v)
            if ((c >> (v - 1)) & 1) {
                if (ci.first[v - 1] < 0) ci.first[v - 1] = idx;
                ci.last[v - 1] = idx;
            }
    }
    // Consecutiveness: each vertex occupies a contiguous run of cliques.
    for (int v = 1; v <= n; ++v)
        for (int idx = ci.first[v - 1]; idx <= ci.last[v - 1]; ++idx)
            if (!((cliques[seq[idx]] >> (v - 1)) & 1))
                throw std::logic_error("clique path is not consecutive");
    return ci;
}

}  // namespace

std::optional<VertexOrdering> find_interval_ordering(const LabeledGraph& g) {
    auto ci = clique_intervals(g);
    if (!ci) return std::nullopt;
    int n = g.vertex_count();
    std::vector<int> order(n);
    for (int v = 1; v <= n; ++v) order[v - 1] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return ci->first[a - 1] < ci->first[b - 1];
    });
    VertexOrdering sigma(std::move(order));
    if (!is_interval_ordering(g, sigma))
        throw std::logic_error("interval witness failed verification");
    return sigma;
}

std::optional<VertexOrdering> find_unit_interval_ordering(const LabeledGraph& g) {
    auto ci = clique_intervals(g);
    if (!ci) return std::nullopt;
    int n = g.vertex_count();
    std::vector<int> order(n);
    for (int v = 1; v <= n; ++v) order[v - 1] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (ci->first[a - 1] != ci->first[b - 1]) return ci->first[a - 1] < ci->first[b - 1];
        return ci->last[a - 1] < ci->last[b - 1];
    });
    VertexOrdering sigma(std::move(order));
    // For a unit interval graph this order always passes: a violating triple
    // yields a middle vertex whose clique run sits strictly inside the left
    // endpoint's run, and padding the left endpoint's first clique with a
    // vertex avoiding the middle one produces an induced claw. Hence a failed
    // check certifies the graph is interval but not unit interval.
    if (!is_unit_interval_ordering(g, sigma)) return std::nullopt;
    return sigma;
}

}  // namespace worpitzky
