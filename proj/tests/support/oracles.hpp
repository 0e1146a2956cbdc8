// Test-only reference implementations, independent of the library code paths
// they are used to check.
#ifndef WORPITZKY_TESTS_ORACLES_HPP
#define WORPITZKY_TESTS_ORACLES_HPP

#include <functional>
#include <numeric>
#include <optional>
#include <string>

#include "worpitzky/compatibility.hpp"
#include "worpitzky/graph.hpp"
#include "worpitzky/orderings.hpp"
#include "worpitzky/polynomials.hpp"

namespace oracles {

using namespace worpitzky;

// Classical Eulerian polynomials by the standard recurrence
// E(m,k) = k E(m-1,k) + (m-k+1) E(m-1,k-1), normalized so that the
// coefficient of t^k counts permutations of S_m with k-1 descents
// (A_1 = t, A_2 = t + t^2, A_3 = t + 4t^2 + t^3, ...). A_0 := t, the
// contribution of the empty permutation.
inline IntPoly classical_eulerian(int m) {
    std::vector<mpz_class> e{mpz_class(0), mpz_class(1)};
    for (int s = 1; s <= m; ++s) {
        std::vector<mpz_class> next(s + 2, mpz_class(0));
        for (int k = 1; k <= s + 1; ++k)
            next[k] = mpz_class(k) * (k < static_cast<int>(e.size()) ? e[k] : mpz_class(0)) +
                      mpz_class(s - k + 1) * e[k - 1];
        // top index caps at s for s >= 1
        next.resize(std::max(2, s + 1));
        e = std::move(next);
    }
    return IntPoly(std::move(e));
}

// Proper q-colorings by backtracking over vertices in index order.
inline long count_proper_colorings(const LabeledGraph& g, int q) {
    int n = g.vertex_count();
    std::vector<int> color(n + 1, 0);
    long count = 0;
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            ++count;
            return;
        }
        std::uint64_t nb = g.neighbors(v);
        for (int c = 1; c <= q; ++c) {
            bool ok = true;
            for (int u = 1; u < v && ok; ++u)
                if (((nb >> (u - 1)) & 1) && color[u] == c) ok = false;
            if (ok) {
                color[v] = c;
                rec(v + 1);
            }
        }
        color[v] = 0;
    };
    rec(1);
    return count;
}

// Newton forward-difference interpolation through the coloring counts at
// q = 0..n; exact over the rationals with integral result.
inline IntPoly chromatic_by_interpolation(const LabeledGraph& g) {
    int n = g.vertex_count();
    std::vector<mpq_class> diff;
    for (int q = 0; q <= n; ++q) diff.emplace_back(count_proper_colorings(g, q));
    RatPoly acc;
    for (int k = 0; k <= n; ++k) {
        acc = acc + binomial_poly(0, k).scaled(diff[0]);
        for (size_t t = 0; t + 1 < diff.size(); ++t) diff[t] = diff[t + 1] - diff[t];
        diff.pop_back();
    }
    return acc.to_int();
}

// graph6 encoding rebuilt from the format definition: explicit bit string,
// then 6-bit big-endian groups.
inline std::string graph6_reference(const LabeledGraph& g) {
    int n = g.vertex_count();
    std::string bits;
    for (int col = 2; col <= n; ++col)
        for (int row = 1; row < col; ++row) bits.push_back(g.has_edge(row, col) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    for (size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (int t = 0; t < 6; ++t) v = v * 2 + (bits[k + t] - '0');
        out.push_back(static_cast<char>(63 + v));
    }
    return out;
}

// Search all n! orderings for one satisfying the predicate.
template <typename Pred>
inline std::optional<VertexOrdering> brute_force_ordering(const LabeledGraph& g, Pred&& pred) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        VertexOrdering sigma(perm);
        if (pred(g, sigma)) return sigma;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// Try all 2^m orientations and test transitivity directly.
inline bool brute_orientation_exists(const LabeledGraph& g) {
    const auto& edges = g.edges();
    int m = g.edge_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Orientation o(g);
        for (int k = 0; k < m; ++k) {
            auto [i, j] = edges[k];
            if ((mask >> k) & 1) o.add_arc(i, j);
            else o.add_arc(j, i);
        }
        if (o.is_transitive()) return true;
    }
    return false;
}

// Definitional strong compatibility: every decomposition chain of a member
// root contains a consecutive pair inside the subset.
inline bool strongly_compatible_brute(const RootSubset& psi) {
    for (auto [i, j] : psi.roots)
        for (const auto& chain : enumerate_decompositions({i, j}, psi.n)) {
            bool hit = false;
            for (size_t a = 0; a + 1 < chain.size() && !hit; ++a)
                if (psi.contains(chain[a], chain[a + 1])) hit = true;
            if (!hit) return false;
        }
    return true;
}

// Chordality by exhausting vertex subsets: an induced cycle of length >= 4 is
// a connected induced subgraph with every degree 2 and at least 4 vertices.
inline bool chordal_brute(const LabeledGraph& g) {
    int n = g.vertex_count();
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        int size = __builtin_popcount(s);
        if (size < 4) continue;
        bool cycle = true;
        for (int v = 1; v <= n && cycle; ++v)
            if ((s >> (v - 1)) & 1)
                if (__builtin_popcountll(g.neighbors(v) & s) != 2) cycle = false;
        if (!cycle) continue;
        // connectivity within s
        int start = __builtin_ctz(s) + 1;
        std::uint64_t seen = std::uint64_t{1} << (start - 1);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            std::uint64_t nb = g.neighbors(u) & s & ~seen;
            for (int v = 1; v <= n; ++v)
                if ((nb >> (v - 1)) & 1) {
                    seen |= std::uint64_t{1} << (v - 1);
                    stack.push_back(v);
                }
        }
        if (__builtin_popcountll(seen) == size) return false;
    }
    return true;
}

}  // namespace oracles

#endif
