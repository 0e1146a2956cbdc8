#include "worpitzky/alcoves.hpp"

#include <algorithm>
#include <stdexcept>

namespace worpitzky {

bool is_admissible(int n, const std::vector<int>& r) {
    if (static_cast<int>(r.size()) != n * (n - 1) / 2)
        throw std::invalid_argument("coordinate vector has wrong size");
    for (int v : r)
        if (v < 1) throw std::invalid_argument("coordinates must be positive");
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            for (int j = k + 1; j <= n; ++j) {
                int sum = r[pair_index(n, i, k)] + r[pair_index(n, k, j)];
                int rij = r[pair_index(n, i, j)];
                if (rij < sum - 1 || rij > sum) return false;
            }
    return true;
}

ShiAlcove::ShiAlcove(int n, std::vector<int> r) : n_(n), r_(std::move(r)) {
    if (n < 2) throw std::invalid_argument("alcoves need n >= 2");
    if (!is_admissible(n_, r_)) throw std::invalid_argument("coordinates are not admissible");
}

bool ShiAlcove::in_fundamental_box() const {
    for (int i = 1; i < n_; ++i)
        if (level(i, i + 1) != 1) return false;
    return true;
}

std::vector<ShiAlcove> enumerate_alcoves_in_box(int n, int max_n) {
    if (n < 2) throw std::invalid_argument("alcove enumeration: n must be at least 2");
    if (n > max_n) throw std::invalid_argument("alcove enumeration: n exceeds the configured bound");

    int m = n * (n - 1) / 2;
    std::vector<int> r(m, 0);
    for (int i = 1; i < n; ++i) r[pair_index(n, i, i + 1)] = 1;

    // Assign spans in increasing order; each new coordinate is pinned by its
    // splits into a window of width at most one.
    std::vector<Edge> todo;
    for (int d = 2; d < n; ++d)
        for (int i = 1; i + d <= n; ++i) todo.emplace_back(i, i + d);

    std::vector<std::vector<int>> results;
    auto rec = [&](auto&& self, size_t t) -> void {
        if (t == todo.size()) {
            results.push_back(r);
            return;
        }
        auto [i, j] = todo[t];
        int lo = 1, hi = j - i;
        for (int k = i + 1; k < j; ++k) {
            int sum = r[pair_index(n, i, k)] + r[pair_index(n, k, j)];
            lo = std::max(lo, sum - 1);
            hi = std::min(hi, sum);
        }
        for (int v = lo; v <= hi; ++v) {
            r[pair_index(n, i, j)] = v;
            self(self, t + 1);
        }
        r[pair_index(n, i, j)] = 0;
    };
    rec(rec, 0);

    std::sort(results.begin(), results.end());
    std::vector<ShiAlcove> out;
    out.reserve(results.size());
    for (auto& v : results) out.emplace_back(n, std::move(v));
    return out;
}

namespace {

// Admissibility of the vector with coordinate idx shifted to value v; only
// constraints touching idx need rechecking, and v = 0 is allowed (the shifted
// vector then describes an alcove outside the dominant cone).
bool admissible_after_shift(const ShiAlcove& a, int idx, int v) {
    int n = a.n();
    auto [i, j] = pair_at(n, idx);
    for (int k = i + 1; k < j; ++k) {
        int sum = a.level(i, k) + a.level(k, j);
        if (v < sum - 1 || v > sum) return false;
    }
    for (int m = j + 1; m <= n; ++m) {
        int sum = v + a.level(j, m);
        int rim = a.level(i, m);
        if (rim < sum - 1 || rim > sum) return false;
    }
    for (int m = 1; m < i; ++m) {
        int sum = a.level(m, i) + v;
        int rmj = a.level(m, j);
        if (rmj < sum - 1 || rmj > sum) return false;
    }
    return true;
}

}  // namespace

std::vector<Wall> walls(const ShiAlcove& a) {
    int n = a.n();
    int m = n * (n - 1) / 2;
    std::vector<Wall> out;
    for (int idx = 0; idx < m; ++idx) {
        Edge root = pair_at(n, idx);
        int r = a.levels()[idx];
        if (admissible_after_shift(a, idx, r + 1))
            out.push_back({root, r, WallKind::ceiling});
        if (admissible_after_shift(a, idx, r - 1))
            out.push_back({root, r - 1, r - 1 == 0 ? WallKind::linear : WallKind::lower});
    }
    if (static_cast<int>(out.size()) != n)
        throw std::logic_error("alcove does not have exactly n walls");
    return out;
}

namespace {

std::vector<RatPoint> vertices_from_walls(const ShiAlcove& a, const std::vector<Wall>& ws) {
    int n = a.n();
    std::vector<RatPoint> verts;
    verts.reserve(n);
    for (int omit = 0; omit < n; ++omit) {
        // Difference constraints x_i - x_j = level over the remaining walls;
        // they form a spanning tree for a nondegenerate simplex, so potential
        // propagation pins the point up to the common shift fixed by sum zero.
        std::vector<std::vector<std::pair<int, Rational>>> adj(n + 1);
        for (int w = 0; w < n; ++w) {
            if (w == omit) continue;
            auto [i, j] = ws[w].root;
            adj[i].emplace_back(j, Rational(-ws[w].level));
            adj[j].emplace_back(i, Rational(ws[w].level));
        }
        RatPoint x(n, Rational(0));
        std::vector<char> known(n + 1, 0);
        std::vector<int> stack{1};
        known[1] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto& [v, delta] : adj[u]) {
                Rational xv = x[u - 1] + delta;   // x_v = x_u + (level-signed shift)
                if (known[v]) {
                    if (x[v - 1] != xv) throw std::logic_error("inconsistent wall system");
                } else {
                    known[v] = 1;
                    x[v - 1] = xv;
                    stack.push_back(v);
                }
            }
        }
        for (int v = 1; v <= n; ++v)
            if (!known[v]) throw std::logic_error("singular wall system");

        Rational total(0);
        for (auto& c : x) total += c;
        Rational shift = total / n;
        for (auto& c : x) c -= shift;

        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Rational p = x[i - 1] - x[j - 1];
                int r = a.level(i, j);
                if (p < r - 1 || p > r) throw std::logic_error("vertex violates closure bounds");
            }
        verts.push_back(std::move(x));
    }
    return verts;
}

}  // namespace

std::vector<RatPoint> vertices(const ShiAlcove& a) {
    return vertices_from_walls(a, walls(a));
}

std::uint32_t AlcoveGeometry::vertices_on(Edge root, int level) const {
    std::uint32_t mask = 0;
    for (size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v][root.first - 1] - vertices[v][root.second - 1] == level)
            mask |= std::uint32_t{1} << v;
    return mask;
}

AlcoveGeometry geometry(const ShiAlcove& a) {
    AlcoveGeometry geo;
    geo.walls = walls(a);
    geo.vertices = vertices_from_walls(a, geo.walls);
    geo.wall_vertex_mask.reserve(geo.walls.size());
    for (const auto& w : geo.walls)
        geo.wall_vertex_mask.push_back(geo.vertices_on(w.root, w.level));
    return geo;
}

bool upper_closure_contains(const ShiAlcove& a, const RatPoint& x) {
    return upper_closure_contains(a, geometry(a), x);
}

bool upper_closure_contains(const ShiAlcove& a, const AlcoveGeometry& geo, const RatPoint& x) {
    int n = a.n();
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("point has wrong dimension");
    Rational total(0);
    for (const auto& c : x) total += c;
    if (total != 0) throw std::invalid_argument("point is not in the sum-zero hyperplane");

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (x[i - 1] - x[j - 1] > a.level(i, j)) return false;
    for (const auto& w : geo.walls) {
        if (w.kind == WallKind::ceiling) continue;
        if (!(x[w.root.first - 1] - x[w.root.second - 1] > w.level)) return false;
    }
    return true;
}

namespace {

// A slice of the upper closure by a hyperplane is nonempty iff the closed
// slice (the hull of fmask's vertices) has a vertex and no single non-ceiling
// wall carries all of them: a polytope lies in a finite union of hyperplanes
// only when one of them contains it.
bool halfopen_face_nonempty(const AlcoveGeometry& geo, std::uint32_t fmask) {
    if (fmask == 0) return false;
    for (size_t w = 0; w < geo.walls.size(); ++w) {
        if (geo.walls[w].kind == WallKind::ceiling) continue;
        if ((fmask & ~geo.wall_vertex_mask[w]) == 0) return false;
    }
    return true;
}

}  // namespace

bool is_compatible_geometric(const RootSubset& psi, int max_n) {
    if (psi.n > max_n)
        throw std::invalid_argument("geometric compatibility: n exceeds the configured bound");
    if (psi.n < 2 || psi.roots.empty()) return true;

    for (const auto& a : enumerate_alcoves_in_box(psi.n)) {
        AlcoveGeometry geo = geometry(a);
        for (auto alpha : psi.roots) {
            int r = a.level(alpha.first, alpha.second);
            // (alpha,x) ranges over (r-1, r] on the upper closure, so only
            // the levels r-1 and r can meet it.
            for (int m : {r - 1, r}) {
                std::uint32_t fmask = geo.vertices_on(alpha, m);
                if (!halfopen_face_nonempty(geo, fmask)) continue;
                bool covered = false;
                for (size_t w = 0; w < geo.walls.size() && !covered; ++w)
                    if (geo.walls[w].kind == WallKind::ceiling &&
                        psi.contains(geo.walls[w].root.first, geo.walls[w].root.second) &&
                        (fmask & ~geo.wall_vertex_mask[w]) == 0)
                        covered = true;
                if (!covered) return false;
            }
        }
    }
    return true;
}

bool verify_ceiling_lift(int n, int max_n) {
    if (n > max_n) throw std::invalid_argument("ceiling lift: n exceeds the configured bound");
    if (n < 2) return true;

    for (const auto& a : enumerate_alcoves_in_box(n)) {
        AlcoveGeometry geo = geometry(a);
        std::vector<size_t> ceilings;
        for (size_t w = 0; w < geo.walls.size(); ++w)
            if (geo.walls[w].kind == WallKind::ceiling) ceilings.push_back(w);

        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                std::uint32_t fmask = geo.vertices_on({i, j}, a.level(i, j));
                if (!halfopen_face_nonempty(geo, fmask)) continue;
                // Every subset of ceilings whose common face equals the slice
                // must span e_i - e_j: equivalently i reaches j through the
                // subset's arcs (all arcs increase, so plain DP suffices).
                for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << ceilings.size()); ++sub) {
                    std::uint32_t meet = (std::uint32_t{1} << geo.vertices.size()) - 1;
                    for (size_t t = 0; t < ceilings.size(); ++t)
                        if ((sub >> t) & 1) meet &= geo.wall_vertex_mask[ceilings[t]];
                    if (meet != fmask) continue;
                    std::vector<char> reach(n + 1, 0);
                    reach[i] = 1;
                    for (int q = i + 1; q <= j; ++q)
                        for (size_t t = 0; t < ceilings.size() && !reach[q]; ++t) {
                            if (!((sub >> t) & 1)) continue;
                            auto [p, qq] = geo.walls[ceilings[t]].root;
                            if (qq == q && reach[p]) reach[q] = 1;
                        }
                    if (!reach[j]) return false;
                }
            }
    }
    return true;
}

}  // namespace worpitzky
