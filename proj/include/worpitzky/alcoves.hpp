#ifndef WORPITZKY_ALCOVES_HPP
#define WORPITZKY_ALCOVES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "worpitzky/graph.hpp"

namespace worpitzky {

using Rational = mpq_class;
// A point of n-dimensional rational space constrained to sum zero; the
// pairing with the root (i,j) is x[i-1] - x[j-1].
using RatPoint = std::vector<Rational>;

inline constexpr int kAlcoveEnumerationBound = 7;
inline constexpr int kGeometricBound = 5;

// Shi admissibility: r_{(i,k)} + r_{(k,j)} - 1 <= r_{(i,j)} <= r_{(i,k)} + r_{(k,j)}
// for all i < k < j. r is indexed in pair_index order.
bool is_admissible(int n, const std::vector<int>& r);

// An alcove of the type-A affine arrangement, encoded by its Shi coordinates:
// r_{(i,j)} - 1 < x_i - x_j < r_{(i,j)} on the alcove.
class ShiAlcove {
public:
    ShiAlcove(int n, std::vector<int> r);   // validates positivity + admissibility

    int n() const { return n_; }
    int level(int i, int j) const { return r_[pair_index(n_, i, j)]; }
    const std::vector<int>& levels() const { return r_; }

    // All simple-root coordinates equal 1, i.e. the alcove lies in the
    // half-open fundamental box 0 < x_i - x_{i+1} <= 1.
    bool in_fundamental_box() const;

    bool operator==(const ShiAlcove&) const = default;

private:
    int n_;
    std::vector<int> r_;
};

// All alcoves inside the fundamental box, in lexicographic order of their
// coordinate vectors. There are (n-1)! of them.
std::vector<ShiAlcove> enumerate_alcoves_in_box(int n, int max_n = kAlcoveEnumerationBound);

// A hyperplane (root, level) supporting a facet. A ceiling separates the
// alcove from infinity on the side away from the origin; a lower wall is a
// level >= 1 facet hyperplane below the alcove; a linear wall passes through
// the origin.
enum class WallKind { ceiling, lower, linear };

struct Wall {
    Edge root;
    int level;
    WallKind kind;

    bool operator==(const Wall&) const = default;
};

// The n walls of an alcove: the hyperplane at coordinate r (resp. r-1) of a
// root supports a facet iff shifting that single coordinate by +1 (resp. -1,
// allowing the value 0) preserves admissibility.
std::vector<Wall> walls(const ShiAlcove& a);

// The n vertices of the alcove's closed simplex, each solving n-1 of the n
// wall equations together with sum zero, exactly over the rationals. Vertex k
// omits wall k of walls(a).
std::vector<RatPoint> vertices(const ShiAlcove& a);

struct AlcoveGeometry {
    std::vector<Wall> walls;
    std::vector<RatPoint> vertices;
    std::vector<std::uint32_t> wall_vertex_mask;   // bit v: vertex v lies on wall

    // Bitmask of vertices lying on the hyperplane (root, level).
    std::uint32_t vertices_on(Edge root, int level) const;
};

AlcoveGeometry geometry(const ShiAlcove& a);

// Membership in the upper closure (half-open simplex): (root,x) <= r for all
// roots, and strictly above every lower/linear wall's level. x must sum to 0.
bool upper_closure_contains(const ShiAlcove& a, const RatPoint& x);
bool upper_closure_contains(const ShiAlcove& a, const AlcoveGeometry& geo, const RatPoint& x);

// Literal compatibility: for every alcove in the box and every root alpha of
// psi, a nonempty slice of the upper closure by an affine hyperplane of alpha
// must lie inside some ceiling whose root is also in psi.
bool is_compatible_geometric(const RootSubset& psi, int max_n = kGeometricBound);

// For every alcove and root alpha, whenever the slice at alpha's upper level
// is realized as an intersection of ceilings, alpha must be a nonnegative
// integer combination of those ceiling roots. True iff no counterexample.
bool verify_ceiling_lift(int n, int max_n = kGeometricBound);

}  // namespace worpitzky

#endif
