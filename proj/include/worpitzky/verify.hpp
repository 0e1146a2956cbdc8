#ifndef WORPITZKY_VERIFY_HPP
#define WORPITZKY_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "worpitzky/alcoves.hpp"
#include "worpitzky/graph.hpp"
#include "worpitzky/polynomials.hpp"

namespace worpitzky {

struct SuiteReport {
    std::string suite;
    long long checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Exhaustive cross-validation suites. Each iterates every labeled graph (or
// root subset, or alcove) up to the given bound and records counterexamples
// as witness strings.

// identity-ordering umbrella test vs chain reachability, all graphs n <= max_n
SuiteReport suite_triples_vs_chains(int max_n);

// chain decider vs the literal alcove-level decider, all subsets n <= max_n
SuiteReport suite_chains_vs_geometric(int max_n);

// the five equivalent statements (identity umbrella, chains, chromatic from F,
// F = Y, Eulerian recurrence) agree for every graph n <= max_n
SuiteReport suite_six_way_equivalence(int max_n, int perm_bound = kPermutationBound);

// chromatic reconstruction from W matches deletion-contraction, n <= max_n
SuiteReport suite_w_identity(int max_n, int perm_bound = kPermutationBound);

// downward-closed subsets pass every compatibility decider, and downward
// closure coincides with the two-sided identity-ordering condition
SuiteReport suite_ideal_subsets(int max_n, int geometric_max = kGeometricBound);

// sum of W coefficients is n!, sum of F coefficients is (n-1)!
SuiteReport suite_sum_identities(int max_n, int perm_bound = kPermutationBound);

// alcove counts are (n-1)!; every alcove has n walls and n vertices, each
// vertex on exactly n-1 walls; ceilings sit at level >= 1 with the origin
// strictly below
SuiteReport suite_alcove_structure(int max_alcove_n = kAlcoveEnumerationBound);

// seeded rational points of the fundamental box (some forced onto affine
// hyperplanes) land in exactly one upper closure
SuiteReport suite_worpitzky_partition(int max_n, std::uint64_t seed, int points_per_n = 1000);

// ceiling-intersection faces decompose their root, n <= max_n
SuiteReport suite_ceiling_lift(int max_n = kGeometricBound);

// interval = chordal and cocomparability; unit interval implies interval;
// the claw separates the two interval classes
SuiteReport suite_class_cross_checks(int max_n);

// W, Y and the chromatic polynomial are invariant under seeded relabelings;
// witnesses recorded when they differ
SuiteReport suite_labeling_invariance(int max_n, std::uint64_t seed,
                                      int perm_bound = kPermutationBound);

std::vector<SuiteReport> run_all_suites(int max_vertices, int geometric_max,
                                        std::uint64_t seed,
                                        int perm_bound = kPermutationBound);

// Seeded rational point of the fundamental box; with snap_hyperplane, one
// root pairing is forced to an exact integer.
RatPoint sample_box_point(int n, std::uint64_t& state, bool snap_hyperplane);

}  // namespace worpitzky

#endif
