#include "worpitzky/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "worpitzky/compatibility.hpp"
#include "worpitzky/orderings.hpp"
#include "worpitzky/polynomials.hpp"

namespace worpitzky {

namespace {

// splitmix64; good enough for sampling and fully reproducible across builds
std::uint64_t next_rand(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4be495862133bULL;
    return z ^ (z >> 31);
}

std::uint64_t rand_below(std::uint64_t& state, std::uint64_t bound) {
    return next_rand(state) % bound;
}

std::string witness(const LabeledGraph& g, const std::string& detail) {
    return "graph6=" + to_graph6(g) + " " + detail;
}

template <typename F>
void for_all_graphs(int n, F&& f) {
    LabeledGraphStream stream(n, n);
    while (auto g = stream.next()) f(*g);
}

}  // namespace

RatPoint sample_box_point(int n, std::uint64_t& state, bool snap_hyperplane) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        long den = 2 + static_cast<long>(rand_below(state, 15));
        std::vector<long> num(n - 1);
        for (auto& v : num) v = 1 + static_cast<long>(rand_below(state, den));
        if (snap_hyperplane && n >= 3) {
            // Force the pairing of one non-simple root to an exact integer.
            int i = 1 + static_cast<int>(rand_below(state, n - 2));
            int j = i + 2 + static_cast<int>(rand_below(state, n - i - 1));
            long target = 1 + static_cast<long>(rand_below(state, j - i));
            long rest = 0;
            for (int a = i; a <= j - 2; ++a) rest += num[a - 1];
            long forced = target * den - rest;
            if (forced < 1 || forced > den) continue;
            num[j - 2] = forced;
        }
        RatPoint x(n, Rational(0));
        for (int k = 1; k < n; ++k) {
            Rational gap(num[k - 1], den);
            gap.canonicalize();   // mpq_class(num, den) does not reduce
            x[k] = x[k - 1] - gap;
        }
        Rational total(0);
        for (auto& c : x) total += c;
        Rational shift = total / n;
        for (auto& c : x) c -= shift;
        return x;
    }
    throw std::logic_error("failed to sample a box point");
}

SuiteReport suite_triples_vs_chains(int max_n) {
    SuiteReport rep;
    rep.suite = "triples-vs-chains";
    for (int n = 1; n <= max_n; ++n)
        for_all_graphs(n, [&](const LabeledGraph& g) {
            ++rep.checked;
            bool a = is_compatible_triples(g);
            bool b = is_strongly_compatible(to_root_subset(g));
            if (a != b)
                rep.failures.push_back(witness(g, "triples=" + std::to_string(a) +
                                                      " chains=" + std::to_string(b)));
        });
    return rep;
}

SuiteReport suite_chains_vs_geometric(int max_n) {
    SuiteReport rep;
    rep.suite = "chains-vs-geometric";
    for (int n = 2; n <= max_n; ++n)
        for_all_graphs(n, [&](const LabeledGraph& g) {
            ++rep.checked;
            RootSubset psi = to_root_subset(g);
            bool a = is_strongly_compatible(psi);
            bool b = is_compatible_geometric(psi, max_n);
            if (a != b)
                rep.failures.push_back(witness(g, "chains=" + std::to_string(a) +
                                                      " geometric=" + std::to_string(b)));
        });
    return rep;
}

SuiteReport suite_six_way_equivalence(int max_n, int perm_bound) {
    SuiteReport rep;
    rep.suite = "six-way-equivalence";
    for (int n = 1; n <= max_n; ++n)
        for_all_graphs(n, [&](const LabeledGraph& g) {
            ++rep.checked;
            bool umbrella = is_compatible_triples(g);
            bool chains = is_strongly_compatible(to_root_subset(g));
            IntPoly c = chromatic(g);
            IntPoly f = a_eulerian(g, perm_bound);
            IntPoly w = graphic_eulerian(g, perm_bound);
            IntPoly y = reduced_graphic_eulerian(g, perm_bound);
            bool from_f = chromatic_from_f_rational(f, n) == RatPoly::from(c);
            bool f_is_y = f == y;
            bool recurrence = eulerian_recurrence_holds(w, f, n);
            if (umbrella != chains || umbrella != from_f || umbrella != f_is_y ||
                umbrella != recurrence) {
                std::ostringstream os;
                os << "umbrella=" << umbrella << " chains=" << chains << " fromF=" << from_f
                   << " F==Y=" << f_is_y << " recurrence=" << recurrence;
                rep.failures.push_back(witness(g, os.str()));
            }
        });
    return rep;
}

SuiteReport suite_w_identity(int max_n, int perm_bound) {
    SuiteReport rep;
    rep.suite = "w-identity";
    for (int n = 1; n <= max_n; ++n)
        for_all_graphs(n, [&](const LabeledGraph& g) {
            ++rep.checked;
            IntPoly w = graphic_eulerian(g, perm_bound);
            if (chromatic_from_w(w, n) != chromatic(g))
                rep.failures.push_back(witness(g, "chromatic reconstruction from W differs"));
        });
    return rep;
}

SuiteReport suite_ideal_subsets(int max_n, int geometric_max) {
    SuiteReport rep;
    rep.suite = "ideal-subsets";
    for (int n = 1; n <= max_n; ++n)
        for_all_graphs(n, [&](const LabeledGraph& g) {
            ++rep.checked;
            RootSubset psi = to_root_subset(g);
            bool ideal = is_root_ideal(psi);
            bool two_sided = is_unit_interval_ordering(g, VertexOrdering::identity(n));
            if (ideal != two_sided) {
                rep.failures.push_back(witness(g, "ideal != identity unit-interval condition"));
                return;
            }
            if (!ideal) return;
            bool ok = is_compatible_triples(g) && is_strongly_compatible(psi);
            if (ok && n >= 2 && n <= geometric_max) ok = is_compatible_geometric(psi, geometric_max);
            if (!ok) rep.failures.push_back(witness(g, "ideal subset fails a compatibility check"));
        });
    return rep;
}

SuiteReport suite_sum_identities(int max_n, int perm_bound) {
    SuiteReport rep;
    rep.suite = "sum-identities";
    mpz_class factorial(1);
    for (int n = 1; n <= max_n; ++n) {
        factorial *= n;
        mpz_class prev = factorial / n;
        for_all_graphs(n, [&](const LabeledGraph& g) {
            ++rep.checked;
            IntPoly w = graphic_eulerian(g, perm_bound);
            IntPoly f = a_eulerian(g, perm_bound);
            mpz_class ws(0), fs(0);
            for (const auto& c : w.coeffs()) ws += c;
            for (const auto& c : f.coeffs()) fs += c;
            if (ws != factorial || fs != prev)
                rep.failures.push_back(witness(g, "coefficient sums are not n! and (n-1)!"));
        });
    }
    return rep;
}

SuiteReport suite_alcove_structure(int max_alcove_n) {
    SuiteReport rep;
    rep.suite = "alcove-structure";
    mpz_class expected(1);
    for (int n = 2; n <= max_alcove_n; ++n) {
        expected *= n - 1;
        auto alcoves = enumerate_alcoves_in_box(n, max_alcove_n);
        ++rep.checked;
        if (mpz_class(static_cast<long>(alcoves.size())) != expected) {
            rep.failures.push_back("n=" + std::to_string(n) + " alcove count " +
                                   std::to_string(alcoves.size()));
            continue;
        }
        for (const auto& a : alcoves) {
            ++rep.checked;
            AlcoveGeometry geo = geometry(a);
            if (static_cast<int>(geo.walls.size()) != n ||
                static_cast<int>(geo.vertices.size()) != n) {
                rep.failures.push_back("n=" + std::to_string(n) + " wall/vertex count off");
                continue;
            }
            for (int v = 0; v < n; ++v) {
                int on = 0;
                for (auto mask : geo.wall_vertex_mask)
                    if ((mask >> v) & 1) ++on;
                if (on != n - 1)
                    rep.failures.push_back("n=" + std::to_string(n) +
                                           " vertex not on exactly n-1 walls");
            }
            // ceilings are exactly the walls at the alcove's upper coordinate;
            // those have level >= 1 with the origin strictly below, on the
            // alcove's side
            for (const auto& w : geo.walls) {
                int r = a.level(w.root.first, w.root.second);
                WallKind expect = w.level == r ? WallKind::ceiling
                                : w.level == 0 ? WallKind::linear
                                               : WallKind::lower;
                if (w.kind != expect || (w.kind == WallKind::ceiling && w.level < 1) ||
                    (w.kind == WallKind::lower && w.level != r - 1))
                    rep.failures.push_back("n=" + std::to_string(n) + " wall kind mismatch");
            }
        }
    }
    return rep;
}

SuiteReport suite_worpitzky_partition(int max_n, std::uint64_t seed, int points_per_n) {
    SuiteReport rep;
    rep.suite = "worpitzky-partition";
    std::uint64_t state = seed;
    for (int n = 2; n <= max_n; ++n) {
        auto alcoves = enumerate_alcoves_in_box(n, max_n);
        std::vector<AlcoveGeometry> geos;
        geos.reserve(alcoves.size());
        for (const auto& a : alcoves) geos.push_back(geometry(a));
        for (int t = 0; t < points_per_n; ++t) {
            ++rep.checked;
            RatPoint x = sample_box_point(n, state, t % 2 == 1);
            int hits = 0;
            for (size_t k = 0; k < alcoves.size(); ++k)
                if (upper_closure_contains(alcoves[k], geos[k], x)) ++hits;
            if (hits != 1) {
                std::ostringstream os;
                os << "n=" << n << " point #" << t << " contained in " << hits << " upper closures";
                rep.failures.push_back(os.str());
            }
        }
    }
    return rep;
}

SuiteReport suite_ceiling_lift(int max_n) {
    SuiteReport rep;
    rep.suite = "ceiling-lift";
    for (int n = 2; n <= max_n; ++n) {
        ++rep.checked;
        if (!verify_ceiling_lift(n, max_n))
            rep.failures.push_back("n=" + std::to_string(n) + " ceiling lift fails");
    }
    return rep;
}

SuiteReport suite_class_cross_checks(int max_n) {
    SuiteReport rep;
    rep.suite = "class-cross-checks";
    for (int n = 1; n <= max_n; ++n)
        for_all_graphs(n, [&](const LabeledGraph& g) {
            ++rep.checked;
            bool interval = find_interval_ordering(g).has_value();
            bool chordal = is_chordal(g);
            bool cocomp = find_umbrella_free_ordering(g).has_value();
            bool unit = find_unit_interval_ordering(g).has_value();
            if (interval != (chordal && cocomp))
                rep.failures.push_back(witness(g, "interval != chordal&cocomparability"));
            if (unit && !interval)
                rep.failures.push_back(witness(g, "unit interval without interval"));
        });
    // the claw: interval but not unit interval
    LabeledGraph claw(4, {{1, 2}, {1, 3}, {1, 4}});
    ++rep.checked;
    if (!find_interval_ordering(claw) || find_unit_interval_ordering(claw))
        rep.failures.push_back(witness(claw, "claw should separate the interval classes"));
    return rep;
}

SuiteReport suite_labeling_invariance(int max_n, std::uint64_t seed, int perm_bound) {
    SuiteReport rep;
    rep.suite = "labeling-invariance";
    std::uint64_t state = seed;
    for (int n = 2; n <= max_n; ++n) {
        // a seeded sample of graphs and relabelings per n
        std::uint64_t space = std::uint64_t{1} << (n * (n - 1) / 2);
        for (int t = 0; t < 40; ++t) {
            ++rep.checked;
            LabeledGraph g = graph_from_edge_mask(n, rand_below(state, space));
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 1);
            for (int k = n - 1; k > 0; --k)
                std::swap(perm[k], perm[rand_below(state, k + 1)]);
            LabeledGraph h = g.relabel(VertexOrdering(perm));
            if (graphic_eulerian(g, perm_bound) != graphic_eulerian(h, perm_bound) ||
                reduced_graphic_eulerian(g, perm_bound) != reduced_graphic_eulerian(h, perm_bound) ||
                chromatic(g) != chromatic(h))
                rep.failures.push_back(witness(g, "W/Y/chromatic changed under relabeling"));
        }
    }
    return rep;
}

std::vector<SuiteReport> run_all_suites(int max_vertices, int geometric_max,
                                        std::uint64_t seed, int perm_bound) {
    std::vector<SuiteReport> out;
    out.push_back(suite_triples_vs_chains(max_vertices));
    out.push_back(suite_chains_vs_geometric(geometric_max));
    out.push_back(suite_six_way_equivalence(max_vertices, perm_bound));
    out.push_back(suite_w_identity(max_vertices, perm_bound));
    out.push_back(suite_ideal_subsets(max_vertices, geometric_max));
    out.push_back(suite_sum_identities(max_vertices, perm_bound));
    out.push_back(suite_alcove_structure());
    out.push_back(suite_worpitzky_partition(geometric_max, seed));
    out.push_back(suite_ceiling_lift(geometric_max));
    out.push_back(suite_class_cross_checks(max_vertices));
    out.push_back(suite_labeling_invariance(std::min(max_vertices, 6), seed, perm_bound));
    return out;
}

}  // namespace worpitzky
