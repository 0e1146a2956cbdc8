#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "worpitzky/compatibility.hpp"
#include "worpitzky/polynomials.hpp"

using namespace worpitzky;

namespace {

const LabeledGraph kPath4(4, {{1, 2}, {2, 3}});
const LabeledGraph kPath4Relab(4, {{1, 4}, {3, 4}});
const LabeledGraph kClaw(4, {{1, 2}, {1, 3}, {1, 4}});

IntPoly poly(std::vector<long> coeffs) {
    std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
    return IntPoly(std::move(c));
}

LabeledGraph complete(int n) { return LabeledGraph(n).complement(); }

mpz_class coeff_sum(const IntPoly& p) {
    mpz_class s(0);
    for (const auto& c : p.coeffs()) s += c;
    return s;
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
    IntPoly a = poly({0, 0, 2, 4});
    CHECK(a.degree() == 3);
    CHECK(a.str() == "2t^2 + 4t^3");
    CHECK(poly({0, -6, 11, -6, 1}).str() == "-6t + 11t^2 - 6t^3 + t^4");
    CHECK(IntPoly().str() == "0");
    CHECK((a - a).is_zero());
    CHECK((poly({1, 1}) * poly({-1, 1})) == poly({-1, 0, 1}));
    CHECK(a(mpz_class(2)) == 2 * 4 + 4 * 8);
    CHECK(a.derivative() == poly({0, 4, 12}));

    CHECK(falling_factorial(3) == poly({0, 2, -3, 1}));
    CHECK(binomial_poly(1, 2) == RatPoly({mpq_class(0), mpq_class(1, 2), mpq_class(1, 2)}));
    CHECK_THROWS(RatPoly({mpq_class(1, 2)}).to_int());

    auto strings = coefficient_strings(a);
    CHECK(strings == std::vector<std::string>{"0", "0", "2", "4"});
    CHECK(poly_from_coefficient_strings(strings) == a);
}

TEST_CASE("chromatic polynomials") {
    CHECK(chromatic(kPath4) == poly({0, 0, 1, -2, 1}));   // t^2 (t-1)^2
    CHECK(chromatic(kClaw) == poly({0, -1, 3, -3, 1}));   // t (t-1)^3
    CHECK(chromatic(LabeledGraph(5)) == IntPoly::monomial(1, 5));
    for (int n = 1; n <= 7; ++n) CHECK(chromatic(complete(n)) == falling_factorial(n));
    // isomorphic relabelings share the chromatic polynomial
    CHECK(chromatic(kPath4Relab) == chromatic(kPath4));
}

TEST_CASE("chromatic matches the coloring-count interpolation oracle, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        LabeledGraphStream stream(n);
        while (auto g = stream.next())
            CHECK(chromatic(*g) == oracles::chromatic_by_interpolation(*g));
    }
}

TEST_CASE("rank vectors and graphic descents") {
    CHECK(rank_vector({4, 3, 2, 1}, kPath4) == RankVector{1, 1, 2, 3});
    CHECK(rank_vector({1, 2, 3, 4}, LabeledGraph(4)) == RankVector{1, 1, 1, 1});
    CHECK(rank_vector({2, 4, 1, 3}, complete(4)) == RankVector{1, 2, 3, 4});

    CHECK(graphic_descent_count({4, 3, 1, 2}, kPath4) == 2);
    CHECK(graphic_descent_count({1, 4, 2, 3}, kPath4) == 0);
    CHECK(graphic_descent_count({1, 2, 3, 4}, LabeledGraph(4)) == 0);
}

TEST_CASE("descent table for the 4-path reference graph") {
    // Full S_4 classification; the green/red cells of the worked example.
    std::map<int, std::set<std::string>> by_graphic, by_cyclic;
    std::vector<int> pi{1, 2, 3, 4};
    do {
        std::string name;
        for (int v : pi) name += static_cast<char>('0' + v);
        by_graphic[graphic_descent_count(pi, kPath4)].insert(name);
        by_cyclic[a_descent_count(pi, kPath4)].insert(name);
    } while (std::next_permutation(pi.begin(), pi.end()));

    CHECK(by_cyclic[2].size() == 8);
    CHECK(by_cyclic[1].size() == 16);

    CHECK(by_graphic[2] == std::set<std::string>{"4312", "3124", "4231", "2314"});
    CHECK(by_graphic[0] == std::set<std::string>{"1423", "1342", "3421", "2413"});
    CHECK(by_graphic[1].size() == 16);
}

TEST_CASE("graphic Eulerian polynomials") {
    CHECK(graphic_eulerian(kPath4) == poly({0, 0, 4, 16, 4}));
    for (int n = 1; n <= 7; ++n) {
        mpz_class fact(1);
        for (int k = 2; k <= n; ++k) fact *= k;
        CHECK(graphic_eulerian(complete(n)) == IntPoly::monomial(fact, n));
        CHECK(graphic_eulerian(LabeledGraph(n)) == oracles::classical_eulerian(n));
    }
    CHECK(graphic_eulerian(LabeledGraph(4)) == poly({0, 1, 11, 11, 1}));
    CHECK_THROWS(graphic_eulerian(LabeledGraph(10)));
}

TEST_CASE("cyclic complement descents") {
    CHECK(a_descent_count({4, 3, 1, 2}, kPath4) == 2);
    CHECK(a_descent_count({1, 4, 2, 3}, kPath4) == 2);
    CHECK(a_descent_count({3, 1, 4, 2}, complete(4)) == 0);
    CHECK(a_descent_count({4, 1, 2, 3}, LabeledGraph(4)) == 1);
}

TEST_CASE("A-Eulerian polynomials") {
    CHECK(a_eulerian(kPath4) == poly({0, 0, 2, 4}));
    CHECK(a_eulerian_full_enumeration(kPath4) == poly({0, 0, 2, 4}));
    CHECK(a_eulerian(kPath4Relab) == poly({0, 0, 3, 2, 1}));   // labeling-dependent
    for (int n = 1; n <= 7; ++n) {
        mpz_class fact(1);
        for (int k = 2; k < n; ++k) fact *= k;
        CHECK(a_eulerian(complete(n)) == IntPoly::monomial(fact, n));
        CHECK(a_eulerian(LabeledGraph(n)) == oracles::classical_eulerian(n - 1));
    }
    CHECK(a_eulerian(LabeledGraph(4)) == poly({0, 1, 4, 1}));
}

TEST_CASE("restricted and full enumeration routes agree, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        LabeledGraphStream stream(n);
        while (auto g = stream.next()) {
            IntPoly f = a_eulerian(*g);
            CHECK(f == a_eulerian_full_enumeration(*g));
            CHECK(f.coeff(0) == 0);
        }
    }
}

TEST_CASE("reduced graphic Eulerian polynomials") {
    CHECK(reduced_graphic_eulerian(kPath4) == poly({0, 0, 2, 4}));
    CHECK(reduced_graphic_eulerian(kClaw) == poly({0, 0, 1, 4, 1}));
    CHECK(reduced_graphic_eulerian(kPath4Relab) == poly({0, 0, 2, 4}));   // invariant
    for (int n = 1; n <= 7; ++n) {
        mpz_class fact(1);
        for (int k = 2; k < n; ++k) fact *= k;
        CHECK(reduced_graphic_eulerian(complete(n)) == IntPoly::monomial(fact, n));
    }
    CHECK(reduced_from_w(poly({0, 0, 4, 16, 4}), 4) == poly({0, 0, 2, 4}));
    CHECK_THROWS(reduced_from_w(poly({0, 0, 1}), 2));   // 2y_2 = 1 has no integer solution
}

TEST_CASE("nonnegative integer coefficients of Y, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        LabeledGraphStream stream(n);
        while (auto g = stream.next()) {
            IntPoly y = reduced_graphic_eulerian(*g);
            for (const auto& c : y.coeffs()) CHECK(c >= 0);
            CHECK(y.coeff(0) == 0);
        }
    }
}

TEST_CASE("chromatic reconstruction from W") {
    CHECK(chromatic_from_w(poly({0, 0, 4, 16, 4}), 4) == poly({0, 0, 1, -2, 1}));
    for (int n = 1; n <= 7; ++n) {
        mpz_class fact(1);
        for (int k = 2; k <= n; ++k) fact *= k;
        CHECK(chromatic_from_w(IntPoly::monomial(fact, n), n) == falling_factorial(n));
        CHECK(chromatic_from_w(oracles::classical_eulerian(n), n) == IntPoly::monomial(1, n));
    }
}

TEST_CASE("chromatic reconstruction from F") {
    CHECK(chromatic_from_f(poly({0, 0, 2, 4}), 4) == poly({0, 0, 1, -2, 1}));
    for (int n = 2; n <= 7; ++n) {
        mpz_class fact(1);
        for (int k = 2; k < n; ++k) fact *= k;
        CHECK(chromatic_from_f(IntPoly::monomial(fact, n), n) == falling_factorial(n));
        CHECK(chromatic_from_f(oracles::classical_eulerian(n - 1), n) == IntPoly::monomial(1, n));
    }
    // the incompatible labeling breaks the reconstruction
    CHECK(chromatic_from_f_rational(a_eulerian(kPath4Relab), 4) !=
          RatPoly::from(chromatic(kPath4Relab)));
}

TEST_CASE("Eulerian recurrence") {
    CHECK(eulerian_recurrence_holds(poly({0, 0, 4, 16, 4}), poly({0, 0, 2, 4}), 4));
    CHECK(eulerian_recurrence_holds(IntPoly::monomial(24, 4), IntPoly::monomial(6, 4), 4));
    CHECK(!eulerian_recurrence_holds(graphic_eulerian(kPath4Relab), a_eulerian(kPath4Relab), 4));
    CHECK_THROWS(eulerian_recurrence_holds(poly({0, 1}), poly({1}), 1));
}

TEST_CASE("degenerate single vertex") {
    LabeledGraph k1(1);
    CHECK(chromatic(k1) == poly({0, 1}));
    CHECK(graphic_eulerian(k1) == poly({0, 1}));
    CHECK(a_eulerian(k1) == poly({0, 1}));
    CHECK(reduced_graphic_eulerian(k1) == poly({0, 1}));
    CHECK(eulerian_recurrence_holds(poly({0, 1}), poly({0, 1}), 1));
    CHECK(chromatic_from_w(poly({0, 1}), 1) == poly({0, 1}));
}

TEST_CASE("exhaustive identities at n = 5") {
    mpz_class f120(120), f24(24);
    LabeledGraphStream stream(5);
    while (auto g = stream.next()) {
        IntPoly w = graphic_eulerian(*g);
        IntPoly f = a_eulerian(*g);
        CHECK(coeff_sum(w) == f120);
        CHECK(coeff_sum(f) == f24);
        CHECK(chromatic_from_w(w, 5) == chromatic(*g));

        bool compatible = is_compatible_triples(*g);
        CHECK((f == reduced_graphic_eulerian(*g)) == compatible);
        CHECK(eulerian_recurrence_holds(w, f, 5) == compatible);
    }
}

TEST_CASE("coefficient sums on seeded graphs at n = 7") {
    std::uint64_t state = 0xabcdef;
    for (int t = 0; t < 25; ++t) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        // 21 edge bits at n = 7
        std::uint64_t mask = (state >> 20) & ((std::uint64_t{1} << 21) - 1);
        LabeledGraph g = graph_from_edge_mask(7, mask);
        IntPoly w = graphic_eulerian(g);
        IntPoly f = a_eulerian(g);
        CHECK(coeff_sum(w) == 5040);
        CHECK(coeff_sum(f) == 720);
        CHECK(eulerian_recurrence_holds(w, f, 7) == is_compatible_triples(g));
    }
}

TEST_CASE("single-sweep identities across all graphs at n = 6") {
    // One S_6 pass per graph computes both descent statistics; everything
    // else is polynomial bookkeeping.
    LabeledGraphStream stream(6);
    const int n = 6;
    while (auto gopt = stream.next()) {
        const LabeledGraph& g = *gopt;
        std::vector<long> wt(n + 1, 0), ft_full(n + 1, 0), ft_first(n + 1, 0);
        std::vector<int> pi{1, 2, 3, 4, 5, 6};
        std::vector<int> rho(n);
        do {
            for (int i = 0; i < n; ++i) {
                int best = 0;
                std::uint64_t nb = g.neighbors(pi[i]);
                for (int j = 0; j < i; ++j)
                    if ((nb >> (pi[j] - 1)) & 1) best = std::max(best, rho[j]);
                rho[i] = best + 1;
            }
            int gd = 0;
            for (int i = 0; i + 1 < n; ++i)
                if (rho[i] > rho[i + 1] || (rho[i] == rho[i + 1] && pi[i] > pi[i + 1])) ++gd;
            ++wt[n - gd];
            int ad = 0;
            for (int i = 0; i < n; ++i) {
                int a = pi[i], b = pi[(i + 1) % n];
                if (a > b && !g.has_edge(a, b)) ++ad;
            }
            ++ft_full[n - ad];
            if (pi[0] == n) ++ft_first[n - ad];
        } while (std::next_permutation(pi.begin(), pi.end()));

        auto lift = [](const std::vector<long>& v) {
            std::vector<mpz_class> c(v.begin(), v.end());
            return IntPoly(std::move(c));
        };
        IntPoly w = lift(wt), f = lift(ft_first);
        CHECK(w == graphic_eulerian(g));
        CHECK(f == a_eulerian(g));
        for (int k = 0; k <= n; ++k) {
            REQUIRE(ft_full[k] % n == 0);
            CHECK(ft_full[k] / n == ft_first[k]);
        }
        CHECK(coeff_sum(w) == 720);
        CHECK(coeff_sum(f) == 120);

        IntPoly c = chromatic(g);
        CHECK(c == oracles::chromatic_by_interpolation(g));
        CHECK(chromatic_from_w(w, n) == c);
        IntPoly y = reduced_graphic_eulerian(g);   // series route, cross-checked from w
        for (const auto& co : y.coeffs()) CHECK(co >= 0);

        bool compatible = is_compatible_triples(g);
        CHECK(compatible == is_strongly_compatible(to_root_subset(g)));
        CHECK((f == y) == compatible);
        CHECK(eulerian_recurrence_holds(w, f, n) == compatible);
        CHECK((chromatic_from_f_rational(f, n) == RatPoly::from(c)) == compatible);
    }
}
