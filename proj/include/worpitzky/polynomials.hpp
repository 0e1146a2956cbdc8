#ifndef WORPITZKY_POLYNOMIALS_HPP
#define WORPITZKY_POLYNOMIALS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "worpitzky/graph.hpp"

namespace worpitzky {

// Default cap on full permutation enumeration (9! = 362880 per graph).
inline constexpr int kPermutationBound = 9;

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// All arithmetic is exact.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly monomial(mpz_class c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }   // -1 for zero
    mpz_class coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    mpz_class operator()(const mpz_class& x) const;
    IntPoly derivative() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    bool operator==(const IntPoly&) const = default;

    // Ascending powers, e.g. "2t^2 + 4t^3"; "0" for the zero polynomial.
    std::string str() const;

private:
    std::vector<mpz_class> c_;
};

// Rational-coefficient companion used for binomial-basis work; every
// coefficient is kept in canonical reduced form.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs);
    static RatPoly from(const IntPoly& p);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    mpq_class coeff(int k) const;

    bool is_integral() const;
    IntPoly to_int() const;   // throws std::runtime_error when not integral

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly scaled(const mpq_class& s) const;
    bool operator==(const RatPoly&) const = default;

private:
    std::vector<mpq_class> c_;
};

// t(t-1)...(t-n+1)
IntPoly falling_factorial(int n);
// binom(t + shift, n) expanded over the rationals
RatPoly binomial_poly(int shift, int n);

// Serialization used by the CLI: decimal coefficient strings, constant first.
std::vector<std::string> coefficient_strings(const IntPoly& p);
IntPoly poly_from_coefficient_strings(const std::vector<std::string>& coeffs);

// Exact chromatic polynomial by deletion-contraction, memoized on the exact
// labeled subgraph across calls.
IntPoly chromatic(const LabeledGraph& g);

// rho[i] (0-based position i) = length of the longest chain of positions
// j_1 < ... < j_r = i whose consecutive values are adjacent in g.
using RankVector = std::vector<int>;
RankVector rank_vector(const std::vector<int>& pi, const LabeledGraph& g);

// Positions i with rho_i > rho_{i+1}, or rho_i = rho_{i+1} and pi_i > pi_{i+1}.
int graphic_descent_count(const std::vector<int>& pi, const LabeledGraph& g);

// Cyclic positions i (pi_{n+1} = pi_1) with pi_i > pi_{i+1} and {pi_i,pi_{i+1}}
// an edge of the complement.
int a_descent_count(const std::vector<int>& pi, const LabeledGraph& g);

// W_G(t): coefficient of t^k counts permutations with exactly n-k graphic
// descents, over all of S_n.
IntPoly graphic_eulerian(const LabeledGraph& g, int perm_bound = kPermutationBound);

// F_G(t): coefficient of t^k counts permutations with first symbol n and
// exactly n-k cyclic complement descents. The full-enumeration variant counts
// over all of S_n and divides by n; the division must be exact.
IntPoly a_eulerian(const LabeledGraph& g, int perm_bound = kPermutationBound);
IntPoly a_eulerian_full_enumeration(const LabeledGraph& g, int perm_bound = kPermutationBound);

// Y_G(t): degree-<=n part of (1-t)^n * sum_{q=1..n} (c_G(q)/q) t^q. When n is
// within perm_bound the result is cross-checked against the inversion of the
// Eulerian recurrence from W_G; pass perm_bound = 0 to skip the cross-check.
IntPoly reduced_graphic_eulerian(const LabeledGraph& g, int perm_bound = kPermutationBound);

// Inversion of w_k = k y_k + (n-k+1) y_{k-1} with y_0 = 0; divisions must be
// exact.
IntPoly reduced_from_w(const IntPoly& w, int n);

// c_G(t) = sum_k w_k binom(t+n-k, n); rational intermediates must cancel.
IntPoly chromatic_from_w(const IntPoly& w, int n);

// t * sum_k f_k binom(t+n-1-k, n-1). The rational variant never throws; the
// integer variant throws std::runtime_error on a non-integral result.
RatPoly chromatic_from_f_rational(const IntPoly& f, int n);
IntPoly chromatic_from_f(const IntPoly& f, int n);

// w_k = k f_k + (n-k+1) f_{k-1} for 1 <= k <= n, with f_0 = 0. Requires
// F(0) = 0 and both degrees <= n.
bool eulerian_recurrence_holds(const IntPoly& w, const IntPoly& f, int n);

}  // namespace worpitzky

#endif
