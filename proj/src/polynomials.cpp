#include "worpitzky/polynomials.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace worpitzky {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(mpz_class c, int k) {
    std::vector<mpz_class> v(k + 1, mpz_class(0));
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

mpz_class IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
    mpz_class acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

namespace {

std::string term_str(const std::string& mag, int k) {
    if (k == 0) return mag;
    std::string var = k == 1 ? "t" : "t^" + std::to_string(k);
    return mag == "1" ? var : mag + var;
}

}  // namespace

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        if (c_[k] == 0) continue;
        mpz_class mag = abs(c_[k]);
        if (first) {
            if (c_[k] < 0) os << '-';
            first = false;
        } else {
            os << (c_[k] < 0 ? " - " : " + ");
        }
        os << term_str(mag.get_str(), k);
    }
    return os.str();
}

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::from(const IntPoly& p) {
    std::vector<mpq_class> c(p.coeffs().begin(), p.coeffs().end());
    return RatPoly(std::move(c));
}

mpq_class RatPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

bool RatPoly::is_integral() const {
    for (const auto& q : c_)
        if (q.get_den() != 1) return false;
    return true;
}

IntPoly RatPoly::to_int() const {
    std::vector<mpz_class> c;
    c.reserve(c_.size());
    for (const auto& q : c_) {
        if (q.get_den() != 1) throw std::runtime_error("polynomial is not integral");
        c.push_back(q.get_num());
    }
    return IntPoly(std::move(c));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::scaled(const mpq_class& s) const {
    std::vector<mpq_class> c(c_);
    for (auto& q : c) q *= s;
    return RatPoly(std::move(c));
}

IntPoly falling_factorial(int n) {
    IntPoly p = IntPoly::monomial(1, 0);
    for (int a = 0; a < n; ++a)
        p = p * IntPoly({mpz_class(-a), mpz_class(1)});
    return p;
}

RatPoly binomial_poly(int shift, int n) {
    if (n == 0) return RatPoly({mpq_class(1)});
    IntPoly num = IntPoly::monomial(1, 0);
    for (int a = 0; a < n; ++a)
        num = num * IntPoly({mpz_class(shift - a), mpz_class(1)});
    mpz_class fact(1);
    for (int a = 2; a <= n; ++a) fact *= a;
    return RatPoly::from(num).scaled(mpq_class(1, fact));
}

std::vector<std::string> coefficient_strings(const IntPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

IntPoly poly_from_coefficient_strings(const std::vector<std::string>& coeffs) {
    std::vector<mpz_class> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.emplace_back(s);
    return IntPoly(std::move(c));
}

namespace {

std::string graph_key(const LabeledGraph& g) {
    int n = g.vertex_count();
    std::string key(1, static_cast<char>(n));
    int acc = 0, nb = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 8) {
                key.push_back(static_cast<char>(acc));
                acc = 0;
                nb = 0;
            }
        }
    if (nb) key.push_back(static_cast<char>(acc << (8 - nb)));
    return key;
}

LabeledGraph delete_edge(const LabeledGraph& g, Edge e) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() - 1);
    for (auto f : g.edges())
        if (f != e) edges.push_back(f);
    return LabeledGraph(g.vertex_count(), edges);
}

LabeledGraph contract_edge(const LabeledGraph& g, Edge e) {
    auto [i, j] = e;   // i < j; j is merged into i, labels above j drop by one
    int n = g.vertex_count();
    auto map = [&](int v) { return v == j ? i : (v > j ? v - 1 : v); };
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int a = map(u), b = map(v);
        if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return LabeledGraph(n - 1, edges);
}

IntPoly chromatic_memo(const LabeledGraph& g,
                       std::unordered_map<std::string, IntPoly>& memo) {
    if (g.edge_count() == 0) return IntPoly::monomial(1, g.vertex_count());
    std::string key = graph_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Edge e = g.edges().front();
    IntPoly result = chromatic_memo(delete_edge(g, e), memo) -
                     chromatic_memo(contract_edge(g, e), memo);
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

IntPoly chromatic(const LabeledGraph& g) {
    thread_local std::unordered_map<std::string, IntPoly> memo;
    return chromatic_memo(g, memo);
}

RankVector rank_vector(const std::vector<int>& pi, const LabeledGraph& g) {
    int n = g.vertex_count();
    if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("permutation size mismatch");
    RankVector rho(n);
    for (int i = 0; i < n; ++i) {
        int best = 0;
        std::uint64_t nb = g.neighbors(pi[i]);
        for (int j = 0; j < i; ++j)
            if ((nb >> (pi[j] - 1)) & 1) best = std::max(best, rho[j]);
        rho[i] = best + 1;
    }
    return rho;
}

int graphic_descent_count(const std::vector<int>& pi, const LabeledGraph& g) {
    RankVector rho = rank_vector(pi, g);
    int d = 0;
    for (size_t i = 0; i + 1 < pi.size(); ++i)
        if (rho[i] > rho[i + 1] || (rho[i] == rho[i + 1] && pi[i] > pi[i + 1])) ++d;
    return d;
}

int a_descent_count(const std::vector<int>& pi, const LabeledGraph& g) {
    int n = g.vertex_count();
    if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("permutation size mismatch");
    int d = 0;
    for (int i = 0; i < n; ++i) {
        int a = pi[i], b = pi[(i + 1) % n];
        if (a > b && !g.has_edge(a, b)) ++d;
    }
    return d;
}

namespace {

void check_perm_bound(const LabeledGraph& g, int perm_bound) {
    if (g.vertex_count() > perm_bound)
        throw std::invalid_argument("permutation enumeration bound exceeded");
}

}  // namespace

IntPoly graphic_eulerian(const LabeledGraph& g, int perm_bound) {
    check_perm_bound(g, perm_bound);
    int n = g.vertex_count();
    std::vector<mpz_class> w(n + 1, mpz_class(0));
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    std::vector<int> rho(n);
    do {
        for (int i = 0; i < n; ++i) {
            int best = 0;
            std::uint64_t nb = g.neighbors(pi[i]);
            for (int j = 0; j < i; ++j)
                if ((nb >> (pi[j] - 1)) & 1) best = std::max(best, rho[j]);
            rho[i] = best + 1;
        }
        int d = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (rho[i] > rho[i + 1] || (rho[i] == rho[i + 1] && pi[i] > pi[i + 1])) ++d;
        w[n - d] += 1;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return IntPoly(std::move(w));
}

IntPoly a_eulerian(const LabeledGraph& g, int perm_bound) {
    check_perm_bound(g, perm_bound);
    int n = g.vertex_count();
    std::vector<mpz_class> f(n + 1, mpz_class(0));
    std::vector<int> pi(n);
    pi[0] = n;
    std::iota(pi.begin() + 1, pi.end(), 1);
    do {
        int d = a_descent_count(pi, g);
        // a cyclic word cannot descend everywhere, so d <= n-1 and f_0 = 0
        f[n - d] += 1;
    } while (std::next_permutation(pi.begin() + 1, pi.end()));
    return IntPoly(std::move(f));
}

IntPoly a_eulerian_full_enumeration(const LabeledGraph& g, int perm_bound) {
    check_perm_bound(g, perm_bound);
    int n = g.vertex_count();
    std::vector<mpz_class> tally(n + 1, mpz_class(0));
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    do {
        tally[n - a_descent_count(pi, g)] += 1;
    } while (std::next_permutation(pi.begin(), pi.end()));
    for (auto& t : tally) {
        if (t % n != 0)
            throw std::runtime_error("cyclic descent counts are not divisible by n");
        t /= n;
    }
    return IntPoly(std::move(tally));
}

IntPoly reduced_graphic_eulerian(const LabeledGraph& g, int perm_bound) {
    int n = g.vertex_count();
    IntPoly c = chromatic(g);
    if (c.coeff(0) != 0) throw std::logic_error("chromatic polynomial has nonzero constant term");

    // c(q)/q = h(q) where h is c shifted down by one degree.
    std::vector<mpz_class> hshift(c.coeffs().begin() + (c.is_zero() ? 0 : 1), c.coeffs().end());
    IntPoly h(std::move(hshift));

    // Only q <= n contributes to coefficients <= n after multiplying by (1-t)^n.
    std::vector<mpz_class> partial(n + 1, mpz_class(0));
    for (int q = 1; q <= n; ++q) partial[q] = h(q);
    IntPoly series(std::move(partial));
    IntPoly one_minus_t({mpz_class(1), mpz_class(-1)});
    IntPoly pow = IntPoly::monomial(1, 0);
    for (int a = 0; a < n; ++a) pow = pow * one_minus_t;
    IntPoly product = series * pow;

    std::vector<mpz_class> y(n + 1, mpz_class(0));
    for (int k = 0; k <= n; ++k) y[k] = product.coeff(k);
    IntPoly result(std::move(y));
    if (result.coeff(0) != 0) throw std::logic_error("reduced polynomial has nonzero constant term");

    if (n <= perm_bound) {
        IntPoly viaW = reduced_from_w(graphic_eulerian(g, perm_bound), n);
        if (viaW != result)
            throw std::logic_error("reduced polynomial routes disagree");
    }
    return result;
}

IntPoly reduced_from_w(const IntPoly& w, int n) {
    if (w.degree() > n) throw std::invalid_argument("degree exceeds n");
    std::vector<mpz_class> y(n + 1, mpz_class(0));
    for (int k = 1; k <= n; ++k) {
        mpz_class num = w.coeff(k) - mpz_class(n - k + 1) * y[k - 1];
        if (num % k != 0) throw std::runtime_error("recurrence inversion is not exact");
        y[k] = num / k;
    }
    return IntPoly(std::move(y));
}

IntPoly chromatic_from_w(const IntPoly& w, int n) {
    if (w.degree() > n) throw std::invalid_argument("degree exceeds n");
    if (w.coeff(0) != 0) throw std::invalid_argument("constant term must vanish");
    RatPoly acc;
    for (int k = 1; k <= n; ++k) {
        mpz_class wk = w.coeff(k);
        if (wk == 0) continue;
        acc = acc + binomial_poly(n - k, n).scaled(mpq_class(wk));
    }
    return acc.to_int();
}

RatPoly chromatic_from_f_rational(const IntPoly& f, int n) {
    if (f.degree() > n) throw std::invalid_argument("degree exceeds n");
    if (f.coeff(0) != 0) throw std::invalid_argument("constant term must vanish");
    RatPoly acc;
    for (int k = 1; k <= n; ++k) {
        mpz_class fk = f.coeff(k);
        if (fk == 0) continue;
        acc = acc + binomial_poly(n - 1 - k, n - 1).scaled(mpq_class(fk));
    }
    return acc * RatPoly({mpq_class(0), mpq_class(1)});
}

IntPoly chromatic_from_f(const IntPoly& f, int n) {
    return chromatic_from_f_rational(f, n).to_int();
}

bool eulerian_recurrence_holds(const IntPoly& w, const IntPoly& f, int n) {
    if (f.coeff(0) != 0) throw std::invalid_argument("F(0) must vanish");
    if (w.degree() > n || f.degree() > n) throw std::invalid_argument("degree exceeds n");
    if (w.coeff(0) != 0) return false;
    for (int k = 1; k <= n; ++k)
        if (w.coeff(k) != mpz_class(k) * f.coeff(k) + mpz_class(n - k + 1) * f.coeff(k - 1))
            return false;
    return true;
}

}  // namespace worpitzky
