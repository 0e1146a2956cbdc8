#include "worpitzky/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace worpitzky {

int pair_index(int n, int i, int j) {
    return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

Edge pair_at(int n, int idx) {
    int i = 1;
    while (idx >= n - i) {
        idx -= n - i;
        ++i;
    }
    return {i, i + 1 + idx};
}

VertexOrdering::VertexOrdering(std::vector<int> order) : order_(std::move(order)) {
    int n = static_cast<int>(order_.size());
    if (n < 1) throw std::invalid_argument("ordering must be nonempty");
    pos_.assign(n, 0);
    for (int p = 1; p <= n; ++p) {
        int v = order_[p - 1];
        if (v < 1 || v > n || pos_[v - 1] != 0)
            throw std::invalid_argument("ordering is not a permutation of 1..n");
        pos_[v - 1] = p;
    }
}

VertexOrdering VertexOrdering::identity(int n) {
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 1);
    return VertexOrdering(std::move(ord));
}

VertexOrdering VertexOrdering::inverse() const {
    return VertexOrdering(pos_);
}

std::string VertexOrdering::str() const {
    std::ostringstream os;
    for (size_t k = 0; k < order_.size(); ++k) {
        if (k) os << ' ';
        os << order_[k];
    }
    return os.str();
}

LabeledGraph::LabeledGraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
    if (n > kMaxVertices) throw std::invalid_argument("vertex count exceeds supported maximum");
    adj_.assign(n, 0);
}

LabeledGraph::LabeledGraph(int n, const std::vector<Edge>& edges) : LabeledGraph(n) {
    edges_.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n) throw std::invalid_argument("edge endpoint out of range");
        if (i == j) throw std::invalid_argument("loop edges are not allowed");
        edges_.emplace_back(i, j);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [i, j] : edges_) {
        adj_[i - 1] |= std::uint64_t{1} << (j - 1);
        adj_[j - 1] |= std::uint64_t{1} << (i - 1);
    }
}

bool LabeledGraph::has_edge(int i, int j) const {
    return (adj_[i - 1] >> (j - 1)) & 1;
}

LabeledGraph LabeledGraph::complement() const {
    std::vector<Edge> ce;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (!has_edge(i, j)) ce.emplace_back(i, j);
    return LabeledGraph(n_, ce);
}

LabeledGraph LabeledGraph::relabel(const VertexOrdering& sigma) const {
    if (sigma.size() != n_) throw std::invalid_argument("relabeling has wrong size");
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (auto [i, j] : edges_) mapped.emplace_back(sigma.image(i), sigma.image(j));
    return LabeledGraph(n_, mapped);
}

std::uint64_t LabeledGraph::edge_mask() const {
    if (n_ > 11) throw std::invalid_argument("edge mask requires at most 11 vertices");
    std::uint64_t m = 0;
    for (auto [i, j] : edges_) m |= std::uint64_t{1} << pair_index(n_, i, j);
    return m;
}

RootSubset::RootSubset(int n_in, std::vector<Edge> roots_in)
    : n(n_in), roots(std::move(roots_in)) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("bad rank parameter");
    for (auto& [i, j] : roots) {
        if (i > j) std::swap(i, j);
        if (i < 1 || i == j || j > n) throw std::invalid_argument("bad root pair");
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
}

bool RootSubset::contains(int i, int j) const {
    return std::binary_search(roots.begin(), roots.end(), Edge{i, j});
}

LabeledGraph RootSubset::to_graph() const {
    return LabeledGraph(n, roots);
}

RootSubset to_root_subset(const LabeledGraph& g) {
    return RootSubset(g.vertex_count(), g.edges());
}

namespace {

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    }
    return out;
}

}  // namespace

LabeledGraph parse_edge_list(const std::string& text) {
    auto lines = nonblank_lines(text);
    if (lines.empty()) throw std::runtime_error("edge list: empty input");

    std::istringstream head(lines[0]);
    long n;
    std::string extra;
    if (!(head >> n) || (head >> extra))
        throw std::runtime_error("edge list: first line must be the vertex count");
    if (n < 1) throw std::runtime_error("edge list: vertex count must be positive");
    if (n > kMaxVertices) throw std::runtime_error("edge list: vertex count exceeds supported maximum");

    std::vector<Edge> edges;
    for (size_t k = 1; k < lines.size(); ++k) {
        std::istringstream es(lines[k]);
        long i, j;
        if (!(es >> i >> j) || (es >> extra))
            throw std::runtime_error("edge list: malformed edge line: " + lines[k]);
        if (i < 1 || i > n || j < 1 || j > n)
            throw std::runtime_error("edge list: vertex out of range: " + lines[k]);
        if (i == j) throw std::runtime_error("edge list: loop edge: " + lines[k]);
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    return LabeledGraph(static_cast<int>(n), edges);
}

LabeledGraph parse_graph6(const std::string& text) {
    std::string s = text;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    if (s.empty()) throw std::runtime_error("graph6: empty string");

    size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        // 4-byte vertex count (63 <= n <= 258047); 8-byte counts exceed our cap anyway
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw std::runtime_error("graph6: vertex count exceeds supported maximum");
        if (s.size() < 4) throw std::runtime_error("graph6: truncated vertex count");
        n = 0;
        for (int k = 1; k <= 3; ++k) {
            int b = static_cast<unsigned char>(s[k]);
            if (b < 63 || b > 126) throw std::runtime_error("graph6: byte out of range");
            n = (n << 6) | (b - 63);
        }
        pos = 4;
    } else {
        int b = static_cast<unsigned char>(s[0]);
        if (b < 63 || b > 125) throw std::runtime_error("graph6: byte out of range");
        n = b - 63;
        pos = 1;
    }
    if (n < 1) throw std::runtime_error("graph6: graph must have at least one vertex");
    if (n > kMaxVertices) throw std::runtime_error("graph6: vertex count exceeds supported maximum");

    long bits = n * (n - 1) / 2;
    size_t expect = static_cast<size_t>((bits + 5) / 6);
    if (s.size() - pos != expect) throw std::runtime_error("graph6: wrong length");

    std::vector<Edge> edges;
    long bit = 0;
    for (size_t k = pos; k < s.size(); ++k) {
        int b = static_cast<unsigned char>(s[k]);
        if (b < 63 || b > 126) throw std::runtime_error("graph6: byte out of range");
        int group = b - 63;
        for (int t = 5; t >= 0; --t, ++bit) {
            int v = (group >> t) & 1;
            if (bit >= bits) {
                if (v) throw std::runtime_error("graph6: nonzero padding bits");
                continue;
            }
            if (v) {
                // bit order: (0,1),(0,2),(1,2),(0,3),... column-major upper triangle
                long col = 1;
                long off = bit;
                while (off >= col) {
                    off -= col;
                    ++col;
                }
                edges.emplace_back(static_cast<int>(off) + 1, static_cast<int>(col) + 1);
            }
        }
    }
    return LabeledGraph(static_cast<int>(n), edges);
}

std::string to_graph6(const LabeledGraph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nb = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return out;
}

LabeledGraphStream::LabeledGraphStream(int n, int max_n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph enumeration: n must be positive");
    if (n > max_n) throw std::invalid_argument("graph enumeration: n exceeds the configured bound");
    if (n > 11) throw std::invalid_argument("graph enumeration: space too large");
    total_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

std::optional<LabeledGraph> LabeledGraphStream::next() {
    if (cursor_ >= total_) return std::nullopt;
    return graph_from_edge_mask(n_, cursor_++);
}

LabeledGraph graph_from_edge_mask(int n, std::uint64_t mask) {
    if (n > 11) throw std::invalid_argument("edge mask requires at most 11 vertices");
    std::vector<Edge> edges;
    int m = n * (n - 1) / 2;
    for (int idx = 0; idx < m; ++idx)
        if ((mask >> idx) & 1) edges.push_back(pair_at(n, idx));
    return LabeledGraph(n, edges);
}

}  // namespace worpitzky
