#include "dsf/graph.hpp"

#include "dsf/canon.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dsf {

namespace {

void check_capacity(long n) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    if (n > Graph::kCapacity)
        throw CapacityError("graph order " + std::to_string(n) + " exceeds capacity " +
                            std::to_string(Graph::kCapacity));
}

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph::Graph(int n) {
    check_capacity(n);
    n_ = n;
}

int Graph::edge_count() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v)
        twice += std::popcount(rows_[v]);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v)
        throw std::invalid_argument("self-loop");
    rows_[u] |= VertexMask{1} << v;
    rows_[v] |= VertexMask{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    rows_[u] &= ~(VertexMask{1} << v);
    rows_[v] &= ~(VertexMask{1} << u);
}

void Graph::toggle_edge(int u, int v) {
    if (adjacent(u, v))
        remove_edge(u, v);
    else
        add_edge(u, v);
}

void Graph::add_vertices(int count) {
    check_capacity(static_cast<long>(n_) + count);
    n_ += count;
}

Graph Graph::induced(VertexMask keep) const {
    keep &= vertices();
    std::array<int, kCapacity> index{};
    int k = 0;
    for (VertexMask m = keep; m; m &= m - 1)
        index[std::countr_zero(m)] = k++;
    Graph out(k);
    for (VertexMask m = keep; m; m &= m - 1) {
        int v = std::countr_zero(m);
        VertexMask row = 0;
        for (VertexMask nb = rows_[v] & keep; nb; nb &= nb - 1)
            row |= VertexMask{1} << index[std::countr_zero(nb)];
        out.rows_[index[v]] = row;
    }
    return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    std::array<int, kCapacity> inverse{};
    for (int i = 0; i < n_; ++i)
        inverse[perm[i]] = i;
    Graph out(n_);
    for (int i = 0; i < n_; ++i) {
        VertexMask row = 0;
        for (VertexMask nb = rows_[perm[i]]; nb; nb &= nb - 1)
            row |= VertexMask{1} << inverse[std::countr_zero(nb)];
        out.rows_[i] = row;
    }
    return out;
}

bool operator<(const Graph& a, const Graph& b) noexcept {
    if (a.n_ != b.n_)
        return a.n_ < b.n_;
    return std::lexicographical_compare(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin(),
                                        b.rows_.begin() + b.n_);
}

std::size_t GraphHash::operator()(const Graph& g) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(g.order());
    for (VertexMask row : g.rows()) {
        h ^= row + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

int DegreeSequence::sum() const noexcept {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

std::string DegreeSequence::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(degrees_[i]);
    }
    return out + ")";
}

std::size_t DegreeSequenceHash::operator()(const DegreeSequence& d) const noexcept {
    std::size_t h = d.size();
    for (int x : d.degrees())
        h = h * 31 + static_cast<std::size_t>(x);
    return h;
}

DegreeSequence degree_sequence(const Graph& g) {
    std::vector<int> degrees(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        degrees[v] = g.degree(v);
    return DegreeSequence(std::move(degrees));
}

Graph complete(int n) {
    return complement(Graph(n));
}

Graph empty_graph(int n) {
    return Graph(n);
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_bipartite(int a, int b) {
    check_capacity(static_cast<long>(a) + b);
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            g.add_edge(u, v);
    return g;
}

Graph star(int leaves) {
    return complete_bipartite(1, leaves);
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    VertexMask all = g.vertices();
    for (int v = 0; v < g.order(); ++v)
        for (VertexMask m = all & ~g.neighbors(v) & ~(VertexMask{1} << v); m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (u > v)
                out.add_edge(v, u);
        }
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    check_capacity(static_cast<long>(g.order()) + h.order());
    Graph out = g;
    int offset = g.order();
    out.add_vertices(h.order());
    for (int v = 0; v < h.order(); ++v)
        for (VertexMask m = h.neighbors(v); m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (u > v)
                out.add_edge(v + offset, u + offset);
        }
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            out.add_edge(u, g.order() + v);
    return out;
}

Graph copies(int m, const Graph& g) {
    if (m < 0)
        throw std::invalid_argument("negative multiplicity");
    check_capacity(static_cast<long>(m) * g.order());
    Graph out;
    for (int i = 0; i < m; ++i)
        out = disjoint_union(out, g);
    return out;
}

Graph paw() {
    return complement(disjoint_union(path(3), complete(1)));
}

Graph four_pan() {
    Graph g = cycle(4);
    g.add_vertices(1);
    g.add_edge(0, 4);
    return g;
}

Graph co_four_pan() {
    return complement(four_pan());
}

Graph house() {
    return complement(path(5));
}

std::vector<VertexMask> components(const Graph& g) {
    std::vector<VertexMask> out;
    VertexMask remaining = g.vertices();
    while (remaining) {
        VertexMask comp = remaining & (~remaining + 1);
        VertexMask frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            for (VertexMask m = frontier; m; m &= m - 1)
                next |= g.neighbors(std::countr_zero(m));
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        remaining &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    if (text.empty())
        throw ParseError("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 byte in '" + std::string(text) + "'");
    if (text[0] == 126)
        throw CapacityError("graph6 order exceeds capacity " + std::to_string(Graph::kCapacity));
    int n = text[0] - 63;
    check_capacity(n);
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() != expected)
        throw ParseError("graph6 length mismatch for order " + std::to_string(n));
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    // Padding bits must be zero.
    for (; k % 6 != 0; ++k) {
        int byte = text[1 + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1)
            throw ParseError("nonzero graph6 padding bits");
    }
    return g;
}

std::string graph6_labeled(const Graph& g) {
    int n = g.order();
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    if (filled) {
        acc <<= 6 - filled;
        out += static_cast<char>(63 + acc);
    }
    return out;
}

std::string emit_graph6(const Graph& g) {
    return graph6_labeled(certificate(g).graph());
}

}  // namespace dsf
