#include "dsf/induced.hpp"

#include "dsf/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace dsf {

namespace {

bool twins(const Graph& g, int u, int v) {
    VertexMask both = (VertexMask{1} << u) | (VertexMask{1} << v);
    return (g.neighbors(u) & ~both) == (g.neighbors(v) & ~both);
}

// Connectivity-first order of a connected graph: start at a vertex of
// maximum degree, then repeatedly take the vertex with most placed
// neighbors, breaking ties by degree and then by label.
std::vector<int> connectivity_order(const Graph& c) {
    int n = c.order();
    std::vector<int> order;
    VertexMask placed = 0;
    while (static_cast<int>(order.size()) < n) {
        int best = -1;
        int best_links = -1;
        int best_degree = -1;
        for (int v = 0; v < n; ++v) {
            if ((placed >> v) & 1U)
                continue;
            int links = std::popcount(c.neighbors(v) & placed);
            int degree = c.degree(v);
            if (links > best_links || (links == best_links && degree > best_degree)) {
                best = v;
                best_links = links;
                best_degree = degree;
            }
        }
        order.push_back(best);
        placed |= VertexMask{1} << best;
    }
    return order;
}

}  // namespace

Pattern::Pattern(const Graph& g) : original_(g), cert_(dsf::certificate(g)) {
    Graph co = complement(g);
    complemented_ = components(co).size() > components(g).size();
    working_ = complemented_ ? co : g;
    edges_ = working_.edge_count();
    sorted_degrees_ = degree_sequence(working_).degrees();

    struct Block {
        Certificate cert;
        std::vector<int> vertices;  // in matching order
    };
    std::vector<Block> blocks;
    std::vector<int> isolated;
    for (VertexMask comp : components(working_)) {
        if (std::has_single_bit(comp)) {
            isolated.push_back(std::countr_zero(comp));
            continue;
        }
        std::vector<int> members;
        for (VertexMask m = comp; m; m &= m - 1)
            members.push_back(std::countr_zero(m));
        CanonicalLabeling lab = canonical_labeling(working_.induced(comp));
        Block block{lab.certificate, {}};
        // Order the canonical form, then map back, so identical components
        // get corresponding vertex sequences.
        for (int i : connectivity_order(lab.certificate.graph()))
            block.vertices.push_back(members[lab.order[i]]);
        blocks.push_back(std::move(block));
    }
    std::stable_sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.vertices.size() != b.vertices.size())
            return a.vertices.size() > b.vertices.size();
        return a.cert < b.cert;
    });

    std::vector<int> sequence;
    std::vector<int> block_start;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        block_start.push_back(static_cast<int>(sequence.size()));
        sequence.insert(sequence.end(), blocks[b].vertices.begin(), blocks[b].vertices.end());
    }
    sequence.insert(sequence.end(), isolated.begin(), isolated.end());

    int k = static_cast<int>(sequence.size());
    steps_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        Step& s = steps_[i];
        int v = sequence[i];
        s.vertex = static_cast<std::uint8_t>(v);
        s.degree = static_cast<std::uint8_t>(working_.degree(v));
        for (int j = 0; j < i; ++j) {
            if (working_.adjacent(v, sequence[j]))
                s.earlier_adj |= VertexMask{1} << j;
            else
                s.earlier_non |= VertexMask{1} << j;
        }
        for (int j = i - 1; j >= 0; --j)
            if (twins(working_, v, sequence[j])) {
                s.above = static_cast<std::int8_t>(j);
                break;
            }
    }
    for (std::size_t b = 1; b < blocks.size(); ++b)
        if (blocks[b].cert == blocks[b - 1].cert)
            steps_[block_start[b]].above = static_cast<std::int8_t>(block_start[b - 1]);
}

bool Pattern::induced_in(const Graph& host_in) const {
    int k = order();
    int n = host_in.order();
    if (k > n)
        return false;
    if (k <= 1)
        return true;
    Graph host = complemented_ ? complement(host_in) : host_in;
    int m = host.edge_count();
    if (m < edges_)
        return false;
    if (n * (n - 1) / 2 - m < k * (k - 1) / 2 - edges_)
        return false;
    return search(host);
}

bool Pattern::search(const Graph& host) const {
    const auto& kern = kernels::active();
    int n = host.order();
    int k = order();
    int slack = n - k;

    kernels::ByteBlock host_degrees{};
    kern.masked_popcounts(host.row_array(), host.vertices(), host_degrees);

    // Sorted-degree dominance: the i-th largest pattern degree cannot
    // exceed the i-th largest host degree.
    std::array<int, Graph::kCapacity> sorted{};
    std::copy(host_degrees.begin(), host_degrees.begin() + n, sorted.begin());
    std::sort(sorted.begin(), sorted.begin() + n, std::greater<>());
    for (int i = 0; i < k; ++i)
        if (sorted_degrees_[i] > sorted[i])
            return false;

    std::array<VertexMask, Graph::kCapacity> window{};
    for (int i = 0; i < k; ++i) {
        int d = steps_[i].degree;
        window[i] = kern.window_mask(host_degrees, n, d, d + slack);
        if (!window[i])
            return false;
    }

    std::array<int, Graph::kCapacity> image{};
    std::array<VertexMask, Graph::kCapacity> pending{};
    const auto& rows = host.row_array();
    int depth = 0;
    VertexMask used = 0;

    auto candidates = [&](int i) {
        const Step& s = steps_[i];
        VertexMask c = window[i] & ~used;
        for (VertexMask e = s.earlier_adj; e && c; e &= e - 1)
            c &= rows[image[std::countr_zero(e)]];
        for (VertexMask e = s.earlier_non; e && c; e &= e - 1)
            c &= ~rows[image[std::countr_zero(e)]];
        if (s.above >= 0)
            c &= ~Graph::full_mask(image[s.above] + 1);
        return c;
    };

    pending[0] = candidates(0);
    while (depth >= 0) {
        if (!pending[depth]) {
            if (--depth >= 0)
                used &= ~(VertexMask{1} << image[depth]);
            continue;
        }
        int v = std::countr_zero(pending[depth]);
        pending[depth] &= pending[depth] - 1;
        image[depth] = v;
        if (depth + 1 == k)
            return true;
        used |= VertexMask{1} << v;
        ++depth;
        pending[depth] = candidates(depth);
    }
    return false;
}

bool induces(const Graph& host, const Graph& pattern) {
    if (pattern.order() <= 1)
        return host.order() >= pattern.order();
    return Pattern(pattern).induced_in(host);
}

ForbiddenSet::ForbiddenSet(const std::vector<Graph>& graphs) {
    for (const Graph& g : graphs)
        add(g);
}

bool ForbiddenSet::add(const Graph& g) {
    Certificate c = certificate(g);
    for (const Pattern& p : members_)
        if (p.certificate() == c)
            return false;
    members_.emplace_back(g);
    return true;
}

std::vector<Graph> ForbiddenSet::graphs() const {
    std::vector<Graph> out;
    out.reserve(members_.size());
    for (const Pattern& p : members_)
        out.push_back(p.graph());
    return out;
}

int ForbiddenSet::max_order() const noexcept {
    int best = 0;
    for (const Pattern& p : members_)
        best = std::max(best, p.order());
    return best;
}

int ForbiddenSet::first_induced(const Graph& host) const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i].induced_in(host))
            return static_cast<int>(i);
    return -1;
}

ForbiddenSet ForbiddenSet::complemented() const {
    ForbiddenSet out;
    for (const Pattern& p : members_)
        out.add(complement(p.graph()));
    return out;
}

bool is_free(const Graph& host, const ForbiddenSet& f) {
    return f.is_free(host);
}

std::vector<Graph> minimal_under_induced(const std::vector<Graph>& s) {
    std::vector<Pattern> patterns(s.begin(), s.end());
    std::vector<Graph> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < s.size() && minimal; ++j) {
            if (i == j || patterns[j].order() > s[i].order())
                continue;
            if (patterns[j].certificate() == patterns[i].certificate())
                continue;
            minimal = !patterns[j].induced_in(s[i]);
        }
        if (minimal)
            out.push_back(s[i]);
    }
    return out;
}

bool is_antichain(const ForbiddenSet& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
            if (i != j && f.pattern(j).order() <= f[i].order() && f.pattern(j).induced_in(f[i]))
                return false;
    return true;
}

bool InducedMemo::induces(const Graph& host, const Pattern& pattern) {
    Key key{host, pattern.certificate()};
    if (auto it = table_.find(key); it != table_.end()) {
        ++hits_;
        return it->second;
    }
    bool verdict = pattern.induced_in(host);
    table_.emplace(std::move(key), verdict);
    return verdict;
}

}  // namespace dsf
