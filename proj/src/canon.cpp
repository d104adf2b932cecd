#include "dsf/canon.hpp"

#include "dsf/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace dsf {

namespace {

// Ordered partition of the vertex set. Splits happen in place and an
// individualized vertex is placed in front of the rest of its cell, so the
// position of every fixed vertex in the final discrete partition depends
// only on the shape of the node that fixed it.
struct Partition {
    std::array<VertexMask, Graph::kCapacity> cells{};
    int count = 0;

    [[nodiscard]] bool discrete(int n) const noexcept { return count == n; }
};

class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalLabeling run() {
        Partition root;
        root.cells[0] = g_.vertices();
        root.count = 1;
        std::array<VertexMask, kQueueCapacity> splitters{};
        splitters[0] = g_.vertices();
        refine(root, splitters, 1);
        visit(root, 0);

        CanonicalLabeling out;
        out.certificate = Certificate::adopt(best_graph_);
        out.order.assign(best_order_.begin(), best_order_.begin() + n_);
        out.generators = std::move(generators_);
        return out;
    }

private:
    static constexpr int kQueueCapacity = 4 * Graph::kCapacity;

    void refine(Partition& p, std::array<VertexMask, kQueueCapacity>& queue, int queued) const {
        const auto& kernels = kernels::active();
        kernels::ByteBlock counts{};
        int head = 0;
        while (head < queued && !p.discrete(n_)) {
            VertexMask splitter = queue[head++];
            kernels.masked_popcounts(g_.row_array(), splitter, counts);
            for (int i = 0; i < p.count; ++i) {
                VertexMask cell = p.cells[i];
                if (std::has_single_bit(cell))
                    continue;
                std::array<VertexMask, Graph::kCapacity + 1> buckets{};
                int lo = Graph::kCapacity;
                int hi = 0;
                for (VertexMask m = cell; m; m &= m - 1) {
                    int v = std::countr_zero(m);
                    int c = counts[v];
                    buckets[c] |= VertexMask{1} << v;
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
                if (lo == hi)
                    continue;
                std::array<VertexMask, Graph::kCapacity> fragments{};
                int k = 0;
                for (int c = lo; c <= hi; ++c)
                    if (buckets[c])
                        fragments[k++] = buckets[c];
                std::copy_backward(p.cells.begin() + i + 1, p.cells.begin() + p.count,
                                   p.cells.begin() + p.count + k - 1);
                std::copy(fragments.begin(), fragments.begin() + k, p.cells.begin() + i);
                p.count += k - 1;
                for (int f = 0; f < k && queued < kQueueCapacity; ++f)
                    queue[queued++] = fragments[f];
                i += k - 1;
            }
        }
    }

    [[nodiscard]] int target_cell(const Partition& p) const {
        int best = -1;
        int best_size = Graph::kCapacity + 1;
        for (int i = 0; i < p.count; ++i) {
            int size = std::popcount(p.cells[i]);
            if (size > 1 && size < best_size) {
                best = i;
                best_size = size;
            }
        }
        return best;
    }

    // Returns the depth at which the caller chain should resume.
    int visit(const Partition& p, int depth) {
        if (p.discrete(n_))
            return leaf(p, depth);
        int t = target_cell(p);
        VertexMask cell = p.cells[t];
        VertexMask tried = 0;
        for (VertexMask m = cell; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (tried && in_orbit_of(v, tried, depth))
                continue;
            tried |= VertexMask{1} << v;

            Partition child = p;
            std::copy_backward(child.cells.begin() + t + 1, child.cells.begin() + child.count,
                               child.cells.begin() + child.count + 1);
            child.cells[t] = VertexMask{1} << v;
            child.cells[t + 1] = cell & ~(VertexMask{1} << v);
            ++child.count;
            std::array<VertexMask, kQueueCapacity> splitters{};
            splitters[0] = VertexMask{1} << v;
            refine(child, splitters, 1);

            path_[depth] = v;
            int resume = visit(child, depth + 1);
            if (resume < depth)
                return resume;
        }
        return depth;
    }

    int leaf(const Partition& p, int depth) {
        std::array<int, Graph::kCapacity> order{};
        for (int i = 0; i < n_; ++i)
            order[i] = std::countr_zero(p.cells[i]);
        Graph relabeled = g_.relabeled(std::span<const int>(order.data(), n_));

        if (!have_first_) {
            have_first_ = true;
            first_graph_ = best_graph_ = relabeled;
            first_order_ = best_order_ = order;
            first_path_ = best_path_ = path_;
            return depth;
        }
        if (relabeled == first_graph_) {
            record_automorphism(first_order_, order);
            return divergence(first_path_, depth);
        }
        if (relabeled == best_graph_) {
            record_automorphism(best_order_, order);
            return divergence(best_path_, depth);
        }
        if (relabeled < best_graph_) {
            best_graph_ = relabeled;
            best_order_ = order;
            best_path_ = path_;
        }
        return depth;
    }

    void record_automorphism(const std::array<int, Graph::kCapacity>& from,
                             const std::array<int, Graph::kCapacity>& to) {
        Permutation gamma{};
        for (int v = 0; v < Graph::kCapacity; ++v)
            gamma[v] = static_cast<std::int8_t>(v);
        for (int i = 0; i < n_; ++i)
            gamma[from[i]] = static_cast<std::int8_t>(to[i]);
        generators_.push_back(gamma);
    }

    [[nodiscard]] int divergence(const std::array<int, Graph::kCapacity>& other, int depth) const {
        for (int i = 0; i < depth; ++i)
            if (path_[i] != other[i])
                return i;
        return depth;
    }

    // True when v shares an orbit with a tried vertex under the generators
    // that fix the current path prefix pointwise.
    [[nodiscard]] bool in_orbit_of(int v, VertexMask tried, int depth) const {
        std::array<int, Graph::kCapacity> parent{};
        std::iota(parent.begin(), parent.begin() + n_, 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Permutation& gamma : generators_) {
            bool fixes = true;
            for (int i = 0; i < depth && fixes; ++i)
                fixes = gamma[path_[i]] == path_[i];
            if (!fixes)
                continue;
            for (int x = 0; x < n_; ++x) {
                int a = find(x);
                int b = find(gamma[x]);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
        int root = find(v);
        for (VertexMask m = tried; m; m &= m - 1)
            if (find(std::countr_zero(m)) == root)
                return true;
        return false;
    }

    const Graph& g_;
    int n_;
    std::array<int, Graph::kCapacity> path_{};

    bool have_first_ = false;
    Graph first_graph_;
    std::array<int, Graph::kCapacity> first_order_{};
    std::array<int, Graph::kCapacity> first_path_{};
    Graph best_graph_;
    std::array<int, Graph::kCapacity> best_order_{};
    std::array<int, Graph::kCapacity> best_path_{};
    std::vector<Permutation> generators_;
};

CanonicalLabeling trivial_labeling(const Graph& g) {
    CanonicalLabeling out;
    out.order.resize(static_cast<std::size_t>(g.order()));
    std::iota(out.order.begin(), out.order.end(), 0);
    for (int v = 0; v + 1 < g.order(); ++v) {
        Permutation swap{};
        for (int x = 0; x < Graph::kCapacity; ++x)
            swap[x] = static_cast<std::int8_t>(x);
        std::swap(swap[v], swap[v + 1]);
        out.generators.push_back(swap);
    }
    return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
    int n = g.order();
    int m = g.edge_count();
    if (n <= 1 || m == 0 || m == n * (n - 1) / 2) {
        CanonicalLabeling out = trivial_labeling(g);
        out.certificate = Certificate::adopt(g);
        return out;
    }
    return Search(g).run();
}

Certificate certificate(const Graph& g) {
    return canonical_labeling(g).certificate;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return false;
    if (degree_sequence(g) != degree_sequence(h))
        return false;
    return certificate(g) == certificate(h);
}

std::vector<int> orbit_representatives(int n, const std::vector<Permutation>& generators) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Permutation& gamma : generators)
        for (int x = 0; x < n; ++x) {
            int a = find(x);
            int b = find(gamma[x]);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    for (int x = 0; x < n; ++x)
        parent[x] = find(x);
    return parent;
}

}  // namespace dsf
