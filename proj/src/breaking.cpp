#include "dsf/breaking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dsf {

std::string_view to_string(SearchMode mode) {
    return mode == SearchMode::sound ? "sound" : "paper-literal";
}

SearchMode parse_search_mode(std::string_view text) {
    if (text == "sound")
        return SearchMode::sound;
    if (text == "paper-literal" || text == "literal")
        return SearchMode::paper_literal;
    throw std::invalid_argument("unknown search mode '" + std::string(text) + "'");
}

namespace {

bool inside(VertexMask set, int u, int v) {
    return ((set >> u) & 1U) && ((set >> v) & 1U);
}

class MemberSearch {
public:
    MemberSearch(const ForbiddenSet& f, int member, BreakingSearchStats& stats, bool prune_twins)
        : f_(f), member_(member), base_(f[member]), n_(base_.order()), stats_(stats) {
        for (int v = 0; v < n_ && prune_twins; ++v)
            for (int w = v + 1; w < n_; ++w) {
                VertexMask both = (VertexMask{1} << v) | (VertexMask{1} << w);
                if ((base_.neighbors(v) & ~both) == (base_.neighbors(w) & ~both))
                    twins_above_[v] |= VertexMask{1} << w;
            }
    }

    std::optional<BreakingPair> run(int added) {
        added_ = added;
        found_.reset();
        if (added == 0) {
            host(base_);
        } else {
            b0_ = b1_ = 0;
            joined_ = false;
            int top = added == 2 ? 2 * n_ : n_ - 1;
            choose(top);
        }
        return found_;
    }

private:
    // Assigns bit positions from the most significant down, 0 before 1,
    // so complete subsets appear in increasing integer order. Positions
    // are 2n (edge between added vertices), n+v (second added vertex to
    // v), then v (first added vertex to v).
    bool choose(int pos) {
        if (pos < 0)
            return leaf();
        for (int bit = 0; bit <= 1; ++bit) {
            if (pos == 2 * n_ && added_ == 2) {
                joined_ = bit != 0;
            } else if (pos >= n_) {
                int v = pos - n_;
                // Within a twin class the second added vertex's neighbors
                // take the smallest labels.
                if (!bit && (b1_ & twins_above_[v]))
                    continue;
                set(b1_, v, bit);
            } else {
                int v = pos;
                VertexMask same = ((b1_ >> v) & 1U) ? b1_ : ~b1_;
                if (!bit && (b0_ & twins_above_[v] & same))
                    continue;
                set(b0_, v, bit);
            }
            if (choose(pos - 1))
                return true;
        }
        if (pos >= n_ && pos < 2 * n_)
            set(b1_, pos - n_, 0);
        else if (pos < n_)
            set(b0_, pos, 0);
        return false;
    }

    static void set(VertexMask& m, int v, int bit) {
        m = bit ? (m | (VertexMask{1} << v)) : (m & ~(VertexMask{1} << v));
    }

    bool leaf() {
        // An added vertex must lose an edge in the switch, so it needs one.
        if (!b0_ && !(added_ == 2 && joined_))
            return false;
        if (added_ == 2 && !b1_ && !joined_)
            return false;
        Graph h = base_;
        h.add_vertices(added_);
        for (VertexMask m = b0_; m; m &= m - 1)
            h.add_edge(n_, std::countr_zero(m));
        if (added_ == 2) {
            for (VertexMask m = b1_; m; m &= m - 1)
                h.add_edge(n_ + 1, std::countr_zero(m));
            if (joined_)
                h.add_edge(n_, n_ + 1);
        }
        return host(h);
    }

    bool host(const Graph& h) {
        ++stats_.hosts;
        VertexMask old = Graph::full_mask(n_);
        VertexMask fresh = h.vertices() & ~old;
        return for_each_switch(h, [&](const TwoSwitch& s) {
            if ((s.support() & fresh) != fresh)
                return false;
            // A switch that changes no pair inside the member copy leaves it induced.
            if (!inside(old, s.a, s.b) && !inside(old, s.c, s.d) && !inside(old, s.a, s.d) &&
                !inside(old, s.b, s.c))
                return false;
            ++stats_.switches;
            Graph h_prime = apply_switch(h, s);
            if (!f_.is_free(h_prime))
                return false;
            found_ = BreakingPair{h, h_prime, member_, s, added_};
            return true;
        });
    }

    const ForbiddenSet& f_;
    int member_;
    const Graph& base_;
    int n_;
    BreakingSearchStats& stats_;
    std::array<VertexMask, Graph::kCapacity> twins_above_{};

    int added_ = 0;
    VertexMask b0_ = 0;
    VertexMask b1_ = 0;
    bool joined_ = false;
    std::optional<BreakingPair> found_;
};

}  // namespace

std::optional<BreakingPair> find_breaking_pair(const ForbiddenSet& f, SearchMode mode, BreakingSearchStats* stats,
                                               bool prune_twins) {
    if (f.empty())
        throw std::invalid_argument("breaking-pair search needs a non-empty set");
    std::vector<int> members(f.size());
    std::iota(members.begin(), members.end(), 0);
    for (int i : members)
        if (f[i].order() == 0)
            throw std::invalid_argument("breaking-pair search needs members with at least one vertex");
    std::stable_sort(members.begin(), members.end(), [&](int x, int y) { return f[x].order() < f[y].order(); });

    BreakingSearchStats local;
    BreakingSearchStats& counters = stats ? *stats : local;
    int first = mode == SearchMode::sound ? 0 : 1;
    for (int i : members) {
        if (f[i].order() + 2 > Graph::kCapacity)
            throw CapacityError("member order " + std::to_string(f[i].order()) + " leaves no room for added vertices");
        MemberSearch search(f, i, counters, prune_twins);
        for (int added = first; added <= 2; ++added)
            if (auto hit = search.run(added))
                return hit;
    }
    return std::nullopt;
}

bool is_breaking_pair(const Graph& h, const Graph& h_prime, const ForbiddenSet& f) {
    return degree_sequence(h) == degree_sequence(h_prime) && !f.is_free(h) && f.is_free(h_prime);
}

bool is_breaking_pair(const BreakingPair& p, const ForbiddenSet& f) {
    if (p.member < 0 || p.member >= static_cast<int>(f.size()))
        return false;
    if (!applicable(p.h, p.witness) || !is_isomorphic(apply_switch(p.h, p.witness), p.h_prime))
        return false;
    return is_breaking_pair(p.h, p.h_prime, f) && f.pattern(p.member).induced_in(p.h);
}

}  // namespace dsf
