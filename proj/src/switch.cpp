#include "dsf/switch.hpp"

#include "dsf/canon.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace dsf {

bool applicable(const Graph& g, const TwoSwitch& s) noexcept {
    int n = g.order();
    for (int v : s.as_array())
        if (v < 0 || v >= n)
            return false;
    if (std::popcount(s.support()) != 4)
        return false;
    return g.adjacent(s.a, s.b) && g.adjacent(s.c, s.d) && !g.adjacent(s.a, s.d) && !g.adjacent(s.b, s.c);
}

Graph apply_switch(const Graph& g, const TwoSwitch& s) {
    if (!applicable(g, s))
        throw SwitchError("2-switch (" + std::to_string(s.a) + "," + std::to_string(s.b) + "," +
                          std::to_string(s.c) + "," + std::to_string(s.d) + ") is not applicable");
    Graph h = g;
    h.remove_edge(s.a, s.b);
    h.remove_edge(s.c, s.d);
    h.add_edge(s.a, s.d);
    h.add_edge(s.b, s.c);
    return h;
}

std::vector<TwoSwitch> enumerate_switches(const Graph& g) {
    std::vector<TwoSwitch> out;
    for_each_switch(g, [&](const TwoSwitch& s) {
        out.push_back(s);
        return false;
    });
    return out;
}

bool is_graphical(const DegreeSequence& d) {
    const auto& deg = d.degrees();
    long n = static_cast<long>(deg.size());
    long total = 0;
    for (int x : deg) {
        if (x < 0 || x > n - 1)
            return false;
        total += x;
    }
    if (total % 2 != 0)
        return false;
    long prefix = 0;
    for (long k = 1; k <= n; ++k) {
        prefix += deg[k - 1];
        long rest = 0;
        for (long i = k; i < n; ++i)
            rest += std::min<long>(deg[i], k);
        if (prefix > k * (k - 1) + rest)
            return false;
    }
    return true;
}

Graph some_realization(const DegreeSequence& d) {
    if (!is_graphical(d))
        throw std::invalid_argument("degree sequence " + d.to_string() + " is not graphical");
    int n = static_cast<int>(d.size());
    Graph g(n);
    std::vector<int> remaining = d.degrees();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    while (n > 0) {
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return remaining[x] > remaining[y]; });
        int v = order[0];
        int need = remaining[v];
        if (need == 0)
            break;
        remaining[v] = 0;
        for (int i = 1; i <= need; ++i) {
            int u = order[i];
            g.add_edge(v, u);
            --remaining[u];
        }
    }
    return g;
}

std::vector<Graph> all_realizations(const DegreeSequence& d) {
    if (static_cast<int>(d.size()) > kMaxRealizationOrder)
        throw CapacityError("realization closure is limited to " + std::to_string(kMaxRealizationOrder) +
                            " vertices");
    Graph start = some_realization(d);
    std::unordered_set<Graph, GraphHash> seen;
    std::deque<Graph> queue;
    Graph root = certificate(start).graph();
    seen.insert(root);
    queue.push_back(root);
    while (!queue.empty()) {
        Graph g = queue.front();
        queue.pop_front();
        for_each_switch(g, [&](const TwoSwitch& s) {
            Graph next = certificate(apply_switch(g, s)).graph();
            if (seen.insert(next).second)
                queue.push_back(next);
            return false;
        });
    }
    std::vector<Graph> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dsf
