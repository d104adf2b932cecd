#pragma once

#include "dsf/graph.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

namespace dsf {

/// Deletes edges ab and cd, adds edges ad and bc.
///
/// Normalized form: a is the smallest of the four vertices and b > a is
/// its partner in the deleted edge ab; (c, d) may appear in either order,
/// which distinguishes the two switches available on a pair of edges.
struct TwoSwitch {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    [[nodiscard]] VertexMask support() const noexcept {
        return (VertexMask{1} << a) | (VertexMask{1} << b) | (VertexMask{1} << c) | (VertexMask{1} << d);
    }
    [[nodiscard]] std::array<int, 4> as_array() const noexcept { return {a, b, c, d}; }
    friend auto operator<=>(const TwoSwitch&, const TwoSwitch&) = default;
};

class SwitchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool applicable(const Graph& g, const TwoSwitch& s) noexcept;

/// Throws SwitchError when `s` is not applicable to `g`.
Graph apply_switch(const Graph& g, const TwoSwitch& s);

/// Calls f(TwoSwitch) for every applicable normalized switch in
/// lexicographic (a, b, c, d) order. Stops early when f returns true;
/// returns whether it did.
template <typename F>
bool for_each_switch(const Graph& g, F&& f) {
    int n = g.order();
    for (int a = 0; a < n; ++a) {
        VertexMask above_a = ~Graph::full_mask(a + 1) & g.vertices();
        for (VertexMask bs = g.neighbors(a) & above_a; bs; bs &= bs - 1) {
            int b = std::countr_zero(bs);
            VertexMask cs = above_a & ~g.neighbors(b) & ~(VertexMask{1} << b);
            for (; cs; cs &= cs - 1) {
                int c = std::countr_zero(cs);
                VertexMask ds = g.neighbors(c) & above_a & ~g.neighbors(a) & ~(VertexMask{1} << b);
                for (; ds; ds &= ds - 1) {
                    if (f(TwoSwitch{a, b, c, std::countr_zero(ds)}))
                        return true;
                }
            }
        }
    }
    return false;
}

std::vector<TwoSwitch> enumerate_switches(const Graph& g);

/// Erdős–Gallai test.
bool is_graphical(const DegreeSequence& d);

/// Havel–Hakimi construction; vertex i receives the i-th degree.
/// Throws std::invalid_argument for non-graphical input.
Graph some_realization(const DegreeSequence& d);

/// Longest sequence accepted by all_realizations.
inline constexpr int kMaxRealizationOrder = 20;

/// Every realization up to isomorphism, as canonical forms in ascending
/// order, by breadth-first closure of one realization under 2-switches.
/// Throws std::invalid_argument for non-graphical input and CapacityError
/// past kMaxRealizationOrder.
std::vector<Graph> all_realizations(const DegreeSequence& d);

}  // namespace dsf
