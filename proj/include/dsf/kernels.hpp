#pragma once

// Data-parallel row kernels over a full 32-row adjacency block.
//
// Each kernel has a scalar reference and, on x86-64, an AVX2 variant.
// The active table is chosen once at startup from the CPU features; the
// DSF_KERNELS environment variable ("scalar", "avx2", "auto") overrides it.

#include "dsf/graph.hpp"

#include <array>
#include <cstdint>
#include <string_view>

namespace dsf::kernels {

using RowBlock = std::array<VertexMask, Graph::kCapacity>;
using ByteBlock = std::array<std::uint8_t, Graph::kCapacity>;

struct Table {
    std::string_view name;
    /// out[v] = popcount(rows[v] & mask) for all 32 rows.
    void (*masked_popcounts)(const RowBlock& rows, VertexMask mask, ByteBlock& out);
    /// Bit v set iff lo <= values[v] <= hi, restricted to v < n.
    VertexMask (*window_mask)(const ByteBlock& values, int n, int lo, int hi);
};

const Table& scalar();
/// Null when the CPU or build lacks AVX2.
const Table* avx2();
const Table& active();

inline void degrees(const Graph& g, ByteBlock& out) {
    active().masked_popcounts(g.row_array(), g.vertices(), out);
}

}  // namespace dsf::kernels
