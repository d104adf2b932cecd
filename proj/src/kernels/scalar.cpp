#include "dsf/kernels.hpp"

#include <bit>

namespace dsf::kernels {

namespace {

void masked_popcounts_scalar(const RowBlock& rows, VertexMask mask, ByteBlock& out) {
    for (int v = 0; v < Graph::kCapacity; ++v)
        out[v] = static_cast<std::uint8_t>(std::popcount(rows[v] & mask));
}

VertexMask window_mask_scalar(const ByteBlock& values, int n, int lo, int hi) {
    VertexMask out = 0;
    for (int v = 0; v < n; ++v)
        if (values[v] >= lo && values[v] <= hi)
            out |= VertexMask{1} << v;
    return out;
}

}  // namespace

const Table& scalar() {
    static const Table table{"scalar", &masked_popcounts_scalar, &window_mask_scalar};
    return table;
}

}  // namespace dsf::kernels
