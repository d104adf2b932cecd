#include "dsf/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace dsf::kernels {

namespace {

const Table& select() {
    const char* env = std::getenv("DSF_KERNELS");
    std::string_view choice = env ? env : "auto";
    if (choice == "scalar")
        return scalar();
    if (const Table* wide = avx2())
        return *wide;
    return scalar();
}

}  // namespace

const Table& active() {
    static const Table& table = select();
    return table;
}

}  // namespace dsf::kernels
