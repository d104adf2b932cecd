#include "dsf/parallel.hpp"

#include <cstdlib>
#include <string>

namespace dsf {

int default_workers() {
    if (const char* env = std::getenv("DSF_WORKERS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1)
                return n;
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace dsf
