#include "hg/config.hpp"

#include <thread>

namespace hg {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace hg
