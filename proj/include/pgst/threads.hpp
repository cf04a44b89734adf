#pragma once

#include <cstdlib>
#include <string>
#include <thread>

namespace pgst {

// Worker count for parallel scans; PGST_THREADS overrides the hardware value.
inline int thread_count() {
    if (const char* env = std::getenv("PGST_THREADS")) {
        try {
            int k = std::stoi(env);
            if (k >= 1) return k;
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace pgst
