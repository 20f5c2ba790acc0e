#include "qclone/parallel.hpp"

#include <cstdlib>

namespace qclone {

int thread_count() {
    if (const char* env = std::getenv("QCLONE_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace qclone
