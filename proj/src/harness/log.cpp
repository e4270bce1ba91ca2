#include "harness/log.hpp"

#include <cstdlib>

namespace harness {

int log_verbosity() {
    static const int level = [] {
        const char* env = std::getenv("PPANAV_LOG");
        return env ? std::atoi(env) : 0;
    }();
    return level;
}

}  // namespace harness
