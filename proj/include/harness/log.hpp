#ifndef HARNESS_LOG_HPP_
#define HARNESS_LOG_HPP_

#include <cstdio>

namespace harness {

// Verbosity from the PPANAV_LOG environment variable (0 = quiet,
// 1 = info, 2 = debug). Read once.
int log_verbosity();

}  // namespace harness

#define LOG_INFO(...)                          \
    do {                                       \
        if (harness::log_verbosity() >= 1) {   \
            std::fprintf(stderr, __VA_ARGS__); \
            std::fprintf(stderr, "\n");        \
        }                                      \
    } while (0)

#define LOG_DEBUG(...)                         \
    do {                                       \
        if (harness::log_verbosity() >= 2) {   \
            std::fprintf(stderr, __VA_ARGS__); \
            std::fprintf(stderr, "\n");        \
        }                                      \
    } while (0)

#endif  // HARNESS_LOG_HPP_
