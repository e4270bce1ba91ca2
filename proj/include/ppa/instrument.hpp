#ifndef PPA_INSTRUMENT_HPP_
#define PPA_INSTRUMENT_HPP_

#include <atomic>

namespace ppa::instrument {

// Live-object counters for the two register-plane types. The real chip has
// 13 digital and 7 analogue registers per pixel; tests assert that the
// pipeline never holds more planes than the hardware could.
struct Counter {
    std::atomic<int> live{0};
    std::atomic<int> peak{0};

    void inc() {
        int cur = live.fetch_add(1, std::memory_order_relaxed) + 1;
        int prev = peak.load(std::memory_order_relaxed);
        while (cur > prev &&
               !peak.compare_exchange_weak(prev, cur, std::memory_order_relaxed)) {
        }
    }
    void dec() { live.fetch_sub(1, std::memory_order_relaxed); }
    void reset_peak() { peak.store(live.load(std::memory_order_relaxed),
                                   std::memory_order_relaxed); }
};

Counter& bit_images();
Counter& grey_images();

}  // namespace ppa::instrument

#endif  // PPA_INSTRUMENT_HPP_
