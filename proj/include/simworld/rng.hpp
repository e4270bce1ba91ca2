#ifndef SIMWORLD_RNG_HPP_
#define SIMWORLD_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>

namespace simworld {

// Seeded generator with explicit uniform/gaussian derivations so streams
// are bit-identical across standard libraries (std::normal_distribution is
// implementation-defined).
class Rng {
public:
    explicit Rng(uint64_t seed = 1) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    double uniform01() { return (eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(eng_() % uint64_t(hi - lo + 1));
    }

    double gaussian(double mean = 0.0, double sigma = 1.0) {
        if (has_spare_) {
            has_spare_ = false;
            return mean + sigma * spare_;
        }
        double u1 = uniform01(), u2 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return mean + sigma * r * std::cos(a);
    }

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace simworld

#endif  // SIMWORLD_RNG_HPP_
