#ifndef PPA_TYPES_HPP_
#define PPA_TYPES_HPP_

#include <cstdint>
#include <vector>

namespace ppa {

// The emulated array is a fixed 256x256 grid of processing elements.
inline constexpr int kSize = 256;
inline constexpr int kWordsPerRow = kSize / 64;
inline constexpr int kPixelCount = kSize * kSize;

struct PixelCoord {
    int row = 0;
    int col = 0;

    bool operator==(const PixelCoord&) const = default;
    bool in_bounds() const {
        return row >= 0 && row < kSize && col >= 0 && col < kSize;
    }
};

struct BoundingBox {
    PixelCoord min;
    PixelCoord max;

    // Midpoint with floor per axis; coordinates are non-negative so plain
    // integer division is a floor.
    PixelCoord centre() const {
        return {(min.row + max.row) / 2, (min.col + max.col) / 2};
    }
    int height() const { return max.row - min.row; }
    int width() const { return max.col - min.col; }
    bool operator==(const BoundingBox&) const = default;
};

enum class Dir { North, South, East, West };

// Flood seeding: either every pixel on the array border, or an explicit
// point list (the load_point+flood idiom).
struct SeedSpec {
    enum class Kind { Border, Points };
    Kind kind = Kind::Border;
    std::vector<PixelCoord> points;

    static SeedSpec border() { return {}; }
    static SeedSpec at(std::vector<PixelCoord> pts) {
        return {Kind::Points, std::move(pts)};
    }
    static SeedSpec at(PixelCoord p) { return {Kind::Points, {p}}; }
};

}  // namespace ppa

#endif  // PPA_TYPES_HPP_
