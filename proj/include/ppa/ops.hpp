#ifndef PPA_OPS_HPP_
#define PPA_OPS_HPP_

#include <optional>

#include "ppa/bit_image.hpp"
#include "ppa/grey_image.hpp"
#include "ppa/types.hpp"

// Whole-plane parallel operations of the emulated processor array. All are
// pure functions of their inputs.
namespace ppa {

// out[p] = 1 iff img[p] >= level ("white" = 1). level in [0,255].
BitImage threshold(const GreyImage& img, int level);

BitImage bit_not(const BitImage& a);
BitImage bit_and(const BitImage& a, const BitImage& b);
BitImage bit_or(const BitImage& a, const BitImage& b);
BitImage bit_xor(const BitImage& a, const BitImage& b);

// Translate content by `steps` pixels (north = toward row 0). Vacated
// rows/columns are zero; content shifted past the border is discarded.
BitImage shift(const BitImage& img, Dir dir, int steps);

// Region fill: every mask=1 pixel reachable from a seed pixel (itself
// mask=1) through 4-connected mask=1 paths. Border seeds are all array
// edge pixels. The result is always a subset of the mask.
BitImage flood(const BitImage& mask, const SeedSpec& seeds);

// Number of 4-connected components of 1-pixels.
int count_components(const BitImage& img);

// First 1-pixel in row-major order (top-to-bottom, left-to-right).
std::optional<PixelCoord> scan_event(const BitImage& img);

// Tight bounding box of all 1-pixels; nullopt when the plane is empty.
std::optional<BoundingBox> scan_boundingbox(const BitImage& img);

// Image with exactly one 1-pixel at p.
BitImage load_point(PixelCoord p);

// True iff any pixel is 1.
bool global_or(const BitImage& img);

}  // namespace ppa

#endif  // PPA_OPS_HPP_
