#ifndef PPA_GREY_IMAGE_HPP_
#define PPA_GREY_IMAGE_HPP_

#include <cstdint>
#include <vector>

#include "ppa/instrument.hpp"
#include "ppa/types.hpp"

namespace ppa {

// One emulated analogue register plane: 256x256 intensities in [0,255].
// Row 0 is the top of the image.
class GreyImage {
public:
    GreyImage() : pixels_(kPixelCount, 0) { instrument::grey_images().inc(); }
    explicit GreyImage(uint8_t fill) : pixels_(kPixelCount, fill) {
        instrument::grey_images().inc();
    }
    GreyImage(const GreyImage& o) : pixels_(o.pixels_) {
        instrument::grey_images().inc();
    }
    GreyImage(GreyImage&& o) noexcept : pixels_(std::move(o.pixels_)) {
        instrument::grey_images().inc();
    }
    GreyImage& operator=(const GreyImage&) = default;
    GreyImage& operator=(GreyImage&&) noexcept = default;
    ~GreyImage() { instrument::grey_images().dec(); }

    uint8_t at(int row, int col) const { return pixels_[row * kSize + col]; }
    uint8_t& at(int row, int col) { return pixels_[row * kSize + col]; }
    uint8_t at(PixelCoord p) const { return at(p.row, p.col); }

    const uint8_t* data() const { return pixels_.data(); }
    uint8_t* data() { return pixels_.data(); }

    void fill(uint8_t v) { pixels_.assign(kPixelCount, v); }

    bool operator==(const GreyImage&) const = default;

private:
    std::vector<uint8_t> pixels_;
};

}  // namespace ppa

#endif  // PPA_GREY_IMAGE_HPP_
