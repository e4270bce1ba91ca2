#ifndef PPA_BIT_IMAGE_HPP_
#define PPA_BIT_IMAGE_HPP_

#include <bit>
#include <cstdint>
#include <vector>

#include "ppa/instrument.hpp"
#include "ppa/types.hpp"

namespace ppa {

// One emulated digital register plane: a 256x256 binary image packed as
// four 64-bit words per row so whole-row logic runs word-at-a-time.
// Bit i of word w in a row is column 64*w + i (LSB = leftmost column of
// the word). 256 columns fill the four words exactly, so there are no
// padding bits to keep clean.
class BitImage {
public:
    BitImage() : words_(kSize * kWordsPerRow, 0) { instrument::bit_images().inc(); }
    BitImage(const BitImage& o) : words_(o.words_) { instrument::bit_images().inc(); }
    BitImage(BitImage&& o) noexcept : words_(std::move(o.words_)) {
        instrument::bit_images().inc();
    }
    BitImage& operator=(const BitImage&) = default;
    BitImage& operator=(BitImage&&) noexcept = default;
    ~BitImage() { instrument::bit_images().dec(); }

    static BitImage filled(bool v) {
        BitImage img;
        if (v) img.words_.assign(kSize * kWordsPerRow, ~uint64_t{0});
        return img;
    }

    bool get(int row, int col) const {
        return (words_[row * kWordsPerRow + (col >> 6)] >> (col & 63)) & 1u;
    }
    bool get(PixelCoord p) const { return get(p.row, p.col); }
    void set(int row, int col, bool v = true) {
        uint64_t& w = words_[row * kWordsPerRow + (col >> 6)];
        uint64_t m = uint64_t{1} << (col & 63);
        if (v) w |= m; else w &= ~m;
    }

    const uint64_t* row(int r) const { return words_.data() + r * kWordsPerRow; }
    uint64_t* row(int r) { return words_.data() + r * kWordsPerRow; }

    void clear() { words_.assign(kSize * kWordsPerRow, 0); }

    BitImage& operator&=(const BitImage& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    BitImage& operator|=(const BitImage& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    BitImage& operator^=(const BitImage& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    BitImage& invert() {
        for (auto& w : words_) w = ~w;
        return *this;
    }
    // a &= ~b, the mask-out idiom.
    BitImage& and_not(const BitImage& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    int popcount() const {
        int n = 0;
        for (uint64_t w : words_) n += std::popcount(w);
        return n;
    }
    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }

    bool operator==(const BitImage&) const = default;

private:
    std::vector<uint64_t> words_;
};

}  // namespace ppa

#endif  // PPA_BIT_IMAGE_HPP_
