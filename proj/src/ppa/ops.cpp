#include "ppa/ops.hpp"

#include <algorithm>
#include <cstring>

namespace ppa {

BitImage threshold(const GreyImage& img, int level) {
    BitImage out;
    const uint8_t* px = img.data();
    for (int r = 0; r < kSize; ++r) {
        uint64_t* words = out.row(r);
        for (int w = 0; w < kWordsPerRow; ++w) {
            uint64_t bits = 0;
            const uint8_t* base = px + r * kSize + w * 64;
            for (int i = 0; i < 64; ++i) {
                bits |= uint64_t{base[i] >= level} << i;
            }
            words[w] = bits;
        }
    }
    return out;
}

BitImage bit_not(const BitImage& a) {
    BitImage out = a;
    out.invert();
    return out;
}

BitImage bit_and(const BitImage& a, const BitImage& b) {
    BitImage out = a;
    out &= b;
    return out;
}

BitImage bit_or(const BitImage& a, const BitImage& b) {
    BitImage out = a;
    out |= b;
    return out;
}

BitImage bit_xor(const BitImage& a, const BitImage& b) {
    BitImage out = a;
    out ^= b;
    return out;
}

namespace {

// 256-bit lane shift toward higher columns by k (0 < k < 256).
void row_shift_up(const uint64_t* in, uint64_t* out, int k) {
    const int ws = k >> 6;
    const int bs = k & 63;
    for (int i = kWordsPerRow - 1; i >= 0; --i) {
        uint64_t v = 0;
        int src = i - ws;
        if (src >= 0) {
            v = in[src] << bs;
            if (bs && src - 1 >= 0) v |= in[src - 1] >> (64 - bs);
        }
        out[i] = v;
    }
}

// 256-bit lane shift toward lower columns by k (0 < k < 256).
void row_shift_down(const uint64_t* in, uint64_t* out, int k) {
    const int ws = k >> 6;
    const int bs = k & 63;
    for (int i = 0; i < kWordsPerRow; ++i) {
        uint64_t v = 0;
        int src = i + ws;
        if (src < kWordsPerRow) {
            v = in[src] >> bs;
            if (bs && src + 1 < kWordsPerRow) v |= in[src + 1] << (64 - bs);
        }
        out[i] = v;
    }
}

}  // namespace

BitImage shift(const BitImage& img, Dir dir, int steps) {
    BitImage out;
    if (steps == 0) return img;
    if (steps >= kSize) return out;
    switch (dir) {
        case Dir::North:
            for (int r = 0; r + steps < kSize; ++r)
                std::memcpy(out.row(r), img.row(r + steps),
                            kWordsPerRow * sizeof(uint64_t));
            break;
        case Dir::South:
            for (int r = kSize - 1; r - steps >= 0; --r)
                std::memcpy(out.row(r), img.row(r - steps),
                            kWordsPerRow * sizeof(uint64_t));
            break;
        case Dir::East:
            for (int r = 0; r < kSize; ++r) row_shift_up(img.row(r), out.row(r), steps);
            break;
        case Dir::West:
            for (int r = 0; r < kSize; ++r) row_shift_down(img.row(r), out.row(r), steps);
            break;
    }
    return out;
}

std::optional<PixelCoord> scan_event(const BitImage& img) {
    for (int r = 0; r < kSize; ++r) {
        const uint64_t* words = img.row(r);
        for (int w = 0; w < kWordsPerRow; ++w) {
            if (words[w]) {
                return PixelCoord{r, w * 64 + std::countr_zero(words[w])};
            }
        }
    }
    return std::nullopt;
}

std::optional<BoundingBox> scan_boundingbox(const BitImage& img) {
    int min_row = -1, max_row = -1;
    uint64_t acc[kWordsPerRow] = {0, 0, 0, 0};
    for (int r = 0; r < kSize; ++r) {
        const uint64_t* words = img.row(r);
        uint64_t any = words[0] | words[1] | words[2] | words[3];
        if (any) {
            if (min_row < 0) min_row = r;
            max_row = r;
            for (int w = 0; w < kWordsPerRow; ++w) acc[w] |= words[w];
        }
    }
    if (min_row < 0) return std::nullopt;
    int min_col = 0, max_col = 0;
    for (int w = 0; w < kWordsPerRow; ++w) {
        if (acc[w]) {
            min_col = w * 64 + std::countr_zero(acc[w]);
            break;
        }
    }
    for (int w = kWordsPerRow - 1; w >= 0; --w) {
        if (acc[w]) {
            max_col = w * 64 + 63 - std::countl_zero(acc[w]);
            break;
        }
    }
    return BoundingBox{{min_row, min_col}, {max_row, max_col}};
}

BitImage load_point(PixelCoord p) {
    BitImage out;
    out.set(p.row, p.col);
    return out;
}

bool global_or(const BitImage& img) { return img.any(); }

}  // namespace ppa
