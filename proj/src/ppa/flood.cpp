#include <cstring>
#include <deque>

#include "ppa/ops.hpp"

namespace ppa {

namespace {

// Helpers treating a 4-word row as a 256-bit lane of columns.

int find_next_set(const uint64_t* w, int from) {
    if (from >= kSize) return kSize;
    int wi = from >> 6;
    uint64_t cur = w[wi] & (~uint64_t{0} << (from & 63));
    while (true) {
        if (cur) return wi * 64 + std::countr_zero(cur);
        if (++wi == kWordsPerRow) return kSize;
        cur = w[wi];
    }
}

int find_next_clear(const uint64_t* w, int from) {
    if (from >= kSize) return kSize;
    int wi = from >> 6;
    uint64_t cur = ~w[wi] & (~uint64_t{0} << (from & 63));
    while (true) {
        if (cur) return wi * 64 + std::countr_zero(cur);
        if (++wi == kWordsPerRow) return kSize;
        cur = ~w[wi];
    }
}

uint64_t range_mask(int word_index, int s, int e) {
    int lo = word_index * 64, hi = lo + 64;
    int a = std::max(s, lo), b = std::min(e, hi);
    if (a >= b) return 0;
    uint64_t m = ~uint64_t{0} << (a - lo);
    if (b - lo < 64) m &= (uint64_t{1} << (b - lo)) - 1;
    return m;
}

bool any_in_range(const uint64_t* w, int s, int e) {
    for (int i = s >> 6; i <= (e - 1) >> 6; ++i) {
        if (w[i] & range_mask(i, s, e)) return true;
    }
    return false;
}

void set_range(uint64_t* w, int s, int e) {
    for (int i = s >> 6; i <= (e - 1) >> 6; ++i) w[i] |= range_mask(i, s, e);
}

// Horizontal step: every mask-run containing a reached pixel becomes fully
// reached. One call reaches the row-local fixpoint.
bool fill_runs(uint64_t* row, const uint64_t* mask) {
    bool changed = false;
    int pos = 0;
    while (pos < kSize) {
        int s = find_next_set(mask, pos);
        if (s >= kSize) break;
        int e = find_next_clear(mask, s);
        if (any_in_range(row, s, e)) {
            for (int i = s >> 6; i <= (e - 1) >> 6; ++i) {
                uint64_t m = range_mask(i, s, e);
                if ((row[i] & m) != m) {
                    row[i] |= m;
                    changed = true;
                }
            }
        }
        pos = e;
    }
    return changed;
}

// One raster (top-down) or anti-raster (bottom-up) propagation sweep.
bool sweep(BitImage& res, const BitImage& mask, bool top_down) {
    bool changed = false;
    uint64_t cand[kWordsPerRow];
    const int begin = top_down ? 0 : kSize - 1;
    const int end = top_down ? kSize : -1;
    const int step = top_down ? 1 : -1;
    for (int r = begin; r != end; r += step) {
        const uint64_t* mrow = mask.row(r);
        uint64_t* cur = res.row(r);
        std::memcpy(cand, cur, sizeof(cand));
        int prev = r - step;
        if (prev >= 0 && prev < kSize) {
            const uint64_t* prow = res.row(prev);
            for (int i = 0; i < kWordsPerRow; ++i) cand[i] |= prow[i];
        }
        for (int i = 0; i < kWordsPerRow; ++i) cand[i] &= mrow[i];
        fill_runs(cand, mrow);
        for (int i = 0; i < kWordsPerRow; ++i) {
            if (cand[i] != cur[i]) {
                cur[i] = cand[i];
                changed = true;
            }
        }
    }
    return changed;
}

// Queue fallback for masks where alternating sweeps converge slowly
// (long serpentine corridors).
void worklist_fill(BitImage& res, const BitImage& mask) {
    std::deque<int> queue;
    bool dirty[kSize];
    for (int r = 0; r < kSize; ++r) {
        queue.push_back(r);
        dirty[r] = true;
    }
    uint64_t cand[kWordsPerRow];
    while (!queue.empty()) {
        int r = queue.front();
        queue.pop_front();
        dirty[r] = false;
        const uint64_t* mrow = mask.row(r);
        uint64_t* cur = res.row(r);
        std::memcpy(cand, cur, sizeof(cand));
        if (r > 0) {
            const uint64_t* up = res.row(r - 1);
            for (int i = 0; i < kWordsPerRow; ++i) cand[i] |= up[i];
        }
        if (r + 1 < kSize) {
            const uint64_t* dn = res.row(r + 1);
            for (int i = 0; i < kWordsPerRow; ++i) cand[i] |= dn[i];
        }
        for (int i = 0; i < kWordsPerRow; ++i) cand[i] &= mrow[i];
        fill_runs(cand, mrow);
        bool changed = false;
        for (int i = 0; i < kWordsPerRow; ++i) {
            if (cand[i] != cur[i]) {
                cur[i] = cand[i];
                changed = true;
            }
        }
        if (changed) {
            for (int n : {r - 1, r + 1}) {
                if (n >= 0 && n < kSize && !dirty[n]) {
                    dirty[n] = true;
                    queue.push_back(n);
                }
            }
        }
    }
}

constexpr int kSweepPairLimit = 4;

}  // namespace

BitImage flood(const BitImage& mask, const SeedSpec& seeds) {
    BitImage res;
    if (seeds.kind == SeedSpec::Kind::Border) {
        uint64_t* top = res.row(0);
        uint64_t* bottom = res.row(kSize - 1);
        for (int i = 0; i < kWordsPerRow; ++i) top[i] = bottom[i] = ~uint64_t{0};
        for (int r = 1; r < kSize - 1; ++r) {
            uint64_t* row = res.row(r);
            row[0] |= 1u;
            row[kWordsPerRow - 1] |= uint64_t{1} << 63;
        }
    } else {
        for (const PixelCoord& p : seeds.points) res.set(p.row, p.col);
    }
    res &= mask;
    if (!res.any()) return res;

    for (int pair = 0; pair < kSweepPairLimit; ++pair) {
        bool a = sweep(res, mask, true);
        bool b = sweep(res, mask, false);
        if (!a && !b) return res;
    }
    worklist_fill(res, mask);
    return res;
}

}  // namespace ppa
