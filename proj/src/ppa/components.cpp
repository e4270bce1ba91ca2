#include <bit>
#include <numeric>
#include <vector>

#include "ppa/ops.hpp"

namespace ppa {

namespace {

struct Run {
    int start;  // first column
    int end;    // one past last column
    int label;
};

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void unite(std::vector<int>& parent, int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[b] = a;
}

void scan_runs(const uint64_t* words, std::vector<Run>& out) {
    out.clear();
    for (int w = 0; w < kWordsPerRow; ++w) {
        uint64_t cur = words[w];
        while (cur) {
            int s = std::countr_zero(cur);
            uint64_t tail = cur >> s;
            int len = std::countr_zero(~tail);
            int start = w * 64 + s;
            int end = start + len;
            // extend a run that continues from the previous word
            if (!out.empty() && out.back().end == start) {
                out.back().end = end;
            } else {
                out.push_back({start, end, -1});
            }
            if (len == 64 - s) {
                cur = 0;
            } else {
                cur &= ~uint64_t{0} << (s + len);
            }
        }
    }
}

}  // namespace

// Run-based two-pass labeling with union-find over vertically adjacent runs.
int count_components(const BitImage& img) {
    std::vector<int> parent;
    std::vector<Run> prev, cur;
    for (int r = 0; r < kSize; ++r) {
        scan_runs(img.row(r), cur);
        for (Run& run : cur) {
            run.label = static_cast<int>(parent.size());
            parent.push_back(run.label);
        }
        // 4-connectivity: column intervals intersect
        size_t pi = 0;
        for (Run& run : cur) {
            while (pi < prev.size() && prev[pi].end <= run.start) ++pi;
            for (size_t j = pi; j < prev.size() && prev[j].start < run.end; ++j) {
                unite(parent, prev[j].label, run.label);
            }
        }
        prev.swap(cur);
    }
    int count = 0;
    for (size_t i = 0; i < parent.size(); ++i) {
        if (find_root(parent, static_cast<int>(i)) == static_cast<int>(i)) ++count;
    }
    return count;
}

}  // namespace ppa
