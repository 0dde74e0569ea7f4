#pragma once

// The worked reduction example: a partition with three mark rows (k=4, i=3,
// j=1), its image under the reduction with p=8, the seven special
// intermediates, and a second dilation-side example.

#include <vector>

#include "gg/marking.hpp"

namespace golden {

inline gg::IdentityParams params() { return {4, 3, 1}; }

inline gg::Partition lambda51() {
    return {38, 38, 36, 34, 34, 30, 28, 28, 24, 24, 22, 20, 20, 16, 16, 14, 12, 12, 10, 8, 6, 4, 4, 2, 1};
}

inline gg::Partition mu52() {
    return {38, 36, 36, 34, 32, 28, 28, 28, 24, 22, 22, 20, 18, 16, 14, 14, 12, 10, 10, 8, 5, 4, 4, 2, 1};
}

// rows 1..3 of the second dilation-side example
inline gg::Partition mu53() {
    return {1, 4, 8, 12, 16, 19, 22, 28, 32, 36, 2, 6, 10, 14, 20, 24, 28, 34, 38, 4, 12, 16, 22, 28, 36};
}

// lambda^1 .. lambda^7 as displayed: marking rows 1..3 and the overlined value
struct Display {
    std::vector<int> row1, row2, row3;
    int overlined = 0;

    gg::SpecialPartition special() const {
        std::vector<int> all(row1);
        all.insert(all.end(), row2.begin(), row2.end());
        all.insert(all.end(), row3.begin(), row3.end());
        gg::Partition p(all);
        return overlined ? gg::SpecialPartition::with_overline(p, overlined) : gg::SpecialPartition(p);
    }
};

inline std::vector<Display> displays() {
    return {
        {{37, 34, 28, 24, 20, 16, 12, 8, 4, 1}, {38, 34, 28, 24, 20, 14, 10, 6, 2}, {36, 30, 22, 16, 12, 4}, 0},
        {{36, 33, 28, 24, 20, 16, 12, 8, 4, 1}, {38, 34, 28, 24, 20, 14, 10, 6, 2}, {36, 30, 22, 16, 12, 4}, 0},
        {{36, 32, 28, 24, 20, 16, 12, 8, 4, 1}, {38, 34, 28, 24, 20, 14, 10, 6, 2}, {36, 29, 22, 16, 12, 4}, 0},
        {{36, 32, 28, 24, 20, 16, 12, 8, 4, 1}, {38, 34, 28, 23, 20, 14, 10, 6, 2}, {36, 28, 22, 16, 12, 4}, 23},
        {{36, 32, 28, 24, 20, 16, 12, 8, 4, 1}, {38, 34, 28, 22, 19, 14, 10, 6, 2}, {36, 28, 22, 16, 12, 4}, 19},
        {{36, 32, 28, 24, 20, 16, 12, 8, 4, 1}, {38, 34, 28, 22, 18, 14, 10, 6, 2}, {36, 28, 22, 15, 12, 4}, 15},
        {{36, 32, 28, 24, 20, 16, 12, 8, 4, 1}, {38, 34, 28, 22, 18, 14, 10, 6, 2}, {36, 28, 22, 14, 11, 4}, 11},
    };
}

}  // namespace golden
