#pragma once
// Lexicographic enumeration of fixed-size index subsets; the callback returns
// false to stop early.

#include <vector>

namespace lrss {

template <typename Fn>
inline void for_each_subset(int n, int t, Fn&& fn) {
    if (t > n || t < 0) return;
    std::vector<int> pick(t);
    for (int i = 0; i < t; ++i) pick[i] = i;
    for (;;) {
        if (!fn(const_cast<const std::vector<int>&>(pick))) return;
        int i = t - 1;
        while (i >= 0 && pick[i] == n - t + i) --i;
        if (i < 0) return;
        ++pick[i];
        for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace lrss
