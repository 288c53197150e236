#pragma once

// The desk-scale verification grid: every coprime combination of the given
// p, q, a lists. Defaults match the acceptance run.

#include "catbert/sequences.hpp"

#include <numeric>
#include <vector>

namespace catbert {

inline std::vector<GCParams> parameter_grid(
    const std::vector<long>& ps = {2, 3, 5},
    const std::vector<long>& qs = {1, -1, 2, -2, 3, -3, 7, -7},
    const std::vector<long>& as = {0, 1, 2}) {
    std::vector<GCParams> grid;
    for (long p : ps)
        for (long q : qs) {
            if (q == 0 || std::gcd(p, std::abs(q)) != 1) continue;
            for (long a : as) grid.push_back({p, q, a});
        }
    return grid;
}

}  // namespace catbert
