#pragma once

#include <vector>

#include "ctforge/root_data.hpp"

namespace ctforge::testing {

/// Every simply laced Dynkin diagram of rank <= max_rank.
inline std::vector<DynkinDiagram> all_diagrams(int max_rank = 8) {
    std::vector<DynkinDiagram> out;
    for (int n = 1; n <= max_rank; ++n) out.emplace_back(Family::A, n);
    for (int n = 4; n <= max_rank; ++n) out.emplace_back(Family::D, n);
    for (int n = 6; n <= std::min(max_rank, 8); ++n) out.emplace_back(Family::E, n);
    return out;
}

/// Brute-force path count i -> j by depth-first search over the arrow list.
inline Int count_paths_dfs(const QuiverOrientation& q, int i, int j) {
    if (i == j) return 1;
    Int total = 0;
    for (const auto& a : q.arrows())
        if (a.source == i) total += count_paths_dfs(q, a.target, j);
    return total;
}

} // namespace ctforge::testing
