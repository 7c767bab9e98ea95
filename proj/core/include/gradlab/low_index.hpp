#pragma once

#include "gradlab/coset_table.hpp"

namespace gradlab {

struct LowIndexOptions {
    // Keep only normal subgroups.
    bool normal_only = false;
    // Emit every subgroup instead of one representative per conjugacy class
    // (conjugates are the basepoint restandardizations of a representative).
    bool expand_conjugates = false;
    // Backtracking safety valve: ResourceExhausted beyond this many search
    // steps.
    long long max_nodes = 50'000'000;
};

// All subgroups of index <= max_index of the presented group, as coset
// tables, including the whole group at index 1. By default one canonical
// representative per conjugacy class (the lexicographically least
// standardized table in the class); see LowIndexOptions to expand or filter.
// Sorted by (index, table encoding); deterministic.
std::vector<CosetTable> low_index_subgroups(const Presentation& P, long long max_index,
                                            const LowIndexOptions& options = {});

}  // namespace gradlab
