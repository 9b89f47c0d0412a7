#pragma once

#include <optional>
#include <vector>

#include "ktq/algebra.hpp"

namespace ktq {

struct CensusOptions {
    bool up_to_iso = true;
    std::optional<long long> limit; // cap on emitted cubes; exceeding flags the result
    int threads = 1;
};

struct CensusResult {
    std::vector<std::vector<Elem>> cubes; // lexicographically sorted raw cubes
    long long count = 0;
    bool complete = true;
};

// Enumerates all Latin cubes of the given size satisfying both nesting
// axioms. Cells are filled along (x,y,z) lines in lexicographic order; an
// axiom instance is checked as soon as all five of its bracket evaluations
// are determined. With up_to_iso only canonical representatives are kept.
CensusResult enumerate_ktq(int n, const CensusOptions& options = {});

} // namespace ktq
