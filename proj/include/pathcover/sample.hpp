#pragma once

#include <cstdint>

#include "pathcover/graph.hpp"

namespace pathcover {

// Parameters of the binomial random graph G(n, p) with p = c/n.
struct SampleParams {
    long long n = 0;
    double c = 0.0;
    uint64_t seed = 0;
};

// Draws G(n, c/n) with every one of the C(n,2) edge slots retained
// independently with probability c/n. Identical (n, c, seed) produce an
// identical graph bit-for-bit. Runs in O(n + m) via geometric skips over
// the lexicographically ordered edge slots.
// Throws std::invalid_argument when n = 0, c < 0 or c > n.
Graph sample_gnp(const SampleParams& params);

} // namespace pathcover
