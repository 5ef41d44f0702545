#include "pathcover/sample.hpp"

#include <cmath>
#include <stdexcept>

#include "pathcover/rng.hpp"

namespace pathcover {

Graph sample_gnp(const SampleParams& params) {
    const long long n = params.n;
    if (n <= 0) throw std::invalid_argument("sample_gnp: n must be positive");
    if (params.c < 0.0 || params.c > static_cast<double>(n))
        throw std::invalid_argument("sample_gnp: c must be in [0, n]");
    if (n > (1LL << 31) - 2) throw std::invalid_argument("sample_gnp: n too large");

    const double p = params.c / static_cast<double>(n);
    std::vector<std::pair<int, int>> edges;
    if (p > 0.0) edges.reserve(static_cast<size_t>(0.5 * params.c * static_cast<double>(n) * 1.05) + 16);

    Rng rng = Rng(params.seed).substream(RngStream::sampling);

    if (p >= 1.0) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(static_cast<int>(n), edges);
    }
    if (p > 0.0) {
        // Walk the slots (0,1), (0,2), ..., (n-2,n-1) jumping over skipped
        // ones; the skip length is geometric with success probability p.
        const double log1mp = std::log1p(-p);
        long long u = 0;
        long long offset = 0; // slot is (u, u + 1 + offset)
        long long row_width = n - 1;
        auto advance = [&](long long steps) {
            offset += steps;
            while (u < n - 1 && offset >= row_width) {
                offset -= row_width;
                ++u;
                --row_width;
            }
        };
        for (;;) {
            double r = rng.next_double();
            advance(static_cast<long long>(std::floor(std::log1p(-r) / log1mp)));
            if (u >= n - 1) break;
            edges.emplace_back(static_cast<int>(u), static_cast<int>(u + 1 + offset));
            advance(1);
            if (u >= n - 1) break;
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

} // namespace pathcover
