#ifndef RSC_DETAIL_COMBI_HPP
#define RSC_DETAIL_COMBI_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "rsc/binomial.hpp"
#include "rsc/simplex.hpp"

namespace rsc::detail {

inline bool mask_in(const std::vector<std::uint64_t>& sorted, std::uint64_t m) {
    return std::binary_search(sorted.begin(), sorted.end(), m);
}

// All k-vertex masks over {0..n-1} in lexicographic tuple order.
template <typename F>
void for_each_combination(int n, int k, F&& fn) {
    if (k > n || k <= 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t m = 0;
        for (int v : idx) m |= std::uint64_t{1} << v;
        fn(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline bool boundary_present(const std::vector<std::uint64_t>& prev_sorted, std::uint64_t m) {
    bool ok = true;
    for_each_facet(m, [&](std::uint64_t face) { ok = ok && mask_in(prev_sorted, face); });
    return ok;
}

// Candidate d-simplices whose full (d-1)-boundary lies in prev_sorted,
// in lexicographic order. Sparse complexes use coface extension; dense
// ones scan all C(n,d+1) tuples.
inline std::vector<std::uint64_t> candidate_simplices(const std::vector<std::uint64_t>& prev_sorted,
                                                      int d, int n) {
    std::vector<std::uint64_t> cands;
    double total = binom_d(n, d);
    double density = total > 0 ? static_cast<double>(prev_sorted.size()) / total : 0.0;
    if (density >= 0.1) {
        for_each_combination(n, d + 1, [&](std::uint64_t m) {
            if (boundary_present(prev_sorted, m)) cands.push_back(m);
        });
    } else {
        // Each candidate contains exactly one facet missing its top vertex,
        // so extending beyond the maximum vertex enumerates without duplicates.
        for (std::uint64_t m : prev_sorted) {
            int top = 63 - std::countl_zero(m);
            for (int v = top + 1; v < n; ++v) {
                std::uint64_t c = m | (std::uint64_t{1} << v);
                if (boundary_present(prev_sorted, c)) cands.push_back(c);
            }
        }
        std::sort(cands.begin(), cands.end(), lex_less);
    }
    return cands;
}

}  // namespace rsc::detail

#endif
