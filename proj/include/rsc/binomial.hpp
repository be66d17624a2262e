#ifndef RSC_BINOMIAL_HPP
#define RSC_BINOMIAL_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

namespace rsc {

// Exact binomial coefficients up to n = 64 (Pascal's triangle, 64-bit).
// C(64,32) < 2^64, so no overflow within this range.
inline std::uint64_t binom(int n, int k) {
    if (n < 0 || n > 64) throw std::invalid_argument("binom: n out of [0,64]");
    if (k < 0 || k > n) return 0;
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> t{};
        for (int i = 0; i <= 64; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    return table[n][k];
}

inline double binom_d(int n, int k) { return static_cast<double>(binom(n, k)); }

}  // namespace rsc

#endif
