#ifndef RSC_LOGSUMEXP_HPP
#define RSC_LOGSUMEXP_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace rsc {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// log(sum_i exp(args[i])), stable against overflow.
inline double log_sum_exp(const std::vector<double>& args) {
    if (args.empty()) return neg_inf;
    double max_arg = *std::max_element(args.begin(), args.end());
    if (!std::isfinite(max_arg)) return max_arg;
    double sum = 0.0;
    for (double a : args) sum += std::exp(a - max_arg);
    return max_arg + std::log(sum);
}

// count * log(p) with the 0 * log 0 = 0 convention.
inline double xlogp(double count, double p) {
    if (count == 0.0) return 0.0;
    if (p <= 0.0) return neg_inf;
    return count * std::log(p);
}

}  // namespace rsc

#endif
