#ifndef RSC_STATS_HPP
#define RSC_STATS_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rsc {

// Regularized lower incomplete gamma P(a,x), series + continued fraction.
inline double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    double gln = std::lgamma(a);
    if (x < a + 1.0) {
        // series expansion
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
        }
        return sum * std::exp(-x + a * std::log(x) - gln);
    }
    // continued fraction for Q, then P = 1 - Q
    double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    double q = std::exp(-x + a * std::log(x) - gln) * h;
    return 1.0 - q;
}

inline double gamma_q(double a, double x) { return 1.0 - gamma_p(a, x); }

// Upper-tail p-value of a chi-square statistic with `dof` degrees of freedom.
inline double chi_square_pvalue(double statistic, double dof) {
    return gamma_q(dof / 2.0, statistic / 2.0);
}

// Pearson statistic of observed counts against expected probabilities.
// Cells with zero expected probability must have zero observations.
inline double pearson_statistic(const std::vector<long long>& observed,
                                const std::vector<double>& expected_probs, long long total) {
    if (observed.size() != expected_probs.size())
        throw std::invalid_argument("pearson_statistic: size mismatch");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double e = expected_probs[i] * static_cast<double>(total);
        if (e <= 0.0) {
            if (observed[i] != 0) return std::numeric_limits<double>::infinity();
            continue;
        }
        double diff = static_cast<double>(observed[i]) - e;
        stat += diff * diff / e;
    }
    return stat;
}

}  // namespace rsc

#endif
