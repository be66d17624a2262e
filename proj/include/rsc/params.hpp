#ifndef RSC_PARAMS_HPP
#define RSC_PARAMS_HPP

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rsc/simplex.hpp"

namespace rsc {

/// Per-dimension appearance probabilities: p[d-1] governs d-simplices.
struct KahleParams {
    int n = 0;
    std::vector<double> p;  // length n-1

    KahleParams() = default;
    KahleParams(int n_, std::vector<double> p_) : n(n_), p(std::move(p_)) { validate(); }

    void validate() const {
        if (n < 1 || n > 64) throw std::invalid_argument("KahleParams: n out of [1,64]");
        if (static_cast<int>(p.size()) != n - 1)
            throw std::invalid_argument("KahleParams: need n-1 probabilities");
        for (double q : p)
            if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("KahleParams: probability out of [0,1]");
    }

    double p_dim(int d) const {  // probability for d-simplices, 1 <= d <= n-1
        if (d < 1 || d > n - 1) throw std::invalid_argument("KahleParams: dimension out of range");
        return p[d - 1];
    }
};

/// Per-simplex appearance probabilities with a default fill value.
struct GeneralParams {
    int n = 0;
    std::unordered_map<std::uint64_t, double> p;  // keyed by vertex mask
    double default_p = 1.0;

    GeneralParams() = default;
    GeneralParams(int n_, double default_p_) : n(n_), default_p(default_p_) { validate(); }

    void validate() const {
        if (n < 1 || n > 64) throw std::invalid_argument("GeneralParams: n out of [1,64]");
        if (!(default_p >= 0.0 && default_p <= 1.0))
            throw std::invalid_argument("GeneralParams: default probability out of [0,1]");
        for (const auto& [m, q] : p) {
            if (m == 0) throw std::invalid_argument("GeneralParams: empty simplex key");
            if (!(q >= 0.0 && q <= 1.0))
                throw std::invalid_argument("GeneralParams: probability out of [0,1]");
        }
    }

    void set(const Simplex& s, double q) { p[s.mask] = q; }

    double prob(std::uint64_t mask) const {
        auto it = p.find(mask);
        return it != p.end() ? it->second : default_p;
    }
    double prob(const Simplex& s) const { return prob(s.mask); }
};

}  // namespace rsc

#endif
