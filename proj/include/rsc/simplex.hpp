#ifndef RSC_SIMPLEX_HPP
#define RSC_SIMPLEX_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rsc {

// A simplex on vertex labels {0..63}, stored as a vertex bitmask.
// Canonical form (strictly increasing labels) is implied by the encoding.
struct Simplex {
    std::uint64_t mask = 0;

    Simplex() = default;
    explicit Simplex(std::uint64_t m) : mask(m) {
        if (m == 0) throw std::invalid_argument("Simplex: empty vertex set");
    }

    static Simplex from_vertices(const std::vector<int>& vs) {
        std::uint64_t m = 0;
        for (int v : vs) {
            if (v < 0 || v >= 64) throw std::invalid_argument("Simplex: vertex label out of range");
            std::uint64_t bit = std::uint64_t{1} << v;
            if (m & bit) throw std::invalid_argument("Simplex: repeated vertex label");
            m |= bit;
        }
        return Simplex(m);
    }

    int num_vertices() const { return std::popcount(mask); }
    int dimension() const { return num_vertices() - 1; }

    std::vector<int> vertices() const {
        std::vector<int> vs;
        vs.reserve(num_vertices());
        for (std::uint64_t m = mask; m; m &= m - 1) vs.push_back(std::countr_zero(m));
        return vs;
    }

    bool operator==(const Simplex& o) const { return mask == o.mask; }
};

// Lexicographic order on the increasing vertex tuples.
inline bool lex_less(std::uint64_t a, std::uint64_t b) {
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// Visit all codimension-1 faces of a simplex mask (popcount >= 2 assumed useful).
template <typename F>
void for_each_facet(std::uint64_t mask, F&& fn) {
    for (std::uint64_t m = mask; m; m &= m - 1) {
        std::uint64_t bit = m & ~(m - 1);
        fn(mask & ~bit);
    }
}

// Visit all non-empty proper and improper submasks of `mask`.
template <typename F>
void for_each_nonempty_subset(std::uint64_t mask, F&& fn) {
    for (std::uint64_t sub = mask; sub; sub = (sub - 1) & mask) fn(sub);
}

}  // namespace rsc

#endif
