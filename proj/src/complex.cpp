#include "rsc/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "rsc/binomial.hpp"

namespace rsc {

namespace {
const std::vector<std::uint64_t> kEmptyDim;
}

SimplicialComplex SimplicialComplex::closure(const std::vector<Simplex>& generators, int ambient_n) {
    std::vector<std::uint64_t> masks;
    masks.reserve(generators.size());
    for (const auto& s : generators) masks.push_back(s.mask);
    return closure_masks(masks, ambient_n);
}

SimplicialComplex SimplicialComplex::closure_masks(const std::vector<std::uint64_t>& generators, int ambient_n) {
    if (ambient_n < 0 || ambient_n > 64)
        throw std::invalid_argument("SimplicialComplex: ambient_n out of [0,64]");
    std::uint64_t universe = ambient_n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ambient_n) - 1;
    std::unordered_set<std::uint64_t> faces;
    for (std::uint64_t g : generators) {
        if (g == 0) throw std::invalid_argument("closure: empty generator simplex");
        if (g & ~universe) throw std::invalid_argument("closure: vertex label out of range");
        for_each_nonempty_subset(g, [&](std::uint64_t sub) { faces.insert(sub); });
    }
    std::vector<std::vector<std::uint64_t>> by_dim(ambient_n);
    for (std::uint64_t m : faces) by_dim[std::popcount(m) - 1].push_back(m);
    for (auto& v : by_dim) std::sort(v.begin(), v.end());
    SimplicialComplex c;
    c.n_ = ambient_n;
    c.by_dim_ = std::move(by_dim);
    return c;
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::vector<std::vector<std::uint64_t>> by_dim, int ambient_n) {
    if (ambient_n < 0 || ambient_n > 64)
        throw std::invalid_argument("SimplicialComplex: ambient_n out of [0,64]");
    by_dim.resize(ambient_n);
    for (auto& v : by_dim) std::sort(v.begin(), v.end());
    SimplicialComplex c;
    c.n_ = ambient_n;
    c.by_dim_ = std::move(by_dim);
    return c;
}

int SimplicialComplex::dimension() const {
    for (int d = static_cast<int>(by_dim_.size()) - 1; d >= 0; --d)
        if (!by_dim_[d].empty()) return d;
    return -1;
}

bool SimplicialComplex::contains(std::uint64_t mask) const {
    if (mask == 0) return false;
    int d = std::popcount(mask) - 1;
    if (d >= static_cast<int>(by_dim_.size())) return false;
    const auto& v = by_dim_[d];
    return std::binary_search(v.begin(), v.end(), mask);
}

int SimplicialComplex::b_value(std::uint64_t mask) const {
    if (mask == 0) throw std::invalid_argument("b_value: empty simplex");
    if (std::popcount(mask) == 1) return 1;
    bool ok = true;
    for_each_facet(mask, [&](std::uint64_t face) { ok = ok && contains(face); });
    return ok ? 1 : 0;
}

SimplicialComplex SimplicialComplex::skeleton(int d) const {
    if (d < 0) throw std::invalid_argument("skeleton: negative dimension");
    std::vector<std::vector<std::uint64_t>> by_dim(by_dim_.begin(),
        by_dim_.begin() + std::min<std::size_t>(d + 1, by_dim_.size()));
    return from_closed_faces(std::move(by_dim), n_);
}

SimplicialComplex SimplicialComplex::filled_skeleton(int d) const {
    if (d < 0) throw std::invalid_argument("filled_skeleton: negative dimension");
    SimplicialComplex sk = skeleton(d);
    if (d >= n_ - 1) return sk;
    std::vector<std::uint64_t> added;
    if (d + 1 <= static_cast<int>(sk.by_dim_.size()) && d < static_cast<int>(sk.by_dim_.size()) && !sk.by_dim_[d].empty()) {
        // Candidates: cofaces of a d-simplex by a vertex above its maximum;
        // each (d+1)-simplex arises exactly once this way.
        for (std::uint64_t m : sk.by_dim_[d]) {
            int top = 63 - std::countl_zero(m);
            for (int v = top + 1; v < n_; ++v) {
                std::uint64_t c = m | (std::uint64_t{1} << v);
                if (sk.b_value(c)) added.push_back(c);
            }
        }
    }
    auto by_dim = sk.by_dim_;
    by_dim[d + 1] = std::move(added);
    return from_closed_faces(std::move(by_dim), n_);
}

ObservableCounts SimplicialComplex::counts() const {
    ObservableCounts oc;
    oc.f.assign(n_, 0);
    oc.phi.assign(n_, 0);
    for (int d = 0; d < n_; ++d) oc.f[d] = static_cast<long long>(by_dim_[d].size());
    if (n_ > 0) oc.phi[0] = n_;
    for (int d = 1; d < n_; ++d) oc.phi[d] = phi(d);
    return oc;
}

long long SimplicialComplex::f(int d) const {
    if (d < 0 || d >= n_) return 0;
    return static_cast<long long>(by_dim_[d].size());
}

long long SimplicialComplex::phi(int d) const {
    if (d < 1 || d >= n_) return d == 0 ? n_ : 0;
    // d-simplices whose full (d-1)-boundary is present.
    long long count = 0;
    for (std::uint64_t m : by_dim_[d - 1]) {
        int top = 63 - std::countl_zero(m);
        for (int v = top + 1; v < n_; ++v)
            if (b_value(m | (std::uint64_t{1} << v))) ++count;
    }
    return count;
}

const std::vector<std::uint64_t>& SimplicialComplex::simplices_of_dim(int d) const {
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return kEmptyDim;
    return by_dim_[d];
}

std::uint64_t SimplicialComplex::vertex_mask() const {
    std::uint64_t m = 0;
    if (!by_dim_.empty())
        for (std::uint64_t v : by_dim_[0]) m |= v;
    return m;
}

long long SimplicialComplex::total_faces() const {
    long long t = 0;
    for (const auto& v : by_dim_) t += static_cast<long long>(v.size());
    return t;
}

bool SimplicialComplex::is_closed() const {
    for (int d = 1; d < static_cast<int>(by_dim_.size()); ++d)
        for (std::uint64_t m : by_dim_[d])
            if (!b_value(m)) return false;
    return true;
}

bool SimplicialComplex::canonical_less(const SimplicialComplex& a, const SimplicialComplex& b) {
    int da = static_cast<int>(a.by_dim_.size());
    int db = static_cast<int>(b.by_dim_.size());
    for (int d = 0; d < std::max(da, db); ++d) {
        const auto& va = d < da ? a.by_dim_[d] : kEmptyDim;
        const auto& vb = d < db ? b.by_dim_[d] : kEmptyDim;
        auto la = va;
        auto lb = vb;
        std::sort(la.begin(), la.end(), lex_less);
        std::sort(lb.begin(), lb.end(), lex_less);
        if (la != lb)
            return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end(), lex_less);
    }
    return false;
}

}  // namespace rsc
