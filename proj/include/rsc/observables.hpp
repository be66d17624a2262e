#ifndef RSC_OBSERVABLES_HPP
#define RSC_OBSERVABLES_HPP

#include <functional>
#include <string>
#include <vector>

#include "rsc/complex.hpp"
#include "rsc/enumeration.hpp"

namespace rsc {

/// A named real-valued function on complexes.
struct Observable {
    std::string name;
    std::function<double(const SimplicialComplex&)> fn;
};

Observable obs_f(int d);
Observable obs_phi(int d);
Observable obs_a(const Simplex& s);
Observable obs_b(const Simplex& s);

// Parses "f_1", "phi_2", "a:0,1,2", "b:0,1".
Observable parse_observable(const std::string& spec);

// values[i][j] = x_i(member j).
std::vector<std::vector<double>> evaluate_observables(const std::vector<Observable>& obs,
                                                      const ComplexSpace& space);

}  // namespace rsc

#endif
