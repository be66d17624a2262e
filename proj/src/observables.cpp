#include "rsc/observables.hpp"

#include <sstream>
#include <stdexcept>

namespace rsc {

Observable obs_f(int d) {
    return {"f_" + std::to_string(d),
            [d](const SimplicialComplex& c) { return static_cast<double>(c.f(d)); }};
}

Observable obs_phi(int d) {
    return {"phi_" + std::to_string(d),
            [d](const SimplicialComplex& c) { return static_cast<double>(c.phi(d)); }};
}

Observable obs_a(const Simplex& s) {
    std::string name = "a:";
    for (int v : s.vertices()) name += std::to_string(v) + ",";
    name.pop_back();
    return {name, [m = s.mask](const SimplicialComplex& c) { return static_cast<double>(c.a_value(m)); }};
}

Observable obs_b(const Simplex& s) {
    std::string name = "b:";
    for (int v : s.vertices()) name += std::to_string(v) + ",";
    name.pop_back();
    return {name, [m = s.mask](const SimplicialComplex& c) { return static_cast<double>(c.b_value(m)); }};
}

Observable parse_observable(const std::string& spec) {
    if (spec.rfind("f_", 0) == 0) return obs_f(std::stoi(spec.substr(2)));
    if (spec.rfind("phi_", 0) == 0) return obs_phi(std::stoi(spec.substr(4)));
    if (spec.rfind("a:", 0) == 0 || spec.rfind("b:", 0) == 0) {
        std::vector<int> vs;
        std::stringstream ss(spec.substr(2));
        std::string tok;
        while (std::getline(ss, tok, ',')) vs.push_back(std::stoi(tok));
        Simplex s = Simplex::from_vertices(vs);
        return spec[0] == 'a' ? obs_a(s) : obs_b(s);
    }
    throw std::invalid_argument("unknown observable: " + spec);
}

std::vector<std::vector<double>> evaluate_observables(const std::vector<Observable>& obs,
                                                      const ComplexSpace& space) {
    std::vector<std::vector<double>> values(obs.size());
    for (std::size_t i = 0; i < obs.size(); ++i) {
        values[i].reserve(space.members.size());
        for (const auto& c : space.members) values[i].push_back(obs[i].fn(c));
    }
    return values;
}

}  // namespace rsc
