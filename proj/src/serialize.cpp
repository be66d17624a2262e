#include "rsc/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rsc {

std::string to_canonical_json(const SimplicialComplex& c) {
    nlohmann::json out;
    out["n"] = c.ambient_n();
    auto faces = nlohmann::json::array();
    for (int d = 0; d < c.ambient_n(); ++d) {
        auto masks = c.simplices_of_dim(d);
        std::sort(masks.begin(), masks.end(), lex_less);
        for (std::uint64_t m : masks) faces.push_back(Simplex(m).vertices());
    }
    out["simplices"] = std::move(faces);
    return out.dump();
}

SimplicialComplex from_canonical_json(const std::string& json_text) {
    auto in = nlohmann::json::parse(json_text);
    int n = in.at("n").get<int>();
    if (n < 0 || n > 64) throw std::invalid_argument("complex json: n out of [0,64]");
    std::vector<std::vector<std::uint64_t>> by_dim(n);
    for (const auto& face : in.at("simplices")) {
        auto vs = face.get<std::vector<int>>();
        if (!std::is_sorted(vs.begin(), vs.end()) || std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw std::invalid_argument("complex json: face not strictly increasing");
        Simplex s = Simplex::from_vertices(vs);
        if (s.dimension() >= n) throw std::invalid_argument("complex json: face larger than ambient");
        for (int v : vs)
            if (v >= n) throw std::invalid_argument("complex json: vertex label out of range");
        by_dim[s.dimension()].push_back(s.mask);
    }
    auto c = SimplicialComplex::from_closed_faces(std::move(by_dim), n);
    if (!c.is_closed()) throw std::invalid_argument("complex json: not downward closed");
    return c;
}

GeneralParams general_params_from_json(const std::string& json_text) {
    auto in = nlohmann::json::parse(json_text);
    GeneralParams params;
    params.n = in.at("n").get<int>();
    params.default_p = in.value("default", 1.0);
    if (in.contains("p")) {
        for (const auto& [key, val] : in.at("p").items()) {
            std::vector<int> vs;
            std::stringstream ss(key);
            std::string tok;
            while (std::getline(ss, tok, ',')) vs.push_back(std::stoi(tok));
            params.set(Simplex::from_vertices(vs), val.get<double>());
        }
    }
    params.validate();
    return params;
}

}  // namespace rsc
