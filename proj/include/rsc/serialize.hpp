#ifndef RSC_SERIALIZE_HPP
#define RSC_SERIALIZE_HPP

#include <iosfwd>
#include <string>

#include "rsc/complex.hpp"
#include "rsc/params.hpp"

namespace rsc {

// Canonical form: {"n": <ambient_n>, "simplices": [[v0,...],...]} with all
// faces listed, inner lists strictly increasing, outer list sorted by
// (dimension, lexicographic).
std::string to_canonical_json(const SimplicialComplex& c);

// Validates downward closure and label ranges; throws on violation.
SimplicialComplex from_canonical_json(const std::string& json_text);

// Per-simplex parameter file: {"n": ..., "default": ..., "p": {"0,1": 0.5, ...}}.
GeneralParams general_params_from_json(const std::string& json_text);

}  // namespace rsc

#endif
