#ifndef FLOER_EXPORT_HPP
#define FLOER_EXPORT_HPP

#include <string>
#include <vector>

#include "floer/ainfty.hpp"
#include "floer/torus.hpp"

namespace floer {

// Basis id of the generator of the anchored pair (L_i, L_j), i < j.
std::string generator_id(std::size_t i, std::size_t j, std::size_t count);

// Directed anchored structure: one generator per pair i < j, m2 from counted
// triangles on increasing triples, an explicit zero m1, nothing else.
AInftyStructure anchored_structure(const std::vector<AnchoredLag>& lags, std::optional<Rational> cutoff);

}  // namespace floer

#endif
