#include "floer/export.hpp"

namespace floer {

std::string generator_id(std::size_t i, std::size_t j, std::size_t count) {
    if (count <= 10) return "x" + std::to_string(j) + std::to_string(i);
    return "x" + std::to_string(j) + "_" + std::to_string(i);
}

AInftyStructure anchored_structure(const std::vector<AnchoredLag>& lags, std::optional<Rational> cutoff) {
    AInftyStructure S;
    S.cutoff = cutoff;
    std::size_t n = lags.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Generator g = admissible_generator(lags[i], lags[j]);
            S.basis.push_back({generator_id(i, j, n), g.degree, g.action});
        }
    S.ops[1].arity = 1;
    S.ops[2].arity = 2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (const auto& e : m2_anchored(lags[i], lags[j], lags[k], cutoff))
                    S.set({generator_id(j, k, n), generator_id(i, j, n)}, generator_id(i, k, n), e.coeff);
    return S;
}

}  // namespace floer
