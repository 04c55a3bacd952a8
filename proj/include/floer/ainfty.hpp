#ifndef FLOER_AINFTY_HPP
#define FLOER_AINFTY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floer/novikov.hpp"

namespace floer {

struct BasisElement {
    std::string id;
    Int degree = 0;  // unshifted
    Rational action;
};

using Tuple = std::vector<std::string>;
// Formal combination of basis elements.
using Element = std::map<std::string, NovikovSeries>;

struct MultiOpTable {
    int arity = 0;
    // inputs written left to right as in m_k(x_k, ..., x_1)
    std::map<Tuple, Element> entries;
};

struct AInftyStructure {
    std::vector<BasisElement> basis;
    std::map<int, MultiOpTable> ops;
    std::optional<Rational> cutoff;
    Int coeff_order = 1;

    const BasisElement& element(const std::string& id) const;
    bool has(const std::string& id) const;
    int max_arity() const { return ops.empty() ? -1 : ops.rbegin()->first; }
    // coefficient of out in m_k(inputs), zero series when absent
    void set(const Tuple& inputs, const std::string& out, const NovikovSeries& coeff);
    NovikovSeries zero() const { return NovikovSeries(coeff_order, cutoff); }
    bool operator==(const AInftyStructure& o) const;
};

Int shifted_degree(const std::vector<BasisElement>& tensor);

enum class SignConvention {
    standard,   // (-1)^{*+1}, * = i + deg x_k + ... + deg x_{k-i}: Koszul signs with shifted degrees
    unshifted,  // (-1)^{sum of unshifted degrees to the left}
};

struct ResidualKey {
    Tuple inputs;
    std::string output;
    bool operator<(const ResidualKey& o) const {
        return inputs != o.inputs ? inputs < o.inputs : output < o.output;
    }
    bool operator==(const ResidualKey& o) const { return inputs == o.inputs && output == o.output; }
};

struct ResidualReport {
    std::map<ResidualKey, NovikovSeries> residual;  // nonzero entries only
    std::vector<int> missing_arities;               // arities needed but absent (taken as zero)
    std::size_t tuples_checked = 0;
    std::size_t terms = 0;
};

// Direct double loop over k1 + k2 = k + 1 and insertion position.
ResidualReport ainfty_residual(const AInftyStructure& S, int max_arity,
                               SignConvention sign = SignConvention::standard);
ResidualReport ainfty_residual_serial(const AInftyStructure& S, int max_arity,
                                      SignConvention sign = SignConvention::standard);
// Same residual from the coderivation d = sum of hat m_k, projecting d(d(word)) to length one.
ResidualReport ainfty_residual_bar(const AInftyStructure& S, int max_arity);

// Number of (k1, k2, position) terms contributing at arity k.
std::size_t relation_term_count(int k, bool with_m0);

// m_k(x_1, ..., x_k) on combinations, multilinear.
Element apply_op(const AInftyStructure& S, int k, const std::vector<Element>& args);

Element mc_residual(const AInftyStructure& S, const Element& b);
AInftyStructure deform(const AInftyStructure& S, const Element& b);

struct FiltrationViolation {
    int arity;
    Tuple inputs;
    std::string output;
    Rational margin;  // v(coeff) + action(out) - sum action(in), negative
};
std::vector<FiltrationViolation> filtration_check(const AInftyStructure& S);

struct DegreeViolation {
    int arity;
    Tuple inputs;
    std::string output;
};
// Each m_k raises the shifted degree by one.
std::vector<DegreeViolation> degree_check(const AInftyStructure& S);

Json structure_to_json(const AInftyStructure& S);
AInftyStructure structure_from_json(const Json& j);

}  // namespace floer

#endif
