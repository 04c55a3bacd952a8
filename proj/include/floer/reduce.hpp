#ifndef FLOER_REDUCE_HPP
#define FLOER_REDUCE_HPP

#include <map>
#include <vector>

#include "floer/torus.hpp"

namespace floer {

// Connection on the universal cover with transport phase -m * int x dy (in turns);
// lattice translations act with multiplier exp(-2 pi i m u y) for (u,v).
struct Prequantum {
    Int m_amb = 1;
};

// m_amb * (c + a b / 2) mod 1: the holonomy of {b x - a y = c} traversed against (a,b).
// Equals m_amb * t for the vertical family x = t.
Rational holonomy(const TorusLagrangian& L, const Prequantum& P);

// (c/b, 0) or (0, -c/a) reduced mod 1
Point2 reference_point(const TorusLagrangian& L);

struct BSReport {
    bool rational = false;
    Int m_L = 1;  // smallest N for which L is BS N-rational
};
BSReport is_BS_N_rational(const TorusLagrangian& L, const Prequantum& P, Int N);

// Parallel unit section of P^{N/m_amb} over L with phase `phase` (turns, canonical
// fiber over the torus point) at the marked point.
struct Rationalization {
    TorusLagrangian owner;
    Int N = 1;
    Rational phase;
    Point2 marked;
};

Rationalization make_rationalization(const TorusLagrangian& L, const Prequantum& P, Int N,
                                     const Rational& phase, const Point2& marked);
// Phase pinned at the anchor endpoint by transport of base_phase along the anchor.
Rationalization anchored_rationalization(const AnchoredLag& al, const Prequantum& P, Int N,
                                         const Rational& base_phase = 0);
// S^{tensor k} as an Nk-rationalization.
Rationalization tensor_power(const Rationalization& S, Int k);

// Phase of S at a torus point of its owner, in [0,1).
Rational section_phase(const Rationalization& S, const Point2& p);
Rational section_phase_at_lift(const Rationalization& S, const Point2& lift);

// Smallest c >= 0 with exp(2 pi i N c / m_amb) S0(p) = S1(p); c in [0, m_amb/N).
Rational c_of_p(const Rationalization& S0, const Rationalization& S1, const Prequantum& P, const Point2& p);

struct EPrime {
    Rational value;
    bool in_lattice = false;  // value in (1/N)Z
};
// area - (c10 + c21 + c02)
EPrime e_prime(const Rational& area, const std::vector<Rational>& corner_c, Int N);

// <p> = T^{-c(p)} [[p]]: coefficients on <p> become coefficients on [[p]] via T^{c(p)}.
std::map<Point2, NovikovSeries> rebase(const std::map<Point2, NovikovSeries>& series,
                                       const std::map<Point2, Rational>& c);
std::map<Point2, NovikovSeries> unrebase(const std::map<Point2, NovikovSeries>& series,
                                         const std::map<Point2, Rational>& c);
// Structure constant times T^{-(c10 + c21 + c02)}.
NovikovSeries rebase_structure_constant(const NovikovSeries& C, const std::vector<Rational>& corner_c);

struct RescaleEntry {
    Rational c_N, c_Nprime;
    Rational delta;             // N'(c_N - c_N')/m_amb
    bool delta_integral = false;
    Rational first_display;     // N' c_N - c_N'
    bool first_display_integral = false;
    Rational derived_exponent;  // [[p]]_N = T^{derived_exponent} [[p]]_N'
    std::optional<Rational> reciprocal_exponent;  // -1/Delta when Delta != 0
};
RescaleEntry rescale_entry(const Rational& c_N, const Rational& c_Nprime, Int N_prime, const Prequantum& P);
// N divides N'; sections at N' are the tensor powers of those at N, so delta is a nonnegative integer.
std::vector<RescaleEntry> rescale_N(const std::vector<Rational>& c_N, Int N, Int N_prime, const Prequantum& P);

struct FlatBundle {
    TorusLagrangian owner;
    Rational holonomy;  // in [0,1)
    bool is_N_rational(Int N) const { return is_integer(holonomy * N); }
};

struct GaloisObject {
    TorusLagrangian lag;
    FlatBundle bundle;
    Rationalization rat;
};

GaloisObject galois_twist(const GaloisObject& obj, Int j, const Prequantum& P);

// Phase (turns) of the flat-bundle weight of a triangle: sum over boundary arcs of
// holonomy times arc fraction, arcs in disc order L2: v02 -> v21, L1: v21 -> v10, L0: v10 -> v02,
// fractions measured against the line directions.
Rational triangle_weight(const Triangle& t, const std::vector<FlatBundle>& bundles);

struct GaloisCase {
    Point2 p10, p21, p02;
    Int j = 0;
    NovikovSeries sigma_side, twist_side;
    bool equal = false;
    std::size_t triangles = 0;
};

struct GaloisReport {
    std::vector<GaloisCase> cases;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// For every point triple and every j in [0, N/m_amb): sigma^{j m_amb} applied to the
// weighted structure constant equals the constant recomputed with twisted objects,
// up to the per-generator basis factors.
GaloisReport galois_equivariance_check(const std::vector<GaloisObject>& objs, const Prequantum& P,
                                       const Rational& cutoff);

// Per-generator basis factor (turns) comparing sigma^{j m} with the j-fold twist at a
// generator p of the pair (La, Lb).
Rational galois_basis_factor(const GaloisObject& a, const GaloisObject& b, const Point2& p, Int j,
                             const Prequantum& P);

}  // namespace floer

#endif
