#ifndef FLOER_TORUS_HPP
#define FLOER_TORUS_HPP

#include <optional>
#include <vector>

#include "floer/maslov.hpp"
#include "floer/novikov.hpp"

namespace floer {

// Torus directions (a,b) are graded through the angle of (a,-b), and triangles
// are counted when their disc-order boundary runs clockwise in the mirrored frame.
inline constexpr bool kMirrorOrientation = true;

struct Point2 {
    Rational x, y;
    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point2& o) const { return !(*this == o); }
    bool operator<(const Point2& o) const { return x != o.x ? x < o.x : y < o.y; }
    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
};

Point2 reduce_mod1(const Point2& p);
// Signed area, positive for counter-clockwise polygons in the xy frame.
Rational shoelace(const std::vector<Point2>& poly);

// The line {b x - a y = c} on T^2.
class TorusLagrangian {
public:
    TorusLagrangian(Int a, Int b, const Rational& offset, Int grading = 0);
    Int a() const { return a_; }
    Int b() const { return b_; }
    const Rational& offset() const { return c_; }
    Int grading() const { return k_; }
    bool contains(const Point2& p) const;  // p in R^2 projects onto the line
    // grading angle lift theta0 + k pi
    AngleLift angle() const;
    bool operator==(const TorusLagrangian& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && k_ == o.k_;
    }

private:
    Int a_, b_;
    Rational c_;
    Int k_;
};

Int det(const TorusLagrangian& L0, const TorusLagrangian& L1);

// Line in R^2 through `point` with direction (a,b).
struct LiftedLine {
    Point2 point;
    Int a, b;
    Rational level() const { return point.x * b - point.y * a; }  // b x - a y
};

Point2 intersect(const LiftedLine& l0, const LiftedLine& l1);
// Lift of the torus point p lying on l (p must project onto the line).
Point2 lift_onto(const LiftedLine& l, const Point2& p);

struct Anchor {
    // polyline from the base lift to the lift endpoint (inclusive)
    std::vector<Point2> path;
    const Point2& endpoint() const { return path.back(); }
    static Anchor straight(const Point2& base, const Point2& end) { return Anchor{{base, end}}; }
};

struct AnchoredLag {
    TorusLagrangian lag;
    Anchor anchor;
    AnchoredLag(TorusLagrangian L, Anchor an);
};

struct Generator {
    Point2 point;
    Point2 lift;
    Rational action;
    Int degree = 0;
};

std::vector<Point2> intersections(const TorusLagrangian& L0, const TorusLagrangian& L1);
LiftedLine lifted_line(const AnchoredLag& al);
Generator admissible_generator(const AnchoredLag& l0, const AnchoredLag& l1);
Rational action(const Generator& g, const AnchoredLag& l0, const AnchoredLag& l1);
Int maslov_morse_degree(const AnchoredLag& l0, const AnchoredLag& l1);
Int maslov_morse_degree(const TorusLagrangian& L0, const TorusLagrangian& L1);
Int seidel_degree(const Point2& p, const TorusLagrangian& L0, const TorusLagrangian& L1);
std::vector<Rational> spectrum(const AnchoredLag& l0, const AnchoredLag& l1);

// Cyclic order of the grading directions makes the corner insertions sum to pi.
bool rigid_direction_order(const TorusLagrangian& L0, const TorusLagrangian& L1, const TorusLagrangian& L2);

struct Triangle {
    Point2 v10, v21, v02;  // lifted vertices: L0^L1, L1^L2, L2^L0
    Rational area;         // absolute area
    bool degenerate = false;
    bool counted = false;
};

// Orientation test and area for three lifted vertices.
Triangle make_triangle(const Point2& v10, const Point2& v21, const Point2& v02, const TorusLagrangian& L0,
                       const TorusLagrangian& L1, const TorusLagrangian& L2);

struct AnchoredTriangle {
    Triangle tri;
    Generator g10, g21, g20;  // pairs (L0,L1), (L1,L2), (L0,L2)
};

AnchoredTriangle anchored_triangle(const AnchoredLag& l0, const AnchoredLag& l1, const AnchoredLag& l2);

struct M2Entry {
    Generator in2, in1, out;  // m2(in2, in1) = coeff * out
    NovikovSeries coeff;
};

std::vector<M2Entry> m2_anchored(const AnchoredLag& l0, const AnchoredLag& l1, const AnchoredLag& l2,
                                 std::optional<Rational> cutoff);

// All triangle classes with vertices over (p10, p21, p02) and area < cutoff,
// with L0, L1 lifted through the lift of p10 in [0,1)^2. Sorted by area then vertices.
std::vector<Triangle> enumerate_triangles(const TorusLagrangian& L0, const TorusLagrangian& L1,
                                          const TorusLagrangian& L2, const Point2& p10, const Point2& p21,
                                          const Point2& p02, const Rational& cutoff);
std::vector<Triangle> enumerate_triangles_serial(const TorusLagrangian& L0, const TorusLagrangian& L1,
                                                 const TorusLagrangian& L2, const Point2& p10,
                                                 const Point2& p21, const Point2& p02, const Rational& cutoff);

NovikovSeries m2_nonanchored(const TorusLagrangian& L0, const TorusLagrangian& L1, const TorusLagrangian& L2,
                             const Point2& p10, const Point2& p21, const Point2& p02, const Rational& cutoff);
NovikovSeries m2_nonanchored_serial(const TorusLagrangian& L0, const TorusLagrangian& L1,
                                    const TorusLagrangian& L2, const Point2& p10, const Point2& p21,
                                    const Point2& p02, const Rational& cutoff);

struct AssociativityCase {
    Point2 p10, p21, p32, p30;
    NovikovSeries left, right;  // through L1^L3 and through L0^L2
    bool equal = false;
};

// m2(m2(x32, x21), x10) against m2(x32, m2(x21, x10)) for four non-anchored lines,
// one case per choice of input and output points.
std::vector<AssociativityCase> nonanchored_associativity(const std::vector<TorusLagrangian>& L,
                                                         const Rational& cutoff);

// Abstract index checks on an anchored chain (L0..Lk), k >= 1.
enum class IndexKind { area, maslov };

struct IndexReport {
    IndexKind kind;
    Rational polygon_value;  // I_{k+1}(B)
    Rational strip_sum;      // sum of I_1 over the boundary strips
    bool ok = false;
};

// Polygon with vertices p_{(i+1)i} = L_i ^ L_{i+1} (cyclic), boundary in disc order.
Rational chain_area(const std::vector<AnchoredLag>& chain);
Int chain_polygonal_index(const std::vector<AnchoredLag>& chain);
IndexReport abstract_index_check(IndexKind kind, const std::vector<AnchoredLag>& chain);

struct SplitReport {
    IndexKind kind;
    Rational whole, piece1, piece2, diagonal_terms;  // whole = piece1 + piece2 - diagonal_terms
    bool ok = false;
};

// Split (L0..Lk) at 0 <= i < j <= k into (L0..Li, Lj..Lk) and (Li..Lj).
SplitReport split_check(IndexKind kind, const std::vector<AnchoredLag>& chain, std::size_t i, std::size_t j);

}  // namespace floer

#endif
