#include "floer/torus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <omp.h>

#include "floer/parallel.hpp"

namespace floer {

namespace {

constexpr int kSign = kMirrorOrientation ? 1 : -1;

void require_transverse(const TorusLagrangian& L0, const TorusLagrangian& L1, const char* what) {
    if (det(L0, L1) == 0) throw Error(ErrorKind::parallel_directions, what);
}

LiftedLine line_at_level(Int a, Int b, const Rational& level) {
    Point2 p = b != 0 ? Point2{level / Rational(b), 0} : Point2{0, -level / Rational(a)};
    return {p, a, b};
}

// s, t with b s - a t = 1 (gcd(a,b) = 1)
std::pair<Int, Int> bezout(Int a, Int b) {
    // extended Euclid on (b, -a)
    Int old_r = b, r = -a, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    // old_s * b + old_t * (-a) = old_r = +-1
    if (old_r < 0) {
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_s, old_t};
}

}  // namespace

Point2 reduce_mod1(const Point2& p) { return {frac(p.x), frac(p.y)}; }

Rational shoelace(const std::vector<Point2>& poly) {
    Rational s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2& u = poly[i];
        const Point2& v = poly[(i + 1) % poly.size()];
        s += u.x * v.y - v.x * u.y;
    }
    return s / 2;
}

TorusLagrangian::TorusLagrangian(Int a, Int b, const Rational& offset, Int grading) : k_(grading) {
    if (a == 0 && b == 0) throw Error(ErrorKind::input, "direction (0,0)");
    if (std::gcd(a, b) != 1)
        throw Error(ErrorKind::input,
                    "direction (" + std::to_string(a) + "," + std::to_string(b) + ") is not primitive");
    Rational c = offset;
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
        c = -c;
    }
    a_ = a;
    b_ = b;
    c_ = frac(c);
}

bool TorusLagrangian::contains(const Point2& p) const { return is_integer(p.x * b_ - p.y * a_ - c_); }

AngleLift TorusLagrangian::angle() const {
    Direction d = kMirrorOrientation ? canonical_direction(a_, -b_) : canonical_direction(a_, b_);
    return {d, k_};
}

Int det(const TorusLagrangian& L0, const TorusLagrangian& L1) { return L0.a() * L1.b() - L0.b() * L1.a(); }

Point2 intersect(const LiftedLine& l0, const LiftedLine& l1) {
    Int D = l0.a * l1.b - l0.b * l1.a;
    if (D == 0) throw Error(ErrorKind::parallel_directions, "lifted lines are parallel");
    Rational c0 = l0.level(), c1 = l1.level();
    return {(Rational(l0.a) * c1 - Rational(l1.a) * c0) / D, (Rational(l0.b) * c1 - Rational(l1.b) * c0) / D};
}

Point2 lift_onto(const LiftedLine& l, const Point2& p) {
    Rational D = l.level() - (p.x * l.b - p.y * l.a);
    if (!is_integer(D)) throw Error(ErrorKind::inconsistent_points, "point does not lie on the line");
    auto [s, t] = bezout(l.a, l.b);
    Rational d = D;
    return {p.x + d * s, p.y + d * t};
}

AnchoredLag::AnchoredLag(TorusLagrangian L, Anchor an) : lag(std::move(L)), anchor(std::move(an)) {
    if (anchor.path.empty()) throw Error(ErrorKind::input, "anchor path is empty");
    if (!lag.contains(anchor.endpoint()))
        throw Error(ErrorKind::input, "anchor endpoint is not on a lift of the Lagrangian");
}

std::vector<Point2> intersections(const TorusLagrangian& L0, const TorusLagrangian& L1) {
    require_transverse(L0, L1, "intersections of parallel Lagrangians");
    Int D = det(L0, L1), n = std::abs(D);
    std::set<Point2> pts;
    for (Int n0 = 0; n0 < n; ++n0)
        for (Int n1 = 0; n1 < n; ++n1) {
            LiftedLine l0 = line_at_level(L0.a(), L0.b(), L0.offset() + n0);
            LiftedLine l1 = line_at_level(L1.a(), L1.b(), L1.offset() + n1);
            pts.insert(reduce_mod1(intersect(l0, l1)));
        }
    return {pts.begin(), pts.end()};
}

LiftedLine lifted_line(const AnchoredLag& al) { return {al.anchor.endpoint(), al.lag.a(), al.lag.b()}; }

Rational action(const Generator& g, const AnchoredLag& l0, const AnchoredLag& l1) {
    if (l0.anchor.path.front() != l1.anchor.path.front())
        throw Error(ErrorKind::input, "anchors start at different base lifts");
    std::vector<Point2> curve = l0.anchor.path;
    curve.push_back(g.lift);
    for (auto it = l1.anchor.path.rbegin(); it != l1.anchor.path.rend(); ++it) curve.push_back(*it);
    return -kSign * shoelace(curve);
}

Int maslov_morse_degree(const TorusLagrangian& L0, const TorusLagrangian& L1) {
    AngleLift t0 = L0.angle(), t1 = L1.angle();
    AngleLift vy{{1, 0}, 0};
    AnglePath lam({{0, t0}, {Rational(1, 2), vy}, {1, t1}});
    return maslov_morse(lam, AnglePath::constant(t0), AnglePath::constant(t1), t0.dir, t1.dir);
}

Int maslov_morse_degree(const AnchoredLag& l0, const AnchoredLag& l1) {
    return maslov_morse_degree(l0.lag, l1.lag);
}

Generator admissible_generator(const AnchoredLag& l0, const AnchoredLag& l1) {
    require_transverse(l0.lag, l1.lag, "anchored pair is parallel");
    Generator g;
    g.lift = intersect(lifted_line(l0), lifted_line(l1));
    g.point = reduce_mod1(g.lift);
    g.action = action(g, l0, l1);
    g.degree = maslov_morse_degree(l0, l1);
    return g;
}

Int seidel_degree(const Point2& p, const TorusLagrangian& L0, const TorusLagrangian& L1) {
    if (!L0.contains(p) || !L1.contains(p)) throw Error(ErrorKind::inconsistent_points, "p is not on both lines");
    AngleLift t0 = L0.angle(), t1 = L1.angle();
    if (t0.dir == t1.dir) throw Error(ErrorKind::non_transverse, "tangent lines agree at p");
    // signed crossings of the straight path t0 -> t1 with the cycle {theta = t0 mod pi};
    // the crossing at the start point carries weight 1/2
    bool up = t0 < t1;
    Int span = std::abs(t1.turns - t0.turns) + 2;
    Int interior = 0;
    for (Int j = -span; j <= span; ++j) {
        if (j == 0) continue;
        AngleLift c = t0.plus_pi(j);
        if (up && j > 0 && c < t1) ++interior;
        if (!up && j < 0 && t1 < c) --interior;
    }
    Int twice_rs = 2 * interior + (up ? 1 : -1);
    return (1 - twice_rs) / 2;
}

std::vector<Rational> spectrum(const AnchoredLag& l0, const AnchoredLag& l1) {
    return {admissible_generator(l0, l1).action};
}

bool rigid_direction_order(const TorusLagrangian& L0, const TorusLagrangian& L1, const TorusLagrangian& L2) {
    Direction d[3] = {L0.angle().dir, L1.angle().dir, L2.angle().dir};
    int descents = 0;
    for (int i = 0; i < 3; ++i)
        if (angle_less(d[(i + 1) % 3], d[i])) ++descents;
    return descents == 1;
}

Triangle make_triangle(const Point2& v10, const Point2& v21, const Point2& v02, const TorusLagrangian& L0,
                       const TorusLagrangian& L1, const TorusLagrangian& L2) {
    Triangle t{v10, v21, v02, 0, false, false};
    Rational s = shoelace({v10, v21, v02});
    t.area = abs(s);
    if (s == 0) {
        t.degenerate = true;
        t.counted = rigid_direction_order(L0, L1, L2);
    } else {
        t.counted = kSign * s > 0;
    }
    return t;
}

AnchoredTriangle anchored_triangle(const AnchoredLag& l0, const AnchoredLag& l1, const AnchoredLag& l2) {
    require_transverse(l0.lag, l1.lag, "L0, L1 parallel");
    require_transverse(l1.lag, l2.lag, "L1, L2 parallel");
    require_transverse(l0.lag, l2.lag, "L0, L2 parallel");
    AnchoredTriangle at;
    at.g10 = admissible_generator(l0, l1);
    at.g21 = admissible_generator(l1, l2);
    at.g20 = admissible_generator(l0, l2);
    at.tri = make_triangle(at.g10.lift, at.g21.lift, at.g20.lift, l0.lag, l1.lag, l2.lag);
    return at;
}

std::vector<M2Entry> m2_anchored(const AnchoredLag& l0, const AnchoredLag& l1, const AnchoredLag& l2,
                                 std::optional<Rational> cutoff) {
    AnchoredTriangle at = anchored_triangle(l0, l1, l2);
    std::vector<M2Entry> out;
    if (!at.tri.counted) return out;
    NovikovSeries one = NovikovSeries::constant(1, 1, cutoff);
    if (one.is_zero()) return out;
    out.push_back({at.g21, at.g10, at.g20, one});
    return out;
}

namespace {

struct EnumPlan {
    LiftedLine l0, l1;
    Point2 q21, q02;
    Int n_lo = 0, n_hi = -1;
};

EnumPlan plan_enumeration(const TorusLagrangian& L0, const TorusLagrangian& L1, const TorusLagrangian& L2,
                          const Point2& p10, const Point2& p21, const Point2& p02, const Rational& cutoff) {
    require_transverse(L0, L1, "L0, L1 parallel");
    require_transverse(L1, L2, "L1, L2 parallel");
    require_transverse(L0, L2, "L0, L2 parallel");
    if (!L0.contains(p10) || !L1.contains(p10))
        throw Error(ErrorKind::inconsistent_points, "p10 is not in L0 and L1");
    if (!L1.contains(p21) || !L2.contains(p21))
        throw Error(ErrorKind::inconsistent_points, "p21 is not in L1 and L2");
    if (!L2.contains(p02) || !L0.contains(p02))
        throw Error(ErrorKind::inconsistent_points, "p02 is not in L2 and L0");
    EnumPlan pl;
    Point2 base = reduce_mod1(p10);
    pl.l0 = {base, L0.a(), L0.b()};
    pl.l1 = {base, L1.a(), L1.b()};
    pl.q21 = reduce_mod1(p21);
    pl.q02 = reduce_mod1(p02);
    if (cutoff <= 0) return pl;
    // area(level) = K (level - level*)^2
    Rational star = base.x * L2.b() - base.y * L2.a();
    LiftedLine unit = line_at_level(L2.a(), L2.b(), star + 1);
    Rational K = abs(shoelace({base, intersect(pl.l1, unit), intersect(unit, pl.l0)}));
    Int R = 0;
    while (Rational(R * R) * K < cutoff) ++R;
    // translate n gives level c2 + n
    Rational center = star - L2.offset();
    pl.n_lo = floor_int(center - R) - 1;
    pl.n_hi = floor_int(center + R) + 1;
    return pl;
}

std::optional<Triangle> triangle_at(const EnumPlan& pl, Int n, const TorusLagrangian& L0,
                                    const TorusLagrangian& L1, const TorusLagrangian& L2, const Rational& cutoff) {
    LiftedLine l2 = line_at_level(L2.a(), L2.b(), L2.offset() + n);
    Point2 v21 = intersect(pl.l1, l2), v02 = intersect(l2, pl.l0);
    if (reduce_mod1(v21) != pl.q21 || reduce_mod1(v02) != pl.q02) return std::nullopt;
    Triangle t = make_triangle(pl.l0.point, v21, v02, L0, L1, L2);
    if (!(t.area < cutoff)) return std::nullopt;
    return t;
}

bool triangle_order(const Triangle& a, const Triangle& b) {
    if (a.area != b.area) return a.area < b.area;
    if (a.v21 != b.v21) return a.v21 < b.v21;
    return a.v02 < b.v02;
}

}  // namespace

std::vector<Triangle> enumerate_triangles_serial(const TorusLagrangian& L0, const TorusLagrangian& L1,
                                                 const TorusLagrangian& L2, const Point2& p10,
                                                 const Point2& p21, const Point2& p02, const Rational& cutoff) {
    EnumPlan pl = plan_enumeration(L0, L1, L2, p10, p21, p02, cutoff);
    std::vector<Triangle> out;
    for (Int n = pl.n_lo; n <= pl.n_hi; ++n)
        if (auto t = triangle_at(pl, n, L0, L1, L2, cutoff)) out.push_back(*t);
    std::sort(out.begin(), out.end(), triangle_order);
    return out;
}

std::vector<Triangle> enumerate_triangles(const TorusLagrangian& L0, const TorusLagrangian& L1,
                                          const TorusLagrangian& L2, const Point2& p10, const Point2& p21,
                                          const Point2& p02, const Rational& cutoff) {
    EnumPlan pl = plan_enumeration(L0, L1, L2, p10, p21, p02, cutoff);
    Int count = pl.n_hi - pl.n_lo + 1;
    if (count <= 0) return {};
    std::vector<std::optional<Triangle>> slots(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 64) num_threads(thread_count())
    for (Int i = 0; i < count; ++i) slots[i] = triangle_at(pl, pl.n_lo + i, L0, L1, L2, cutoff);
    std::vector<Triangle> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    std::sort(out.begin(), out.end(), triangle_order);
    return out;
}

namespace {
NovikovSeries sum_counted(const std::vector<Triangle>& ts, const Rational& cutoff) {
    NovikovSeries s(1, cutoff);
    for (const auto& t : ts)
        if (t.counted) s.add_term({t.area, 0}, GroupRingCoeff::scalar(1));
    return s;
}
}  // namespace

NovikovSeries m2_nonanchored(const TorusLagrangian& L0, const TorusLagrangian& L1, const TorusLagrangian& L2,
                             const Point2& p10, const Point2& p21, const Point2& p02, const Rational& cutoff) {
    return sum_counted(enumerate_triangles(L0, L1, L2, p10, p21, p02, cutoff), cutoff);
}

NovikovSeries m2_nonanchored_serial(const TorusLagrangian& L0, const TorusLagrangian& L1,
                                    const TorusLagrangian& L2, const Point2& p10, const Point2& p21,
                                    const Point2& p02, const Rational& cutoff) {
    return sum_counted(enumerate_triangles_serial(L0, L1, L2, p10, p21, p02, cutoff), cutoff);
}

namespace {

std::vector<Point2> chain_vertices(const std::vector<AnchoredLag>& chain) {
    std::size_t n = chain.size();
    if (n < 2) throw Error(ErrorKind::input, "chain needs at least two Lagrangians");
    std::vector<Point2> v;
    for (std::size_t i = 0; i < n; ++i) {
        require_transverse(chain[i].lag, chain[(i + 1) % n].lag, "consecutive chain members are parallel");
        v.push_back(intersect(lifted_line(chain[i]), lifted_line(chain[(i + 1) % n])));
    }
    return v;
}

Rational strip_value(IndexKind kind, const AnchoredLag& a, const AnchoredLag& b) {
    if (kind == IndexKind::area) return -admissible_generator(a, b).action;
    return Rational(-maslov_morse_degree(a, b));
}

Rational index_value(IndexKind kind, const std::vector<AnchoredLag>& chain) {
    return kind == IndexKind::area ? chain_area(chain) : Rational(chain_polygonal_index(chain));
}

}  // namespace

std::vector<AssociativityCase> nonanchored_associativity(const std::vector<TorusLagrangian>& L,
                                                         const Rational& cutoff) {
    if (L.size() != 4) throw Error(ErrorKind::input, "associativity needs four lines");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) require_transverse(L[i], L[j], "associativity on parallel lines");
    std::vector<AssociativityCase> out;
    for (const auto& p10 : intersections(L[0], L[1]))
        for (const auto& p21 : intersections(L[1], L[2]))
            for (const auto& p32 : intersections(L[2], L[3]))
                for (const auto& p30 : intersections(L[3], L[0])) {
                    AssociativityCase c{p10, p21, p32, p30, NovikovSeries(1, cutoff), NovikovSeries(1, cutoff)};
                    for (const auto& q31 : intersections(L[3], L[1]))
                        c.left += m2_nonanchored(L[1], L[2], L[3], p21, p32, q31, cutoff) *
                                  m2_nonanchored(L[0], L[1], L[3], p10, q31, p30, cutoff);
                    for (const auto& r20 : intersections(L[2], L[0]))
                        c.right += m2_nonanchored(L[0], L[1], L[2], p10, p21, r20, cutoff) *
                                   m2_nonanchored(L[0], L[2], L[3], r20, p32, p30, cutoff);
                    c.equal = c.left == c.right;
                    out.push_back(std::move(c));
                }
    return out;
}

Rational chain_area(const std::vector<AnchoredLag>& chain) { return kSign * shoelace(chain_vertices(chain)); }

Int chain_polygonal_index(const std::vector<AnchoredLag>& chain) {
    std::size_t n = chain.size();
    chain_vertices(chain);
    std::vector<CornerAngles> corners;
    std::vector<AnglePath> arcs;
    // disc order: corners p_{k(k-1)}, ..., p_{10}, then p_{0k}
    for (std::size_t s = 0; s < n; ++s) {
        std::size_t i = s + 1 < n ? n - 2 - s : n - 1;
        const TorusLagrangian& in = chain[(i + 1) % n].lag;
        const TorusLagrangian& out = chain[i].lag;
        corners.push_back({in.angle().dir, out.angle().dir});
        arcs.push_back(AnglePath::constant(in.angle()));
    }
    return polygonal_index(corners, arcs);
}

IndexReport abstract_index_check(IndexKind kind, const std::vector<AnchoredLag>& chain) {
    IndexReport r{kind, index_value(kind, chain), 0, false};
    for (std::size_t i = 0; i < chain.size(); ++i)
        r.strip_sum += strip_value(kind, chain[i], chain[(i + 1) % chain.size()]);
    r.ok = r.polygon_value == r.strip_sum;
    return r;
}

SplitReport split_check(IndexKind kind, const std::vector<AnchoredLag>& chain, std::size_t i, std::size_t j) {
    if (!(i < j && j < chain.size())) throw Error(ErrorKind::input, "split indices out of range");
    std::vector<AnchoredLag> b1(chain.begin(), chain.begin() + i + 1);
    b1.insert(b1.end(), chain.begin() + j, chain.end());
    std::vector<AnchoredLag> b2(chain.begin() + i, chain.begin() + j + 1);
    SplitReport r{kind, index_value(kind, chain), 0, 0, 0, false};
    r.piece1 = b1.size() >= 2 ? index_value(kind, b1) : Rational(0);
    r.piece2 = index_value(kind, b2);
    r.diagonal_terms = strip_value(kind, chain[i], chain[j]) + strip_value(kind, chain[j], chain[i]);
    r.ok = r.whole == r.piece1 + r.piece2 - r.diagonal_terms;
    return r;
}

}  // namespace floer
