#include "floer/reduce.hpp"

#include <sstream>

namespace floer {

namespace {

// int x dy along the segment u -> v
Rational segment_xdy(const Point2& u, const Point2& v) { return (u.x + v.x) / 2 * (v.y - u.y); }

// canonical-fiber correction floor(x) frac(y)
Rational fiber_shift(const Point2& z) { return Rational(floor_int(z.x)) * frac(z.y); }

// fraction t with v - u = t (a,b)
Rational arc_fraction(const Point2& u, const Point2& v, const TorusLagrangian& L) {
    return L.a() != 0 ? (v.x - u.x) / Rational(L.a()) : (v.y - u.y) / Rational(L.b());
}

void require_on(const TorusLagrangian& L, const Point2& p, const char* what) {
    if (!L.contains(p)) throw Error(ErrorKind::inconsistent_points, what);
}

std::string point_str(const Point2& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

}  // namespace

Point2 reference_point(const TorusLagrangian& L) {
    if (L.b() != 0) return {frac(L.offset() / Rational(L.b())), 0};
    return {0, frac(-L.offset() / Rational(L.a()))};
}

Rational holonomy(const TorusLagrangian& L, const Prequantum& P) {
    return frac(Rational(P.m_amb) * (L.offset() + make_rational(L.a() * L.b(), 2)));
}

BSReport is_BS_N_rational(const TorusLagrangian& L, const Prequantum& P, Int N) {
    if (N <= 0 || P.m_amb <= 0) throw Error(ErrorKind::divisibility, "N and m_amb must be positive");
    Rational h = holonomy(L, P);
    BSReport r;
    r.m_L = P.m_amb * denominator_int(h);
    r.rational = N % P.m_amb == 0 && is_integer(h * Rational(N / P.m_amb));
    return r;
}

Rationalization make_rationalization(const TorusLagrangian& L, const Prequantum& P, Int N,
                                     const Rational& phase, const Point2& marked) {
    if (N <= 0 || N % P.m_amb != 0)
        throw Error(ErrorKind::divisibility, "m_amb=" + std::to_string(P.m_amb) + " does not divide N=" +
                                                 std::to_string(N));
    if (!is_BS_N_rational(L, P, N).rational)
        throw Error(ErrorKind::rationality, "line is not BS " + std::to_string(N) + "-rational");
    require_on(L, marked, "marked point not on the line");
    return {L, N, frac(phase), marked};
}

Rationalization anchored_rationalization(const AnchoredLag& al, const Prequantum& P, Int N,
                                         const Rational& base_phase) {
    const auto& path = al.anchor.path;
    Rational integral = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) integral += segment_xdy(path[i], path[i + 1]);
    Rational n(N);
    Rational phase = base_phase - n * integral + n * (fiber_shift(path.back()) - fiber_shift(path.front()));
    return make_rationalization(al.lag, P, N, phase, path.back());
}

Rationalization tensor_power(const Rationalization& S, Int k) {
    if (k <= 0) throw Error(ErrorKind::divisibility, "tensor power must be positive");
    return {S.owner, S.N * k, frac(S.phase * Rational(k)), S.marked};
}

Rational section_phase_at_lift(const Rationalization& S, const Point2& lift) {
    LiftedLine l{S.marked, S.owner.a(), S.owner.b()};
    if (!is_integer(l.level() - (lift.x * S.owner.b() - lift.y * S.owner.a())))
        throw Error(ErrorKind::inconsistent_points, "lift not on the owner line");
    // move to the lifted line through the marked point; the section is lattice invariant
    Point2 q = lift_onto(l, lift);
    Rational n(S.N);
    return frac(S.phase - n * segment_xdy(S.marked, q) + n * (fiber_shift(q) - fiber_shift(S.marked)));
}

Rational section_phase(const Rationalization& S, const Point2& p) {
    require_on(S.owner, p, "point not on the owner line");
    return section_phase_at_lift(S, p);
}

Rational c_of_p(const Rationalization& S0, const Rationalization& S1, const Prequantum& P, const Point2& p) {
    if (S0.N != S1.N)
        throw Error(ErrorKind::order_mismatch,
                    "rationalizations at N=" + std::to_string(S0.N) + " and N=" + std::to_string(S1.N));
    require_on(S0.owner, p, "point not on L0");
    require_on(S1.owner, p, "point not on L1");
    Rational d = frac(section_phase(S1, p) - section_phase(S0, p));
    return Rational(P.m_amb) / Rational(S0.N) * d;
}

EPrime e_prime(const Rational& area, const std::vector<Rational>& corner_c, Int N) {
    EPrime e;
    e.value = area;
    for (const Rational& c : corner_c) e.value -= c;
    e.in_lattice = is_integer(e.value * Rational(N));
    return e;
}

std::map<Point2, NovikovSeries> rebase(const std::map<Point2, NovikovSeries>& series,
                                       const std::map<Point2, Rational>& c) {
    std::map<Point2, NovikovSeries> out;
    for (const auto& [p, s] : series) {
        auto it = c.find(p);
        if (it == c.end()) throw Error(ErrorKind::inconsistent_points, "no c value at " + point_str(p));
        out.emplace(p, s.shifted(it->second, 0));
    }
    return out;
}

std::map<Point2, NovikovSeries> unrebase(const std::map<Point2, NovikovSeries>& series,
                                         const std::map<Point2, Rational>& c) {
    std::map<Point2, Rational> neg;
    for (const auto& [p, v] : c) neg.emplace(p, -v);
    return rebase(series, neg);
}

NovikovSeries rebase_structure_constant(const NovikovSeries& C, const std::vector<Rational>& corner_c) {
    Rational s = 0;
    for (const Rational& c : corner_c) s += c;
    return C.shifted(-s, 0);
}

RescaleEntry rescale_entry(const Rational& c_N, const Rational& c_Nprime, Int N_prime, const Prequantum& P) {
    Rational m(P.m_amb), np(N_prime);
    RescaleEntry e;
    e.c_N = c_N;
    e.c_Nprime = c_Nprime;
    e.delta = np * (c_N - c_Nprime) / m;
    e.delta_integral = is_integer(e.delta);
    e.first_display = np * c_N - c_Nprime;
    e.first_display_integral = is_integer(e.first_display);
    e.derived_exponent = c_N - c_Nprime;
    if (e.delta != 0) e.reciprocal_exponent = Rational(-1) / e.delta;
    return e;
}

std::vector<RescaleEntry> rescale_N(const std::vector<Rational>& c_N, Int N, Int N_prime, const Prequantum& P) {
    if (N <= 0 || N_prime % N != 0)
        throw Error(ErrorKind::divisibility, "N=" + std::to_string(N) + " does not divide N'=" +
                                                 std::to_string(N_prime));
    if (N % P.m_amb != 0)
        throw Error(ErrorKind::divisibility, "m_amb=" + std::to_string(P.m_amb) + " does not divide N=" +
                                                 std::to_string(N));
    Rational m(P.m_amb), np(N_prime);
    std::vector<RescaleEntry> out;
    for (const Rational& c : c_N) {
        if (c < 0 || c >= m / Rational(N))
            throw Error(ErrorKind::exponent_not_in_lattice, "c=" + to_string(c) + " outside [0, m/N)");
        out.push_back(rescale_entry(c, mod(c, m / np), N_prime, P));
    }
    return out;
}

GaloisObject galois_twist(const GaloisObject& obj, Int j, const Prequantum& P) {
    Int N = obj.rat.N;
    if (N % P.m_amb != 0) throw Error(ErrorKind::divisibility, "m_amb does not divide N");
    if (!obj.bundle.is_N_rational(N)) throw Error(ErrorKind::rationality, "flat bundle is not N-rational");
    GaloisObject t = obj;
    t.bundle.holonomy = frac(obj.bundle.holonomy + Rational(j) * holonomy(obj.lag, P));
    return t;
}

Rational triangle_weight(const Triangle& t, const std::vector<FlatBundle>& b) {
    Rational t2 = arc_fraction(t.v02, t.v21, b[2].owner);
    Rational t1 = arc_fraction(t.v21, t.v10, b[1].owner);
    Rational t0 = arc_fraction(t.v10, t.v02, b[0].owner);
    return -(b[0].holonomy * t0 + b[1].holonomy * t1 + b[2].holonomy * t2);
}

namespace {

struct LinePosition {
    Rational H;      // potential at p
    Rational s_hat;  // frac of the arc coordinate from the reference point
};

LinePosition line_position(const TorusLagrangian& L, const Point2& p, const Rational& h, Int m) {
    Point2 ph = reduce_mod1(p);
    LiftedLine l{ph, L.a(), L.b()};
    Point2 z0 = lift_onto(l, reference_point(L));
    Rational s = arc_fraction(z0, ph, L);
    Rational mm(m);
    LinePosition r;
    r.H = -mm * segment_xdy(z0, ph) - h * s + mm * (fiber_shift(ph) - fiber_shift(z0));
    r.s_hat = frac(s);
    return r;
}

}  // namespace

Rational galois_basis_factor(const GaloisObject& a, const GaloisObject& b, const Point2& p, Int j,
                             const Prequantum& P) {
    Rational hPa = -holonomy(a.lag, P), hPb = -holonomy(b.lag, P);
    LinePosition qa = line_position(a.lag, p, hPa, P.m_amb);
    LinePosition qb = line_position(b.lag, p, hPb, P.m_amb);
    Rational jj(j);
    Rational sa = a.bundle.holonomy + jj * holonomy(a.lag, P);
    Rational sb = b.bundle.holonomy + jj * holonomy(b.lag, P);
    Rational na(-floor_int(sa)), nb(-floor_int(sb));
    Rational c = c_of_p(a.rat, b.rat, P, p);
    return -jj * Rational(P.m_amb) * c + jj * (qb.H - qa.H) + nb * qb.s_hat - na * qa.s_hat;
}

namespace {

Int phase_order(const Rational& q) { return denominator_int(q); }

NovikovSeries weighted_constant(const std::vector<Triangle>& tris, const std::vector<FlatBundle>& bundles,
                                const std::vector<Rational>& corner_c, const Rational& extra, Int order,
                                const Rational& cutoff) {
    NovikovSeries C(order, cutoff);
    for (const Triangle& t : tris) {
        Rational w = frac(triangle_weight(t, bundles) + extra);
        Rational e = t.area;
        for (const Rational& c : corner_c) e -= c;
        C.add_term({e, 0}, GroupRingCoeff::root(to_int(w * Rational(order)), order));
    }
    return C;
}

}  // namespace

GaloisReport galois_equivariance_check(const std::vector<GaloisObject>& objs, const Prequantum& P,
                                       const Rational& cutoff) {
    if (objs.size() != 3) throw Error(ErrorKind::input, "galois check needs three objects");
    Int N = objs[0].rat.N;
    for (const auto& o : objs)
        if (o.rat.N != N) throw Error(ErrorKind::order_mismatch, "objects rationalized at different N");
    if (N % P.m_amb != 0) throw Error(ErrorKind::divisibility, "m_amb does not divide N");
    const TorusLagrangian &L0 = objs[0].lag, &L1 = objs[1].lag, &L2 = objs[2].lag;
    GaloisReport rep;
    // E' exponents carry cutoff shifts of at most 3 m/N
    Rational wide = cutoff + make_rational(3 * P.m_amb, N);
    for (const Point2& p10 : intersections(L0, L1))
        for (const Point2& p21 : intersections(L1, L2))
            for (const Point2& p02 : intersections(L2, L0)) {
                auto all = enumerate_triangles(L0, L1, L2, p10, p21, p02, wide);
                std::vector<Triangle> tris;
                for (auto& t : all)
                    if (t.counted) tris.push_back(t);
                std::vector<Rational> cc = {c_of_p(objs[0].rat, objs[1].rat, P, p10),
                                            c_of_p(objs[1].rat, objs[2].rat, P, p21),
                                            c_of_p(objs[2].rat, objs[0].rat, P, p02)};
                bool lattice = true;
                for (const Triangle& t : tris) {
                    EPrime e = e_prime(t.area, cc, N);
                    if (!e.in_lattice) lattice = false;
                    if (!e.in_lattice)
                        rep.violations.push_back("E'=" + to_string(e.value) + " not in (1/" + std::to_string(N) +
                                                 ")Z at " + point_str(p10) + point_str(p21) + point_str(p02));
                }
                if (!lattice) continue;
                for (Int j = 0; j < N / P.m_amb; ++j) {
                    std::vector<GaloisObject> tw;
                    for (const auto& o : objs) tw.push_back(galois_twist(o, j, P));
                    Rational kappa = galois_basis_factor(objs[0], objs[1], p10, j, P) +
                                     galois_basis_factor(objs[1], objs[2], p21, j, P) +
                                     galois_basis_factor(objs[2], objs[0], p02, j, P);
                    std::vector<FlatBundle> b0, b1;
                    for (int i = 0; i < 3; ++i) {
                        b0.push_back(objs[i].bundle);
                        b1.push_back(tw[i].bundle);
                    }
                    Int M = N;
                    for (const Triangle& t : tris) {
                        M = lcm(M, phase_order(frac(triangle_weight(t, b0))));
                        M = lcm(M, phase_order(frac(triangle_weight(t, b1) + kappa)));
                    }
                    Rational cut = cutoff;
                    NovikovSeries C = weighted_constant(tris, b0, cc, 0, M, cut);
                    GaloisCase gc;
                    gc.p10 = p10;
                    gc.p21 = p21;
                    gc.p02 = p02;
                    gc.j = j;
                    gc.triangles = tris.size();
                    gc.sigma_side = galois(C, j * P.m_amb, N);
                    gc.twist_side = embed_order(weighted_constant(tris, b1, cc, kappa, M, cut),
                                                gc.sigma_side.order());
                    gc.equal = gc.sigma_side == gc.twist_side;
                    if (!gc.equal) {
                        std::ostringstream os;
                        os << "galois mismatch j=" << j << " at " << point_str(p10) << point_str(p21)
                           << point_str(p02);
                        rep.violations.push_back(os.str());
                    }
                    rep.cases.push_back(std::move(gc));
                }
            }
    return rep;
}

}  // namespace floer
