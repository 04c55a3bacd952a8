// One line per acceptance criterion; exit status is the number of failures.
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "floer/cli.hpp"
#include "floer/export.hpp"
#include "floer/reduce.hpp"

using namespace floer;

namespace {

std::mt19937_64 gen(424242);

Int ri(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(gen); }

Point2 P(const Rational& x, const Rational& y) { return {x, y}; }

TorusLagrangian rand_lag() {
    for (;;) {
        Int a = ri(-3, 3), b = ri(-3, 3);
        if ((a == 0 && b == 0) || gcd(a, b) != 1) continue;
        return TorusLagrangian(a, b, make_rational(ri(0, 5), ri(1, 4)), ri(-2, 2));
    }
}

Point2 point_on(const TorusLagrangian& L) {
    return L.b() != 0 ? P(L.offset() / Rational(L.b()), 0) : P(0, -L.offset() / Rational(L.a()));
}

AnchoredLag rand_anchored(const Point2& base) {
    TorusLagrangian L = rand_lag();
    Point2 e = point_on(L) + P(ri(-2, 2), ri(-2, 2));
    return AnchoredLag(L, Anchor::straight(base, e));
}

TorusLagrangian ex2(int i) {
    if (i == 0) return TorusLagrangian(0, 1, 0);
    if (i == 1) return TorusLagrangian(1, 0, 0);
    return TorusLagrangian(1, -1, 0);
}
AnchoredLag g0(Int k) { return AnchoredLag(ex2(0), Anchor::straight(P(0, 0), P(k, 0))); }
AnchoredLag g1(Int l) { return AnchoredLag(ex2(1), Anchor::straight(P(0, 0), P(0, l))); }
AnchoredLag g2(Int m) {
    return AnchoredLag(ex2(2), Anchor::straight(P(0, 0), P(make_rational(m, 2), make_rational(m, 2))));
}

NovikovSeries theta(Int kmax, const Rational& E) {
    NovikovSeries s(1, E);
    for (Int k = -kmax; k <= kmax; ++k) s.add_term({make_rational(k * k, 2), 0}, GroupRingCoeff::scalar(1));
    return s;
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void report(int n, const char* name, const std::function<Outcome()>& f) {
    Outcome o;
    try {
        o = f();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", n, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
}

// triangles of enumerate_triangles as anchored chains from the origin
std::vector<AnchoredLag> chain_of(const Triangle& t, const TorusLagrangian& L0, const TorusLagrangian& L1,
                                  const TorusLagrangian& L2) {
    return {AnchoredLag(L0, Anchor::straight(P(0, 0), t.v10)), AnchoredLag(L1, Anchor::straight(P(0, 0), t.v21)),
            AnchoredLag(L2, Anchor::straight(P(0, 0), t.v02))};
}

Rational rr(Int num, Int den) { return make_rational(ri(-num, num), ri(1, den)); }

// exponents in (1/den)Z within [lo, lo + 8]
NovikovSeries rand_series(Int order, std::optional<Rational> cutoff = std::nullopt, Int lo = -2, Int den = 2) {
    NovikovSeries s(order, cutoff);
    Int n = ri(0, 4);
    for (Int i = 0; i < n; ++i) {
        GroupRingCoeff c(order);
        c.add_term(ri(0, order - 1), rr(4, 3));
        if (c.is_zero()) c.add_term(0, 1);
        s.add_term({make_rational(lo * den + ri(0, 8 * den), den), ri(-1, 1)}, c);
    }
    return s;
}

}  // namespace

int main() {
    const Point2 O = P(0, 0);

    report(1, "theta product", [&] {
        Point2 o{0, 0};
        NovikovSeries c5 = m2_nonanchored(ex2(0), ex2(1), ex2(2), o, o, o, 5);
        NovikovSeries c13 = m2_nonanchored(ex2(0), ex2(1), ex2(2), o, o, o, 13);
        bool ok = c5 == theta(3, 5) && c13 == theta(5, 13) && display(c5) == "1 + 2T^{1/2} + 2T^2 + 2T^{9/2}";
        return Outcome{ok, "cutoff 5: " + display(c5) + "; cutoff 13: " + display(c13)};
    });

    report(2, "anchored product", [&] {
        int counted = 0, good = 0;
        for (Int k = -2; k <= 2; ++k)
            for (Int l = -2; l <= 2; ++l)
                for (Int m = -2; m <= 2; ++m) {
                    auto at = anchored_triangle(g0(k), g1(l), g2(m));
                    if (!at.tri.counted) continue;
                    ++counted;
                    auto e = m2_anchored(g0(k), g1(l), g2(m), std::nullopt);
                    Int d = m - k - l;
                    if (e.size() == 1 && e[0].coeff == NovikovSeries::constant(1) &&
                        at.tri.area == make_rational(d * d, 2) && e[0].out.lift == P(k, m - k))
                        ++good;
                }
        return Outcome{counted == 125 && good == counted,
                       std::to_string(good) + "/" + std::to_string(counted) + " triples, one output, coefficient 1"};
    });

    report(3, "admissibility partition", [&] {
        TorusLagrangian L0(1, 0, 0), L1(1, 3, 0);
        auto pts = intersections(L0, L1);
        bool ok = pts.size() == 3;
        AnchoredLag a0(L0, Anchor{{P(make_rational(1, 2), 0), O}});
        for (Int i = -6; i <= 6; ++i) {
            AnchoredLag a1(L1, Anchor{{P(make_rational(1, 2), 0), O, P(make_rational(i, 3), 0)}});
            Generator g = admissible_generator(a0, a1);
            ok = ok && g.point == P(frac(make_rational(i, 3)), 0) && spectrum(a0, a1).size() == 1;
        }
        return Outcome{ok, std::to_string(pts.size()) + " points; i in -6..6 admit [i/3 mod 1, 0]"};
    });

    report(4, "degPD identity", [&] {
        int n = 0, good = 0;
        while (n < 200) {
            auto A = rand_lag(), B = rand_lag();
            if (det(A, B) == 0) continue;
            ++n;
            good += maslov_morse_degree(A, B) + maslov_morse_degree(B, A) == 1;
        }
        return Outcome{good == n, std::to_string(good) + "/" + std::to_string(n) + " pairs"};
    });

    report(5, "index sum and rigid index", [&] {
        int n = 0, good = 0;
        auto check = [&](const std::vector<AnchoredLag>& ch) {
            ++n;
            good += chain_polygonal_index(ch) == -1 && abstract_index_check(IndexKind::maslov, ch).ok;
        };
        for (const auto& t : enumerate_triangles(ex2(0), ex2(1), ex2(2), O, O, O, 13))
            if (t.counted) check(chain_of(t, ex2(0), ex2(1), ex2(2)));
        for (Int k = -2; k <= 2; ++k)
            for (Int l = -2; l <= 2; ++l)
                for (Int m = -2; m <= 2; ++m)
                    if (anchored_triangle(g0(k), g1(l), g2(m)).tri.counted) check({g0(k), g1(l), g2(m)});
        return Outcome{good == n && n == 136, std::to_string(good) + "/" + std::to_string(n) + " triangles"};
    });

    report(6, "degree rule", [&] {
        int n = 0, good = 0;
        for (Int k = -2; k <= 2; ++k)
            for (Int l = -2; l <= 2; ++l)
                for (Int m = -2; m <= 2; ++m)
                    for (const auto& e : m2_anchored(g0(k), g1(l), g2(m), std::nullopt)) {
                        ++n;
                        good += e.out.degree == e.in1.degree + e.in2.degree;
                    }
        return Outcome{good == n && n == 125, std::to_string(good) + "/" + std::to_string(n) + " products"};
    });

    report(7, "grading comparison", [&] {
        int n = 0, good = 0, points = 0;
        while (n < 50) {
            auto A = rand_lag(), B = rand_lag();
            if (det(A, B) == 0) continue;
            ++n;
            Int mm = maslov_morse_degree(A, B);
            bool ok = true;
            for (const auto& p : intersections(A, B)) {
                ++points;
                ok = ok && seidel_degree(p, A, B) == mm;
            }
            good += ok;
        }
        return Outcome{good == n, std::to_string(good) + "/" + std::to_string(n) + " configurations, " +
                                      std::to_string(points) + " points"};
    });

    std::vector<TorusLagrangian> four = {TorusLagrangian(1, 0, 0), TorusLagrangian(1, -1, 0), TorusLagrangian(0, 1, 0),
                                         TorusLagrangian(1, 1, 0)};
    std::vector<AnchoredLag> four_anchored;
    for (const auto& L : four) four_anchored.emplace_back(L, Anchor::straight(O, O));

    report(8, "A-infinity and associativity", [&] {
        AInftyStructure S = anchored_structure(four_anchored, Rational(8));
        auto rep = ainfty_residual(S, 3);
        auto cases = nonanchored_associativity(four, 8);
        bool ok = rep.residual.empty() && rep.tuples_checked > 0 && !cases.empty();
        std::size_t eq = 0;
        for (const auto& c : cases) eq += c.equal && !c.left.is_zero();
        ok = ok && eq == cases.size();
        // serial enumeration as a second oracle for every product used
        for (const auto& p10 : intersections(four[0], four[1]))
            for (const auto& p21 : intersections(four[1], four[2]))
                for (const auto& r20 : intersections(four[2], four[0]))
                    ok = ok && m2_nonanchored(four[0], four[1], four[2], p10, p21, r20, 8) ==
                                   m2_nonanchored_serial(four[0], four[1], four[2], p10, p21, r20, 8);
        std::ostringstream os;
        os << "residual empty over " << rep.tuples_checked << " tuples; " << eq << "/" << cases.size()
           << " non-anchored cases agree";
        return Outcome{ok, os.str()};
    });

    report(9, "filtration", [&] {
        std::size_t exports = 0, violations = 0, triangles = 0, bad_sign = 0;
        auto scan = [&](const std::vector<AnchoredLag>& lags) {
            AInftyStructure S = anchored_structure(lags, std::nullopt);
            ++exports;
            violations += filtration_check(S).size();
            for (std::size_t i = 0; i < lags.size(); ++i)
                for (std::size_t j = i + 1; j < lags.size(); ++j)
                    for (std::size_t k = j + 1; k < lags.size(); ++k) {
                        auto at = anchored_triangle(lags[i], lags[j], lags[k]);
                        if (!at.tri.counted) continue;
                        ++triangles;
                        bad_sign += at.g20.action != at.g10.action + at.g21.action + at.tri.area;
                    }
        };
        scan(four_anchored);
        scan({g0(0), g1(0), g2(0)});
        for (Int k = -2; k <= 2; ++k) scan({g0(k), g1(1), g2(-k)});
        int made = 0;
        while (made < 100) {
            std::vector<AnchoredLag> lags = {rand_anchored(O), rand_anchored(O), rand_anchored(O)};
            if (det(lags[0].lag, lags[1].lag) == 0 || det(lags[1].lag, lags[2].lag) == 0 ||
                det(lags[0].lag, lags[2].lag) == 0)
                continue;
            ++made;
            scan(lags);
        }
        std::ostringstream os;
        os << exports << " exports, " << violations << " violations; additivity with sign +1 on " << triangles
           << " triangles, " << bad_sign << " mismatches";
        return Outcome{violations == 0 && bad_sign == 0 && triangles > 0, os.str()};
    });

    report(10, "spectrum shift", [&] {
        int n = 0, good = 0;
        for (int it = 0; it < 200; ++it) {
            AnchoredLag a = rand_anchored(O), b = rand_anchored(O);
            if (det(a.lag, b.lag) == 0) continue;
            ++n;
            Point2 w = P(rr(6, 4), rr(6, 4));
            AnchoredLag d(a.lag, Anchor{{O, w, a.anchor.endpoint()}});
            Rational A = shoelace({O, w, a.anchor.endpoint()});
            Rational predicted = kMirrorOrientation ? -A : A;
            bool ok = spectrum(d, b)[0] - spectrum(a, b)[0] == predicted &&
                      spectrum(b, d)[0] - spectrum(b, a)[0] == -predicted;
            good += ok;
        }
        return Outcome{good == n && n > 100, std::to_string(good) + "/" + std::to_string(n) + " detours"};
    });

    report(11, "rationality", [&] {
        Prequantum pq;
        std::size_t values = 0, bad = 0, forms = 0, bad_forms = 0;
        for (Int p0 = 0; p0 < 4; ++p0)
            for (Int p1 = 0; p1 < 4; ++p1)
                for (Int p2 = 0; p2 < 4; ++p2) {
                    Rationalization S[3] = {make_rationalization(ex2(0), pq, 2, make_rational(p0, 4), O),
                                            make_rationalization(ex2(1), pq, 2, make_rational(p1, 3), O),
                                            make_rationalization(ex2(2), pq, 2, make_rational(p2, 5), O)};
                    std::vector<Rational> cc = {c_of_p(S[0], S[1], pq, O), c_of_p(S[1], S[2], pq, O),
                                                c_of_p(S[2], S[0], pq, O)};
                    Rational E = 6;
                    NovikovSeries C = m2_nonanchored(ex2(0), ex2(1), ex2(2), O, O, O, E + 2);
                    NovikovSeries expect(1, E);
                    for (const auto& t : enumerate_triangles(ex2(0), ex2(1), ex2(2), O, O, O, E + 2)) {
                        if (!t.counted) continue;
                        EPrime e = e_prime(t.area, cc, 2);
                        ++values;
                        bad += !e.in_lattice;
                        expect.add_term({e.value, 0}, GroupRingCoeff::scalar(1));
                    }
                    ++forms;
                    bad_forms += !(rebase_structure_constant(C, cc).with_cutoff(E) == expect);
                }
        std::ostringstream os;
        os << values << " E' values, " << bad << " outside (1/2)Z; " << forms - bad_forms << "/" << forms
           << " rebased constants equal sum of T^{E'}";
        return Outcome{bad == 0 && bad_forms == 0, os.str()};
    });

    report(12, "Galois equivariance", [&] {
        std::ostringstream os;
        bool ok = true;
        for (Int N : {2, 3, 4, 6}) {
            RunConfig rc;
            rc.command = "galois";
            rc.config_path = std::string(FLOER_FIXTURES) + "/galois_n" + std::to_string(N) + ".toml";
            std::ostringstream out, err;
            int code = run(rc, out, err);
            Json j = Json::parse(out.str());
            std::set<Int> js;
            std::size_t nontrivial = 0;
            for (const auto& c : j["cases"]) {
                js.insert(c["j"].get<Int>());
                nontrivial += c["triangles"].get<Int>() > 0;
            }
            bool all_j = js.size() == static_cast<std::size_t>(N);
            ok = ok && code == 0 && all_j && nontrivial > 0;
            os << "N=" << N << ": " << j["cases"].size() << " cases" << (code == 0 ? " equal" : " MISMATCH") << "; ";
        }
        // random rational configurations
        Prequantum pq;
        std::size_t cases = 0, bad = 0;
        int made = 0;
        while (made < 40) {
            Int N = std::vector<Int>{2, 3, 4, 6}[made % 4];
            std::vector<GaloisObject> objs;
            for (int i = 0; i < 3; ++i) {
                Int a, b;
                do {
                    a = ri(-3, 3);
                    b = ri(-3, 3);
                } while ((a == 0 && b == 0) || gcd(a, b) != 1);
                TorusLagrangian L(a, b, make_rational(ri(0, N - 1), N) - make_rational(a * b, 2));
                objs.push_back({L, FlatBundle{L, make_rational(ri(0, N - 1), N)},
                                make_rationalization(L, pq, N, make_rational(ri(0, 9), 10), reduce_mod1(point_on(L)))});
            }
            if (det(objs[0].lag, objs[1].lag) == 0 || det(objs[1].lag, objs[2].lag) == 0 ||
                det(objs[0].lag, objs[2].lag) == 0)
                continue;
            ++made;
            auto rep = galois_equivariance_check(objs, pq, 3);
            cases += rep.cases.size();
            bad += rep.violations.size();
        }
        os << "random: " << cases - bad << "/" << cases << " cases";
        return Outcome{ok && bad == 0, os.str()};
    });

    report(13, "Novikov laws", [&] {
        int ultra = 0, mult = 0, trunc = 0, hom = 0;
        for (int it = 0; it < 500; ++it) {
            NovikovSeries x = rand_series(3), y = rand_series(3);
            auto vx = valuation(x), vy = valuation(y), vs = valuation(x + y);
            if (!vs || (vx && vy && *vs >= std::min(*vx, *vy)) || (!vx && vs == vy) || (!vy && vs == vx)) ++ultra;
        }
        for (int it = 0; it < 500; ++it) {
            NovikovSeries x = rand_series(1), y = rand_series(1);
            auto vx = valuation(x), vy = valuation(y), vp = valuation(x * y);
            if (!vx || !vy ? !vp : (vp && *vp == *vx + *vy)) ++mult;
        }
        for (int it = 0; it < 500; ++it) {
            NovikovSeries x = rand_series(2, std::nullopt, 0), y = rand_series(2, std::nullopt, 0);
            Rational E = make_rational(ri(1, 12), 2);
            if (truncate(x * y, E) == truncate(truncate(x, E) * truncate(y, E), E)) ++trunc;
        }
        for (int it = 0; it < 500; ++it) {
            Int N = std::vector<Int>{2, 3, 4, 6}[ri(0, 3)];
            Int j = ri(0, 2 * N);
            NovikovSeries x = rand_series(N, std::nullopt, -2, N), y = rand_series(N, std::nullopt, -2, N);
            NovikovSeries gx = galois(x, j, N), gy = galois(y, j, N);
            if (galois(x + y, j, N) == gx + gy && galois(x * y, j, N) == gx * gy) ++hom;
        }
        std::ostringstream os;
        os << "ultrametric " << ultra << "/500, multiplicative " << mult << "/500, truncation " << trunc
           << "/500, galois homomorphism " << hom << "/500";
        return Outcome{ultra == 500 && mult == 500 && trunc == 500 && hom == 500, os.str()};
    });

    std::printf("%d failed\n", failures);
    return failures == 0 ? 0 : 1;
}
