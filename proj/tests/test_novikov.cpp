#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"

using namespace floer;
using namespace testutil;

namespace {

Rational q(const char* s) { return parse_rational(s); }

NovikovSeries T(const Rational& lam, Int mu = 0, Int N = 1) {
    return NovikovSeries::monomial(GroupRingCoeff::scalar(1, N), lam, mu);
}

// Naive product over flat term lists, used as an oracle for mul.
NovikovSeries naive_mul(const NovikovSeries& x, const NovikovSeries& y) {
    struct Flat { Rational lam; Int mu; Int root; Rational a; };
    std::vector<Flat> fx, fy;
    for (const auto& [e, c] : x.terms())
        for (const auto& [j, a] : c.entries()) fx.push_back({e.lambda, e.mu, j, a});
    for (const auto& [e, c] : y.terms())
        for (const auto& [j, a] : c.entries()) fy.push_back({e.lambda, e.mu, j, a});
    NovikovSeries r(x.order(), min_cutoff(x.cutoff(), y.cutoff()));
    for (const auto& u : fx)
        for (const auto& v : fy)
            r.add_term({u.lam + v.lam, u.mu + v.mu}, GroupRingCoeff::root(u.root + v.root, x.order(), u.a * v.a));
    return r;
}

constexpr int kCases = 500;

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(to_string(q("2/4")) == "1/2");
    CHECK(to_string(q("-3")) == "-3/1");
    CHECK(to_string(q("0")) == "0/1");
    CHECK_THROWS_AS(q("1/0"), Error);
    CHECK_THROWS_AS(q("x"), Error);
    CHECK(frac(q("-1/3")) == q("2/3"));
    CHECK(mod(q("5/4"), q("1/2")) == q("1/4"));
}

TEST_CASE("add") {
    CHECK(T(q("1/2")) + T(q("1/2")) == T(q("1/2")).scaled(GroupRingCoeff::scalar(2)));
    NovikovSeries x = T(0) + T(q("1/2")).scaled(GroupRingCoeff::scalar(2));
    CHECK(x + NovikovSeries() == x);
    NovikovSeries xc = x.with_cutoff(Rational(2));
    NovikovSeries s = xc + T(2);
    CHECK(s == xc);
    CHECK(*s.cutoff() == 2);
    CHECK_THROWS_AS(T(0, 0, 2) + T(0, 0, 3), Error);
}

TEST_CASE("mul") {
    CHECK(T(q("1/2"), 1) * T(q("1/2"), 1) == T(1, 2));
    NovikovSeries a = T(0) + T(1), b = T(0) - T(1);
    CHECK(a * b == T(0) - T(2));
    NovikovSeries th(1, Rational(1));
    for (Int k = -2; k <= 2; ++k) th.add_term({make_rational(k * k, 2), 0}, GroupRingCoeff::scalar(1));
    NovikovSeries expect(1, Rational(1));
    expect.add_term({0, 0}, GroupRingCoeff::scalar(1));
    expect.add_term({q("1/2"), 0}, GroupRingCoeff::scalar(4));
    CHECK(th * th == expect);
    for (int i = 0; i < kCases; ++i) {
        Int N = rand_int(1, 4);
        auto x = rand_series(N), y = rand_series(N);
        CHECK(x * y == naive_mul(x, y));
    }
}

TEST_CASE("valuation") {
    CHECK(!valuation(NovikovSeries()).has_value());
    CHECK(*valuation(T(-1).scaled(GroupRingCoeff::scalar(3)) + T(2)) == -1);
}

TEST_CASE("property: ultrametric inequality") {
    int failures = 0;
    for (int i = 0; i < kCases; ++i) {
        Int N = rand_int(1, 4);
        auto x = rand_series(N), y = rand_series(N);
        auto vx = valuation(x), vy = valuation(y), vs = valuation(x + y);
        if (!vx || !vy) continue;
        Rational m = std::min(*vx, *vy);
        if (vs && *vs < m) ++failures;
        if (*vx != *vy && (!vs || *vs != m)) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("property: valuation multiplicativity for N=1") {
    int failures = 0;
    for (int i = 0; i < kCases; ++i) {
        auto x = rand_series(1), y = rand_series(1);
        auto vx = valuation(x), vy = valuation(y), vp = valuation(x * y);
        if (!vx || !vy) {
            if (vp) ++failures;
            continue;
        }
        if (!vp || *vp != *vx + *vy) ++failures;
    }
    CHECK(failures == 0);
    // N > 1: only an inequality; 1 + zeta_2 is a zero divisor
    auto z = T(0, 0, 2) + NovikovSeries::monomial(GroupRingCoeff::root(1, 2), 0);
    auto w = T(0, 0, 2) - NovikovSeries::monomial(GroupRingCoeff::root(1, 2), 0);
    CHECK((z * w).is_zero());
}

TEST_CASE("property: truncation coherence") {
    int failures = 0;
    for (int i = 0; i < kCases; ++i) {
        Int N = rand_int(1, 3);
        auto x = rand_series(N, 3, -1, 6, Rational(rand_int(3, 7)), 6);
        auto y = rand_series(N, 3, -1, 6, Rational(rand_int(3, 7)), 6);
        Rational E = make_rational(rand_int(-3, 3 * 3), 3);
        Rational bound = std::min(*x.cutoff(), *y.cutoff());
        if (E > bound) E = bound;
        // lower exponents bounded below by -1, so truncate(x,E) drops at most what x*y drops
        auto lhs = truncate(x * y, E);
        auto rhs = truncate(truncate(x, E + 1) * truncate(y, E + 1), E);
        if (lhs != rhs) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("property: truncation coherence on Lambda0") {
    int failures = 0;
    for (int i = 0; i < kCases; ++i) {
        auto x = rand_series(1, 2, 0, 6, Rational(7), 6);
        auto y = rand_series(1, 2, 0, 6, Rational(6), 6);
        Rational E = make_rational(rand_int(0, 12), 2);
        if (truncate(x * y, E) != truncate(truncate(x, E) * truncate(y, E), E)) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("property: filtration F^a F^b in F^{a+b}") {
    int failures = 0;
    for (int i = 0; i < kCases; ++i) {
        auto x = rand_series(1), y = rand_series(1);
        auto vx = valuation(x), vy = valuation(y);
        if (!vx || !vy) continue;
        Rational a = *vx - make_rational(rand_int(0, 3), 2);
        Rational b = *vy - make_rational(rand_int(0, 3), 2);
        auto vp = valuation(x * y);
        if (vp && *vp < a + b) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("subring_report") {
    auto x = T(0) + T(q("1/2")).scaled(GroupRingCoeff::scalar(2));
    auto r = subring_report(x, 2);
    CHECK(r.in_lambda0);
    CHECK(r.in_z_over_n);
    CHECK(!subring_report(T(q("1/3")), 2).in_z_over_n);
    NovikovSeries th(1, Rational(13));
    for (Int k = -5; k <= 5; ++k) th.add_term({make_rational(k * k, 2), 0}, GroupRingCoeff::scalar(1));
    CHECK(subring_report(th, 2).in_z_over_n);
}

TEST_CASE("galois") {
    CHECK(galois(T(q("1/2")), 1, 2) == NovikovSeries::monomial(GroupRingCoeff::root(1, 2), q("1/2")));
    CHECK(galois(T(1), 1, 2) == T(1, 0, 2));
    CHECK_THROWS_AS(galois(T(q("1/3")), 1, 2), Error);
}

TEST_CASE("property: galois is a ring homomorphism") {
    int failures = 0;
    for (int i = 0; i < kCases; ++i) {
        Int N = rand_int(1, 6);
        Int j = rand_int(-7, 7);
        auto x = rand_series(N, N), y = rand_series(N, N);
        if (galois(x * y, j, N) != galois(x, j, N) * galois(y, j, N)) ++failures;
        if (galois(x + y, j, N) != galois(x, j, N) + galois(y, j, N)) ++failures;
        if (galois(x, N, N) != x) ++failures;
        if (galois(galois(x, j, N), 1, N) != galois(x, j + 1, N)) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("embed_order") {
    CHECK(embed_order(T(0), 4) == T(0, 0, 4));
    auto z2 = NovikovSeries::monomial(GroupRingCoeff::root(1, 2), 0);
    CHECK(embed_order(z2, 4) == NovikovSeries::monomial(GroupRingCoeff::root(2, 4), 0));
    CHECK_THROWS_AS(embed_order(z2, 3), Error);
    for (int i = 0; i < kCases; ++i) {
        Int N = rand_int(1, 4);
        auto x = rand_series(N);
        auto e = embed_order(x, N * rand_int(1, 3));
        CHECK(valuation(e) == valuation(x));
    }
}

TEST_CASE("json round trip") {
    for (int i = 0; i < 100; ++i) {
        Int N = rand_int(1, 4);
        auto x = rand_series(N);
        CHECK(series_from_json(to_json(x), N) == x);
    }
    auto j = to_json(T(q("1/2")).scaled(GroupRingCoeff::scalar(2)));
    CHECK(j.dump() == R"([{"lambda":"1/2","mu":0,"coeff":{"0":"2/1"}}])");
}
