#ifndef FLOER_NOVIKOV_HPP
#define FLOER_NOVIKOV_HPP

#include <map>
#include <optional>
#include <vector>

#include "json.hpp"

#include "floer/rational.hpp"

namespace floer {

using Json = nlohmann::ordered_json;

// Element of Q[Z/N]: sum of a_j zeta^j, j in [0,N).
class GroupRingCoeff {
public:
    explicit GroupRingCoeff(Int order = 1);
    static GroupRingCoeff scalar(const Rational& a, Int order = 1);
    static GroupRingCoeff root(Int j, Int order, const Rational& a = 1);

    Int order() const { return order_; }
    const std::map<Int, Rational>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    Rational at(Int j) const;
    void add_term(Int j, const Rational& a);

    GroupRingCoeff operator+(const GroupRingCoeff& o) const;
    GroupRingCoeff operator-(const GroupRingCoeff& o) const;
    GroupRingCoeff operator*(const GroupRingCoeff& o) const;
    GroupRingCoeff operator-() const;
    GroupRingCoeff scaled(const Rational& a) const;
    // multiply by zeta^j
    GroupRingCoeff shifted(Int j) const;
    // zeta_N^j -> zeta_M^{jM/N}
    GroupRingCoeff embedded(Int new_order) const;
    bool operator==(const GroupRingCoeff& o) const;

private:
    void check(const GroupRingCoeff& o) const;
    Int order_;
    std::map<Int, Rational> entries_;
};

struct ExponentPair {
    Rational lambda;
    Int mu = 0;
    bool operator<(const ExponentPair& o) const {
        if (lambda != o.lambda) return lambda < o.lambda;
        return mu < o.mu;
    }
    bool operator==(const ExponentPair& o) const { return lambda == o.lambda && mu == o.mu; }
};

// Truncated Novikov series. cutoff == nullopt means no truncation.
// Terms with lambda >= cutoff are dropped.
class NovikovSeries {
public:
    explicit NovikovSeries(Int order = 1, std::optional<Rational> cutoff = std::nullopt);
    static NovikovSeries monomial(const GroupRingCoeff& a, const Rational& lambda, Int mu = 0,
                                  std::optional<Rational> cutoff = std::nullopt);
    static NovikovSeries constant(const Rational& a, Int order = 1,
                                  std::optional<Rational> cutoff = std::nullopt);

    Int order() const { return order_; }
    const std::optional<Rational>& cutoff() const { return cutoff_; }
    const std::map<ExponentPair, GroupRingCoeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExponentPair& e, const GroupRingCoeff& a);

    NovikovSeries operator+(const NovikovSeries& o) const;
    NovikovSeries operator-(const NovikovSeries& o) const;
    NovikovSeries operator*(const NovikovSeries& o) const;
    NovikovSeries operator-() const;
    NovikovSeries& operator+=(const NovikovSeries& o) { return *this = *this + o; }
    NovikovSeries scaled(const GroupRingCoeff& a) const;
    // multiply by T^lambda e^{mu/2}
    NovikovSeries shifted(const Rational& lambda, Int mu = 0) const;
    NovikovSeries with_cutoff(std::optional<Rational> cutoff) const;
    bool operator==(const NovikovSeries& o) const;
    bool operator!=(const NovikovSeries& o) const { return !(*this == o); }

private:
    void check(const NovikovSeries& o) const;
    Int order_;
    std::optional<Rational> cutoff_;
    std::map<ExponentPair, GroupRingCoeff> terms_;
};

std::optional<Rational> min_cutoff(const std::optional<Rational>& a, const std::optional<Rational>& b);

// Smallest lambda with nonzero coefficient; nullopt for zero.
std::optional<Rational> valuation(const NovikovSeries& x);
NovikovSeries truncate(const NovikovSeries& x, const Rational& energy);

struct SubringReport {
    bool in_lambda0 = true;     // all lambda >= 0
    bool in_lambda_plus = true; // all lambda > 0
    bool in_z_over_n = true;    // all lambda in (1/N)Z
    bool mu_even = true;        // all mu even
};
SubringReport subring_report(const NovikovSeries& x, Int N = 1);

// sigma^j on Lambda^{(N)}: T^q -> zeta_N^{jNq} T^q. Requires every lambda in (1/N)Z.
NovikovSeries galois(const NovikovSeries& x, Int j, Int N);
NovikovSeries embed_order(const NovikovSeries& x, Int new_order);

// "1 + 2T^{1/2} + 2T^2", group-ring coefficients as (a + b z3^1); "0" for the zero series
std::string display(const NovikovSeries& x);

Json coeff_to_json(const GroupRingCoeff& a);
GroupRingCoeff coeff_from_json(const Json& j, Int order);
Json to_json(const NovikovSeries& x);
NovikovSeries series_from_json(const Json& j, Int order = 1, std::optional<Rational> cutoff = std::nullopt);

}  // namespace floer

#endif
