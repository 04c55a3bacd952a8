#ifndef FLOER_RATIONAL_HPP
#define FLOER_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace floer {

using Rational = mpq_class;
using Int = std::int64_t;

enum class ErrorKind {
    order_mismatch,
    exponent_not_in_lattice,
    divisibility,
    parallel_directions,
    non_transverse,
    non_loop,
    inconsistent_points,
    nonpositive_valuation,
    rationality,
    input
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(k)) + ": " + what), kind_(k) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Accepts "p/q", "p", with optional sign. Throws Error(input) otherwise.
Rational parse_rational(const std::string& s);
// Always "p/q" in lowest terms with q > 0.
std::string to_string(const Rational& r);

Rational make_rational(Int p, Int q = 1);
mpz_class floor_of(const Rational& r);
Int floor_int(const Rational& r);
// r - floor(r), in [0,1).
Rational frac(const Rational& r);
// r mod m in [0,m), m > 0.
Rational mod(const Rational& r, const Rational& m);
bool is_integer(const Rational& r);
Int to_int(const Rational& r);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
Int denominator_int(const Rational& r);

}  // namespace floer

#endif
