#include "floer/rational.hpp"

#include <numeric>

namespace floer {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::order_mismatch: return "order-mismatch";
    case ErrorKind::exponent_not_in_lattice: return "exponent-not-in-lattice";
    case ErrorKind::divisibility: return "divisibility";
    case ErrorKind::parallel_directions: return "parallel-directions";
    case ErrorKind::non_transverse: return "non-transverse";
    case ErrorKind::non_loop: return "non-loop";
    case ErrorKind::inconsistent_points: return "inconsistent-points";
    case ErrorKind::nonpositive_valuation: return "nonpositive-valuation";
    case ErrorKind::rationality: return "rationality";
    case ErrorKind::input: return "input";
    }
    return "error";
}

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t.push_back(c);
    auto digits = [](const std::string& u) {
        std::size_t i = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
        if (i >= u.size()) return false;
        for (; i < u.size(); ++i)
            if (u[i] < '0' || u[i] > '9') return false;
        return true;
    };
    auto slash = t.find('/');
    std::string num = slash == std::string::npos ? t : t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!digits(num) || !digits(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorKind::input, "not a rational: '" + s + "'");
    if (num[0] == '+') num = num.substr(1);
    mpz_class n(num), d(den);
    if (d == 0) throw Error(ErrorKind::input, "zero denominator: '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational make_rational(Int p, Int q) {
    Rational r(mpz_class(std::to_string(p)), mpz_class(std::to_string(q)));
    r.canonicalize();
    return r;
}

mpz_class floor_of(const Rational& r) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return f;
}

Int floor_int(const Rational& r) {
    mpz_class f = floor_of(r);
    if (!f.fits_slong_p()) throw Error(ErrorKind::input, "integer overflow");
    return f.get_si();
}

Rational frac(const Rational& r) { return r - Rational(floor_of(r)); }

Rational mod(const Rational& r, const Rational& m) {
    Rational q = r / m;
    return r - m * Rational(floor_of(q));
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Int to_int(const Rational& r) {
    if (!is_integer(r)) throw Error(ErrorKind::input, "not an integer: " + to_string(r));
    return floor_int(r);
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }
Int lcm(Int a, Int b) { return std::lcm(a, b); }

Int denominator_int(const Rational& r) {
    if (!r.get_den().fits_slong_p()) throw Error(ErrorKind::input, "denominator overflow");
    return r.get_den().get_si();
}

}  // namespace floer
