#include "floer/novikov.hpp"

namespace floer {

namespace {
Int reduce_mod(Int j, Int n) {
    Int r = j % n;
    return r < 0 ? r + n : r;
}
}  // namespace

GroupRingCoeff::GroupRingCoeff(Int order) : order_(order) {
    if (order < 1) throw Error(ErrorKind::input, "group ring order must be positive");
}

GroupRingCoeff GroupRingCoeff::scalar(const Rational& a, Int order) {
    GroupRingCoeff c(order);
    c.add_term(0, a);
    return c;
}

GroupRingCoeff GroupRingCoeff::root(Int j, Int order, const Rational& a) {
    GroupRingCoeff c(order);
    c.add_term(j, a);
    return c;
}

Rational GroupRingCoeff::at(Int j) const {
    auto it = entries_.find(reduce_mod(j, order_));
    return it == entries_.end() ? Rational(0) : it->second;
}

void GroupRingCoeff::add_term(Int j, const Rational& a) {
    if (a == 0) return;
    Int k = reduce_mod(j, order_);
    auto [it, fresh] = entries_.emplace(k, a);
    if (!fresh) {
        it->second += a;
        if (it->second == 0) entries_.erase(it);
    }
}

void GroupRingCoeff::check(const GroupRingCoeff& o) const {
    if (order_ != o.order_)
        throw Error(ErrorKind::order_mismatch,
                    "Q[Z/" + std::to_string(order_) + "] vs Q[Z/" + std::to_string(o.order_) + "]");
}

GroupRingCoeff GroupRingCoeff::operator+(const GroupRingCoeff& o) const {
    check(o);
    GroupRingCoeff r = *this;
    for (const auto& [j, a] : o.entries_) r.add_term(j, a);
    return r;
}

GroupRingCoeff GroupRingCoeff::operator-(const GroupRingCoeff& o) const { return *this + (-o); }

GroupRingCoeff GroupRingCoeff::operator*(const GroupRingCoeff& o) const {
    check(o);
    GroupRingCoeff r(order_);
    for (const auto& [i, a] : entries_)
        for (const auto& [j, b] : o.entries_) r.add_term(i + j, a * b);
    return r;
}

GroupRingCoeff GroupRingCoeff::operator-() const { return scaled(-1); }

GroupRingCoeff GroupRingCoeff::scaled(const Rational& a) const {
    GroupRingCoeff r(order_);
    if (a == 0) return r;
    for (const auto& [j, b] : entries_) r.entries_.emplace(j, a * b);
    return r;
}

GroupRingCoeff GroupRingCoeff::shifted(Int j) const {
    GroupRingCoeff r(order_);
    for (const auto& [i, a] : entries_) r.add_term(i + j, a);
    return r;
}

GroupRingCoeff GroupRingCoeff::embedded(Int new_order) const {
    if (new_order % order_ != 0)
        throw Error(ErrorKind::divisibility,
                    std::to_string(order_) + " does not divide " + std::to_string(new_order));
    GroupRingCoeff r(new_order);
    Int f = new_order / order_;
    for (const auto& [j, a] : entries_) r.add_term(j * f, a);
    return r;
}

bool GroupRingCoeff::operator==(const GroupRingCoeff& o) const {
    return order_ == o.order_ && entries_ == o.entries_;
}

std::optional<Rational> min_cutoff(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
}

NovikovSeries::NovikovSeries(Int order, std::optional<Rational> cutoff)
    : order_(order), cutoff_(std::move(cutoff)) {
    if (order < 1) throw Error(ErrorKind::input, "group ring order must be positive");
}

NovikovSeries NovikovSeries::monomial(const GroupRingCoeff& a, const Rational& lambda, Int mu,
                                      std::optional<Rational> cutoff) {
    NovikovSeries s(a.order(), std::move(cutoff));
    s.add_term({lambda, mu}, a);
    return s;
}

NovikovSeries NovikovSeries::constant(const Rational& a, Int order, std::optional<Rational> cutoff) {
    return monomial(GroupRingCoeff::scalar(a, order), 0, 0, std::move(cutoff));
}

void NovikovSeries::add_term(const ExponentPair& e, const GroupRingCoeff& a) {
    if (a.order() != order_)
        throw Error(ErrorKind::order_mismatch,
                    "coefficient order " + std::to_string(a.order()) + " in series of order " +
                        std::to_string(order_));
    if (cutoff_ && e.lambda >= *cutoff_) return;
    if (a.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, a);
        return;
    }
    it->second = it->second + a;
    if (it->second.is_zero()) terms_.erase(it);
}

void NovikovSeries::check(const NovikovSeries& o) const {
    if (order_ != o.order_)
        throw Error(ErrorKind::order_mismatch,
                    "series orders " + std::to_string(order_) + " vs " + std::to_string(o.order_));
}

NovikovSeries NovikovSeries::operator+(const NovikovSeries& o) const {
    check(o);
    NovikovSeries r(order_, min_cutoff(cutoff_, o.cutoff_));
    for (const auto& [e, a] : terms_) r.add_term(e, a);
    for (const auto& [e, a] : o.terms_) r.add_term(e, a);
    return r;
}

NovikovSeries NovikovSeries::operator-(const NovikovSeries& o) const { return *this + (-o); }

NovikovSeries NovikovSeries::operator*(const NovikovSeries& o) const {
    check(o);
    NovikovSeries r(order_, min_cutoff(cutoff_, o.cutoff_));
    for (const auto& [e, a] : terms_)
        for (const auto& [f, b] : o.terms_) {
            ExponentPair g{e.lambda + f.lambda, e.mu + f.mu};
            if (r.cutoff_ && g.lambda >= *r.cutoff_) continue;
            r.add_term(g, a * b);
        }
    return r;
}

NovikovSeries NovikovSeries::operator-() const {
    NovikovSeries r(order_, cutoff_);
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, -a);
    return r;
}

NovikovSeries NovikovSeries::scaled(const GroupRingCoeff& a) const {
    if (a.order() != order_) throw Error(ErrorKind::order_mismatch, "scalar order");
    NovikovSeries r(order_, cutoff_);
    for (const auto& [e, b] : terms_) r.add_term(e, a * b);
    return r;
}

NovikovSeries NovikovSeries::shifted(const Rational& lambda, Int mu) const {
    NovikovSeries r(order_, cutoff_);
    for (const auto& [e, a] : terms_) r.add_term({e.lambda + lambda, e.mu + mu}, a);
    return r;
}

NovikovSeries NovikovSeries::with_cutoff(std::optional<Rational> cutoff) const {
    NovikovSeries r(order_, std::move(cutoff));
    for (const auto& [e, a] : terms_) r.add_term(e, a);
    return r;
}

bool NovikovSeries::operator==(const NovikovSeries& o) const {
    return order_ == o.order_ && cutoff_ == o.cutoff_ && terms_ == o.terms_;
}

std::optional<Rational> valuation(const NovikovSeries& x) {
    if (x.is_zero()) return std::nullopt;
    return x.terms().begin()->first.lambda;
}

NovikovSeries truncate(const NovikovSeries& x, const Rational& energy) {
    return x.with_cutoff(min_cutoff(x.cutoff(), energy));
}

SubringReport subring_report(const NovikovSeries& x, Int N) {
    SubringReport r;
    for (const auto& [e, a] : x.terms()) {
        if (e.lambda < 0) r.in_lambda0 = false;
        if (e.lambda <= 0) r.in_lambda_plus = false;
        if (!is_integer(e.lambda * N)) r.in_z_over_n = false;
        if (e.mu % 2 != 0) r.mu_even = false;
    }
    return r;
}

NovikovSeries embed_order(const NovikovSeries& x, Int new_order) {
    NovikovSeries r(new_order, x.cutoff());
    for (const auto& [e, a] : x.terms()) r.add_term(e, a.embedded(new_order));
    return r;
}

NovikovSeries galois(const NovikovSeries& x, Int j, Int N) {
    if (N < 1) throw Error(ErrorKind::input, "N must be positive");
    Int M = lcm(x.order(), N);
    NovikovSeries r(M, x.cutoff());
    for (const auto& [e, a] : x.terms()) {
        Rational nq = e.lambda * N;
        if (!is_integer(nq))
            throw Error(ErrorKind::exponent_not_in_lattice,
                        to_string(e.lambda) + " not in (1/" + std::to_string(N) + ")Z");
        // zeta_N^{j N q} = zeta_M^{j N q (M/N)}
        mpz_class k = mpz_class(j) * nq.get_num() % mpz_class(N);
        Int kk = k.get_si() * (M / N);
        r.add_term(e, a.embedded(M).shifted(kk));
    }
    return r;
}

Json coeff_to_json(const GroupRingCoeff& a) {
    Json j = Json::object();
    for (const auto& [k, v] : a.entries()) j[std::to_string(k)] = to_string(v);
    return j;
}

GroupRingCoeff coeff_from_json(const Json& j, Int order) {
    GroupRingCoeff c(order);
    if (j.is_string()) {
        c.add_term(0, parse_rational(j.get<std::string>()));
        return c;
    }
    if (!j.is_object()) throw Error(ErrorKind::input, "coefficient must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        Int k;
        try {
            k = std::stoll(it.key());
        } catch (...) {
            throw Error(ErrorKind::input, "bad root index '" + it.key() + "'");
        }
        if (!it.value().is_string()) throw Error(ErrorKind::input, "coefficient values are strings");
        c.add_term(k, parse_rational(it.value().get<std::string>()));
    }
    return c;
}

Json to_json(const NovikovSeries& x) {
    Json arr = Json::array();
    for (const auto& [e, a] : x.terms()) {
        Json t;
        t["lambda"] = to_string(e.lambda);
        t["mu"] = e.mu;
        t["coeff"] = coeff_to_json(a);
        arr.push_back(t);
    }
    return arr;
}

NovikovSeries series_from_json(const Json& j, Int order, std::optional<Rational> cutoff) {
    if (!j.is_array()) throw Error(ErrorKind::input, "series must be an array");
    NovikovSeries s(order, std::move(cutoff));
    for (const auto& t : j) {
        if (!t.contains("lambda") || !t.contains("coeff"))
            throw Error(ErrorKind::input, "series term needs lambda and coeff");
        Int mu = t.contains("mu") ? t["mu"].get<Int>() : 0;
        s.add_term({parse_rational(t["lambda"].get<std::string>()), mu}, coeff_from_json(t["coeff"], order));
    }
    return s;
}

}  // namespace floer

namespace floer {

namespace {

std::string monomial_tail(const ExponentPair& e) {
    std::string s;
    if (e.lambda != 0) {
        if (e.lambda == 1)
            s += "T";
        else if (is_integer(e.lambda))
            s += "T^" + e.lambda.get_num().get_str();
        else
            s += "T^{" + to_string(e.lambda) + "}";
    }
    if (e.mu != 0) s += "e^" + (e.mu > 0 && e.mu < 10 ? std::to_string(e.mu) : "{" + std::to_string(e.mu) + "}");
    return s;
}

std::string number(const Rational& a) {
    return is_integer(a) ? a.get_num().get_str() : a.get_str();
}

}  // namespace

std::string display(const NovikovSeries& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, a] : x.terms()) {
        std::string tail = monomial_tail(e);
        const auto& ent = a.entries();
        if (ent.size() == 1 && ent.begin()->first == 0) {
            Rational c = ent.begin()->second;
            bool neg = c < 0;
            if (neg) c = -c;
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (c != 1 || tail.empty()) out += number(c);
            out += tail;
        } else {
            out += first ? "" : " + ";
            std::string g = "(";
            bool f2 = true;
            for (const auto& [j, c] : ent) {
                std::string z = j == 0 ? "" : "z" + std::to_string(a.order()) + "^" + std::to_string(j);
                Rational m = c;
                bool neg = m < 0;
                if (neg) m = -m;
                g += f2 ? (neg ? "-" : "") : (neg ? " - " : " + ");
                if (m != 1 || z.empty()) g += number(m);
                g += z;
                f2 = false;
            }
            out += g + ")" + tail;
        }
        first = false;
    }
    return out;
}

}  // namespace floer
