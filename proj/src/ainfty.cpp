#include "floer/ainfty.hpp"

#include <algorithm>
#include <set>

#include <omp.h>

#include "floer/parallel.hpp"

namespace floer {

namespace {

void accumulate(Element& e, const std::string& id, const NovikovSeries& c) {
    if (c.is_zero()) return;
    auto it = e.find(id);
    if (it == e.end()) {
        e.emplace(id, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) e.erase(it);
}

const Element* lookup(const AInftyStructure& S, int k, const Tuple& t) {
    auto op = S.ops.find(k);
    if (op == S.ops.end()) return nullptr;
    auto it = op->second.entries.find(t);
    return it == op->second.entries.end() ? nullptr : &it->second;
}

std::vector<Tuple> all_tuples(const AInftyStructure& S, int k) {
    std::vector<Tuple> out{Tuple{}};
    for (int i = 0; i < k; ++i) {
        std::vector<Tuple> next;
        next.reserve(out.size() * S.basis.size());
        for (const auto& t : out)
            for (const auto& b : S.basis) {
                Tuple u = t;
                u.push_back(b.id);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

bool odd_sign(const AInftyStructure& S, const Tuple& t, std::size_t left, SignConvention sign) {
    Int s = 0;
    for (std::size_t i = 0; i < left; ++i) {
        Int d = S.element(t[i]).degree;
        s += sign == SignConvention::standard ? d - 1 : d;
    }
    return s % 2 != 0;
}

NovikovSeries unit_series(const AInftyStructure& S) {
    return NovikovSeries::constant(1, S.coeff_order, S.cutoff);
}

// Residual for one input tuple; k2 runs from 0, position pos = i + 1 for i = -1 .. k - k2 - 1.
Element residual_for(const AInftyStructure& S, const Tuple& y, SignConvention sign, std::set<int>& missing) {
    int k = static_cast<int>(y.size());
    Element r;
    for (int k2 = 0; k2 <= k; ++k2) {
        int k1 = k - k2 + 1;
        bool has1 = S.ops.count(k1), has2 = S.ops.count(k2);
        if (!has1) missing.insert(k1);
        if (!has2) missing.insert(k2);
        if (!has1 || !has2) continue;
        for (int pos = 0; pos <= k - k2; ++pos) {
            Tuple inner(y.begin() + pos, y.begin() + pos + k2);
            const Element* in = lookup(S, k2, inner);
            if (!in) continue;
            bool neg = odd_sign(S, y, pos, sign);
            for (const auto& [z, cz] : *in) {
                Tuple outer(y.begin(), y.begin() + pos);
                outer.push_back(z);
                outer.insert(outer.end(), y.begin() + pos + k2, y.end());
                const Element* out = lookup(S, k1, outer);
                if (!out) continue;
                for (const auto& [w, cw] : *out) accumulate(r, w, neg ? -(cz * cw) : cz * cw);
            }
        }
    }
    return r;
}

ResidualReport residual_impl(const AInftyStructure& S, int max_arity, SignConvention sign, bool parallel) {
    ResidualReport rep;
    std::set<int> missing;
    for (int k = 0; k <= max_arity; ++k) {
        std::vector<Tuple> tuples = all_tuples(S, k);
        std::vector<Element> res(tuples.size());
        std::vector<std::set<int>> miss(tuples.size());
        Int n = static_cast<Int>(tuples.size());
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count())
            for (Int i = 0; i < n; ++i) res[i] = residual_for(S, tuples[i], sign, miss[i]);
        } else {
            for (Int i = 0; i < n; ++i) res[i] = residual_for(S, tuples[i], sign, miss[i]);
        }
        for (Int i = 0; i < n; ++i) {
            missing.insert(miss[i].begin(), miss[i].end());
            for (auto& [w, c] : res[i]) rep.residual.emplace(ResidualKey{tuples[i], w}, c);
        }
        rep.tuples_checked += tuples.size();
        rep.terms += tuples.size() * relation_term_count(k, S.ops.count(0) > 0);
    }
    rep.missing_arities.assign(missing.begin(), missing.end());
    return rep;
}

using WordComb = std::map<Tuple, NovikovSeries>;

void accumulate_word(WordComb& w, const Tuple& t, const NovikovSeries& c) {
    if (c.is_zero()) return;
    auto it = w.find(t);
    if (it == w.end()) {
        w.emplace(t, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) w.erase(it);
}

// hat m = sum over k of m_k applied to consecutive letters, Koszul sign from the letters passed.
WordComb coderivation(const AInftyStructure& S, const WordComb& in, std::optional<std::size_t> only_length) {
    WordComb out;
    for (const auto& [y, c] : in) {
        std::size_t n = y.size();
        Int passed = 0;
        for (std::size_t pos = 0; pos <= n; ++pos) {
            for (std::size_t k = 0; pos + k <= n; ++k) {
                std::size_t len = n - k + 1;
                if (only_length && len != *only_length) continue;
                Tuple sub(y.begin() + pos, y.begin() + pos + k);
                const Element* e = lookup(S, static_cast<int>(k), sub);
                if (!e) continue;
                for (const auto& [z, cz] : *e) {
                    Tuple w(y.begin(), y.begin() + pos);
                    w.push_back(z);
                    w.insert(w.end(), y.begin() + pos + k, y.end());
                    NovikovSeries t = c * cz;
                    accumulate_word(out, w, passed % 2 ? -t : t);
                }
            }
            if (pos < n) passed += S.element(y[pos]).degree - 1;
        }
    }
    return out;
}

}  // namespace

const BasisElement& AInftyStructure::element(const std::string& id) const {
    for (const auto& b : basis)
        if (b.id == id) return b;
    throw Error(ErrorKind::input, "unknown basis element '" + id + "'");
}

bool AInftyStructure::has(const std::string& id) const {
    return std::any_of(basis.begin(), basis.end(), [&](const BasisElement& b) { return b.id == id; });
}

void AInftyStructure::set(const Tuple& inputs, const std::string& out, const NovikovSeries& coeff) {
    auto& table = ops[static_cast<int>(inputs.size())];
    table.arity = static_cast<int>(inputs.size());
    if (coeff.is_zero()) return;
    accumulate(table.entries[inputs], out, coeff.with_cutoff(cutoff));
    if (table.entries[inputs].empty()) table.entries.erase(inputs);
}

bool AInftyStructure::operator==(const AInftyStructure& o) const {
    if (basis.size() != o.basis.size() || cutoff != o.cutoff || coeff_order != o.coeff_order) return false;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].id != o.basis[i].id || basis[i].degree != o.basis[i].degree ||
            basis[i].action != o.basis[i].action)
            return false;
    if (ops.size() != o.ops.size()) return false;
    for (const auto& [k, t] : ops) {
        auto it = o.ops.find(k);
        if (it == o.ops.end() || it->second.entries != t.entries) return false;
    }
    return true;
}

Int shifted_degree(const std::vector<BasisElement>& tensor) {
    Int s = 0;
    for (const auto& x : tensor) s += x.degree - 1;
    return s;
}

std::size_t relation_term_count(int k, bool with_m0) {
    std::size_t n = 0;
    for (int k2 = with_m0 ? 0 : 1; k2 <= k; ++k2)
        for (int i = -1; i <= k - k2 - 1; ++i) ++n;
    return n;
}

ResidualReport ainfty_residual(const AInftyStructure& S, int max_arity, SignConvention sign) {
    return residual_impl(S, max_arity, sign, true);
}

ResidualReport ainfty_residual_serial(const AInftyStructure& S, int max_arity, SignConvention sign) {
    return residual_impl(S, max_arity, sign, false);
}

ResidualReport ainfty_residual_bar(const AInftyStructure& S, int max_arity) {
    ResidualReport rep;
    for (int k = 0; k <= max_arity; ++k)
        for (const Tuple& y : all_tuples(S, k)) {
            WordComb w{{y, unit_series(S)}};
            WordComb once = coderivation(S, w, std::nullopt);
            WordComb twice = coderivation(S, once, std::size_t{1});
            for (const auto& [t, c] : twice) rep.residual.emplace(ResidualKey{y, t[0]}, c);
            ++rep.tuples_checked;
        }
    return rep;
}

Element apply_op(const AInftyStructure& S, int k, const std::vector<Element>& args) {
    Element r;
    if (static_cast<int>(args.size()) != k) throw Error(ErrorKind::input, "wrong number of arguments");
    auto op = S.ops.find(k);
    if (op == S.ops.end()) return r;
    for (const auto& [t, outs] : op->second.entries) {
        NovikovSeries coeff = unit_series(S);
        bool zero = false;
        for (int i = 0; i < k && !zero; ++i) {
            auto it = args[i].find(t[i]);
            if (it == args[i].end()) zero = true;
            else coeff = coeff * it->second;
        }
        if (zero || coeff.is_zero()) continue;
        for (const auto& [w, c] : outs) accumulate(r, w, coeff * c);
    }
    return r;
}

namespace {

void require_positive(const Element& b) {
    for (const auto& [id, c] : b) {
        auto v = valuation(c);
        if (v && *v <= 0)
            throw Error(ErrorKind::nonpositive_valuation, "coefficient of " + id + " has valuation " + to_string(*v));
    }
}

// Sum over insertions of b between and around the fixed arguments, total arity <= K.
void deform_rec(const AInftyStructure& S, const Element& b, const std::vector<Element>& xs, std::size_t next,
                std::vector<Element>& args, int K, Element& out) {
    // insert any number of b's here, then the next x (or finish)
    std::size_t base = args.size();
    for (int extra = 0; static_cast<int>(args.size()) + static_cast<int>(xs.size() - next) <= K; ++extra) {
        if (next == xs.size()) {
            Element r = apply_op(S, static_cast<int>(args.size()), args);
            for (const auto& [w, c] : r) accumulate(out, w, c);
        } else {
            args.push_back(xs[next]);
            deform_rec(S, b, xs, next + 1, args, K, out);
            args.pop_back();
        }
        if (b.empty()) break;
        args.push_back(b);
    }
    args.resize(base);
}

}  // namespace

Element mc_residual(const AInftyStructure& S, const Element& b) {
    require_positive(b);
    Element r;
    for (const auto& [k, t] : S.ops) {
        std::vector<Element> args(static_cast<std::size_t>(k), b);
        if (k > 0 && b.empty()) continue;
        for (const auto& [w, c] : apply_op(S, k, args)) accumulate(r, w, c);
    }
    return r;
}

AInftyStructure deform(const AInftyStructure& S, const Element& b) {
    require_positive(b);
    AInftyStructure D;
    D.basis = S.basis;
    D.cutoff = S.cutoff;
    D.coeff_order = S.coeff_order;
    int K = S.max_arity();
    for (const auto& [k, t] : S.ops) D.ops[k].arity = k;
    for (int k = 0; k <= K; ++k) {
        for (const Tuple& x : all_tuples(S, k)) {
            std::vector<Element> xs;
            for (const auto& id : x) xs.push_back(Element{{id, unit_series(S)}});
            std::vector<Element> args;
            Element out;
            deform_rec(S, b, xs, 0, args, K, out);
            for (const auto& [w, c] : out) D.set(x, w, c);
        }
    }
    for (auto it = D.ops.begin(); it != D.ops.end();) {
        if (it->second.entries.empty() && !S.ops.count(it->first)) it = D.ops.erase(it);
        else ++it;
    }
    return D;
}

std::vector<FiltrationViolation> filtration_check(const AInftyStructure& S) {
    std::vector<FiltrationViolation> out;
    for (const auto& [k, t] : S.ops)
        for (const auto& [in, outs] : t.entries) {
            Rational src = 0;
            for (const auto& id : in) src += S.element(id).action;
            for (const auto& [w, c] : outs) {
                auto v = valuation(c);
                if (!v) continue;
                Rational margin = *v + S.element(w).action - src;
                if (margin < 0) out.push_back({k, in, w, margin});
            }
        }
    return out;
}

std::vector<DegreeViolation> degree_check(const AInftyStructure& S) {
    std::vector<DegreeViolation> out;
    for (const auto& [k, t] : S.ops)
        for (const auto& [in, outs] : t.entries) {
            Int src = 0;
            for (const auto& id : in) src += S.element(id).degree - 1;
            for (const auto& [w, c] : outs) {
                bool ok = true;
                for (const auto& [e, a] : c.terms())
                    if (S.element(w).degree - 1 + e.mu != src + 1) ok = false;
                if (!ok) out.push_back({k, in, w});
            }
        }
    return out;
}

Json structure_to_json(const AInftyStructure& S) {
    Json j;
    j["schema"] = 1;
    j["cutoff"] = S.cutoff ? Json(to_string(*S.cutoff)) : Json(nullptr);
    j["coeff_order"] = S.coeff_order;
    Json basis = Json::array();
    for (const auto& b : S.basis) basis.push_back({{"id", b.id}, {"degree", b.degree}, {"action", to_string(b.action)}});
    j["basis"] = basis;
    Json arities = Json::array();
    Json ops = Json::array();
    for (const auto& [k, t] : S.ops) {
        arities.push_back(k);
        for (const auto& [in, outs] : t.entries) {
            Json o;
            o["arity"] = k;
            o["inputs"] = in;
            Json os = Json::array();
            for (const auto& [w, c] : outs) os.push_back({{"id", w}, {"coeff", to_json(c)}});
            o["outputs"] = os;
            ops.push_back(o);
        }
    }
    j["arities"] = arities;
    j["ops"] = ops;
    return j;
}

AInftyStructure structure_from_json(const Json& j) {
    try {
        if (!j.is_object()) throw Error(ErrorKind::input, "structure must be an object");
        if (j.value("schema", 0) != 1) throw Error(ErrorKind::input, "unsupported structure schema");
        AInftyStructure S;
        if (j.contains("cutoff") && !j["cutoff"].is_null()) S.cutoff = parse_rational(j["cutoff"].get<std::string>());
        S.coeff_order = j.value("coeff_order", Int{1});
        std::set<std::string> ids;
        for (const auto& b : j.at("basis")) {
            BasisElement e{b.at("id").get<std::string>(), b.at("degree").get<Int>(),
                           parse_rational(b.at("action").get<std::string>())};
            if (!ids.insert(e.id).second) throw Error(ErrorKind::input, "duplicate basis id '" + e.id + "'");
            S.basis.push_back(e);
        }
        if (j.contains("arities"))
            for (const auto& k : j["arities"]) S.ops[k.get<int>()].arity = k.get<int>();
        for (const auto& o : j.at("ops")) {
            Tuple in = o.at("inputs").get<Tuple>();
            int k = o.value("arity", static_cast<int>(in.size()));
            if (k != static_cast<int>(in.size())) throw Error(ErrorKind::input, "arity does not match inputs");
            for (const auto& id : in)
                if (!ids.count(id)) throw Error(ErrorKind::input, "unknown input id '" + id + "'");
            S.ops[k].arity = k;
            for (const auto& out : o.at("outputs")) {
                std::string w = out.at("id").get<std::string>();
                if (!ids.count(w)) throw Error(ErrorKind::input, "unknown output id '" + w + "'");
                S.set(in, w, series_from_json(out.at("coeff"), S.coeff_order, S.cutoff));
            }
        }
        return S;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::input, std::string("structure json: ") + e.what());
    }
}

}  // namespace floer
