#include "floer/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "floer/config.hpp"
#include "floer/export.hpp"

namespace floer {

namespace {

Json rat(const Rational& r) { return to_string(r); }
Json pt(const Point2& p) { return Json::array({rat(p.x), rat(p.y)}); }

Json series_json(const NovikovSeries& s) {
    Json j;
    j["terms"] = to_json(s);
    j["display"] = display(s);
    return j;
}

struct Suite {
    std::string name;
    std::size_t passed = 0, failed = 0;
    std::vector<std::string> failures;
    void record(bool ok, const std::string& what) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            if (failures.size() < 20) failures.push_back(what);
        }
    }
    Json to_json() const {
        Json j;
        j["name"] = name;
        j["passed"] = passed;
        j["failed"] = failed;
        j["failures"] = failures;
        return j;
    }
};

Json residual_json(const AInftyStructure& S, bool& ok) {
    auto rep = ainfty_residual(S, std::max(3, S.max_arity() + 1));
    Json j;
    j["tuples_checked"] = rep.tuples_checked;
    j["terms"] = rep.terms;
    j["missing_arities"] = rep.missing_arities;
    Json res = Json::array();
    for (const auto& [k, v] : rep.residual) {
        Json e;
        e["inputs"] = k.inputs;
        e["output"] = k.output;
        e["coeff"] = series_json(v);
        res.push_back(e);
    }
    j["residual"] = res;
    Json filt = Json::array();
    for (const auto& v : filtration_check(S)) {
        Json e;
        e["arity"] = v.arity;
        e["inputs"] = v.inputs;
        e["output"] = v.output;
        e["margin"] = rat(v.margin);
        filt.push_back(e);
    }
    j["filtration_violations"] = filt;
    Json deg = Json::array();
    for (const auto& v : degree_check(S)) {
        Json e;
        e["arity"] = v.arity;
        e["inputs"] = v.inputs;
        e["output"] = v.output;
        deg.push_back(e);
    }
    j["degree_violations"] = deg;
    ok = res.empty() && filt.empty() && deg.empty();
    return j;
}

std::string pstr(const Point2& p) { return "[" + to_string(p.x) + "," + to_string(p.y) + "]"; }

class Runner {
public:
    Runner(const RunConfig& rc, const Config& cfg) : rc_(rc), cfg_(cfg) {
        anchored_ = rc.anchored.value_or(cfg.anchored());
        if (anchored_ && !cfg.anchored())
            throw Error(ErrorKind::input, "anchored mode needs anchor_lift or anchor_path on every Lagrangian");
    }

    int dispatch(Json& doc) {
        doc["schema"] = 1;
        doc["command"] = rc_.command;
        doc["mode"] = anchored_ ? "anchored" : "non-anchored";
        if (rc_.command == "intersections") return intersections_cmd(doc);
        if (rc_.command == "pair") return pair_cmd(doc);
        if (rc_.command == "product") return product_cmd(doc);
        if (rc_.command == "verify") return verify_cmd(doc);
        if (rc_.command == "reduce") return reduce_cmd(doc);
        if (rc_.command == "galois") return galois_cmd(doc);
        if (rc_.command == "ainfty-check") return ainfty_cmd(doc);
        if (rc_.command == "export") return export_cmd(doc);
        throw Error(ErrorKind::input, "unknown command '" + rc_.command + "'");
    }

private:
    const RunConfig& rc_;
    const Config& cfg_;
    bool anchored_ = false;

    const LagrangianSpec& spec(std::size_t i) const { return cfg_.lagrangians[i]; }
    const TorusLagrangian& lag(std::size_t i) const { return cfg_.lagrangians[i].lag; }
    std::size_t size() const { return cfg_.lagrangians.size(); }
    AnchoredLag alag(std::size_t i) const { return AnchoredLag(lag(i), *spec(i).anchor); }

    bool transverse(std::size_t i, std::size_t j) const { return det(lag(i), lag(j)) != 0; }

    void require_transverse(std::size_t i, std::size_t j) const {
        if (!transverse(i, j))
            throw Error(ErrorKind::parallel_directions,
                        "Lagrangians '" + spec(i).name + "' and '" + spec(j).name + "' are parallel");
    }

    void require_count(std::size_t n, const char* what) const {
        if (size() < n)
            throw Error(ErrorKind::input, std::string(what) + " needs at least " + std::to_string(n) + " Lagrangians");
    }

    Json pair_names(std::size_t i, std::size_t j) const { return Json::array({spec(i).name, spec(j).name}); }

    Rational cutoff_or(const Rational& d) const { return rc_.cutoff ? *rc_.cutoff : d; }

    Json generator_json(const Generator& g) const {
        Json j;
        j["point"] = pt(g.point);
        j["lift"] = pt(g.lift);
        j["action"] = rat(g.action);
        j["degree"] = g.degree;
        return j;
    }

    int intersections_cmd(Json& doc) {
        Json pairs = Json::array();
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j) {
                require_transverse(i, j);
                Json e;
                e["pair"] = pair_names(i, j);
                e["det"] = det(lag(i), lag(j));
                Json pts = Json::array();
                for (const auto& p : intersections(lag(i), lag(j))) pts.push_back(pt(p));
                e["points"] = pts;
                pairs.push_back(e);
            }
        doc["pairs"] = pairs;
        return exit_ok;
    }

    int pair_cmd(Json& doc) {
        require_count(2, "pair");
        Json pairs = Json::array();
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j) {
                require_transverse(i, j);
                Json e;
                e["pair"] = pair_names(i, j);
                if (anchored_) {
                    AnchoredLag a = alag(i), b = alag(j);
                    Generator g = admissible_generator(a, b);
                    e["generator"] = generator_json(g);
                    e["seidel_degree"] = seidel_degree(g.point, a.lag, b.lag);
                    Json sp = Json::array();
                    for (const auto& s : spectrum(a, b)) sp.push_back(rat(s));
                    e["spectrum"] = sp;
                } else {
                    e["maslov_morse_degree"] = maslov_morse_degree(lag(i), lag(j));
                    Json pts = Json::array();
                    for (const auto& p : intersections(lag(i), lag(j))) {
                        Json q;
                        q["point"] = pt(p);
                        q["seidel_degree"] = seidel_degree(p, lag(i), lag(j));
                        pts.push_back(q);
                    }
                    e["points"] = pts;
                }
                pairs.push_back(e);
            }
        doc["pairs"] = pairs;
        return exit_ok;
    }

    int product_cmd(Json& doc) {
        require_count(3, "product");
        for (auto [i, j] : {std::pair<int, int>{0, 1}, {1, 2}, {0, 2}}) require_transverse(i, j);
        doc["lagrangians"] = Json::array({spec(0).name, spec(1).name, spec(2).name});
        if (anchored_) {
            if (rc_.cutoff) doc["cutoff"] = rat(*rc_.cutoff);
            Json entries = Json::array();
            for (const auto& e : m2_anchored(alag(0), alag(1), alag(2), rc_.cutoff)) {
                Json j;
                j["in2"] = generator_json(e.in2);
                j["in1"] = generator_json(e.in1);
                j["out"] = generator_json(e.out);
                j["coeff"] = series_json(e.coeff);
                entries.push_back(j);
            }
            doc["entries"] = entries;
            return exit_ok;
        }
        if (!rc_.cutoff) throw Error(ErrorKind::input, "non-anchored product needs --cutoff");
        doc["cutoff"] = rat(*rc_.cutoff);
        Json products = Json::array();
        for (const auto& p10 : intersections(lag(0), lag(1)))
            for (const auto& p21 : intersections(lag(1), lag(2)))
                for (const auto& p02 : intersections(lag(2), lag(0))) {
                    Json j;
                    j["p10"] = pt(p10);
                    j["p21"] = pt(p21);
                    j["p02"] = pt(p02);
                    j["series"] = series_json(m2_nonanchored(lag(0), lag(1), lag(2), p10, p21, p02, *rc_.cutoff));
                    products.push_back(j);
                }
        doc["products"] = products;
        return exit_ok;
    }

    int verify_cmd(Json& doc);
    int reduce_cmd(Json& doc);
    int galois_cmd(Json& doc);
    int ainfty_cmd(Json& doc);
    int export_cmd(Json& doc);

    Int reduction_N() const;
    Rationalization rationalization(std::size_t i, Int N) const;
};

Int Runner::reduction_N() const {
    if (rc_.N) {
        if (*rc_.N <= 0) throw Error(ErrorKind::input, "--N must be positive");
        return *rc_.N;
    }
    std::optional<Int> N;
    for (const auto& l : cfg_.lagrangians) {
        if (!l.rationalization_N) continue;
        if (N && *N != *l.rationalization_N)
            throw Error(ErrorKind::input, "Lagrangians carry different rationalization_N values");
        N = l.rationalization_N;
    }
    if (!N) throw Error(ErrorKind::input, rc_.command + " needs --N or rationalization_N");
    return *N;
}

Rationalization Runner::rationalization(std::size_t i, Int N) const {
    const auto& s = spec(i);
    if (anchored_) return anchored_rationalization(alag(i), cfg_.prequantum, N, s.rationalization_phase);
    Point2 marked = s.rationalization_point.value_or(reference_point(s.lag));
    return make_rationalization(s.lag, cfg_.prequantum, N, s.rationalization_phase, marked);
}

int Runner::verify_cmd(Json& doc) {
    std::vector<Suite> suites;
    Json skipped = Json::array();
    Suite count{"intersection-count"}, duality{"degree-duality"}, grading{"grading-comparison"};
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j) {
            std::string tag = spec(i).name + "," + spec(j).name;
            if (!transverse(i, j)) {
                skipped.push_back("parallel pair " + tag);
                continue;
            }
            auto pts = intersections(lag(i), lag(j));
            Int d = det(lag(i), lag(j));
            count.record(static_cast<Int>(pts.size()) == (d < 0 ? -d : d), tag);
            Int mm = maslov_morse_degree(lag(i), lag(j));
            duality.record(mm + maslov_morse_degree(lag(j), lag(i)) == 1, tag);
            for (const auto& p : pts) grading.record(seidel_degree(p, lag(i), lag(j)) == mm, tag + " at " + pstr(p));
        }
    suites.insert(suites.end(), {count, duality, grading});

    if (anchored_) {
        Suite tri{"anchored-triangles"}, index{"abstract-index"};
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                for (std::size_t k = j + 1; k < size(); ++k) {
                    if (!transverse(i, j) || !transverse(j, k) || !transverse(i, k)) continue;
                    std::string tag = spec(i).name + "," + spec(j).name + "," + spec(k).name;
                    auto at = anchored_triangle(alag(i), alag(j), alag(k));
                    if (!at.tri.counted) continue;
                    tri.record(at.g20.action == at.g10.action + at.g21.action + at.tri.area, tag + " action");
                    tri.record(at.g20.degree == at.g10.degree + at.g21.degree, tag + " degree");
                    std::vector<AnchoredLag> chain{alag(i), alag(j), alag(k)};
                    tri.record(chain_polygonal_index(chain) == -1, tag + " polygonal index");
                    index.record(abstract_index_check(IndexKind::area, chain).ok, tag + " area");
                    index.record(abstract_index_check(IndexKind::maslov, chain).ok, tag + " maslov");
                }
        suites.insert(suites.end(), {tri, index});
        bool all_transverse = true;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j) all_transverse = all_transverse && transverse(i, j);
        if (size() >= 3 && all_transverse) {
            std::vector<AnchoredLag> al;
            for (std::size_t i = 0; i < size(); ++i) al.push_back(alag(i));
            AInftyStructure S = anchored_structure(al, rc_.cutoff);
            auto rep = ainfty_residual(S, 3);
            Suite res{"ainfty-residual"};
            res.passed = rep.tuples_checked - rep.residual.size();
            for (const auto& [key, v] : rep.residual) {
                std::string t;
                for (const auto& s : key.inputs) t += s + " ";
                res.record(false, t + "-> " + key.output + ": " + display(v));
            }
            Suite filt{"filtration"}, deg{"degree-rule"};
            auto fv = filtration_check(S);
            auto dv = degree_check(S);
            std::size_t entries = 0;
            for (const auto& [k, t] : S.ops) entries += t.entries.size();
            filt.passed = entries - std::min(entries, fv.size());
            deg.passed = entries - std::min(entries, dv.size());
            for (const auto& v : fv) filt.record(false, v.output + " margin " + to_string(v.margin));
            for (const auto& v : dv) deg.record(false, v.output);
            suites.insert(suites.end(), {res, filt, deg});
        } else if (size() >= 3) {
            skipped.push_back("ainfty-residual: parallel pair present");
        }
    } else if (size() >= 4) {
        std::vector<TorusLagrangian> four;
        for (std::size_t i = 0; i < 4; ++i) four.push_back(lag(i));
        bool ok = true;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) ok = ok && transverse(i, j);
        if (ok) {
            Suite as{"associativity"};
            for (const auto& c : nonanchored_associativity(four, cutoff_or(6)))
                as.record(c.equal, pstr(c.p10) + pstr(c.p21) + pstr(c.p32) + pstr(c.p30));
            suites.push_back(as);
        } else {
            skipped.push_back("associativity: parallel pair among the first four");
        }
    }

    bool rational = rc_.N.has_value();
    for (const auto& l : cfg_.lagrangians) rational = rational || l.rationalization_N.has_value();
    if (rational && size() >= 3 && transverse(0, 1) && transverse(1, 2) && transverse(0, 2)) {
        Int N = reduction_N();
        Suite lattice{"rationality"}, gal{"galois"};
        bool all_rational = true;
        for (std::size_t i = 0; i < 3; ++i) {
            bool r = is_BS_N_rational(lag(i), cfg_.prequantum, N).rational;
            lattice.record(r, spec(i).name + " BS-rational");
            all_rational = all_rational && r;
        }
        if (all_rational) {
            const Prequantum& P = cfg_.prequantum;
            Rationalization S[3] = {rationalization(0, N), rationalization(1, N), rationalization(2, N)};
            for (const auto& p10 : intersections(lag(0), lag(1)))
                for (const auto& p21 : intersections(lag(1), lag(2)))
                    for (const auto& p02 : intersections(lag(2), lag(0))) {
                        std::vector<Rational> cc = {c_of_p(S[0], S[1], P, p10), c_of_p(S[1], S[2], P, p21),
                                                    c_of_p(S[2], S[0], P, p02)};
                        for (const auto& t :
                             enumerate_triangles(lag(0), lag(1), lag(2), p10, p21, p02, cutoff_or(5)))
                            if (t.counted)
                                lattice.record(e_prime(t.area, cc, N).in_lattice,
                                               "E' at " + pstr(t.v10) + pstr(t.v21) + pstr(t.v02));
                    }
            bool bundles = true;
            for (std::size_t i = 0; i < 3; ++i) bundles = bundles && is_integer(spec(i).bundle_holonomy * Rational(N));
            if (bundles && N % P.m_amb == 0) {
                std::vector<GaloisObject> objs;
                for (std::size_t i = 0; i < 3; ++i) objs.push_back({lag(i), FlatBundle{lag(i), spec(i).bundle_holonomy}, S[i]});
                auto rep = galois_equivariance_check(objs, P, cutoff_or(4));
                for (const auto& c : rep.cases)
                    gal.record(c.equal, "j=" + std::to_string(c.j) + " at " + pstr(c.p10) + pstr(c.p21) + pstr(c.p02));
                for (const auto& v : rep.violations)
                    if (v.rfind("E'", 0) == 0) gal.record(false, v);
                suites.push_back(lattice);
                suites.push_back(gal);
            } else {
                suites.push_back(lattice);
                skipped.push_back("galois: bundle holonomies are not N-rational");
            }
        } else {
            suites.push_back(lattice);
        }
    }

    Json arr = Json::array();
    bool ok = true;
    for (const auto& s : suites) {
        arr.push_back(s.to_json());
        ok = ok && s.failed == 0;
    }
    doc["suites"] = arr;
    doc["skipped"] = skipped;
    doc["ok"] = ok;
    return ok ? exit_ok : exit_verification;
}

int Runner::reduce_cmd(Json& doc) {
    const Prequantum& P = cfg_.prequantum;
    Int N = reduction_N();
    doc["N"] = N;
    doc["m_amb"] = P.m_amb;
    if (N % P.m_amb != 0)
        throw Error(ErrorKind::divisibility, "m_amb=" + std::to_string(P.m_amb) + " does not divide N=" + std::to_string(N));
    Json violations = Json::array();
    Json lags = Json::array();
    bool all_rational = true;
    for (std::size_t i = 0; i < size(); ++i) {
        auto bs = is_BS_N_rational(lag(i), P, N);
        Json e;
        e["name"] = spec(i).name;
        e["holonomy"] = rat(holonomy(lag(i), P));
        e["bs_rational"] = bs.rational;
        e["m_L"] = bs.m_L;
        lags.push_back(e);
        if (!bs.rational) {
            all_rational = false;
            violations.push_back(spec(i).name + " is not BS " + std::to_string(N) + "-rational");
        }
    }
    doc["lagrangians"] = lags;
    if (!all_rational) {
        doc["violations"] = violations;
        return exit_verification;
    }
    std::vector<Rationalization> S;
    for (std::size_t i = 0; i < size(); ++i) S.push_back(rationalization(i, N));

    Json pairs = Json::array();
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (!transverse(i, j)) continue;
            Json e;
            e["pair"] = pair_names(i, j);
            Json pts = Json::array();
            for (const auto& p : intersections(lag(i), lag(j))) {
                Json q;
                q["point"] = pt(p);
                q["c"] = rat(c_of_p(S[i], S[j], P, p));
                pts.push_back(q);
            }
            e["points"] = pts;
            pairs.push_back(e);
        }
    doc["pairs"] = pairs;

    if (size() >= 3) {
        for (auto [i, j] : {std::pair<int, int>{0, 1}, {1, 2}, {0, 2}}) require_transverse(i, j);
        Rational E = cutoff_or(5);
        doc["cutoff"] = rat(E);
        Json triples = Json::array();
        for (const auto& p10 : intersections(lag(0), lag(1)))
            for (const auto& p21 : intersections(lag(1), lag(2)))
                for (const auto& p02 : intersections(lag(2), lag(0))) {
                    std::vector<Rational> cc = {c_of_p(S[0], S[1], P, p10), c_of_p(S[1], S[2], P, p21),
                                                c_of_p(S[2], S[0], P, p02)};
                    Json t;
                    t["p10"] = pt(p10);
                    t["p21"] = pt(p21);
                    t["p02"] = pt(p02);
                    t["corner_c"] = Json::array({rat(cc[0]), rat(cc[1]), rat(cc[2])});
                    Rational wide = E + cc[0] + cc[1] + cc[2];
                    Json tris = Json::array();
                    NovikovSeries C(1, wide);
                    for (const auto& tr : enumerate_triangles(lag(0), lag(1), lag(2), p10, p21, p02, wide)) {
                        if (!tr.counted) continue;
                        C.add_term({tr.area, 0}, GroupRingCoeff::scalar(1));
                        EPrime ep = e_prime(tr.area, cc, N);
                        if (ep.value >= E) continue;
                        Json b;
                        b["vertices"] = Json::array({pt(tr.v10), pt(tr.v21), pt(tr.v02)});
                        b["area"] = rat(tr.area);
                        b["e_prime"] = rat(ep.value);
                        b["in_lattice"] = ep.in_lattice;
                        if (!ep.in_lattice)
                            violations.push_back("E'=" + to_string(ep.value) + " not in (1/" + std::to_string(N) + ")Z");
                        tris.push_back(b);
                    }
                    t["triangles"] = tris;
                    t["rebased"] = series_json(rebase_structure_constant(C, cc).with_cutoff(E));
                    triples.push_back(t);
                }
        doc["triples"] = triples;
    }

    std::optional<Int> N0;
    for (const auto& l : cfg_.lagrangians)
        if (l.rationalization_N) N0 = l.rationalization_N;
    if (rc_.N && N0 && *N0 != N) {
        Json rs;
        rs["from"] = *N0;
        rs["to"] = N;
        if (N % *N0 != 0 || *N0 % P.m_amb != 0) {
            rs["skipped"] = "N'=" + std::to_string(N) + " is not a multiple of N=" + std::to_string(*N0);
        } else {
            bool base_rational = true;
            for (std::size_t i = 0; i < size(); ++i)
                base_rational = base_rational && is_BS_N_rational(lag(i), P, *N0).rational;
            if (!base_rational) {
                rs["skipped"] = "not every line is BS " + std::to_string(*N0) + "-rational";
            } else {
                std::vector<Rationalization> S0;
                for (std::size_t i = 0; i < size(); ++i) S0.push_back(rationalization(i, *N0));
                Json entries = Json::array();
                for (std::size_t i = 0; i < size(); ++i)
                    for (std::size_t j = i + 1; j < size(); ++j) {
                        if (!transverse(i, j)) continue;
                        for (const auto& p : intersections(lag(i), lag(j))) {
                            Rational cN = c_of_p(S0[i], S0[j], P, p);
                            RescaleEntry t = rescale_N({cN}, *N0, N, P)[0];
                            RescaleEntry g = rescale_entry(cN, c_of_p(S[i], S[j], P, p), N, P);
                            Json e;
                            e["pair"] = pair_names(i, j);
                            e["point"] = pt(p);
                            e["c_N"] = rat(cN);
                            Json tj;
                            tj["c_Nprime"] = rat(t.c_Nprime);
                            tj["delta"] = rat(t.delta);
                            tj["first_display"] = rat(t.first_display);
                            tj["derived_exponent"] = rat(t.derived_exponent);
                            tj["reciprocal_exponent"] = t.reciprocal_exponent ? rat(*t.reciprocal_exponent) : Json(nullptr);
                            e["tensor_power"] = tj;
                            Json gj;
                            gj["c_Nprime"] = rat(g.c_Nprime);
                            gj["delta"] = rat(g.delta);
                            gj["delta_integral"] = g.delta_integral;
                            gj["first_display"] = rat(g.first_display);
                            gj["derived_exponent"] = rat(g.derived_exponent);
                            e["given_sections"] = gj;
                            entries.push_back(e);
                        }
                    }
                rs["entries"] = entries;
            }
        }
        doc["rescale"] = rs;
    }
    doc["violations"] = violations;
    return violations.empty() ? exit_ok : exit_verification;
}

int Runner::galois_cmd(Json& doc) {
    require_count(3, "galois");
    for (auto [i, j] : {std::pair<int, int>{0, 1}, {1, 2}, {0, 2}}) require_transverse(i, j);
    const Prequantum& P = cfg_.prequantum;
    Int N = reduction_N();
    doc["N"] = N;
    doc["m_amb"] = P.m_amb;
    std::vector<GaloisObject> objs;
    for (std::size_t i = 0; i < 3; ++i) {
        FlatBundle b{lag(i), spec(i).bundle_holonomy};
        if (!b.is_N_rational(N))
            throw Error(ErrorKind::rationality, spec(i).name + ": bundle holonomy is not " + std::to_string(N) + "-rational");
        objs.push_back({lag(i), b, rationalization(i, N)});
    }
    Rational E = cutoff_or(4);
    doc["cutoff"] = rat(E);
    auto rep = galois_equivariance_check(objs, P, E);
    Json cases = Json::array();
    for (const auto& c : rep.cases) {
        Json e;
        e["j"] = c.j;
        e["p10"] = pt(c.p10);
        e["p21"] = pt(c.p21);
        e["p02"] = pt(c.p02);
        e["triangles"] = c.triangles;
        e["sigma"] = series_json(c.sigma_side);
        e["twisted"] = series_json(c.twist_side);
        e["equal"] = c.equal;
        cases.push_back(e);
    }
    doc["cases"] = cases;
    doc["violations"] = rep.violations;
    return rep.ok() ? exit_ok : exit_verification;
}

int Runner::ainfty_cmd(Json& doc) {
    std::vector<AnchoredLag> al;
    if (!anchored_) throw Error(ErrorKind::input, "ainfty-check on a TOML configuration needs anchored mode");
    require_count(3, "ainfty-check");
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j) require_transverse(i, j);
    for (std::size_t i = 0; i < size(); ++i) al.push_back(alag(i));
    AInftyStructure S = anchored_structure(al, rc_.cutoff);
    bool ok = false;
    doc["report"] = residual_json(S, ok);
    doc["ok"] = ok;
    return ok ? exit_ok : exit_verification;
}

int Runner::export_cmd(Json& doc) {
    if (!anchored_) throw Error(ErrorKind::input, "export needs anchored mode");
    require_count(3, "export");
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j) require_transverse(i, j);
    std::vector<AnchoredLag> al;
    for (std::size_t i = 0; i < size(); ++i) al.push_back(alag(i));
    doc = structure_to_json(anchored_structure(al, rc_.cutoff));
    return exit_ok;
}

bool is_json_path(const std::string& p) { return p.size() >= 5 && p.substr(p.size() - 5) == ".json"; }

int check_structure_file(const RunConfig& rc, Json& doc) {
    std::ifstream in(rc.config_path);
    if (!in) throw Error(ErrorKind::input, rc.config_path + ": cannot open");
    AInftyStructure S;
    try {
        S = structure_from_json(Json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::input, rc.config_path + ": " + e.what());
    }
    doc["schema"] = 1;
    doc["command"] = rc.command;
    doc["mode"] = "structure";
    bool ok = false;
    doc["report"] = residual_json(S, ok);
    doc["ok"] = ok;
    return ok ? exit_ok : exit_verification;
}

}  // namespace

int run(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    Json doc;
    int code = exit_ok;
    try {
        if (rc.cutoff && *rc.cutoff <= 0) throw Error(ErrorKind::input, "--cutoff must be positive");
        if (rc.command == "ainfty-check" && is_json_path(rc.config_path)) {
            code = check_structure_file(rc, doc);
        } else {
            Config cfg = load_config(rc.config_path);
            Runner r(rc, cfg);
            code = r.dispatch(doc);
        }
    } catch (const Error& e) {
        err << "floer: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        err << "floer: " << e.what() << "\n";
        return exit_input;
    }
    std::string text = doc.dump(2) + "\n";
    if (rc.json_out) {
        std::ofstream f(*rc.json_out, std::ios::binary);
        if (!f) {
            err << "floer: cannot write " << *rc.json_out << "\n";
            return exit_input;
        }
        f << text;
    } else {
        out << text;
    }
    return code;
}

}  // namespace floer
