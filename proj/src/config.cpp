#include "floer/config.hpp"

#include <fstream>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include "toml.hpp"

namespace floer {

namespace {

[[noreturn]] void fail(const std::string& path, const toml::source_region& src, const std::string& msg) {
    std::ostringstream os;
    os << path << ":" << src.begin.line << ":" << src.begin.column << ": " << msg;
    throw Error(ErrorKind::input, os.str());
}

struct Reader {
    std::string path;

    Rational rational(const toml::node& n, const std::string& what) const {
        if (auto i = n.as_integer()) return Rational(static_cast<long>(i->get()));
        if (auto s = n.as_string()) {
            try {
                return parse_rational(s->get());
            } catch (const Error&) {
                fail(path, n.source(), what + ": bad rational \"" + s->get() + "\"");
            }
        }
        fail(path, n.source(), what + ": expected an integer or a \"p/q\" string");
    }

    Int integer(const toml::node& n, const std::string& what) const {
        if (auto i = n.as_integer()) return i->get();
        fail(path, n.source(), what + ": expected an integer");
    }

    Point2 point(const toml::node& n, const std::string& what) const {
        auto a = n.as_array();
        if (!a || a->size() != 2) fail(path, n.source(), what + ": expected a pair");
        return {rational(*a->get(0), what), rational(*a->get(1), what)};
    }
};

}  // namespace

bool Config::anchored() const {
    if (lagrangians.empty()) return false;
    for (const auto& l : lagrangians)
        if (!l.anchor) return false;
    return true;
}

std::vector<AnchoredLag> Config::anchored_lags() const {
    std::vector<AnchoredLag> out;
    for (const auto& l : lagrangians) {
        if (!l.anchor) throw Error(ErrorKind::input, "Lagrangian '" + l.name + "' has no anchor");
        out.emplace_back(l.lag, *l.anchor);
    }
    return out;
}

std::vector<TorusLagrangian> Config::lags() const {
    std::vector<TorusLagrangian> out;
    for (const auto& l : lagrangians) out.push_back(l.lag);
    return out;
}

Config parse_config(const std::string& text, const std::string& path) {
    toml::table doc;
    try {
        doc = toml::parse(text, path);
    } catch (const toml::parse_error& e) {
        fail(path, e.source(), std::string(e.description()));
    }
    Reader rd{path};
    Config cfg;
    cfg.path = path;
    const toml::source_region top{{1, 1}, {1, 1}, nullptr};

    auto schema = doc["schema"];
    if (!schema) fail(path, top, "missing schema");
    if (rd.integer(*schema.node(), "schema") != 1) fail(path, schema.node()->source(), "unsupported schema");

    for (auto&& [k, v] : doc) {
        std::string key(k.str());
        if (key != "schema" && key != "base" && key != "lagrangian" && key != "prequantum")
            fail(path, v.source(), "unknown key '" + key + "'");
    }

    if (auto base = doc["base"].as_table()) {
        if (auto lift = (*base)["lift"].node()) cfg.base = rd.point(*lift, "base.lift");
    }
    if (auto pq = doc["prequantum"].as_table()) {
        if (auto m = (*pq)["m_amb"].node()) {
            cfg.prequantum.m_amb = rd.integer(*m, "m_amb");
            if (cfg.prequantum.m_amb <= 0) fail(path, m->source(), "m_amb must be positive");
        }
    }

    auto lags = doc["lagrangian"].as_array();
    if (!lags || lags->empty()) fail(path, top, "no [[lagrangian]] blocks");
    std::size_t idx = 0;
    for (auto&& node : *lags) {
        auto t = node.as_table();
        if (!t) fail(path, node.source(), "lagrangian entries must be tables");
        static const char* known[] = {"name",           "direction",          "offset",
                                      "grading",        "anchor_lift",        "anchor_path",
                                      "bundle_holonomy", "rationalization_N", "rationalization_phase",
                                      "rationalization_point"};
        for (auto&& [k, v] : *t) {
            bool ok = false;
            for (const char* kn : known) ok = ok || k.str() == kn;
            if (!ok) fail(path, v.source(), "unknown key '" + std::string(k.str()) + "'");
        }
        std::string name = "L" + std::to_string(idx);
        if (auto n = (*t)["name"].node()) {
            auto s = n->as_string();
            if (!s) fail(path, n->source(), "name: expected a string");
            name = s->get();
        }
        auto dir = (*t)["direction"].node();
        if (!dir) fail(path, t->source(), name + ": missing direction");
        auto da = dir->as_array();
        if (!da || da->size() != 2) fail(path, dir->source(), name + ": direction must be [a, b]");
        Int a = rd.integer(*da->get(0), "direction"), b = rd.integer(*da->get(1), "direction");
        Rational offset = 0;
        if (auto o = (*t)["offset"].node()) offset = rd.rational(*o, "offset");
        Int grading = 0;
        if (auto g = (*t)["grading"].node()) grading = rd.integer(*g, "grading");

        std::optional<TorusLagrangian> L;
        try {
            L.emplace(a, b, offset, grading);
        } catch (const Error& e) {
            fail(path, dir->source(), name + ": " + e.what());
        }
        LagrangianSpec spec{name, *L, std::nullopt, 0, std::nullopt, 0, std::nullopt};

        auto lift = (*t)["anchor_lift"].node();
        auto apath = (*t)["anchor_path"].node();
        if (apath) {
            auto arr = apath->as_array();
            if (!arr || arr->size() < 2) fail(path, apath->source(), name + ": anchor_path needs two points");
            Anchor an;
            for (auto&& p : *arr) an.path.push_back(rd.point(p, "anchor_path"));
            if (an.path.front() != cfg.base) fail(path, apath->source(), name + ": anchor_path must start at the base lift");
            if (lift && rd.point(*lift, "anchor_lift") != an.path.back())
                fail(path, lift->source(), name + ": anchor_lift differs from the end of anchor_path");
            spec.anchor = an;
        } else if (lift) {
            spec.anchor = Anchor::straight(cfg.base, rd.point(*lift, "anchor_lift"));
        }
        if (spec.anchor) {
            if (!spec.lag.contains(spec.anchor->endpoint()))
                fail(path, (lift ? lift : apath)->source(), name + ": anchor endpoint is not on the line");
        }

        if (auto h = (*t)["bundle_holonomy"].node()) {
            spec.bundle_holonomy = rd.rational(*h, "bundle_holonomy");
            if (spec.bundle_holonomy < 0 || spec.bundle_holonomy >= 1)
                fail(path, h->source(), name + ": bundle_holonomy must lie in [0,1)");
        }
        if (auto n = (*t)["rationalization_N"].node()) {
            spec.rationalization_N = rd.integer(*n, "rationalization_N");
            if (*spec.rationalization_N <= 0) fail(path, n->source(), name + ": rationalization_N must be positive");
        }
        if (auto ph = (*t)["rationalization_phase"].node()) spec.rationalization_phase = rd.rational(*ph, "rationalization_phase");
        if (auto rp = (*t)["rationalization_point"].node()) {
            spec.rationalization_point = rd.point(*rp, "rationalization_point");
            if (!spec.lag.contains(*spec.rationalization_point))
                fail(path, rp->source(), name + ": rationalization_point is not on the line");
        }
        cfg.lagrangians.push_back(std::move(spec));
        ++idx;
    }
    for (std::size_t i = 0; i < cfg.lagrangians.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.lagrangians.size(); ++j)
            if (cfg.lagrangians[i].name == cfg.lagrangians[j].name)
                fail(path, top, "duplicate Lagrangian name '" + cfg.lagrangians[i].name + "'");
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::input, path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

}  // namespace floer
