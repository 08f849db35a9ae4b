#include "flat4/classify.hpp"

#include "flat4/catalog.hpp"
#include "flat4/error.hpp"
#include "flat4/lengths.hpp"
#include "flat4/theta.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace flat4 {

Mode parse_mode(std::string_view name) {
    if (name == "p0") return Mode::p0;
    if (name == "p1") return Mode::p1;
    if (name == "p2") return Mode::p2;
    if (name == "p3") return Mode::p3;
    if (name == "p4") return Mode::p4;
    if (name == "all-p") return Mode::all_p;
    if (name == "sunada") return Mode::sunada;
    if (name == "L") return Mode::L;
    if (name == "bracketL") return Mode::bracketL;
    throw Error("unknown mode '" + std::string(name) + "'");
}

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::p0: return "p0";
        case Mode::p1: return "p1";
        case Mode::p2: return "p2";
        case Mode::p3: return "p3";
        case Mode::p4: return "p4";
        case Mode::all_p: return "all-p";
        case Mode::sunada: return "sunada";
        case Mode::L: return "L";
        case Mode::bracketL: return "bracketL";
    }
    return "?";
}

bool p_isospectral(const BieberbachGroup& a, const BieberbachGroup& b, int p) {
    return poly_equal(heat_trace_poly(a, p), heat_trace_poly(b, p));
}

bool sunada_isospectral(const BieberbachGroup& a, const BieberbachGroup& b) {
    return sunada_numbers(a) == sunada_numbers(b);
}

bool L_isospectral(const BieberbachGroup& a, const BieberbachGroup& b) {
    return poly_support(heat_trace_poly(a, 0)) == poly_support(heat_trace_poly(b, 0));
}

namespace {

using LengthProfile = std::map<Rational, std::int64_t>;

LengthProfile length_profile(const BieberbachGroup& g, const Rational& bound) {
    LengthProfile out;
    for (const auto& l2 : length_set(g, bound)) {
        const std::int64_t m = length_multiplicity(g, l2);
        if (m != 0) out.emplace(l2, m);
    }
    return out;
}

}  // namespace

std::optional<Rational> bracketL_witness(const BieberbachGroup& a, const BieberbachGroup& b, const Rational& bound) {
    const LengthProfile pa = length_profile(a, bound);
    const LengthProfile pb = length_profile(b, bound);
    std::set<Rational> all;
    for (const auto& [l, _] : pa) all.insert(l);
    for (const auto& [l, _] : pb) all.insert(l);
    for (const auto& l : all) {
        auto ia = pa.find(l);
        auto ib = pb.find(l);
        const std::int64_t ma = ia == pa.end() ? 0 : ia->second;
        const std::int64_t mb = ib == pb.end() ? 0 : ib->second;
        if (ma != mb) return l;
    }
    return std::nullopt;
}

bool bracketL_agree(const BieberbachGroup& a, const BieberbachGroup& b, const Rational& bound) {
    return !bracketL_witness(a, b, bound).has_value();
}

namespace {

// Per-group signature; two groups are equivalent iff signatures are equal.
struct Signature {
    std::vector<HeatTracePoly> polys;
    std::set<Monomial> support;
    SunadaNumbers sunada;
    LengthProfile lengths;
};

bool same(const Signature& a, const Signature& b, Mode mode) {
    switch (mode) {
        case Mode::p0: case Mode::p1: case Mode::p2: case Mode::p3: case Mode::p4: case Mode::all_p:
            for (std::size_t i = 0; i < a.polys.size(); ++i)
                if (!poly_equal(a.polys[i], b.polys[i])) return false;
            return true;
        case Mode::sunada: return a.sunada == b.sunada;
        case Mode::L: return a.support == b.support;
        case Mode::bracketL: return a.lengths == b.lengths;
    }
    return false;
}

}  // namespace

ClassificationReport classify_all(const std::vector<BieberbachGroup>& groups, Mode mode, const ClassifyParams& params) {
    ClassificationReport report;
    report.mode = mode;
    report.params = params;

    std::vector<const BieberbachGroup*> members;
    std::vector<Signature> sigs;
    for (const auto& g : groups) {
        if (mode == Mode::sunada && !g.is_diagonal_type()) {
            report.skipped.push_back(g.id());
            continue;
        }
        if (mode == Mode::bracketL && !g.is_abelian()) {
            report.skipped.push_back(g.id());
            continue;
        }
        try {
            Signature s;
            switch (mode) {
                case Mode::p0: case Mode::p1: case Mode::p2: case Mode::p3: case Mode::p4:
                    s.polys.push_back(heat_trace_poly(g, static_cast<int>(mode) - static_cast<int>(Mode::p0)));
                    break;
                case Mode::all_p: {
                    auto sym = heat_trace_symbolic(g);
                    for (int p = 0; p <= 4; ++p) s.polys.push_back(sym.at(p));
                    break;
                }
                case Mode::sunada: s.sunada = sunada_numbers(g); break;
                case Mode::L: s.support = poly_support(heat_trace_poly(g, 0)); break;
                case Mode::bracketL: s.lengths = length_profile(g, params.bound); break;
            }
            members.push_back(&g);
            sigs.push_back(std::move(s));
        } catch (const Error& ex) {
            report.errors.push_back({g.id(), ex.what()});
        }
    }

    std::vector<std::size_t> parent(members.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (members[i]->order() != members[j]->order()) continue;
            if (find(i) == find(j)) continue;
            if (same(sigs[i], sigs[j], mode)) parent[find(i)] = find(j);
        }

    std::map<std::size_t, std::vector<std::string>> by_root;
    for (std::size_t i = 0; i < members.size(); ++i) by_root[find(i)].push_back(members[i]->id());
    for (auto& [_, ids] : by_root) {
        if (ids.size() < 2) continue;
        std::sort(ids.begin(), ids.end(), [](const auto& a, const auto& b) { return id_less(a, b); });
        report.classes.push_back(std::move(ids));
    }
    std::sort(report.classes.begin(), report.classes.end(),
              [](const auto& a, const auto& b) { return id_less(a.front(), b.front()); });
    std::sort(report.skipped.begin(), report.skipped.end(),
              [](const auto& a, const auto& b) { return id_less(a, b); });
    return report;
}

std::string ClassificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["mode"] = mode_name(mode);
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    if (mode == Mode::bracketL) {
        p["bound"] = to_string(params.bound);
        p["note"] = "multiplicities agree for every squared length up to the bound";
    }
    if (!skipped.empty()) p["skipped"] = skipped;
    j["params"] = p;
    j["classes"] = classes;
    nlohmann::ordered_json errs = nlohmann::ordered_json::array();
    for (const auto& e : errors) errs.push_back({{"id", e.id}, {"message", e.message}});
    j["errors"] = errs;
    return j.dump(1);
}

std::string ClassificationReport::to_text() const {
    std::ostringstream out;
    out << "mode: " << mode_name(mode) << "\n";
    if (mode == Mode::bracketL) out << "bound: squared length <= " << to_string(params.bound) << " (agreement up to bound)\n";
    if (!skipped.empty()) {
        out << "skipped:";
        for (const auto& s : skipped) out << " " << s;
        out << "\n";
    }
    out << "classes: " << classes.size() << "\n";
    for (const auto& c : classes) {
        out << "{";
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << c[i];
        out << "}\n";
    }
    for (const auto& e : errors) out << "error " << e.id << ": " << e.message << "\n";
    return out.str();
}

}  // namespace flat4
