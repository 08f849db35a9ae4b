#include "flat4/catalog.hpp"

#include "flat4/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#ifndef FLAT4SPEC_DEFAULT_CATALOG
#define FLAT4SPEC_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace flat4 {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

IntMatrix named_block(std::string_view name) {
    if (name == "1") return IntMatrix{{1}};
    if (name == "I") return IntMatrix{{1, 0}, {0, 1}};
    if (name == "I~") return IntMatrix{{-1, 0}, {0, 1}};
    if (name == "J") return IntMatrix{{0, 1}, {1, 0}};
    if (name == "J~") return IntMatrix{{0, 1}, {-1, 0}};
    if (name == "T") return IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    if (name == "T^t") return IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    if (name == "K") return IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    throw Error("unknown block '" + std::string(name) + "'");
}

}  // namespace

IntMatrix parse_block_matrix(std::string_view text) {
    text = trim(text);
    std::string_view body;
    if (text.starts_with("d(")) body = text.substr(2);
    else if (text.starts_with("diag(")) body = text.substr(5);
    else throw Error("bad block notation: " + std::string(text));
    if (!body.ends_with(")")) throw Error("bad block notation: " + std::string(text));
    body.remove_suffix(1);

    std::vector<IntMatrix> blocks;
    int n = 0;
    while (true) {
        auto comma = body.find(',');
        std::string_view tok = trim(body.substr(0, comma));
        int sign = 1;
        if (tok.starts_with("-")) {
            sign = -1;
            tok.remove_prefix(1);
        }
        IntMatrix b = named_block(trim(tok));
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) b(i, j) *= sign;
        n += b.rows();
        blocks.push_back(std::move(b));
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
    }
    IntMatrix out(n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return out;
}

RatVector parse_translation(std::string_view text) {
    RatVector v(4, Rational(0));
    text = trim(text);
    if (text == "0") return v;
    // Split on top-level " + ".
    std::vector<std::string_view> terms;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (depth == 0 && text[i] == '+' && i > 0 && text[i - 1] == ' ') {
            terms.push_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    terms.push_back(trim(text.substr(start)));

    for (auto term : terms) {
        auto slash = term.rfind('/');
        if (slash == std::string_view::npos) throw Error("bad translation term: " + std::string(term));
        Rational den = parse_rational(trim(term.substr(slash + 1)));
        std::string_view num = trim(term.substr(0, slash));
        if (num.starts_with("(") && num.ends_with(")")) num = num.substr(1, num.size() - 2);
        std::size_t i = 0;
        while (i < num.size()) {
            int sign = 1;
            while (i < num.size() && (num[i] == '+' || num[i] == '-' || num[i] == ' ')) {
                if (num[i] == '-') sign = -sign;
                ++i;
            }
            std::int64_t coef = 1;
            if (i < num.size() && std::isdigit(static_cast<unsigned char>(num[i]))) {
                auto [p, ec] = std::from_chars(num.data() + i, num.data() + num.size(), coef);
                if (ec != std::errc()) throw Error("bad translation term: " + std::string(term));
                i = static_cast<std::size_t>(p - num.data());
            }
            if (i + 1 >= num.size() || num[i] != 'e' || num[i + 1] < '1' || num[i + 1] > '4')
                throw Error("bad translation term: " + std::string(term));
            v[num[i + 1] - '1'] += Rational(sign * coef) / den;
            i += 2;
        }
    }
    return v;
}

bool id_less(std::string_view a, std::string_view b) {
    auto split = [](std::string_view s) {
        std::int64_t num = 0;
        std::size_t i = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num = num * 10 + (s[i++] - '0');
        return std::pair{num, s.substr(i)};
    };
    auto [na, ra] = split(a);
    auto [nb, rb] = split(b);
    if (na != nb) return na < nb;
    if (ra.size() != rb.size()) return ra.size() < rb.size();
    return ra < rb;
}

const BieberbachGroup& Catalog::group(std::string_view id) const {
    for (const auto& g : groups)
        if (g.id() == id) return g;
    throw CatalogError("unknown group id '" + std::string(id) + "'");
}

const CatalogEntry& Catalog::entry(std::string_view id) const {
    for (const auto& e : entries)
        if (e.id == id) return e;
    throw CatalogError("unknown group id '" + std::string(id) + "'");
}

bool Catalog::contains(std::string_view id) const {
    return std::any_of(groups.begin(), groups.end(), [&](const auto& g) { return g.id() == id; });
}

namespace {

CatalogEntry parse_entry(const json& j) {
    CatalogEntry e;
    e.id = j.at("id").get<std::string>();
    e.source_table = j.value("source_table", "");
    e.holonomy_name = j.value("holonomy", "");
    e.note = j.value("note", "");
    for (const auto& gj : j.at("generators")) {
        const auto& rows = gj.at("B");
        if (!rows.is_array() || rows.size() != 4) throw CatalogError("matrix must have 4 rows");
        IntMatrix B(4, 4);
        for (int r = 0; r < 4; ++r) {
            if (!rows[r].is_array() || rows[r].size() != 4) throw CatalogError("matrix rows must have 4 entries");
            for (int c = 0; c < 4; ++c) B(r, c) = rows[r][c].get<std::int64_t>();
        }
        const auto& bj = gj.at("b");
        if (!bj.is_array() || bj.size() != 4) throw CatalogError("translation must have 4 entries");
        RatVector b;
        for (const auto& x : bj) b.push_back(parse_rational(x.get<std::string>()));
        if (gj.contains("block") && parse_block_matrix(gj["block"].get<std::string>()) != B)
            throw CatalogError("matrix disagrees with its block notation " + gj["block"].get<std::string>());
        e.generators.push_back({std::move(B), std::move(b)});
    }
    const auto& ex = j.at("expected");
    const auto& beta = ex.at("betti");
    e.expected.beta1 = beta.at(0).get<int>();
    e.expected.beta2 = beta.at(1).get<int>();
    e.expected.orientable = ex.at("orientable").get<bool>();
    e.expected.diagonal = ex.at("diagonal").get<bool>();
    if (ex.contains("sunada")) {
        std::array<int, 6> s{};
        const auto& sj = ex["sunada"];
        if (sj.size() != 6) throw CatalogError("sunada row must have 6 entries");
        for (int i = 0; i < 6; ++i) s[i] = sj[i].get<int>();
        e.expected.sunada = s;
    }
    return e;
}

// Compares computed invariants with the recorded ones; returns mismatch descriptions.
std::vector<std::string> check_entry(const CatalogEntry& e, const BieberbachGroup& g) {
    std::vector<std::string> out;
    const int b1 = betti(g, 1), b2 = betti(g, 2);
    if (b1 != e.expected.beta1 || b2 != e.expected.beta2)
        out.push_back("Betti numbers " + std::to_string(b1) + "," + std::to_string(b2) + " differ from recorded " +
                      std::to_string(e.expected.beta1) + "," + std::to_string(e.expected.beta2));
    if (g.is_orientable() != e.expected.orientable) out.push_back("orientability differs from recorded value");
    if (g.is_diagonal_type() != e.expected.diagonal) out.push_back("diagonal type differs from recorded value");
    if (g.is_diagonal_type()) {
        const SunadaNumbers s = sunada_numbers(g);
        if (s.total() != g.order() - 1) out.push_back("Sunada numbers do not sum to |F| - 1");
        for (int d = 0; d < 4; ++d)
            if (s.at(d, 0) != 0) out.push_back("Sunada number c_{" + std::to_string(d) + ",0} is nonzero");
        if (e.expected.sunada && s.listed() != *e.expected.sunada) out.push_back("Sunada numbers differ from recorded row");
    } else if (e.expected.sunada) {
        out.push_back("Sunada row recorded for a non-diagonal group");
    }
    return out;
}

}  // namespace

CatalogLoad load_catalog_from_string(std::string_view text) {
    CatalogLoad load;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        load.issues.push_back({"", std::string("malformed JSON: ") + ex.what()});
        return load;
    }
    try {
        load.catalog.schema_version = doc.at("schema_version").get<int>();
        load.catalog.declared_count = doc.at("entry_count").get<int>();
        if (load.catalog.schema_version != 1) load.issues.push_back({"", "unsupported schema version"});
        const auto& entries = doc.at("entries");
        if (!entries.is_array()) throw CatalogError("entries must be an array");
        std::set<std::string> ids;
        for (const auto& ej : entries) {
            std::string id = ej.is_object() ? ej.value("id", "?") : "?";
            try {
                CatalogEntry e = parse_entry(ej);
                if (!ids.insert(e.id).second) throw CatalogError("duplicate id");
                GroupMetadata meta{e.holonomy_name, e.source_table, e.note};
                BieberbachGroup g = build_group(e.id, e.generators, meta);
                for (auto& msg : check_entry(e, g)) load.issues.push_back({e.id, std::move(msg)});
                load.catalog.entries.push_back(std::move(e));
                load.catalog.groups.push_back(std::move(g));
            } catch (const json::exception& ex) {
                load.issues.push_back({id, std::string("schema violation: ") + ex.what()});
            } catch (const Error& ex) {
                load.issues.push_back({id, ex.what()});
            }
        }
        if (doc.contains("excluded")) {
            for (const auto& xj : doc["excluded"]) {
                ExcludedEntry x;
                x.id = xj.at("id").get<std::string>();
                x.source_table = xj.value("source_table", "");
                x.reason = xj.at("reason").get<std::string>();
                try {
                    CatalogEntry e = parse_entry({{"id", x.id}, {"generators", xj.at("generators")},
                                                  {"expected", {{"betti", {0, 0}}, {"orientable", false}, {"diagonal", false}}}});
                    build_group(x.id, e.generators);
                    load.issues.push_back({x.id, "excluded entry builds as a valid group"});
                } catch (const Error& ex) {
                    x.build_error = ex.what();
                }
                load.catalog.excluded.push_back(std::move(x));
            }
        }
        if (load.issues.empty() && static_cast<int>(load.catalog.groups.size()) != load.catalog.declared_count)
            load.issues.push_back({"", "catalog declares " + std::to_string(load.catalog.declared_count) +
                                           " entries but contains " + std::to_string(load.catalog.groups.size())});
    } catch (const json::exception& ex) {
        load.issues.push_back({"", std::string("schema violation: ") + ex.what()});
    } catch (const Error& ex) {
        load.issues.push_back({"", ex.what()});
    }
    return load;
}

CatalogLoad load_catalog_checked(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        CatalogLoad load;
        load.issues.push_back({"", "cannot open catalog " + path.string()});
        return load;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return load_catalog_from_string(buf.str());
}

Catalog load_catalog(const std::filesystem::path& path) {
    CatalogLoad load = load_catalog_checked(path);
    if (!load.ok()) {
        const auto& first = load.issues.front();
        std::string msg = first.id.empty() ? first.message : "entry " + first.id + ": " + first.message;
        if (load.issues.size() > 1) msg += " (and " + std::to_string(load.issues.size() - 1) + " more)";
        throw CatalogError(msg);
    }
    return std::move(load.catalog);
}

std::filesystem::path default_catalog_path() {
    if (const char* env = std::getenv("FLAT4SPEC_CATALOG"); env && *env) return env;
    return FLAT4SPEC_DEFAULT_CATALOG;
}

}  // namespace flat4
