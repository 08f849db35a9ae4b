#pragma once

#include "flat4/catalog.hpp"
#include "flat4/kraw.hpp"
#include "flat4/qfield.hpp"
#include "flat4/theta.hpp"

#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace flat4::testing {

inline std::filesystem::path data_file(std::string_view name) {
    return std::filesystem::path(FLAT4SPEC_TEST_DATA) / name;
}

inline const Catalog& shipped_catalog() {
    static const Catalog cat = load_catalog(FLAT4SPEC_SHIPPED_CATALOG);
    return cat;
}

inline nlohmann::json read_json(std::string_view name) {
    std::ifstream in(data_file(name));
    if (!in) throw std::runtime_error("missing test data " + std::string(name));
    return nlohmann::json::parse(in);
}

/// "C", "K0".."K4" or "[a,b,c,d,e]" / "a b c d e".
inline TraceRow parse_row(std::string text) {
    if (text == "C") return krawtchouk_row(0);
    if (text.size() == 2 && text[0] == 'K') return krawtchouk_row(text[1] - '0');
    for (char& ch : text)
        if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
    std::istringstream in(text);
    TraceRow row{};
    for (auto& v : row)
        if (!(in >> v)) throw std::runtime_error("bad trace row '" + text + "'");
    return row;
}

/// "3/2" or "3/2@2" (times sqrt 2).
inline QuadNumber parse_coefficient(const std::string& text) {
    auto at = text.find('@');
    Rational q = parse_rational(text.substr(0, at));
    if (at == std::string::npos) return QuadNumber(q);
    return QuadNumber(q) * sqrt_int(std::stoll(text.substr(at + 1)));
}

struct GoldenTerm {
    QuadNumber coefficient{1};
    TraceRow row{};
    Monomial monomial;
};

struct GoldenLine {
    std::string id;
    int order = 1;
    std::string same_as;  // non-empty for "a = b" lines
    std::vector<GoldenTerm> terms;
};

inline std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

inline std::vector<GoldenLine> load_heat_trace_lines() {
    std::ifstream in(data_file("heat_traces.txt"));
    if (!in) throw std::runtime_error("missing heat_traces.txt");
    std::vector<GoldenLine> out;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        GoldenLine g;
        if (auto colon = line.find(" : "); colon != std::string::npos) {
            auto head = split_words(line.substr(0, colon));
            g.id = head.at(0);
            g.order = std::stoi(head.at(1));
            std::string rest = line.substr(colon + 3);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                auto semi = rest.find(';', pos);
                auto words = split_words(rest.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos));
                GoldenTerm t;
                std::size_t i = 0;
                if (words.size() == 3) t.coefficient = parse_coefficient(words[i++]);
                t.row = parse_row(words.at(i++));
                t.monomial = parse_monomial(words.at(i));
                g.terms.push_back(t);
                if (semi == std::string::npos) break;
                pos = semi + 1;
            }
        } else {
            auto words = split_words(line);
            if (words.size() != 3 || words[1] != "=") throw std::runtime_error("bad golden line: " + line);
            g.id = words[0];
            g.same_as = words[2];
        }
        out.push_back(std::move(g));
    }
    return out;
}

/// The transcribed |F| Z_p of `id` as a polynomial, following "a = b" lines.
inline HeatTracePoly golden_poly(const std::map<std::string, GoldenLine>& lines, const std::string& id, int p) {
    const GoldenLine* g = &lines.at(id);
    while (!g->same_as.empty()) g = &lines.at(g->same_as);
    HeatTracePoly poly(g->order);
    for (const auto& t : g->terms) poly.add_scaled(t.monomial, t.coefficient * QuadNumber(t.row[p]));
    return poly;
}

inline std::map<std::string, GoldenLine> heat_trace_index() {
    std::map<std::string, GoldenLine> out;
    for (auto& g : load_heat_trace_lines()) out.emplace(g.id, g);
    return out;
}

using IdSets = std::vector<std::vector<std::string>>;

/// Sorts ids within each set (natural id order) and the sets by their first id.
inline IdSets normalized(IdSets sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end(), [](auto& a, auto& b) { return id_less(a, b); });
    std::sort(sets.begin(), sets.end(), [](auto& a, auto& b) { return id_less(a.front(), b.front()); });
    return sets;
}

inline IdSets golden_sets(std::string_view mode) {
    return normalized(read_json("classifications.json").at(std::string(mode)).get<IdSets>());
}

inline std::string render(const IdSets& sets) {
    std::string out;
    for (const auto& s : sets) {
        out += "{";
        for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
        out += "} ";
    }
    return out;
}

}  // namespace flat4::testing
