// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "support.hpp"

#include "flat4/classify.hpp"
#include "flat4/lengths.hpp"
#include "flat4/numspec.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>

using namespace flat4;
using namespace flat4::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(std::string why) {
        pass = false;
        notes.push_back(std::move(why));
    }
    void note(std::string what) { notes.push_back(std::move(what)); }
};

const BieberbachGroup& G(const std::string& id) { return shipped_catalog().group(id); }

std::string row_text(const TraceRow& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? " " : "") + std::to_string(r[i]);
    return s;
}

void compare_sets(Outcome& out, const std::string& label, const IdSets& got, const IdSets& want) {
    std::set<std::vector<std::string>> g(got.begin(), got.end()), w(want.begin(), want.end());
    for (const auto& s : w)
        if (!g.count(s)) out.fail(label + ": expected set " + render({s}) + "not produced");
    for (const auto& s : g)
        if (!w.count(s)) out.fail(label + ": produced set " + render({s}) + "not in the expected list");
    out.note(label + ": " + std::to_string(got.size()) + " sets produced, " + std::to_string(want.size()) +
             " expected");
}

IdSets classes(Mode m) { return normalized(classify_all(shipped_catalog().groups, m).classes); }

Outcome krawtchouk_table() {
    Outcome out;
    const std::array<TraceRow, 5> printed{{{1, 4, 6, 4, 1}, {1, 2, 0, -2, -1}, {1, 0, -2, 0, 1}, {1, -2, 0, 2, -1},
                                           {1, -4, 6, -4, 1}}};
    for (int j = 0; j <= 4; ++j)
        for (int p = 0; p <= 4; ++p)
            if (krawtchouk(4, p, j) != printed[j][p])
                out.fail("K_" + std::to_string(p) + "(" + std::to_string(j) + ") = " +
                         std::to_string(krawtchouk(4, p, j)));
    return out;
}

Outcome trace_rows() {
    Outcome out;
    int cells = 0;
    auto tables = read_json("tables.json");
    for (const auto& t : tables.at("tables"))
        for (const auto& col : t.at("columns")) {
            std::string block = col.at(0), row = col.at(1);
            auto got = trace_row(parse_block_matrix(block));
            ++cells;
            if (got != parse_row(row))
                out.fail("table " + t.at("table").get<std::string>() + " " + block + ": printed " + row_text(parse_row(row)) +
                         ", computed " + row_text(got) + " (det " +
                         std::to_string(parse_block_matrix(block).determinant()) + ")");
        }
    out.note(std::to_string(cells) + " printed cells checked");
    return out;
}

Outcome betti_numbers() {
    Outcome out;
    int checked = 0;
    auto tables = read_json("tables.json");
    for (const auto& t : tables.at("tables")) {
        auto b = t.at("betti").get<std::array<int, 2>>();
        for (const auto& idj : t.at("ids")) {
            std::string id = idj;
            if (!shipped_catalog().contains(id)) continue;
            ++checked;
            int b1 = betti(G(id), 1), b2 = betti(G(id), 2);
            if (b1 != b[0] || b2 != b[1])
                out.fail("group " + id + " (table " + t.at("table").get<std::string>() + "): printed " +
                         std::to_string(b[0]) + "," + std::to_string(b[1]) + ", computed " + std::to_string(b1) + "," +
                         std::to_string(b2));
        }
    }
    out.note(std::to_string(checked) + " groups checked");
    return out;
}

Outcome sunada_table() {
    Outcome out;
    auto rows = read_json("sunada.json").at("rows");
    int checked = 0;
    for (const auto& [id, row] : rows.items()) {
        auto s = sunada_numbers(G(id));
        ++checked;
        if (id == "40") {
            if (s.total() != 7) out.fail("group 40: sum of Sunada numbers is " + std::to_string(s.total()));
            if (!(s == sunada_numbers(G("35")))) out.fail("group 40: Sunada numbers differ from group 35");
            continue;
        }
        if (s.listed() != row.get<std::array<int, 6>>()) out.fail("group " + id + ": computed row differs");
    }
    int diagonal = 0;
    for (const auto& g : shipped_catalog().groups) diagonal += g.is_diagonal_type() && g.id() != "1";
    if (checked != diagonal) out.fail("appendix rows cover " + std::to_string(checked) + " of " + std::to_string(diagonal));
    out.note(std::to_string(checked) + " rows checked");
    return out;
}

Outcome heat_traces() {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    auto lines = heat_trace_index();
    int checked = 0;
    for (const auto& g : shipped_catalog().groups) {
        if (!lines.count(g.id())) {
            out.fail("group " + g.id() + ": no transcribed line");
            continue;
        }
        for (int p = 0; p <= 4; ++p) {
            auto want = golden_poly(lines, g.id(), p);
            auto got = heat_trace_poly(g, p);
            ++checked;
            if (!poly_equal(got, want)) {
                const auto* line = &lines.at(g.id());
                std::string via = line->same_as.empty() ? "" : " (printed as equal to " + line->same_as + ")";
                out.fail("group " + g.id() + " p=" + std::to_string(p) + via + ": computed " + got.str() +
                         " expected " + want.str());
                break;
            }
        }
    }
    for (const auto& [id, line] : lines)
        if (!shipped_catalog().contains(id)) out.note("line for " + id + " not checked: no such group in the catalog");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 1.0) out.fail("took " + std::to_string(secs) + " s");
    out.note(std::to_string(checked) + " (group, p) polynomials compared in " + std::to_string(secs) + " s");
    return out;
}

Outcome classification() {
    Outcome out;
    compare_sets(out, "p0", classes(Mode::p0), golden_sets("p0"));
    compare_sets(out, "p1", classes(Mode::p1), golden_sets("p1"));
    compare_sets(out, "p3", classes(Mode::p3), golden_sets("p1"));
    compare_sets(out, "p2", classes(Mode::p2), golden_sets("p2"));
    return out;
}

Outcome length_classification() {
    Outcome out;
    compare_sets(out, "L", classes(Mode::L), golden_sets("L"));
    return out;
}

Outcome d4_example() {
    Outcome out;
    auto check = [&](const std::string& what, std::int64_t got, std::int64_t want) {
        if (got != want) out.fail(what + " = " + std::to_string(got) + ", printed " + std::to_string(want));
    };
    check("d_{0,1}(60)", multiplicity(G("60"), 0, 1), 1);
    check("d_{0,1}(61)", multiplicity(G("61"), 0, 1), 0);
    check("d_{2,1}(60)", multiplicity(G("60"), 2, 1), 6);
    check("d_{2,1}(61)", multiplicity(G("61"), 2, 1), 4);
    const std::vector<std::string> cols{"d(I,J~)", "d(I,-I)", "d(I,-J~)", "d(I~,J)", "d(I~,-I~)", "d(I~,-J)", "d(I~,I~)"};
    const std::map<std::string, std::vector<int>> rows{{"60", {2, 0, 2, -2, 0, -2, 0}}, {"61", {2, 0, 2, -2, -4, -2, -4}}};
    for (const auto& [id, row] : rows)
        for (std::size_t i = 0; i < cols.size(); ++i) {
            int idx = G(id).coset_of(parse_block_matrix(cols[i]));
            if (idx < 0) {
                out.fail("group " + id + " has no element " + cols[i]);
                continue;
            }
            auto e = e_term(G(id).holonomy()[idx], 1);
            if (std::abs(e.imag()) >= 1e-9 || std::abs(e.real() - row[i]) >= 1e-6)
                out.fail("e_1 for " + id + " at " + cols[i] + " = " + std::to_string(e.real()));
        }
    auto r60 = multiplicity_row(G("60"), 1), r61 = multiplicity_row(G("61"), 1);
    out.note("computed d_{p,1}: 60 -> " + row_text(r60) + ", 61 -> " + row_text(r61));
    return out;
}

Outcome length_multiplicities() {
    Outcome out;
    auto m25 = length_multiplicity(G("25"), Rational(1, 4)), m27 = length_multiplicity(G("27"), Rational(1, 4));
    if (m25 != 8) out.fail("m_25(1/4) = " + std::to_string(m25));
    if (m27 != 4) out.fail("m_27(1/4) = " + std::to_string(m27));
    return out;
}

Outcome bracket_l() {
    Outcome out;
    const Rational bound(3);
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& s : golden_sets("bracketL")) {
        pairs.insert({s[0], s[1]});
        if (!bracketL_agree(G(s[0]), G(s[1]), bound)) {
            auto w = bracketL_witness(G(s[0]), G(s[1]), bound);
            out.fail("pair {" + s[0] + "," + s[1] + "} disagrees at l^2 = " + to_string(*w) + " (" +
                     std::to_string(length_multiplicity(G(s[0]), *w)) + " vs " +
                     std::to_string(length_multiplicity(G(s[1]), *w)) + ")");
        }
    }
    for (const auto& s : golden_sets("L_not_bracketL"))
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (pairs.count({s[i], s[j]})) continue;
                auto w = bracketL_witness(G(s[i]), G(s[j]), bound);
                if (!w)
                    out.fail("{" + s[i] + "," + s[j] + "} shows no disagreement up to l^2 = 3");
                else
                    out.note("{" + s[i] + "," + s[j] + "} differ at l^2 = " + to_string(*w));
            }
    return out;
}

Outcome oracle_equivalence() {
    Outcome out;
    const std::vector<std::pair<std::string, int>> samples{{"2", 1},   {"3", 0},  {"29", 2}, {"45'", 1}, {"47", 0},
                                                           {"51", 3},  {"57", 2}, {"64", 1}, {"67", 0},  {"60", 2}};
    double worst = 0;
    for (const auto& [id, p] : samples) {
        double num = heat_trace_numeric(G(id), p, 0.08, 40);
        double sym = poly_eval_numeric(heat_trace_poly(G(id), p), 0.08, 60);
        worst = std::max(worst, std::abs(num - sym));
        if (std::abs(num - sym) >= 1e-8) out.fail(id + " p=" + std::to_string(p) + ": |diff| = " + std::to_string(num - sym));
    }
    std::ostringstream s;
    s << "largest difference " << worst;
    out.note(s.str());
    return out;
}

Outcome property_suites() {
    Outcome out;
    for (const auto& g : shipped_catalog().groups) {
        for (std::int64_t mu = 1; mu <= 25; ++mu) {
            auto row = multiplicity_row(g, mu);
            if (row[0] - row[1] + row[2] - row[3] + row[4] != 0)
                out.fail("supersymmetry fails for " + g.id() + " at mu " + std::to_string(mu));
            if (g.is_orientable() && (row[0] != row[4] || row[1] != row[3]))
                out.fail("Poincare duality fails for " + g.id() + " at mu " + std::to_string(mu));
        }
        for (const auto& h : g.holonomy()) {
            auto r = trace_row(h.B);
            auto det = (IntMatrix::identity(4) - h.B).determinant();
            if (det != 0 || r[0] - r[1] + r[2] - r[3] + r[4] != det)
                out.fail("det(Id - B) identity fails in " + g.id() + " for " + h.B.str());
        }
        bool even = true;
        for (const auto& m : poly_support(heat_trace_poly(g, 0))) even = even && m.degree() % 2 == 0;
        if (even != g.is_orientable()) out.fail("degree parity does not match orientability for " + g.id());
    }
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= n; ++j) {
                auto v = krawtchouk(n, k, j);
                bool ok = v == (j % 2 ? -1 : 1) * krawtchouk(n, n - k, j) &&
                          v == (k % 2 ? -1 : 1) * krawtchouk(n, k, n - j) &&
                          binomial(n, j) * v == binomial(n, k) * krawtchouk(n, j, k) &&
                          !(n % 2 == 0 && j % 2 == 1 && k == n / 2 && v != 0);
                if (!ok) out.fail("Krawtchouk identity fails at n=" + std::to_string(n));
            }
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Krawtchouk table", krawtchouk_table},
        {"trace rows of every table", trace_rows},
        {"Betti numbers of every table", betti_numbers},
        {"Sunada numbers", sunada_table},
        {"heat-trace polynomials", heat_traces},
        {"p-isospectral classification", classification},
        {"L-isospectral classification", length_classification},
        {"D4 example", d4_example},
        {"length multiplicities of 25 and 27", length_multiplicities},
        {"[L] comparison up to l^2 = 3", bracket_l},
        {"symbolic vs spectral heat traces", oracle_equivalence},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        failed += !o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "\n";
        for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
