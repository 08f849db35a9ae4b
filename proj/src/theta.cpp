#include "flat4/theta.hpp"

#include "flat4/error.hpp"
#include "flat4/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>

namespace flat4 {

ThetaVar::ThetaVar(int d_, Rational r_) : d(d_), r(fold_half(frac(r_))) {
    if (d < 1) throw Error("theta variable needs d >= 1");
}

std::string ThetaVar::name() const {
    if (d == 1 && r == 0) return "x";
    if (d == 1 && r == Rational(1, 2)) return "y";
    return "z_{" + std::to_string(d) + "," + to_string(r) + "}";
}

std::strong_ordering operator<=>(const ThetaVar& a, const ThetaVar& b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    if (a.r < b.r) return std::strong_ordering::less;
    if (b.r < a.r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Monomial::Monomial(const std::vector<ThetaVar>& factors) {
    std::vector<ThetaVar> sorted = factors;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& v : sorted) {
        if (!powers_.empty() && powers_.back().first == v)
            ++powers_.back().second;
        else
            powers_.emplace_back(v, 1);
    }
}

int Monomial::degree() const {
    int n = 0;
    for (const auto& [v, e] : powers_) n += e;
    return n;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<ThetaVar> all;
    for (const auto* src : {this, &other})
        for (const auto& [v, e] : src->powers_)
            for (int i = 0; i < e; ++i) all.push_back(v);
    return Monomial(all);
}

std::string Monomial::str() const {
    if (powers_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : powers_) {
        if (!out.empty()) out += "*";
        out += v.name();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // Compare the expanded tuples (v1 <= v2 <= ...).
    std::size_t i = 0, j = 0;
    int ri = a.powers_.empty() ? 0 : a.powers_[0].second;
    int rj = b.powers_.empty() ? 0 : b.powers_[0].second;
    while (i < a.powers_.size() && j < b.powers_.size()) {
        if (auto c = a.powers_[i].first <=> b.powers_[j].first; c != 0) return c;
        const int step = std::min(ri, rj);
        ri -= step;
        rj -= step;
        if (ri == 0 && ++i < a.powers_.size()) ri = a.powers_[i].second;
        if (rj == 0 && ++j < b.powers_.size()) rj = b.powers_[j].second;
    }
    return std::strong_ordering::equal;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

ThetaVar parse_var(std::string_view t) {
    if (t == "x") return ThetaVar::x();
    if (t == "y") return ThetaVar::y();
    if (t.starts_with("z_{") && t.ends_with("}")) {
        std::string_view body = t.substr(3, t.size() - 4);
        auto comma = body.find(',');
        if (comma == std::string_view::npos) throw Error("bad theta variable: " + std::string(t));
        Rational d = parse_rational(trim(body.substr(0, comma)));
        if (d.denominator() != 1) throw Error("bad theta variable: " + std::string(t));
        return {static_cast<int>(d.numerator()), parse_rational(trim(body.substr(comma + 1)))};
    }
    if (t.size() >= 3 && t[0] == 'z' && std::isdigit(static_cast<unsigned char>(t[1])))
        return {t[1] - '0', parse_rational(t.substr(2))};
    throw Error("bad theta variable: " + std::string(t));
}

}  // namespace

Monomial parse_monomial(std::string_view text) {
    text = trim(text);
    if (text == "1" || text.empty()) return {};
    std::vector<ThetaVar> factors;
    while (!text.empty()) {
        auto star = text.find('*');
        std::string_view tok = trim(text.substr(0, star));
        text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
        int e = 1;
        if (auto caret = tok.find('^'); caret != std::string_view::npos) {
            Rational er = parse_rational(tok.substr(caret + 1));
            if (er.denominator() != 1 || er < 1) throw Error("bad exponent in monomial");
            e = static_cast<int>(er.numerator());
            tok = tok.substr(0, caret);
        }
        ThetaVar v = parse_var(tok);
        for (int i = 0; i < e; ++i) factors.push_back(v);
    }
    return Monomial(factors);
}

QuadNumber HeatTracePoly::scaled_coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QuadNumber() : it->second;
}

QuadNumber HeatTracePoly::coefficient(const Monomial& m) const {
    return scaled_coefficient(m) / QuadNumber(order_);
}

void HeatTracePoly::add_scaled(const Monomial& m, const QuadNumber& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeatTracePoly operator+(const HeatTracePoly& a, const HeatTracePoly& b) {
    // Bring both to the common scale lcm(|F_a|, |F_b|).
    const int l = std::lcm(a.order_, b.order_);
    HeatTracePoly out(l);
    for (const auto& [m, c] : a.terms_) out.add_scaled(m, c * QuadNumber(l / a.order_));
    for (const auto& [m, c] : b.terms_) out.add_scaled(m, c * QuadNumber(l / b.order_));
    return out;
}

HeatTracePoly operator*(const QuadNumber& k, const HeatTracePoly& a) {
    HeatTracePoly out(a.order_);
    for (const auto& [m, c] : a.terms_) out.add_scaled(m, k * c);
    return out;
}

std::string coefficient_text(const QuadNumber& c) {
    int nonzero = 0;
    for (const auto* v : {&c.a(), &c.b(), &c.c(), &c.d()})
        if (*v != 0) ++nonzero;
    return nonzero > 1 ? "(" + c.str() + ")" : c.str();
}

namespace {

std::string term_text(const QuadNumber& c, const std::string& body) {
    if (c == QuadNumber(1)) return body;
    if (c == QuadNumber(-1)) return "-" + body;
    return coefficient_text(c) + "*" + body;
}

std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].starts_with("-"))
            out += " - " + terms[i].substr(1);
        else
            out += " + " + terms[i];
    }
    return out;
}

// Rendering order: highest degree first, then ascending variable tuple.
template <class Map>
std::vector<typename Map::const_iterator> render_order(const Map& terms) {
    std::vector<typename Map::const_iterator> its;
    for (auto it = terms.begin(); it != terms.end(); ++it) its.push_back(it);
    std::stable_sort(its.begin(), its.end(),
                     [](auto a, auto b) { return a->first.degree() > b->first.degree(); });
    return its;
}

std::string scale_label(int order, std::string_view label) {
    return order == 1 ? std::string(label) : std::to_string(order) + "*" + std::string(label);
}

}  // namespace

std::string HeatTracePoly::str(std::string_view label) const {
    std::vector<std::string> parts;
    for (auto it : render_order(terms_)) parts.push_back(term_text(it->second, it->first.str()));
    return scale_label(order_, label) + " = " + join_terms(parts);
}

SymbolicHeatTrace heat_trace_symbolic(const BieberbachGroup& g) {
    SymbolicHeatTrace out;
    out.order = g.order();
    for (const auto& h : g.holonomy()) {
        ElementInvariants inv = element_invariants(h);
        std::vector<ThetaVar> vars;
        for (int i = 0; i < inv.n_B; ++i)
            vars.emplace_back(inv.decomposition.components[i].d, inv.offsets[i]);
        QuadNumber c = QuadNumber(1) / inv.volume;
        auto& slot = out.terms[Monomial(vars)][inv.traces];
        slot += c;
    }
    return out;
}

HeatTracePoly SymbolicHeatTrace::at(int p) const {
    if (p < 0 || p > 4) throw Error("form degree out of range");
    HeatTracePoly poly(order);
    for (const auto& [m, rows] : terms)
        for (const auto& [row, c] : rows) poly.add_scaled(m, c * QuadNumber(row[p]));
    return poly;
}

namespace {

std::string row_name(const TraceRow& row) {
    for (int j = 0; j <= 4; ++j)
        if (row == krawtchouk_row(j)) return j == 0 ? "C(4,p)" : "K(" + std::to_string(j) + ")";
    std::string s = "tr[";
    for (int p = 0; p < 5; ++p) s += (p ? "," : "") + std::to_string(row[p]);
    return s + "]";
}

int row_rank(const TraceRow& row) {
    for (int j = 0; j <= 4; ++j)
        if (row == krawtchouk_row(j)) return j;
    return 5;
}

}  // namespace

std::string SymbolicHeatTrace::str() const {
    std::map<TraceRow, std::map<Monomial, QuadNumber>> by_row;
    for (const auto& [m, rows] : terms)
        for (const auto& [row, c] : rows)
            if (!c.is_zero()) by_row[row][m] += c;

    std::vector<TraceRow> order_rows;
    for (const auto& [row, _] : by_row) order_rows.push_back(row);
    std::stable_sort(order_rows.begin(), order_rows.end(),
                     [](const TraceRow& a, const TraceRow& b) { return row_rank(a) < row_rank(b); });

    std::vector<std::string> parts;
    for (const auto& row : order_rows) {
        const auto& sub = by_row[row];
        std::vector<std::string> inner;
        for (auto it : render_order(sub)) inner.push_back(term_text(it->second, it->first.str()));
        std::string body = join_terms(inner);
        if (inner.size() > 1 || sub.begin()->second != QuadNumber(1)) body = "(" + body + ")";
        parts.push_back(row_name(row) + "*" + body);
    }
    return scale_label(order, "Z_p") + " = " + join_terms(parts);
}

HeatTracePoly heat_trace_poly(const BieberbachGroup& g, int p) {
    return heat_trace_symbolic(g).at(p);
}

bool poly_equal(const HeatTracePoly& a, const HeatTracePoly& b) {
    if (a.order() == b.order()) return a.scaled_terms() == b.scaled_terms();
    const auto& ta = a.scaled_terms();
    const auto& tb = b.scaled_terms();
    if (ta.size() != tb.size()) return false;
    for (const auto& [m, c] : ta) {
        auto it = tb.find(m);
        if (it == tb.end() || c * QuadNumber(b.order()) != it->second * QuadNumber(a.order())) return false;
    }
    return true;
}

std::set<Monomial> poly_support(const HeatTracePoly& a) {
    std::set<Monomial> s;
    for (const auto& [m, c] : a.scaled_terms())
        if (!c.is_zero()) s.insert(m);
    return s;
}

double theta_var_numeric(const ThetaVar& v, double s, int M) {
    const double c = 1.0 / (4.0 * s * v.d);
    return kernels::theta_sum(c, to_double(v.r), M) / std::sqrt(4.0 * std::numbers::pi * s);
}

double poly_eval_numeric(const HeatTracePoly& poly, double s, int M) {
    std::map<ThetaVar, double> cache;
    double total = 0.0;
    for (const auto& [m, c] : poly.scaled_terms()) {
        double term = c.to_float();
        for (const auto& [v, e] : m.powers()) {
            auto it = cache.find(v);
            if (it == cache.end()) it = cache.emplace(v, theta_var_numeric(v, s, M)).first;
            term *= std::pow(it->second, e);
        }
        total += term;
    }
    return total / poly.order();
}

}  // namespace flat4
