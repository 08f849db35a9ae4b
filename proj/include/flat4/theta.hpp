#pragma once

#include "flat4/group.hpp"
#include "flat4/qfield.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flat4 {

/// z_{d,r}(s) = (4 pi s)^{-1/2} sum_m exp(-((m + r)^2 / d) / (4 s)), with r folded into [0, 1/2].
struct ThetaVar {
    int d = 1;
    Rational r;

    ThetaVar() = default;
    ThetaVar(int d_, Rational r_);

    static ThetaVar x() { return {1, Rational(0)}; }
    static ThetaVar y() { return {1, Rational(1, 2)}; }

    /// "x", "y", otherwise "z_{d,r}".
    std::string name() const;

    friend bool operator==(const ThetaVar& a, const ThetaVar& b) { return a.d == b.d && a.r == b.r; }
    friend std::strong_ordering operator<=>(const ThetaVar& a, const ThetaVar& b);
};

/// Product of ThetaVars; kept sorted with positive exponents.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const std::vector<ThetaVar>& factors);

    const std::vector<std::pair<ThetaVar, int>>& powers() const { return powers_; }
    int degree() const;
    bool empty() const { return powers_.empty(); }

    Monomial operator*(const Monomial& other) const;

    /// "x^2*y", "y*z_{2,0}", "1" for the empty monomial.
    std::string str() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Total degree first, then the expanded variable tuple.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<ThetaVar, int>> powers_;
};

/// Parses the output of Monomial::str(); also accepts "z20" style shorthand.
Monomial parse_monomial(std::string_view text);

/// Z_p as a polynomial in theta variables. Coefficients are stored multiplied by `order`.
class HeatTracePoly {
public:
    HeatTracePoly() = default;
    explicit HeatTracePoly(int order) : order_(order) {}

    int order() const { return order_; }
    const std::map<Monomial, QuadNumber>& scaled_terms() const { return terms_; }
    /// |F| * coefficient of m.
    QuadNumber scaled_coefficient(const Monomial& m) const;
    QuadNumber coefficient(const Monomial& m) const;

    void add_scaled(const Monomial& m, const QuadNumber& c);

    friend HeatTracePoly operator+(const HeatTracePoly& a, const HeatTracePoly& b);
    friend HeatTracePoly operator*(const QuadNumber& k, const HeatTracePoly& a);

    /// "4*Z_p = x^4 + 3*x*y"; the label defaults to Z_p.
    std::string str(std::string_view label = "Z_p") const;

private:
    int order_ = 1;
    std::map<Monomial, QuadNumber> terms_;
};

HeatTracePoly heat_trace_poly(const BieberbachGroup& g, int p);

/// Heat traces for all p at once: each monomial carries a QuadNumber per trace row.
struct SymbolicHeatTrace {
    int order = 1;
    std::map<Monomial, std::map<TraceRow, QuadNumber>> terms;

    HeatTracePoly at(int p) const;
    /// "4*Z_p = C(4,p)*x^4 + K(2)*(x*y + 2*y^2)"
    std::string str() const;
};

SymbolicHeatTrace heat_trace_symbolic(const BieberbachGroup& g);

bool poly_equal(const HeatTracePoly& a, const HeatTracePoly& b);
std::set<Monomial> poly_support(const HeatTracePoly& a);

/// Truncated evaluation of z_{d,r}(s).
double theta_var_numeric(const ThetaVar& v, double s, int M);
double poly_eval_numeric(const HeatTracePoly& poly, double s, int M);

/// "1/2*sqrt2" style coefficient text; parenthesized when it has several terms.
std::string coefficient_text(const QuadNumber& c);

}  // namespace flat4
