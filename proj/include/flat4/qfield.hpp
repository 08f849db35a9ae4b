#pragma once

#include "flat4/rational.hpp"

#include <array>
#include <compare>
#include <string>

namespace flat4 {

/// Exact element a + b*sqrt2 + c*sqrt3 + d*sqrt6 of Q(sqrt2, sqrt3).
///
/// Coordinates are boost::rational values, which are kept in lowest terms with a
/// positive denominator, so equality is coordinate-wise.
class QuadNumber {
public:
    QuadNumber() = default;
    QuadNumber(Rational a) : c_{a, 0, 0, 0} {}  // NOLINT(implicit)
    QuadNumber(std::int64_t a) : c_{Rational(a), 0, 0, 0} {}  // NOLINT(implicit)
    QuadNumber(Rational a, Rational b, Rational c, Rational d) : c_{a, b, c, d} {}

    static QuadNumber sqrt2() { return {0, 1, 0, 0}; }
    static QuadNumber sqrt3() { return {0, 0, 1, 0}; }
    static QuadNumber sqrt6() { return {0, 0, 0, 1}; }

    const Rational& a() const { return c_[0]; }
    const Rational& b() const { return c_[1]; }
    const Rational& c() const { return c_[2]; }
    const Rational& d() const { return c_[3]; }

    bool is_zero() const;
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    QuadNumber operator-() const;
    friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y);
    /// Throws DivisionByZero when y == 0.
    friend QuadNumber operator/(const QuadNumber& x, const QuadNumber& y);

    QuadNumber& operator+=(const QuadNumber& y) { return *this = *this + y; }
    QuadNumber& operator-=(const QuadNumber& y) { return *this = *this - y; }
    QuadNumber& operator*=(const QuadNumber& y) { return *this = *this * y; }
    QuadNumber& operator/=(const QuadNumber& y) { return *this = *this / y; }

    friend bool operator==(const QuadNumber& x, const QuadNumber& y) { return x.c_ == y.c_; }

    /// Debug conversion; not used inside exact computations.
    double to_float() const;

    /// "a + b*sqrt2 + c*sqrt3 + d*sqrt6" with zero terms omitted; "0" for zero.
    std::string str() const;

private:
    std::array<Rational, 4> c_{};
};

enum class QfOp { add, sub, mul, div };

QuadNumber qf_arith(const QuadNumber& x, const QuadNumber& y, QfOp op);

/// Exact positive square root of n when its squarefree part is 1, 2, 3 or 6.
/// Throws UnrepresentableRadical otherwise (and for n <= 0).
QuadNumber sqrt_int(long long n);

}  // namespace flat4
