#include "flat4/qfield.hpp"

#include "flat4/error.hpp"

#include <cmath>

namespace flat4 {

namespace {

// Galois conjugates: sqrt2 -> -sqrt2 and sqrt3 -> -sqrt3 respectively.
QuadNumber conj2(const QuadNumber& x) { return {x.a(), -x.b(), x.c(), -x.d()}; }
QuadNumber conj3(const QuadNumber& x) { return {x.a(), x.b(), -x.c(), -x.d()}; }

}  // namespace

bool QuadNumber::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

QuadNumber QuadNumber::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
    return {x.a() + y.a(), x.b() + y.b(), x.c() + y.c(), x.d() + y.d()};
}

QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) {
    return {x.a() - y.a(), x.b() - y.b(), x.c() - y.c(), x.d() - y.d()};
}

QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
    // sqrt2^2 = 2, sqrt3^2 = 3, sqrt6^2 = 6, sqrt2*sqrt3 = sqrt6,
    // sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2.
    const auto &a = x.a(), &b = x.b(), &c = x.c(), &d = x.d();
    const auto &e = y.a(), &f = y.b(), &g = y.c(), &h = y.d();
    Rational r1 = a * e + 2 * b * f + 3 * c * g + 6 * d * h;
    Rational r2 = a * f + b * e + 3 * c * h + 3 * d * g;
    Rational r3 = a * g + c * e + 2 * b * h + 2 * d * f;
    Rational r6 = a * h + d * e + b * g + c * f;
    return {r1, r2, r3, r6};
}

QuadNumber operator/(const QuadNumber& x, const QuadNumber& y) {
    if (y.is_zero()) throw DivisionByZero();
    QuadNumber n1 = y * conj2(y);    // in Q(sqrt3)
    QuadNumber n2 = n1 * conj3(n1);  // in Q
    QuadNumber inv_num = conj2(y) * conj3(n1);
    Rational norm = n2.a();
    return x * inv_num * QuadNumber(Rational(1) / norm);
}

double QuadNumber::to_float() const {
    return to_double(c_[0]) + to_double(c_[1]) * std::sqrt(2.0) +
           to_double(c_[2]) * std::sqrt(3.0) + to_double(c_[3]) * std::sqrt(6.0);
}

std::string QuadNumber::str() const {
    static const char* const kBasis[] = {"", "sqrt2", "sqrt3", "sqrt6"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        const Rational& v = c_[i];
        if (v == 0) continue;
        Rational mag = v < 0 ? -v : v;
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += kBasis[i];
        } else {
            out += to_string(mag) + "*" + kBasis[i];
        }
    }
    return out.empty() ? "0" : out;
}

QuadNumber qf_arith(const QuadNumber& x, const QuadNumber& y, QfOp op) {
    switch (op) {
        case QfOp::add: return x + y;
        case QfOp::sub: return x - y;
        case QfOp::mul: return x * y;
        case QfOp::div: return x / y;
    }
    throw Error("unknown field operation");
}

QuadNumber sqrt_int(long long n) {
    if (n <= 0) throw UnrepresentableRadical(n);
    long long square = 1;
    long long rest = n;
    for (long long p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            square *= p;
        }
    }
    switch (rest) {
        case 1: return QuadNumber(square);
        case 2: return QuadNumber(0, square, 0, 0);
        case 3: return QuadNumber(0, 0, square, 0);
        case 6: return QuadNumber(0, 0, 0, square);
        default: throw UnrepresentableRadical(n);
    }
}

}  // namespace flat4
