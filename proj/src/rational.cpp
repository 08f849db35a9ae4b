#include "flat4/rational.hpp"

#include "flat4/error.hpp"

#include <charconv>

namespace flat4 {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw Error("malformed rational '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw DivisionByZero();
    return Rational(parse_int(text.substr(0, slash), text), den);
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor(const Rational& r) {
    auto n = r.numerator();
    auto d = r.denominator();
    auto q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

Rational frac(const Rational& r) { return r - Rational(floor(r)); }

Rational fold_half(const Rational& r) {
    Rational f = frac(r);
    Rational g = Rational(1) - f;
    return (g < f && f != 0) ? g : f;
}

}  // namespace flat4
