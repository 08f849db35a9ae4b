#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

// Boost 1.74 declares `Arg == rational` as `rational == Arg`; C++20 reversed
// candidates turn that into unbounded recursion. Exact overloads win resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& r, int i) {
    return r.denominator() == 1 && r.numerator() == i;
}
inline bool operator==(const rational<std::int64_t>& r, long i) {
    return r.denominator() == 1 && r.numerator() == i;
}
inline bool operator==(const rational<std::int64_t>& r, long long i) {
    return r.denominator() == 1 && r.numerator() == i;
}
}  // namespace boost

namespace flat4 {

using Rational = boost::rational<std::int64_t>;

/// Parses "p", "p/q" or "-p/q".
Rational parse_rational(std::string_view text);

/// Renders as "p" or "p/q".
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Largest integer <= r.
std::int64_t floor(const Rational& r);

/// r - floor(r), in [0, 1).
Rational frac(const Rational& r);

/// min(r, 1 - r) for r in [0, 1): the r <-> 1 - r folding of theta offsets.
Rational fold_half(const Rational& r);

}  // namespace flat4
