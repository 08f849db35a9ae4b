#pragma once

#include "flat4/intlat.hpp"

#include <array>
#include <cstdint>

namespace flat4 {

/// Binomial coefficient C(x, t) for integers x >= 0; zero when t < 0 or t > x.
std::int64_t binomial(std::int64_t x, std::int64_t t);

/// K_p^n(j) = sum_t (-1)^t C(j, t) C(n - j, p - t), for 0 <= p, j <= n.
std::int64_t krawtchouk(int n, int p, int j);

/// Coefficients of det(Id + tB): entry p is the trace of the p-th exterior power.
std::vector<std::int64_t> exterior_traces(const IntMatrix& b);

/// tr_p(B) for 0 <= p <= n.
std::int64_t trace_p(const IntMatrix& b, int p);

using TraceRow = std::array<std::int64_t, 5>;

/// (tr_0(B), ..., tr_4(B)) for a 4x4 matrix.
TraceRow trace_row(const IntMatrix& b);

/// (K_0^4(j), ..., K_4^4(j)).
TraceRow krawtchouk_row(int j);

}  // namespace flat4
