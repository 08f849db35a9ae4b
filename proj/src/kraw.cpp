#include "flat4/kraw.hpp"

#include "flat4/error.hpp"

#include <string>

namespace flat4 {

std::int64_t binomial(std::int64_t x, std::int64_t t) {
    if (x < 0) throw Error("binomial with negative upper index " + std::to_string(x));
    if (t < 0 || t > x) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= t; ++i) r = r * (x - t + i) / i;
    return r;
}

std::int64_t krawtchouk(int n, int p, int j) {
    if (n < 0 || p < 0 || p > n || j < 0 || j > n)
        throw Error("krawtchouk index out of range: n=" + std::to_string(n) + " p=" + std::to_string(p) +
                    " j=" + std::to_string(j));
    std::int64_t s = 0;
    for (int t = 0; t <= p; ++t) {
        std::int64_t term = binomial(j, t) * binomial(n - j, p - t);
        s += (t % 2 ? -term : term);
    }
    return s;
}

std::vector<std::int64_t> exterior_traces(const IntMatrix& b) {
    // det(Id + tB) = sum over p of (sum of principal p-minors of B) t^p.
    if (!b.is_square()) throw Error("exterior traces of non-square matrix");
    const int n = b.rows();
    std::vector<std::int64_t> coeffs(n + 1, 0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        const int k = static_cast<int>(idx.size());
        IntMatrix minor(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) minor(r, c) = b(idx[r], idx[c]);
        coeffs[k] += minor.determinant();
    }
    return coeffs;
}

std::int64_t trace_p(const IntMatrix& b, int p) {
    if (p < 0 || p > b.rows()) throw Error("trace_p: degree out of range");
    return exterior_traces(b)[p];
}

TraceRow trace_row(const IntMatrix& b) {
    if (b.rows() != 4 || b.cols() != 4) throw Error("trace_row expects a 4x4 matrix");
    auto c = exterior_traces(b);
    return {c[0], c[1], c[2], c[3], c[4]};
}

TraceRow krawtchouk_row(int j) {
    return {krawtchouk(4, 0, j), krawtchouk(4, 1, j), krawtchouk(4, 2, j), krawtchouk(4, 3, j),
            krawtchouk(4, 4, j)};
}

}  // namespace flat4
