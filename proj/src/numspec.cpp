#include "flat4/numspec.hpp"

#include "flat4/error.hpp"
#include "flat4/kraw.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>

namespace flat4 {

namespace {

std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::shared_ptr<const Shell> build_shell(std::int64_t mu) {
    auto shell = std::make_shared<Shell>();
    shell->mu = mu;
    const std::int64_t R = isqrt(mu);
    for (std::int64_t a = -R; a <= R; ++a) {
        const std::int64_t ra = mu - a * a;
        const std::int64_t Rb = isqrt(ra);
        for (std::int64_t b = -Rb; b <= Rb; ++b) {
            const std::int64_t rb = ra - b * b;
            const std::int64_t Rc = isqrt(rb);
            for (std::int64_t c = -Rc; c <= Rc; ++c) {
                const std::int64_t rc = rb - c * c;
                const std::int64_t d = isqrt(rc);
                if (d * d != rc) continue;
                shell->vectors.push_back({a, b, c, d});
                if (d != 0) shell->vectors.push_back({a, b, c, -d});
            }
        }
    }
    return shell;
}

}  // namespace

std::shared_ptr<const Shell> lattice_shell(std::int64_t mu) {
    if (mu < 0) throw Error("negative shell radius");
    static std::shared_mutex mutex;
    static std::map<std::int64_t, std::shared_ptr<const Shell>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(mu); it != cache.end()) return it->second;
    }
    auto shell = build_shell(mu);
    std::unique_lock lock(mutex);
    return cache.emplace(mu, std::move(shell)).first->second;
}

std::complex<double> e_term(const AffineIsometry& g, std::int64_t mu) {
    auto shell = lattice_shell(mu);
    std::complex<double> sum = 0.0;
    for (const auto& v : shell->vectors) {
        if (g.B * v != v) continue;
        // Reduce the phase exactly before leaving rational arithmetic.
        const double phase = -2.0 * std::numbers::pi * to_double(frac(dot(v, g.b)));
        sum += std::polar(1.0, phase);
    }
    if (std::abs(sum.imag()) > 1e-9) throw ConsistencyError("character sum has an imaginary part");
    return sum;
}

std::array<std::int64_t, 5> multiplicity_row(const BieberbachGroup& g, std::int64_t mu) {
    std::array<double, 5> acc{};
    for (const auto& h : g.holonomy()) {
        const double e = e_term(h, mu).real();
        if (e == 0.0) continue;
        const TraceRow tr = trace_row(h.B);
        for (int p = 0; p < 5; ++p) acc[p] += static_cast<double>(tr[p]) * e;
    }
    std::array<std::int64_t, 5> out{};
    for (int p = 0; p < 5; ++p) {
        const double v = acc[p] / g.order();
        const double r = std::round(v);
        if (std::abs(v - r) > 1e-6 || r < 0)
            throw ConsistencyError("non-integral multiplicity for group " + g.id());
        out[p] = static_cast<std::int64_t>(r);
    }
    return out;
}

std::int64_t multiplicity(const BieberbachGroup& g, int p, std::int64_t mu) {
    if (p < 0 || p > 4) throw Error("form degree out of range");
    return multiplicity_row(g, mu)[p];
}

double heat_trace_numeric(const BieberbachGroup& g, int p, double s, std::int64_t mu_max) {
    double total = 0.0;
    for (std::int64_t mu = 0; mu <= mu_max; ++mu) {
        const std::int64_t d = multiplicity(g, p, mu);
        if (d != 0) total += static_cast<double>(d) * std::exp(-4.0 * std::numbers::pi * std::numbers::pi * mu * s);
    }
    return total;
}

}  // namespace flat4
