#include "flat4/lengths.hpp"

#include "flat4/error.hpp"
#include "flat4/numspec.hpp"

#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace flat4 {

namespace {

// Walks all k in Z^m with sum_i (k_i + r_i)^2 / d_i <= bound, reporting the exact value.
void walk_fixed_space(const std::vector<std::pair<int, Rational>>& dr, const Rational& bound,
                      const std::function<void(const IntVector&, const Rational&)>& visit) {
    IntVector k(dr.size(), 0);
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational acc) {
        if (i == dr.size()) {
            visit(k, acc);
            return;
        }
        const auto& [d, r] = dr[i];
        const Rational room = bound - acc;
        if (room < 0) return;
        // |k + r| <= sqrt(d * room)
        const double reach = std::sqrt(to_double(room) * d) + 1.0;
        const auto lo = static_cast<std::int64_t>(std::floor(-to_double(r) - reach));
        const auto hi = static_cast<std::int64_t>(std::ceil(-to_double(r) + reach));
        for (std::int64_t v = lo; v <= hi; ++v) {
            const Rational t = Rational(v) + r;
            const Rational next = acc + t * t / Rational(d);
            if (next > bound) continue;
            k[i] = v;
            rec(i + 1, next);
        }
    };
    rec(0, Rational(0));
}

// Canonical key of lambda modulo M = A Z^n, from U A V = D.
struct QuotientKey {
    SmithForm snf;

    explicit QuotientKey(const IntMatrix& a) : snf(smith_normal_form(a)) {}

    IntVector operator()(const IntVector& lambda) const {
        IntVector w = snf.U * lambda;
        const auto div = snf.divisors();
        for (std::size_t k = 0; k < w.size(); ++k) {
            const std::int64_t dk = k < div.size() ? div[k] : 0;
            if (dk != 0) w[k] = ((w[k] % dk) + dk) % dk;
        }
        return w;
    }
};

IntVector to_integer(const RatVector& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].denominator() != 1) throw ConsistencyError("conjugate left the coset");
        out[i] = v[i].numerator();
    }
    return out;
}

std::int64_t coset_contribution(const BieberbachGroup& g, int i, const Rational& length_sq) {
    const AffineIsometry& gi = g.holonomy()[i];
    const int n = gi.B.rows();
    const FixedDecomposition dec = decompose_fixed(gi.B);

    std::vector<std::pair<int, Rational>> dr;
    for (const auto& c : dec.components) dr.emplace_back(c.d, dot(c.u, gi.b));

    std::vector<IntVector> solutions;
    walk_fixed_space(dr, length_sq, [&](const IntVector& k, const Rational& v) {
        if (v == length_sq) solutions.push_back(k);
    });
    if (solutions.empty()) return 0;

    // lambda_0(k): lambda . u_j = k_j, supported on the first coordinate of each u_j.
    auto lift = [&](const IntVector& k) {
        IntVector lambda(n, 0);
        for (std::size_t j = 0; j < dec.components.size(); ++j) {
            const auto& u = dec.components[j].u;
            for (int t = 0; t < n; ++t) {
                if (u[t] != 0) {
                    lambda[t] = k[j] * u[t];
                    break;
                }
            }
        }
        return lambda;
    };

    const IntMatrix A = gi.B.transpose() - IntMatrix::identity(n);
    const QuotientKey key(A);

    // Q = (Z^n cap ker p) / M by closing the complement basis.
    std::map<IntVector, IntVector> q_reps;
    {
        std::deque<IntVector> queue;
        IntVector zero(n, 0);
        q_reps.emplace(key(zero), zero);
        queue.push_back(zero);
        while (!queue.empty()) {
            IntVector q = queue.front();
            queue.pop_front();
            for (const auto& c : dec.complement) {
                for (int s : {1, -1}) {
                    IntVector next = q;
                    for (int t = 0; t < n; ++t) next[t] += s * c[t];
                    if (q_reps.emplace(key(next), next).second) queue.push_back(next);
                    if (q_reps.size() > 100000) throw ConsistencyError("torsion quotient too large");
                }
            }
        }
    }

    std::map<IntVector, IntVector> elements;  // key -> representative lambda
    for (const auto& k : solutions) {
        const IntVector base = lift(k);
        for (const auto& [_, q] : q_reps) {
            IntVector lambda = base;
            for (int t = 0; t < n; ++t) lambda[t] += q[t];
            elements.emplace(key(lambda), lambda);
        }
    }

    // Conjugation by each coset representative, as a map on lambda.
    auto conjugate = [&](const AffineIsometry& gj, const IntVector& lambda) {
        RatVector c = gi.b;
        for (int t = 0; t < n; ++t) c[t] += lambda[t];
        AffineIsometry x{gi.B, c};
        AffineIsometry y = gj.inverse_exact().compose_exact(x).compose_exact(gj);
        if (y.B != gi.B) throw NonabelianUnsupported();
        RatVector diff = y.b;
        for (int t = 0; t < n; ++t) diff[t] -= gi.b[t];
        return to_integer(diff);
    };

    const std::int64_t cap = static_cast<std::int64_t>(g.order()) * static_cast<std::int64_t>(elements.size()) *
                             static_cast<std::int64_t>(q_reps.size() + solutions.size()) + 16;
    std::int64_t steps = 0;
    std::set<IntVector> seen;
    std::int64_t orbits = 0;
    for (const auto& [start_key, start] : elements) {
        if (seen.count(start_key)) continue;
        ++orbits;
        std::deque<IntVector> queue{start};
        seen.insert(start_key);
        while (!queue.empty()) {
            IntVector lambda = queue.front();
            queue.pop_front();
            for (const auto& gj : g.holonomy()) {
                if (++steps > cap) throw ConsistencyError("orbit enumeration exceeded its bound");
                IntVector image = conjugate(gj, lambda);
                IntVector image_key = key(image);
                if (!elements.count(image_key)) throw ConsistencyError("conjugation changed the length");
                if (seen.insert(image_key).second) queue.push_back(image);
            }
        }
    }
    return orbits;
}

std::int64_t translation_orbits(const BieberbachGroup& g, std::int64_t mu) {
    auto shell = lattice_shell(mu);
    std::set<IntVector> seen;
    std::int64_t orbits = 0;
    for (const auto& v : shell->vectors) {
        if (seen.count(v)) continue;
        ++orbits;
        for (const auto& h : g.holonomy()) seen.insert(h.B * v);
    }
    return orbits;
}

}  // namespace

std::vector<Rational> theta_values(const std::vector<std::pair<int, Rational>>& dr, const Rational& max_length_sq) {
    std::set<Rational> values;
    walk_fixed_space(dr, max_length_sq, [&](const IntVector&, const Rational& v) { values.insert(v); });
    return {values.begin(), values.end()};
}

std::vector<Rational> length_set(const BieberbachGroup& g, const Rational& max_length_sq) {
    if (max_length_sq <= 0) throw Error("length bound must be positive");
    std::set<Rational> values;
    for (std::size_t i = 1; i < g.holonomy().size(); ++i) {
        const auto inv = element_invariants(g.holonomy()[i]);
        std::vector<std::pair<int, Rational>> dr;
        for (int k = 0; k < inv.n_B; ++k) dr.emplace_back(inv.decomposition.components[k].d, inv.offsets[k]);
        for (const auto& v : theta_values(dr, max_length_sq)) values.insert(v);
    }
    // Every positive integer is a sum of four squares.
    for (std::int64_t mu = 1; Rational(mu) <= max_length_sq; ++mu) values.insert(Rational(mu));
    values.erase(Rational(0));
    return {values.begin(), values.end()};
}

LengthClass length_class(const BieberbachGroup& g, const Rational& length_sq) {
    if (!g.is_abelian()) throw NonabelianUnsupported();
    LengthClass out;
    out.length_sq = length_sq;
    if (length_sq <= 0) return out;
    for (int i = 1; i < g.order(); ++i) {
        const std::int64_t c = coset_contribution(g, i, length_sq);
        if (c != 0) out.contributions.emplace_back(i, c);
        out.total += c;
    }
    if (length_sq.denominator() == 1) {
        out.translations = translation_orbits(g, length_sq.numerator());
        out.total += out.translations;
    }
    return out;
}

std::int64_t length_multiplicity(const BieberbachGroup& g, const Rational& length_sq) {
    return length_class(g, length_sq).total;
}

}  // namespace flat4
