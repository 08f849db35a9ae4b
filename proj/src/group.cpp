#include "flat4/group.hpp"

#include "flat4/error.hpp"

#include <deque>
#include <map>

namespace flat4 {

AffineIsometry AffineIsometry::identity(int n) {
    return {IntMatrix::identity(n), RatVector(n, Rational(0))};
}

AffineIsometry AffineIsometry::compose_exact(const AffineIsometry& rhs) const {
    // B' is orthogonal, so B'^{-1} = B'^t.
    RatVector t = rhs.B.transpose() * b;
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += rhs.b[i];
    return {B * rhs.B, std::move(t)};
}

AffineIsometry AffineIsometry::compose(const AffineIsometry& rhs) const {
    AffineIsometry p = compose_exact(rhs);
    p.b = reduce_mod_lattice(p.b);
    return p;
}

AffineIsometry AffineIsometry::inverse_exact() const {
    // (B L_b)^{-1} = L_{-b} B^{-1} = B^{-1} L_{-Bb}
    RatVector t = B * b;
    for (auto& x : t) x = -x;
    return {B.transpose(), std::move(t)};
}

RatVector AffineIsometry::apply(const RatVector& x) const {
    RatVector y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += b[i];
    return B * y;
}

AffineIsometry make_isometry(IntMatrix B, RatVector b) {
    if (!B.is_square() || static_cast<int>(b.size()) != B.rows())
        throw InvalidGroup("malformed generator: dimension mismatch");
    if (!B.is_orthogonal()) throw InvalidGroup("non-orthogonal generator " + B.str());
    return {std::move(B), reduce_mod_lattice(b)};
}

ElementInvariants element_invariants(const AffineIsometry& g) {
    ElementInvariants inv;
    inv.decomposition = decompose_fixed(g.B);
    inv.n_B = inv.decomposition.rank();
    inv.volume = inv.decomposition.volume;
    auto proj = project_fixed(g.b, inv.decomposition);
    inv.b_plus = std::move(proj.projection);
    inv.offsets = std::move(proj.offsets);
    inv.traces = trace_row(g.B);
    return inv;
}

int BieberbachGroup::coset_of(const IntMatrix& B) const {
    for (std::size_t i = 0; i < holonomy_.size(); ++i)
        if (holonomy_[i].B == B) return static_cast<int>(i);
    return -1;
}

bool BieberbachGroup::is_orientable() const {
    for (const auto& h : holonomy_)
        if (h.B.determinant() != 1) return false;
    return true;
}

bool BieberbachGroup::is_diagonal_type() const {
    for (const auto& h : holonomy_)
        if (!h.B.is_diagonal()) return false;
    return true;
}

bool BieberbachGroup::is_abelian() const {
    for (const auto& x : holonomy_)
        for (const auto& y : holonomy_)
            if (x.B * y.B != y.B * x.B) return false;
    return true;
}

namespace {

// Some element of the coset (B, b) fixes a point iff w.b is an integer for
// every fixed-lattice basis vector w (the fixed lattice is saturated).
bool coset_has_fixed_point(const AffineIsometry& g) {
    for (const auto& w : fixed_lattice_basis(g.B)) {
        if (dot(w, g.b).denominator() != 1) return false;
    }
    return true;
}

}  // namespace

BieberbachGroup build_group(std::string id, std::vector<AffineIsometry> generators, GroupMetadata metadata) {
    for (auto& g : generators) g = make_isometry(g.B, g.b);
    const int n = generators.empty() ? 4 : generators.front().B.rows();
    for (const auto& g : generators)
        if (g.B.rows() != n) throw InvalidGroup("generators of mixed dimension");

    BieberbachGroup group;
    group.id_ = std::move(id);
    group.generators_ = std::move(generators);
    group.metadata_ = std::move(metadata);

    std::map<IntMatrix, RatVector> seen;
    std::deque<AffineIsometry> queue;
    auto visit = [&](const AffineIsometry& e) {
        auto [it, inserted] = seen.emplace(e.B, e.b);
        if (!inserted) {
            if (it->second != e.b)
                throw InvalidGroup("translation lattice is not Z^4: linear part " + e.B.str() +
                                   " carries translations " + to_string(it->second) + " and " +
                                   to_string(e.b));
            return;
        }
        if (static_cast<int>(seen.size()) > kHolonomyBound)
            throw InvalidGroup("holonomy not closed within bound");
        group.holonomy_.push_back(e);
        queue.push_back(e);
    };
    visit(AffineIsometry::identity(n));
    while (!queue.empty()) {
        AffineIsometry e = queue.front();
        queue.pop_front();
        for (const auto& g : group.generators_) visit(e.compose(g));
    }

    for (std::size_t i = 1; i < group.holonomy_.size(); ++i) {
        if (coset_has_fixed_point(group.holonomy_[i]))
            throw InvalidGroup("not torsion-free: element " + group.holonomy_[i].B.str() + " with b = " +
                               to_string(group.holonomy_[i].b) + " has a fixed point");
    }
    return group;
}

std::array<int, 6> SunadaNumbers::listed() const {
    return {c[1][1], c[2][1], c[2][2], c[3][1], c[3][2], c[3][3]};
}

int SunadaNumbers::total() const {
    int s = 0;
    for (int d = 0; d < 4; ++d)
        for (int t = 0; t <= d; ++t) s += c[d][t];
    return s;
}

SunadaNumbers sunada_numbers(const BieberbachGroup& g) {
    if (!g.is_diagonal_type()) throw NotDiagonalType();
    SunadaNumbers s;
    const Rational half(1, 2);
    for (std::size_t k = 1; k < g.holonomy().size(); ++k) {
        const auto& h = g.holonomy()[k];
        int d = 0, t = 0;
        for (int i = 0; i < h.B.rows(); ++i) {
            if (h.B(i, i) != 1) continue;
            ++d;
            if (frac(h.b[i]) == half) ++t;
        }
        ++s.c[d][t];
    }
    return s;
}

int betti(const BieberbachGroup& g, int p) {
    if (p < 0 || p > 4) throw Error("betti: degree out of range");
    std::int64_t sum = 0;
    for (const auto& h : g.holonomy()) sum += trace_p(h.B, p);
    if (sum % g.order() != 0)
        throw ConsistencyError("non-integral Betti number for group " + g.id());
    return static_cast<int>(sum / g.order());
}

}  // namespace flat4
