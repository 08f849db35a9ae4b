#pragma once

#include "flat4/intlat.hpp"
#include "flat4/kraw.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace flat4 {

/// gamma = B L_b acting by x -> Bx + Bb, with b reduced into [0,1)^n.
struct AffineIsometry {
    IntMatrix B;
    RatVector b;

    static AffineIsometry identity(int n = 4);

    /// (B,b)(B',b') = (BB', B'^{-1} b + b'), translation reduced mod Z^n.
    AffineIsometry compose(const AffineIsometry& rhs) const;
    /// Same product without reducing the translation.
    AffineIsometry compose_exact(const AffineIsometry& rhs) const;
    AffineIsometry inverse_exact() const;

    /// Image of a point, x -> B(x + b).
    RatVector apply(const RatVector& x) const;

    friend bool operator==(const AffineIsometry&, const AffineIsometry&) = default;
};

/// Normalizes b into [0,1)^n and checks B is a signed permutation.
AffineIsometry make_isometry(IntMatrix B, RatVector b);

struct ElementInvariants {
    int n_B = 0;
    FixedDecomposition decomposition;
    QuadNumber volume;
    RatVector b_plus;
    std::vector<Rational> offsets;  // folded into [0, 1/2], one per component
    TraceRow traces{};
};

ElementInvariants element_invariants(const AffineIsometry& g);

struct GroupMetadata {
    std::string holonomy_name;
    std::string source_table;
    std::string note;
};

/// Bieberbach group with translation lattice Z^4.
class BieberbachGroup {
public:
    const std::string& id() const { return id_; }
    const std::vector<AffineIsometry>& generators() const { return generators_; }
    /// Coset representatives of Z^4 \ Gamma; the identity comes first.
    const std::vector<AffineIsometry>& holonomy() const { return holonomy_; }
    const GroupMetadata& metadata() const { return metadata_; }
    int order() const { return static_cast<int>(holonomy_.size()); }

    /// Index of the coset whose linear part is B, or -1.
    int coset_of(const IntMatrix& B) const;

    bool is_orientable() const;
    bool is_diagonal_type() const;
    bool is_abelian() const;

    friend BieberbachGroup build_group(std::string id, std::vector<AffineIsometry> generators,
                                       GroupMetadata metadata);

private:
    std::string id_;
    std::vector<AffineIsometry> generators_;
    std::vector<AffineIsometry> holonomy_;
    GroupMetadata metadata_;
};

inline constexpr int kHolonomyBound = 48;

/// Closes the generators under products mod Z^4 and validates the result.
/// Throws InvalidGroup ("non-orthogonal generator", "not torsion-free",
/// "holonomy not closed within bound", ...).
BieberbachGroup build_group(std::string id, std::vector<AffineIsometry> generators,
                            GroupMetadata metadata = {});

/// c[d][t] for 0 <= t <= d <= 4, counted over non-lattice coset representatives.
struct SunadaNumbers {
    std::array<std::array<int, 5>, 5> c{};

    int at(int d, int t) const { return c[d][t]; }
    /// (c11, c21, c22, c31, c32, c33)
    std::array<int, 6> listed() const;
    int total() const;

    friend bool operator==(const SunadaNumbers&, const SunadaNumbers&) = default;
};

/// Throws NotDiagonalType.
SunadaNumbers sunada_numbers(const BieberbachGroup& g);

/// beta_p = (1/|F|) sum tr_p(B); throws ConsistencyError if not integral.
int betti(const BieberbachGroup& g, int p);

inline bool is_orientable(const BieberbachGroup& g) { return g.is_orientable(); }
inline bool is_diagonal_type(const BieberbachGroup& g) { return g.is_diagonal_type(); }

}  // namespace flat4
