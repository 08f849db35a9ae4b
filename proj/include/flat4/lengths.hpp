#pragma once

#include "flat4/group.hpp"

#include <cstdint>
#include <vector>

namespace flat4 {

struct LengthClass {
    Rational length_sq;
    /// (coset index in holonomy(), number of conjugacy classes) for non-lattice cosets.
    std::vector<std::pair<int, std::int64_t>> contributions;
    std::int64_t translations = 0;
    std::int64_t total = 0;
};

/// Squared lengths of closed geodesics in (0, max_length_sq], sorted.
std::vector<Rational> length_set(const BieberbachGroup& g, const Rational& max_length_sq);

/// Number of conjugacy classes of Gamma whose elements have squared length l2.
/// Throws NonabelianUnsupported unless the holonomy group is abelian.
LengthClass length_class(const BieberbachGroup& g, const Rational& length_sq);
std::int64_t length_multiplicity(const BieberbachGroup& g, const Rational& length_sq);

/// Squared translation lengths {sum_i (k_i + r_i)^2 / d_i : k in Z^m} up to a bound.
std::vector<Rational> theta_values(const std::vector<std::pair<int, Rational>>& dr, const Rational& max_length_sq);

}  // namespace flat4
