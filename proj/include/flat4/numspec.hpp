#pragma once

#include "flat4/group.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace flat4 {

struct Shell {
    std::int64_t mu = 0;
    std::vector<IntVector> vectors;
};

/// All v in Z^4 with |v|^2 = mu. Cached; safe to call concurrently.
std::shared_ptr<const Shell> lattice_shell(std::int64_t mu);

/// sum over v in the shell with Bv = v of exp(-2 pi i v.b).
std::complex<double> e_term(const AffineIsometry& g, std::int64_t mu);

/// Multiplicity of the eigenvalue 4 pi^2 mu of the Hodge Laplacian on p-forms.
/// Throws ConsistencyError("non-integral multiplicity").
std::int64_t multiplicity(const BieberbachGroup& g, int p, std::int64_t mu);

/// multiplicity(g, p, mu) for p = 0..4.
std::array<std::int64_t, 5> multiplicity_row(const BieberbachGroup& g, std::int64_t mu);

/// sum_{mu <= mu_max} d_{p,mu} exp(-4 pi^2 mu s)
double heat_trace_numeric(const BieberbachGroup& g, int p, double s, std::int64_t mu_max);

}  // namespace flat4
