#pragma once

#include <array>
#include <string>

#include "plurilab/rational.hpp"

namespace plurilab::wps {

/// A hypersurface of degree d in weighted projective 4-space P(a0..a4).
struct WeightedHypersurface {
    std::array<long, 5> weights{1, 1, 1, 1, 1};
    long degree = 1;
};

/// True iff every 4-element subset of the weights has gcd 1.
bool well_formed(const WeightedHypersurface& x);

/// Throws std::invalid_argument for nonpositive data or ill-formed weights.
void validate(const WeightedHypersurface& x);

/// Canonical weight k = d - sum(weights). The canonical sheaf is O(k).
long canonical_weight(const WeightedHypersurface& x);

/// h^0(O_X(n)) read off the Poincare series (1-t^d)/prod(1-t^{a_i}):
/// the number of weight-n monomials minus the number of weight-(n-d) ones.
/// Exact bounded dynamic programming, no floating point.
Int hilbert_coefficient(const WeightedHypersurface& x, long n);

/// P_m = h^0(O_X(m k)). Requires k >= 1 (general type with K = O(k)).
Int plurigenus(const WeightedHypersurface& x, long m);

/// K^3 = k^3 d / prod(a_i).
Rat k3(const WeightedHypersurface& x);

/// chi(O) = 1 - q + h^2 - p_g  and  chi(omega) = -chi(O) in dimension 3.
inline Int chi_structure_sheaf(const Int& pg, const Int& q = 0, const Int& h2 = 0) {
    return 1 - q + h2 - pg;
}
inline Int chi_canonical_sheaf(const Int& pg, const Int& q = 0, const Int& h2 = 0) {
    return -chi_structure_sheaf(pg, q, h2);
}

}  // namespace plurilab::wps
