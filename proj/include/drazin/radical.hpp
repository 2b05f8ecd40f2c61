#pragma once

#include <cstddef>
#include <vector>

#include "drazin/algebra.hpp"
#include "drazin/matrix.hpp"

namespace drazin {

/// Basis of the Jacobson radical J(A) plus the least N >= 1 with J^N = 0.
/// Stored as raw coordinates so the cache inside Algebra owns no Elements.
struct RadicalBasis {
    std::vector<std::vector<Rational>> basis_coords;
    std::size_t nilclass;
    RowSpace span;
};

/// Computes (or fetches the cached) radical of the algebra.  Over a
/// characteristic-zero field J(A) is the kernel of the regular trace form
/// B(x, y) = trace(L_{xy}) (Dickson's criterion); the result is
/// post-verified against the definition: 1 + j*y is invertible for random
/// j in the span and random y.
const RadicalBasis& jacobson_radical(const AlgebraPtr& algebra);

/// The radical basis as elements.
std::vector<Element> radical_basis_elements(const AlgebraPtr& algebra);

/// Exact span membership against the cached radical basis.
bool in_radical(const Element& a);

/// True iff a^k lies in J(A) for some k <= dim.  The dimension cap
/// suffices: powers stabilize by the degree of the minimal polynomial.
bool in_sqrt_radical(const Element& a);

}  // namespace drazin
