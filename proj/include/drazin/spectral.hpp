#pragma once

#include <cstddef>
#include <optional>

#include "drazin/algebra.hpp"

namespace drazin {

/// Drazin data of one element: the Drazin inverse a^d, the Drazin index s,
/// and the spectral idempotent pi = 1 - a a^d.  On return from drazin() all
/// of the following hold exactly (they are re-verified internally):
///   a*inverse = inverse*a,  inverse*a*inverse = inverse,
///   a^{s+1}*inverse = a^s,  pi^2 = pi,  a*pi nilpotent,  a + pi invertible.
struct DrazinData {
    Element inverse;
    std::size_t index;
    Element pi;
};

/// True iff the minimal polynomial is x^s.  The zero element is nilpotent
/// with index 1 (its minimal polynomial is x).
bool is_nilpotent(const Element& a);

/// Nilpotency index, or nullopt when a is not nilpotent.
std::optional<std::size_t> nilpotency_index(const Element& a);

/// Drazin inverse.  Always exists here: with m(x) = x^s q(x), q(0) != 0,
/// Bezout coefficients u x^s + v q = 1 give pi = v(a) q(a), and
/// a^d = (a + pi)^{-1} (1 - pi) computed inside Q[a] modulo m.
DrazinData drazin(const Element& a);

/// Invertible iff the minimal polynomial has nonzero constant term.
bool is_invertible(const Element& a);

/// Two-sided inverse, computed in Q[a].  Throws not_invertible.
Element inverse(const Element& a);

}  // namespace drazin
