#pragma once

#include <vector>

#include "drazin/algebra.hpp"

namespace drazin {

/// The four corner products of y relative to an idempotent p and its
/// complement q = 1 - p.  They sum to y exactly.
struct PierceBlocks {
    Element p;
    Element pp;  // p y p
    Element pq;  // p y (1-p)
    Element qp;  // (1-p) y p
    Element qq;  // (1-p) y (1-p)
};

/// Throws not_idempotent unless p^2 = p.
PierceBlocks pierce(const Element& y, const Element& p);

/// The corner pAp as a standalone validated algebra with unit p, together
/// with exact embed/project maps.
class CornerAlgebra {
public:
    /// Throws not_idempotent / zero_corner.
    explicit CornerAlgebra(const Element& p);

    const AlgebraPtr& algebra() const { return corner_; }
    const Element& idempotent() const { return p_; }
    const AlgebraPtr& parent() const { return parent_; }
    /// Corner basis written in parent coordinates.
    const std::vector<std::vector<Rational>>& basis_in_parent() const { return parent_basis_; }

    /// Corner element -> parent element.  Multiplicative, unit goes to p.
    Element embed(const Element& corner_elt) const;
    /// Parent element -> coordinates of p x p in the corner basis.
    Element project(const Element& parent_elt) const;

private:
    AlgebraPtr parent_;
    Element p_;
    AlgebraPtr corner_;
    std::vector<std::vector<Rational>> parent_basis_;
    RowSpace span_;
};

CornerAlgebra corner_algebra(const Element& p);

}  // namespace drazin
