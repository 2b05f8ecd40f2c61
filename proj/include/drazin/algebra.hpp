#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "drazin/matrix.hpp"
#include "drazin/polynomial.hpp"
#include "drazin/rational.hpp"

namespace drazin {

class Algebra;
class Element;
struct RadicalBasis;

/// Algebras are immutable after construction and always handled through a
/// shared pointer; elements hold one, and same-algebra checks are pointer
/// identity.
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional unital associative algebra over Q, given by structure
/// constants c[i][j][k] with basis products e_i e_j = sum_k c[i][j][k] e_k.
/// Construction validates associativity on every basis triple and the unit
/// laws, and fails fast otherwise.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    /// The k x k matrix algebra with the matrix-unit basis e_{rc}
    /// (index r*k + c) and unit sum_r e_{rr}.
    static AlgebraPtr matrix_algebra(std::size_t k);

    /// Builds from an explicit table.  table[(i*d + j)*d + k] = c[i][j][k].
    static AlgebraPtr structure_algebra(std::size_t dim, std::vector<Rational> table,
                                        std::vector<Rational> unit, std::string name = "");

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    /// Set when built by matrix_algebra: coords map to a k x k matrix.
    std::optional<std::size_t> matrix_size() const { return matrix_k_; }

    const Rational& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<Rational>& unit_coords() const { return unit_; }

    Element unit() const;
    Element zero() const;
    Element basis_element(std::size_t i) const;
    Element element(std::vector<Rational> coords) const;
    Element scalar(const Rational& c) const;

    /// Jacobson radical, computed once per algebra (race-free) and cached.
    const RadicalBasis& radical() const;

    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

private:
    Algebra(std::size_t dim, std::vector<Rational> table, std::vector<Rational> unit,
            std::string name, std::optional<std::size_t> matrix_k);
    void validate() const;
    AlgebraPtr self() const { return shared_from_this(); }

    std::size_t dim_;
    std::vector<Rational> table_;
    std::vector<Rational> unit_;
    std::string name_;
    std::optional<std::size_t> matrix_k_;

    mutable std::once_flag radical_once_;
    mutable std::shared_ptr<const RadicalBasis> radical_;
};

/// Immutable algebra member: a coordinate vector in the fixed basis.
/// All operations are pure and return fresh values.
class Element {
public:
    Element(AlgebraPtr algebra, std::vector<Rational> coords);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& coord(std::size_t i) const { return coords_[i]; }

    bool is_zero() const;
    bool operator==(const Element& rhs) const;

    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element operator-() const;
    Element operator*(const Element& rhs) const;
    Element operator*(const Rational& c) const;

    /// a^m by repeated multiplication; pow(0) is the unit.
    Element pow(unsigned m) const;

private:
    void require_same_algebra(const Element& rhs) const;
    AlgebraPtr algebra_;
    std::vector<Rational> coords_;
};

inline Element operator*(const Rational& c, const Element& a) { return a * c; }

/// Matrix of x -> a*x in the algebra basis.
QMatrix left_regular(const Element& a);
/// Matrix of x -> x*a.
QMatrix right_regular(const Element& a);

/// Least-degree monic polynomial annihilating a, from the first linear
/// dependency in the Krylov sequence 1, a, a^2, ...
Polynomial minimal_polynomial(const Element& a);

/// Basis of Comm(a) = { x : xa = ax }.
std::vector<Element> commutant_basis(const Element& a);

/// True iff x commutes with every member of commutant_basis(a).
bool in_double_commutant(const Element& x, const Element& a);

/// Horner evaluation of p at an algebra element.
Element eval(const Polynomial& p, const Element& a);

bool is_idempotent(const Element& p);

}  // namespace drazin
