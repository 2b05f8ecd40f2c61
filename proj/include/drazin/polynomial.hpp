#pragma once

#include <cstddef>
#include <vector>

#include "drazin/rational.hpp"

namespace drazin {

/// Polynomial over Rational in canonical form: no trailing zero
/// coefficients, the zero polynomial has an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(std::size_t degree, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of x^i (zero beyond the degree).
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;
    bool is_monic() const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& rhs) const = default;

    /// Quotient and remainder; divisor must be nonzero.
    struct DivMod {
        Polynomial quotient;
        Polynomial remainder;
    };
    DivMod divmod(const Polynomial& divisor) const;
    Polynomial mod(const Polynomial& divisor) const { return divmod(divisor).remainder; }

    Rational eval(const Rational& x) const;

    /// Number of leading x factors (0 for the zero polynomial).
    std::size_t root_zero_multiplicity() const;

    Polynomial monic() const;

private:
    std::vector<Rational> coeffs_;
    void normalize();
};

/// u*a + v*b = g with g the monic gcd (zero when a = b = 0).
struct Bezout {
    Polynomial g, u, v;
};
Bezout extended_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace drazin
