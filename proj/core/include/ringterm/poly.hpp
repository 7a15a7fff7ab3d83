#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringterm/numeric.hpp"

namespace ringterm {

/*
 * Dense univariate polynomial over the integers. coeffs()[i] is the
 * coefficient of x^i; the highest stored coefficient is nonzero, and the zero
 * polynomial stores nothing (its degree is std::nullopt, never a sentinel).
 */
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(Int c);
    static Poly x();
    static Poly monomial(std::size_t degree, Int coeff = 1);

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const;
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const Poly&) const = default;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;

    // Diagnostic rendering, e.g. "12*x^2 + x - 4".
    std::string to_string() const;

private:
    std::vector<Int> c_;
    void normalize();
};

/*
 * The monic modulus x^d - body(x) with deg(body) < d, d >= 1. Reduction by a
 * modulus of this shape never leaves the integers, so all quotient-ring
 * arithmetic below is exact.
 */
class MonicModulus {
public:
    MonicModulus(std::size_t degree, Poly body);

    std::size_t degree() const { return d_; }
    const Poly& body() const { return body_; }

    // The represented modulus evaluated at b: b^d - body(b).
    Int eval(const Int& b) const;

    Poly to_poly() const;

private:
    std::size_t d_;
    Poly body_;
};

// Remainder of p under the relation x^d = body(x); result degree < d.
Poly poly_rem(const Poly& p, const MonicModulus& m);

// base^e mod m by square-and-multiply, reducing after every product so
// intermediate degrees stay below 2*d. e >= 0.
Poly ring_pow(const Poly& base, const Int& e, const MonicModulus& m);

// Horner evaluation p(b).
Int eval_at(const Poly& p, const Int& b);

} // namespace ringterm
