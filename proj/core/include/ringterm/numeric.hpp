#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace ringterm {

using Int = mpz_class;
using Rational = mpq_class;

// Canonical residue of v modulo m, in [0, |m|). Throws DivisionByZero if m == 0.
Int mod_canonical(const Int& v, const Int& m);

// base^e with e >= 0.
Int pow_int(const Int& base, unsigned long e);

// base^e mod m as a canonical residue; e >= 0, m != 0.
Int powmod(const Int& base, const Int& e, const Int& m);

// Number of decimal digits of |v| (0 has one digit).
std::size_t decimal_digits(const Int& v);

// floor(log2(a)) for a >= 1.
unsigned long floor_log2(const Int& a);

// num/den reduced to lowest terms with den > 0. Throws DivisionByZero if den == 0.
Rational make_rational(const Int& num, const Int& den);

// Signed decimal rendering of q with exactly `digits` fractional places,
// rounded half away from zero. digits >= 1.
std::string to_decimal(const Rational& q, std::size_t digits);

} // namespace ringterm
