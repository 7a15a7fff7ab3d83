#include "ringterm/numeric.hpp"

#include "ringterm/errors.hpp"

namespace ringterm {

Int mod_canonical(const Int& v, const Int& m) {
    if (m == 0) throw DivisionByZero("modulus is zero");
    Int r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()); // sign of divisor ignored, result >= 0
    return r;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int powmod(const Int& base, const Int& e, const Int& m) {
    if (m == 0) throw DivisionByZero("modulus is zero");
    if (e < 0) throw InvalidArgument("powmod: negative exponent");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::size_t decimal_digits(const Int& v) {
    if (v == 0) return 1;
    // mpz_sizeinbase may overestimate by one for bases that are not powers of 2
    std::size_t n = mpz_sizeinbase(v.get_mpz_t(), 10);
    if (n > 1) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, n - 1);
        Int a = abs(v);
        if (a < p) --n;
    }
    return n;
}

unsigned long floor_log2(const Int& a) {
    if (a < 1) throw InvalidArgument("floor_log2: argument must be >= 1");
    return static_cast<unsigned long>(mpz_sizeinbase(a.get_mpz_t(), 2)) - 1;
}

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero("rational denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_decimal(const Rational& q, std::size_t digits) {
    if (digits < 1) throw InvalidArgument("to_decimal: digits must be >= 1");
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    // round(|num| * 10^digits / den), half away from zero
    Int t = abs(num) * scale;
    Int r = (2 * t + den) / (2 * den);
    Int ipart = r / scale;
    Int frac = r % scale;
    std::string f = frac.get_str();
    std::string out;
    if (num < 0 && r != 0) out += '-';
    out += ipart.get_str();
    out += '.';
    out += std::string(digits - f.size(), '0');
    out += f;
    return out;
}

} // namespace ringterm
