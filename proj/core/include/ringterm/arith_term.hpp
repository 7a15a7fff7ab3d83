#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ringterm/numeric.hpp"

namespace ringterm {

/*
 * Finite expression tree over arbitrary-precision integer constants with the
 * node kinds {constant, ^, mod, div (floor), +, -}. Values of this type are
 * the synthesized closed forms, e.g. ((91^10 mod 8189) mod 90).
 *
 * The canonical text form is fully parenthesized infix; parse() inverts
 * to_string() exactly.
 */
class ArithmeticTerm {
public:
    enum class Kind { Constant, Pow, Mod, FloorDiv, Add, Sub };

    static ArithmeticTerm constant(Int v);
    static ArithmeticTerm pow(ArithmeticTerm base, ArithmeticTerm exponent);
    static ArithmeticTerm mod(ArithmeticTerm value, ArithmeticTerm modulus);
    static ArithmeticTerm floor_div(ArithmeticTerm num, ArithmeticTerm den);
    static ArithmeticTerm add(ArithmeticTerm lhs, ArithmeticTerm rhs);
    static ArithmeticTerm sub(ArithmeticTerm lhs, ArithmeticTerm rhs);

    Kind kind() const { return kind_; }
    const Int& value() const;           // Constant nodes only
    const ArithmeticTerm& lhs() const;  // binary nodes only
    const ArithmeticTerm& rhs() const;

    bool operator==(const ArithmeticTerm& o) const;

    std::string to_string() const;
    static ArithmeticTerm parse(std::string_view text);

private:
    ArithmeticTerm(Kind kind, Int value) : kind_(kind), value_(std::move(value)) {}
    ArithmeticTerm(Kind kind, ArithmeticTerm lhs, ArithmeticTerm rhs);

    Kind kind_ = Kind::Constant;
    Int value_ = 0;
    std::vector<ArithmeticTerm> args_; // empty or exactly {lhs, rhs}
};

// Bottom-up exact evaluation. A power directly under a mod is computed by
// modular exponentiation, so huge exponents never materialize. Throws
// DivisionByZero carrying the node path for a zero modulus or denominator.
Int eval_formula(const ArithmeticTerm& t);

} // namespace ringterm
