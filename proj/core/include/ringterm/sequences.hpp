#pragma once

#include <cstddef>
#include <vector>

#include "ringterm/arith_term.hpp"
#include "ringterm/numeric.hpp"
#include "ringterm/poly.hpp"

namespace ringterm {

/*
 * Order-d linear recurrence with constant coefficients,
 *
 *   A(n) = c[d-1]*A(n-1) + c[d-2]*A(n-2) + ... + c[0]*A(n-d),
 *
 * together with the initial values A(0..d-1). coeffs() stores c[0..d-1], so
 * the characteristic body g(x) = c[d-1]*x^(d-1) + ... + c[0] has c[j] as the
 * coefficient of x^j and the whole sequence is replayed by the quotient-ring
 * relation x^d = g(x).
 */
class CRecurrence {
public:
    CRecurrence(std::vector<Int> coeffs, std::vector<Int> initials);

    // All initial values 1 — the hypothesis under which ring_term and
    // synth_formula apply.
    static CRecurrence all_ones(std::vector<Int> coeffs);

    // A(n) = 2*A(n-1) + A(n-2), A(0) = 0, A(1) = 1.
    static CRecurrence pell();

    std::size_t order() const { return coeffs_.size(); }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const std::vector<Int>& initials() const { return initials_; }

    bool all_ones_initials() const;
    Poly characteristic_body() const { return Poly(coeffs_); }
    MonicModulus characteristic_modulus() const;
    Int coefficient_abs_sum() const;

private:
    std::vector<Int> coeffs_;
    std::vector<Int> initials_;
};

// Ground truth: A(n) by direct iteration from the initial values.
Int oracle_term(const CRecurrence& rec, unsigned long n);

// A(n) as x^n mod (x^d - g(x)) evaluated at 1. Requires all-ones initials
// (UnsupportedInitials otherwise); coefficients may be negative.
Int ring_term(const CRecurrence& rec, unsigned long n);

// How synth_formula picks the substitution base b.
enum class BaseStrategy {
    // b = A(n) + S + 1 with S the coefficient sum, the smallest base for
    // which both reductions provably recover A(n). Needs one oracle pass.
    OracleMinimal,
    // b = the smallest power of two exceeding S^n + S, derived from the
    // a-priori bound A(n) <= S^n. No sequence values are computed.
    AprioriBound,
};

/*
 * Closed form ((b^n mod (b^d - g(b))) mod (b - 1)) as an arithmetic term
 * with all constants substituted. Requires all-ones initials and nonnegative
 * coefficients, not all zero, and n >= 1; the result always satisfies
 * eval_formula(synth_formula(rec, n, s)) == oracle_term(rec, n).
 */
ArithmeticTerm synth_formula(const CRecurrence& rec, unsigned long n, BaseStrategy strategy);

// As above with a caller-supplied base. The base must be at least
// A(n) + S + 1; DegenerateModulus if either modulus collapses.
ArithmeticTerm synth_formula_with_base(const CRecurrence& rec, unsigned long n, const Int& base);

// n-th Pell number as ((3^n + 1)^(n-1) mod (9^n - 2)) mod (3^n - 1), n >= 1.
Int pell(unsigned long n);

// P(n+1) as the binomial sum of C(n,k) * 2^floor(k/2) over k = 0..n.
Int pell_binomial_sum(unsigned long n);

// Central binomial coefficient C(2n, n) as
// ((4^n + 1)^(2n) mod (4^(n(n+1)) + 1)) mod (4^n - 1), n >= 1.
Int central_binomial(unsigned long n);

// Exact C(n, k) by the multiplicative formula; reference for the above.
Int binomial_oracle(unsigned long n, unsigned long k);

} // namespace ringterm
