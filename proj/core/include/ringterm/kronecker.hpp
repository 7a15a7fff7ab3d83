#pragma once

#include <cstddef>

#include "ringterm/numeric.hpp"
#include "ringterm/poly.hpp"

namespace ringterm {

/*
 * Substitution parameters (gamma, k, b): polynomials are evaluated at the
 * base gamma^k and the result is finally reduced modulo gamma^k - b, which
 * plays the role of evaluating at x = b. All three are >= 1 and gamma^k != b.
 */
class SubstitutionParams {
public:
    SubstitutionParams(Int gamma, unsigned long k, Int b);

    const Int& gamma() const { return gamma_; }
    unsigned long k() const { return k_; }
    const Int& b() const { return b_; }
    const Int& base() const { return base_; } // gamma^k

private:
    Int gamma_;
    unsigned long k_;
    Int b_;
    Int base_;
};

// p(base), where the digits of the result in radix `base` are exactly the
// coefficients of p. Every coefficient must lie in [0, base).
Int kron_encode(const Poly& p, const Int& base);

// Radix-`base` digit expansion of v >= 0; inverse of kron_encode on
// polynomials whose coefficients fit the base. base >= 2.
Poly kron_decode(const Int& v, const Int& base);

// [x^k] f(x) recovered as floor(f(f(b)) / f(b)^k) mod f(b).
//
// Requires f non-constant with nonnegative coefficients, k <= deg(f), and
// f(b) strictly larger than every coefficient; the last condition makes the
// base-f(b) encoding lossless and is checked (InvalidBase) rather than
// assumed.
Int extract_coeff(const Poly& f, std::size_t k, const Int& b);

/*
 * Verification harness for the quotient-ring substitution identity: with
 * r(x) = f(x)^k mod (x^d - body(x)), computes
 *
 *   (f(gamma^k)^k mod (gamma^(k*d) - body(gamma^k))) mod (gamma^k - b)
 *
 * purely by integer modular exponentiation, checks every hypothesis that
 * makes this equal r(b) (computing r symbolically for the purpose — the
 * checking is the point of this routine), and asserts the two sides agree.
 *
 * Throws PreconditionViolated naming the failed hypothesis, or
 * TheoremMismatch if the sides disagree with all hypotheses satisfied (a
 * bug, never expected).
 */
Int eval_substitution(const Poly& f, const MonicModulus& m, const SubstitutionParams& params);

// The integer-side computation alone, with no symbolic cross-check. Intended
// for benchmarking against the checked path.
Int eval_substitution_unchecked(const Poly& f, const MonicModulus& m,
                                const SubstitutionParams& params);

} // namespace ringterm
