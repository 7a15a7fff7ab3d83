#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringterm/numeric.hpp"

namespace ringterm {

/*
 * Approximations of the real n-th root of a, obtained as quotients of
 * consecutive powers of (x+1) in Z[x]/(x^n - a) evaluated at 1 — either
 * symbolically or, after substituting a large base for x, as quotients of
 * two modular exponentiations.
 */

// f(k+1)/f(k) - 1 with f(k) = (x+1)^k mod (x^n - a) evaluated at 1.
// a >= 1, n >= 1, k >= 1.
Rational root_approximant(const Int& a, unsigned long n, unsigned long k);

// Numerator and denominator residues of the pure-arithmetic form:
//   N = (B+1)^(K+1) mod (B^n - a),  D = (B+1)^K mod (B^n - a)
// for an arbitrary base B and exponent K. ModulusNotPositive if B^n <= a.
std::pair<Int, Int> root_residues(const Int& a, unsigned long n, const Int& base, const Int& K);

// N/D - 1 with B = k^(kn), K = kn, so the ring modulus is k^(kn^2) - a.
// Requires a > 1; InvalidArgument if the denominator residue is zero.
Rational root_arith(const Int& a, unsigned long n, unsigned long k);

// As root_arith with both residues further reduced mod (k^(kn) - c) before
// the quotient; c >= -1 and k^(kn) - c > 1.
Rational root_arith_reduced(const Int& a, unsigned long n, unsigned long k, const Int& c);

// floor(a^(1/n)): the unique r with r^n <= a < (r+1)^n, by binary search on
// exact integer powers. a >= 1, n >= 1.
Int exact_floor_root(const Int& a, unsigned long n);

// The conjectured fixed-k closed form for floor(a^(1/n)): the floor of
// N/D - 1 at base B = a^(2an), taken in exact rational arithmetic.
// Hypotheses checked: a > 2, 1 < n <= floor(log2(a)) + 1, and a not a
// perfect n-th power (PerfectPower otherwise).
Int conjecture_floor_root(const Int& a, unsigned long n);

// floor(a^(1/n) * 10^precision), exact; reference for error measurement.
Int root_reference_scaled(const Int& a, unsigned long n, std::size_t precision);

// approximant - a^(1/n), exact to the given number of decimal digits (the
// reference root is truncated at that precision).
Rational root_error(const Rational& approximant, const Int& a, unsigned long n,
                    std::size_t precision);

struct ScanOptions {
    std::size_t precision = 30;        // decimal digits in rendered values/errors
    std::size_t digit_budget = 500000; // cap on the decimal size of ring moduli
    unsigned jobs = 0;                 // 0 = machine parallelism
};

// One observation of a root-approximation scan.
struct ConvergenceRecord {
    Int a;
    unsigned long n = 0;
    unsigned long k = 0;
    std::optional<Int> c;      // engaged only for the reduced variant
    std::string variant;       // "arith" or "arith_reduced"
    Rational approximant;
    std::string value_decimal; // approximant to `precision` digits
    std::string error_decimal; // approximant - a^(1/n), signed, same precision
    std::size_t modulus_digits = 0;
    double elapsed_ms = 0.0;
};

// Records for k in [k_min, k_max]: the plain variant first, then one reduced
// record per c value, k ascending. BudgetExceeded if any k in the range
// pushes the ring modulus past the digit budget.
std::vector<ConvergenceRecord> convergence_scan(const Int& a, unsigned long n, unsigned long k_min,
                                                unsigned long k_max,
                                                const std::vector<Int>& c_values,
                                                const ScanOptions& opts = {});

struct ConjectureRecord {
    Int a;
    unsigned long n = 0;
    Int k;                           // the fixed exponent parameter 2*a*n
    std::optional<Int> formula_value;
    std::optional<Int> exact_value;
    std::optional<bool> matched;
    std::string skipped_reason;      // "", "perfect_power" or "budget_exceeded"
    std::size_t modulus_digits = 0;  // estimated for skipped pairs
    double elapsed_ms = 0.0;
};

struct ConjectureScanReport {
    std::vector<ConjectureRecord> records;
    std::size_t matches = 0;
    std::size_t mismatches = 0;
    std::size_t skips = 0;
    std::size_t max_modulus_digits = 0;
};

// Compares the conjectured closed form against the exact floor root for every
// (a, n) with 3 <= a <= a_max and 1 < n <= floor(log2(a)) + 1. Perfect powers
// and budget exceedances are recorded as skips; mismatches are findings, not
// errors.
ConjectureScanReport conjecture_scan(const Int& a_max, const ScanOptions& opts = {});

} // namespace ringterm
