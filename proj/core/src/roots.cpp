#include "ringterm/roots.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "ringterm/errors.hpp"
#include "ringterm/parallel.hpp"
#include "ringterm/poly.hpp"

namespace ringterm {

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

// decimal digits of base^exponent, cheaply, for budget gating
std::size_t estimate_pow_digits(const Int& base, double exponent) {
    const double lg = std::log10(base.get_d());
    return static_cast<std::size_t>(exponent * lg) + 1;
}

Int ring_power_at_one(const Int& a, unsigned long n, unsigned long k) {
    const MonicModulus m(n, Poly::constant(a));
    return eval_at(ring_pow(Poly::x() + Poly::constant(1), Int(k), m), 1);
}

} // namespace

Rational root_approximant(const Int& a, unsigned long n, unsigned long k) {
    if (a < 1) throw InvalidArgument("root_approximant: a must be >= 1");
    if (n < 1 || k < 1) throw InvalidArgument("root_approximant: n and k must be >= 1");
    const Int fk = ring_power_at_one(a, n, k);
    const Int fk1 = ring_power_at_one(a, n, k + 1);
    return make_rational(fk1 - fk, fk);
}

std::pair<Int, Int> root_residues(const Int& a, unsigned long n, const Int& base, const Int& K) {
    Int m;
    mpz_pow_ui(m.get_mpz_t(), base.get_mpz_t(), n);
    m -= a;
    if (m <= 0)
        throw ModulusNotPositive("root_residues: base^n - a = " + m.get_str() + " is not positive");
    const Int num = powmod(base + 1, K + 1, m);
    const Int den = powmod(base + 1, K, m);
    return {num, den};
}

namespace {

Int arith_base(unsigned long n, unsigned long k) {
    // k^(kn); the exponent k*n must fit a machine word
    if (k != 0 && n > std::numeric_limits<unsigned long>::max() / k)
        throw BudgetExceeded("root base exponent k*n overflows");
    return pow_int(Int(k), k * n);
}

Rational quotient_minus_one(const Int& num, const Int& den, const char* who) {
    if (den == 0) throw InvalidArgument(std::string(who) + ": denominator residue is zero");
    return make_rational(num - den, den);
}

} // namespace

Rational root_arith(const Int& a, unsigned long n, unsigned long k) {
    if (a <= 1) throw InvalidArgument("root_arith: a must be > 1");
    if (n < 1 || k < 1) throw InvalidArgument("root_arith: n and k must be >= 1");
    const Int base = arith_base(n, k);
    const auto [num, den] = root_residues(a, n, base, Int(k) * n);
    return quotient_minus_one(num, den, "root_arith");
}

Rational root_arith_reduced(const Int& a, unsigned long n, unsigned long k, const Int& c) {
    if (a <= 1) throw InvalidArgument("root_arith_reduced: a must be > 1");
    if (n < 1 || k < 1) throw InvalidArgument("root_arith_reduced: n and k must be >= 1");
    if (c < -1) throw InvalidArgument("root_arith_reduced: c must be >= -1");
    const Int base = arith_base(n, k);
    const Int second_modulus = base - c;
    if (second_modulus <= 1)
        throw InvalidArgument("root_arith_reduced: k^(kn) - c must exceed 1");
    const auto [num, den] = root_residues(a, n, base, Int(k) * n);
    return quotient_minus_one(mod_canonical(num, second_modulus),
                              mod_canonical(den, second_modulus), "root_arith_reduced");
}

Int exact_floor_root(const Int& a, unsigned long n) {
    if (a < 1) throw InvalidArgument("exact_floor_root: a must be >= 1");
    if (n < 1) throw InvalidArgument("exact_floor_root: n must be >= 1");
    if (n == 1) return a;
    const unsigned long bits = mpz_sizeinbase(a.get_mpz_t(), 2);
    Int lo = 1;
    Int hi = Int(1) << (bits / n + 1); // hi^n >= 2^(bits+1) > a
    // invariant: lo^n <= a < hi^n
    while (hi - lo > 1) {
        const Int mid = (lo + hi) >> 1;
        if (pow_int(mid, n) <= a)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

namespace {

Int conjecture_exponent(const Int& a, unsigned long n) {
    return 2 * a * n;
}

Int conjecture_formula_value(const Int& a, unsigned long n, std::size_t* modulus_digits = nullptr) {
    const Int K = conjecture_exponent(a, n);
    if (!K.fits_ulong_p()) throw BudgetExceeded("conjecture exponent 2*a*n overflows");
    const Int base = pow_int(a, K.get_ui());
    if (modulus_digits) *modulus_digits = decimal_digits(pow_int(base, n) - a);
    const auto [num, den] = root_residues(a, n, base, K);
    if (den == 0) throw InvalidArgument("conjecture_floor_root: denominator residue is zero");
    // floor(N/D - 1) = floor((N - D) / D), exactly
    Int q;
    const Int diff = num - den;
    mpz_fdiv_q(q.get_mpz_t(), diff.get_mpz_t(), den.get_mpz_t());
    return q;
}

} // namespace

Int conjecture_floor_root(const Int& a, unsigned long n) {
    if (a <= 2) throw PreconditionViolated("a > 2");
    if (n <= 1) throw PreconditionViolated("n > 1");
    if (n > floor_log2(a) + 1) throw PreconditionViolated("n <= floor(log2(a)) + 1");
    const Int r = exact_floor_root(a, n);
    if (pow_int(r, n) == a)
        throw PerfectPower("conjecture_floor_root: " + a.get_str() + " = " + r.get_str() + "^" +
                           std::to_string(n));
    return conjecture_formula_value(a, n);
}

Int root_reference_scaled(const Int& a, unsigned long n, std::size_t precision) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, precision * n);
    return exact_floor_root(a * scale, n);
}

Rational root_error(const Rational& approximant, const Int& a, unsigned long n,
                    std::size_t precision) {
    const Int ref = root_reference_scaled(a, n, precision);
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, precision);
    return approximant - make_rational(ref, scale);
}

std::vector<ConvergenceRecord> convergence_scan(const Int& a, unsigned long n, unsigned long k_min,
                                                unsigned long k_max,
                                                const std::vector<Int>& c_values,
                                                const ScanOptions& opts) {
    if (k_min < 1 || k_max < k_min)
        throw InvalidArgument("convergence_scan: need 1 <= k_min <= k_max");
    for (unsigned long k = k_min; k <= k_max; ++k) {
        const double exponent = static_cast<double>(k) * n * n;
        if (estimate_pow_digits(Int(k), exponent) > opts.digit_budget)
            throw BudgetExceeded("convergence_scan: modulus k^(k*n^2) at k=" + std::to_string(k) +
                                 ", n=" + std::to_string(n) + " exceeds the digit budget");
    }

    const std::size_t per_k = 1 + c_values.size();
    const std::size_t count = (k_max - k_min + 1) * per_k;
    std::vector<ConvergenceRecord> records(count);
    const Int reference = root_reference_scaled(a, n, opts.precision);
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, opts.precision);
    const Rational exact_root = make_rational(reference, scale);

    parallel_for_index(k_max - k_min + 1, opts.jobs, [&](std::size_t idx) {
        const unsigned long k = k_min + idx;
        const double t0 = now_ms();
        const Int base = arith_base(n, k);
        Int modulus = pow_int(base, n) - a;
        const auto [num, den] = root_residues(a, n, base, Int(k) * n);
        const std::size_t modulus_digits = decimal_digits(modulus);

        auto fill = [&](ConvergenceRecord& rec, const Rational& approx, std::optional<Int> c,
                        const char* variant, std::size_t digits, double t_begin) {
            rec.a = a;
            rec.n = n;
            rec.k = k;
            rec.c = std::move(c);
            rec.variant = variant;
            rec.approximant = approx;
            rec.value_decimal = to_decimal(approx, opts.precision);
            rec.error_decimal = to_decimal(approx - exact_root, opts.precision);
            rec.modulus_digits = digits;
            rec.elapsed_ms = now_ms() - t_begin;
        };

        ConvergenceRecord& plain = records[idx * per_k];
        fill(plain, quotient_minus_one(num, den, "convergence_scan"), std::nullopt, "arith",
             modulus_digits, t0);

        for (std::size_t ci = 0; ci < c_values.size(); ++ci) {
            const double t1 = now_ms();
            const Int& c = c_values[ci];
            if (c < -1) throw InvalidArgument("convergence_scan: c must be >= -1");
            const Int second = base - c;
            if (second <= 1) throw InvalidArgument("convergence_scan: k^(kn) - c must exceed 1");
            const Rational approx =
                quotient_minus_one(mod_canonical(num, second), mod_canonical(den, second),
                                   "convergence_scan");
            fill(records[idx * per_k + 1 + ci], approx, c, "arith_reduced",
                 decimal_digits(second), t1);
        }
    });
    return records;
}

ConjectureScanReport conjecture_scan(const Int& a_max, const ScanOptions& opts) {
    if (a_max < 3) throw InvalidArgument("conjecture_scan: a_max must be >= 3");

    struct Pair {
        Int a;
        unsigned long n;
    };
    std::vector<Pair> pairs;
    for (Int a = 3; a <= a_max; ++a)
        for (unsigned long n = 2; n <= floor_log2(a) + 1; ++n) pairs.push_back({a, n});

    ConjectureScanReport report;
    report.records.resize(pairs.size());

    parallel_for_index(pairs.size(), opts.jobs, [&](std::size_t i) {
        const Int& a = pairs[i].a;
        const unsigned long n = pairs[i].n;
        ConjectureRecord& rec = report.records[i];
        const double t0 = now_ms();
        rec.a = a;
        rec.n = n;
        rec.k = conjecture_exponent(a, n);

        const double exponent = 2.0 * a.get_d() * n * n;
        const std::size_t est = estimate_pow_digits(a, exponent);
        if (est > opts.digit_budget) {
            rec.skipped_reason = "budget_exceeded";
            rec.modulus_digits = est;
            rec.elapsed_ms = now_ms() - t0;
            return;
        }

        const Int exact = exact_floor_root(a, n);
        rec.exact_value = exact;
        if (pow_int(exact, n) == a) {
            rec.skipped_reason = "perfect_power";
            rec.modulus_digits = est;
            rec.elapsed_ms = now_ms() - t0;
            return;
        }

        std::size_t modulus_digits = 0;
        rec.formula_value = conjecture_formula_value(a, n, &modulus_digits);
        rec.matched = (*rec.formula_value == exact);
        rec.modulus_digits = modulus_digits;
        rec.elapsed_ms = now_ms() - t0;
    });

    for (const ConjectureRecord& rec : report.records) {
        if (!rec.skipped_reason.empty())
            ++report.skips;
        else if (rec.matched.value_or(false))
            ++report.matches;
        else
            ++report.mismatches;
        if (rec.modulus_digits > report.max_modulus_digits)
            report.max_modulus_digits = rec.modulus_digits;
    }
    return report;
}

} // namespace ringterm
