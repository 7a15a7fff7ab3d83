#include "ringterm/sequences.hpp"

#include <utility>

#include "ringterm/errors.hpp"

namespace ringterm {

CRecurrence::CRecurrence(std::vector<Int> coeffs, std::vector<Int> initials)
    : coeffs_(std::move(coeffs)), initials_(std::move(initials)) {
    if (coeffs_.empty()) throw InvalidArgument("CRecurrence: order must be >= 1");
    if (initials_.size() != coeffs_.size())
        throw InvalidArgument("CRecurrence: need exactly one initial value per coefficient");
}

CRecurrence CRecurrence::all_ones(std::vector<Int> coeffs) {
    std::vector<Int> ones(coeffs.size(), Int(1));
    return {std::move(coeffs), std::move(ones)};
}

CRecurrence CRecurrence::pell() { return {{Int(1), Int(2)}, {Int(0), Int(1)}}; }

bool CRecurrence::all_ones_initials() const {
    for (const Int& v : initials_)
        if (v != 1) return false;
    return true;
}

MonicModulus CRecurrence::characteristic_modulus() const {
    return {order(), characteristic_body()};
}

Int CRecurrence::coefficient_abs_sum() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += abs(c);
    return s;
}

Int oracle_term(const CRecurrence& rec, unsigned long n) {
    const std::size_t d = rec.order();
    if (n < d) return rec.initials()[n];
    std::vector<Int> window = rec.initials(); // window[j] = A(m - d + j)
    for (unsigned long m = d; m <= n; ++m) {
        Int next = 0;
        for (std::size_t j = 0; j < d; ++j) next += rec.coeffs()[j] * window[j];
        for (std::size_t j = 0; j + 1 < d; ++j) window[j] = std::move(window[j + 1]);
        window[d - 1] = std::move(next);
    }
    return window[d - 1];
}

Int ring_term(const CRecurrence& rec, unsigned long n) {
    if (!rec.all_ones_initials())
        throw UnsupportedInitials("ring_term: all initial values must equal 1");
    const Poly image = ring_pow(Poly::x(), Int(n), rec.characteristic_modulus());
    return eval_at(image, 1);
}

namespace {

void check_synthesizable(const CRecurrence& rec, unsigned long n) {
    if (n < 1) throw InvalidArgument("synth_formula: n must be >= 1");
    if (!rec.all_ones_initials())
        throw UnsupportedInitials("synth_formula: all initial values must equal 1");
    bool any_nonzero = false;
    for (const Int& c : rec.coeffs()) {
        if (c < 0)
            throw UnsupportedCoefficients(
                "synth_formula: negative coefficient " + c.get_str() +
                " (canonical residues recover the term only for nonnegative coefficients)");
        if (c != 0) any_nonzero = true;
    }
    if (!any_nonzero)
        throw UnsupportedCoefficients("synth_formula: all coefficients are zero");
}

} // namespace

ArithmeticTerm synth_formula_with_base(const CRecurrence& rec, unsigned long n, const Int& base) {
    check_synthesizable(rec, n);
    const Int ring_modulus = base == 0 ? Int(0) : rec.characteristic_modulus().eval(base);
    if (base - 1 < 1 || ring_modulus <= 1)
        throw DegenerateModulus("synth_formula: modulus collapses for base " + base.get_str());
    using T = ArithmeticTerm;
    return T::mod(T::mod(T::pow(T::constant(base), T::constant(Int(n))), T::constant(ring_modulus)),
                  T::constant(base - 1));
}

ArithmeticTerm synth_formula(const CRecurrence& rec, unsigned long n, BaseStrategy strategy) {
    check_synthesizable(rec, n);
    const Int coeff_sum = rec.coefficient_abs_sum();
    Int base;
    switch (strategy) {
        case BaseStrategy::OracleMinimal:
            // Smallest base with both reductions provably lossless: the
            // remainder of x^n has nonnegative coefficients summing to A(n),
            // so base >= A(n) + S + 1 keeps its value below the ring modulus,
            // and A(n) < base - 1 keeps the final residue canonical.
            base = oracle_term(rec, n) + coeff_sum + 1;
            break;
        case BaseStrategy::AprioriBound: {
            const Int bound = pow_int(coeff_sum, n) + coeff_sum;
            base = 1;
            while (base <= bound) base <<= 1;
            break;
        }
    }
    return synth_formula_with_base(rec, n, base);
}

Int pell(unsigned long n) {
    if (n < 1) throw InvalidArgument("pell: defined for n > 0 (the final modulus vanishes at 0)");
    const Int b = pow_int(3, n);
    const Int m = b * b - 2;
    return mod_canonical(powmod(b + 1, Int(n - 1), m), b - 1);
}

Int pell_binomial_sum(unsigned long n) {
    Int sum = 0;
    Int binom = 1; // C(n, k), updated incrementally
    for (unsigned long k = 0; k <= n; ++k) {
        sum += binom << (k / 2);
        binom *= n - k;
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
    }
    return sum;
}

Int central_binomial(unsigned long n) {
    if (n < 1)
        throw InvalidArgument(
            "central_binomial: defined for n > 0 (the final modulus vanishes at 0)");
    const Int b = pow_int(4, n);
    const Int m = pow_int(b, n + 1) + 1;
    return mod_canonical(powmod(b + 1, Int(2 * n), m), b - 1);
}

Int binomial_oracle(unsigned long n, unsigned long k) {
    if (k > n) throw InvalidArgument("binomial_oracle: k must not exceed n");
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        r *= n - k + i;
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
    }
    return r;
}

} // namespace ringterm
