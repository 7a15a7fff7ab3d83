#include "ringterm/kronecker.hpp"

#include "ringterm/errors.hpp"

namespace ringterm {

SubstitutionParams::SubstitutionParams(Int gamma, unsigned long k, Int b)
    : gamma_(std::move(gamma)), k_(k), b_(std::move(b)) {
    if (gamma_ < 1) throw InvalidArgument("SubstitutionParams: gamma must be >= 1");
    if (k_ < 1) throw InvalidArgument("SubstitutionParams: k must be >= 1");
    if (b_ < 1) throw InvalidArgument("SubstitutionParams: b must be >= 1");
    base_ = pow_int(gamma_, k_);
    if (base_ == b_) throw InvalidArgument("SubstitutionParams: gamma^k must differ from b");
}

Int kron_encode(const Poly& p, const Int& base) {
    if (base < 1) throw InvalidArgument("kron_encode: base must be >= 1");
    for (const Int& c : p.coeffs())
        if (c < 0 || c >= base)
            throw CoefficientOutOfRange("kron_encode: coefficient " + c.get_str() +
                                        " outside [0, " + base.get_str() + ")");
    return eval_at(p, base);
}

Poly kron_decode(const Int& v, const Int& base) {
    if (base < 2) throw InvalidArgument("kron_decode: base must be >= 2");
    if (v < 0) throw InvalidArgument("kron_decode: value must be >= 0");
    std::vector<Int> digits;
    Int rest = v;
    while (rest != 0) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
        digits.push_back(std::move(r));
        rest = std::move(q);
    }
    return Poly(std::move(digits));
}

Int extract_coeff(const Poly& f, std::size_t k, const Int& b) {
    auto deg = f.degree();
    if (!deg || *deg < 1) throw InvalidArgument("extract_coeff: f must be non-constant");
    if (b < 1) throw InvalidArgument("extract_coeff: b must be >= 1");
    if (k > *deg) throw InvalidArgument("extract_coeff: k exceeds deg(f)");
    Int maxc = 0;
    for (const Int& c : f.coeffs()) {
        if (c < 0) throw InvalidArgument("extract_coeff: coefficients must be >= 0");
        if (c > maxc) maxc = c;
    }
    const Int fb = eval_at(f, b);
    if (fb == 0) throw InvalidBase("extract_coeff: f(b) = 0");
    if (fb <= maxc)
        throw InvalidBase("extract_coeff: f(b) = " + fb.get_str() +
                          " does not exceed the largest coefficient " + maxc.get_str());
    const Int ffb = eval_at(f, fb);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), ffb.get_mpz_t(), pow_int(fb, k).get_mpz_t());
    return mod_canonical(q, fb);
}

namespace {

Int integer_side(const Poly& f, const SubstitutionParams& params, const Int& ring_modulus) {
    const Int fB = eval_at(f, params.base());
    const Int reduced = powmod(fB, Int(params.k()), ring_modulus);
    return mod_canonical(reduced, params.base() - params.b());
}

} // namespace

Int eval_substitution(const Poly& f, const MonicModulus& m, const SubstitutionParams& params) {
    const auto fail = [](const char* which) { throw PreconditionViolated(which); };

    if (auto deg = f.degree(); !deg || *deg < 1) fail("f is non-constant");

    const Int& B = params.base();
    if (B <= params.b()) fail("gamma^k > b");

    const Int M = pow_int(B, m.degree()) - eval_at(m.body(), B);
    if (M < 1) fail("ring modulus gamma^(k*d) - body(gamma^k) is positive");

    const Poly r = ring_pow(f, Int(params.k()), m);

    const Int rB = eval_at(r, B);
    if (rB < 0 || rB >= M) fail("gamma^k encodes the coefficients of r(x) losslessly");

    const Int rb = eval_at(r, params.b());
    if (abs(rb) >= B) fail("gamma^k > |r(b)|");

    const Int final_modulus = B - params.b();
    if (rb < 0 || rb >= final_modulus) fail("r(b) lies in [0, gamma^k - b)");
    if (rb == 0) fail("r(b) is nonzero modulo gamma^k - b");

    const Int from_integers = integer_side(f, params, M);
    if (from_integers != rb)
        throw TheoremMismatch("substitution identity: integer side " + from_integers.get_str() +
                              " != polynomial side " + rb.get_str());
    return from_integers;
}

Int eval_substitution_unchecked(const Poly& f, const MonicModulus& m,
                                const SubstitutionParams& params) {
    const Int& B = params.base();
    const Int M = pow_int(B, m.degree()) - eval_at(m.body(), B);
    if (M == 0) throw InvalidArgument("eval_substitution_unchecked: ring modulus is zero");
    return integer_side(f, params, M);
}

} // namespace ringterm
