#include "ringterm/poly.hpp"

#include <algorithm>
#include <utility>

#include "ringterm/errors.hpp"

namespace ringterm {

namespace {
const Int kZero = 0;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Int c) {
    std::vector<Int> v;
    if (c != 0) v.push_back(std::move(c));
    return Poly(std::move(v));
}

Poly Poly::x() { return monomial(1); }

Poly Poly::monomial(std::size_t degree, Int coeff) {
    std::vector<Int> v;
    if (coeff != 0) {
        v.resize(degree + 1, kZero);
        v[degree] = std::move(coeff);
    }
    return Poly(std::move(v));
}

std::optional<std::size_t> Poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

const Int& Poly::coeff(std::size_t i) const {
    if (i >= c_.size()) return kZero;
    return c_[i];
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), kZero);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Int> v(c_);
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Int> v(c_.size() + o.c_.size() - 1, kZero);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(v));
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Int& c = c_[i];
        if (c == 0) continue;
        Int a = abs(c);
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0 || a != 1) out += a.get_str();
        if (i > 0) {
            if (a != 1) out += '*';
            out += 'x';
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

MonicModulus::MonicModulus(std::size_t degree, Poly body) : d_(degree), body_(std::move(body)) {
    if (d_ < 1) throw InvalidArgument("MonicModulus: degree must be >= 1");
    if (auto bd = body_.degree(); bd && *bd >= d_)
        throw InvalidArgument("MonicModulus: body degree must be below the modulus degree");
}

Int MonicModulus::eval(const Int& b) const {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(d_));
    return r - eval_at(body_, b);
}

Poly MonicModulus::to_poly() const { return Poly::monomial(d_) - body_; }

Poly poly_rem(const Poly& p, const MonicModulus& m) {
    const std::size_t d = m.degree();
    std::vector<Int> c = p.coeffs();
    if (c.size() <= d) return Poly(std::move(c));
    const std::vector<Int>& body = m.body().coeffs();
    // substitute x^t = x^(t-d) * body(x) from the top degree down
    for (std::size_t t = c.size(); t-- > d;) {
        if (c[t] == 0) continue;
        Int lead = std::move(c[t]);
        c[t] = 0;
        for (std::size_t j = 0; j < body.size(); ++j)
            c[t - d + j] += lead * body[j];
    }
    c.resize(d);
    return Poly(std::move(c));
}

Poly ring_pow(const Poly& base, const Int& e, const MonicModulus& m) {
    if (e < 0) throw InvalidArgument("ring_pow: exponent must be >= 0");
    Poly acc = Poly::constant(1);
    if (e == 0) return acc;
    const Poly b = poly_rem(base, m);
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        acc = poly_rem(acc * acc, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = poly_rem(acc * b, m);
    }
    return acc;
}

Int eval_at(const Poly& p, const Int& b) {
    Int acc = 0;
    const std::vector<Int>& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= b;
        acc += c[i];
    }
    return acc;
}

} // namespace ringterm
