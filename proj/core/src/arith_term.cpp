#include "ringterm/arith_term.hpp"

#include <cctype>
#include <utility>

#include "ringterm/errors.hpp"

namespace ringterm {

ArithmeticTerm::ArithmeticTerm(Kind kind, ArithmeticTerm lhs, ArithmeticTerm rhs) : kind_(kind) {
    args_.reserve(2);
    args_.push_back(std::move(lhs));
    args_.push_back(std::move(rhs));
}

ArithmeticTerm ArithmeticTerm::constant(Int v) { return {Kind::Constant, std::move(v)}; }

ArithmeticTerm ArithmeticTerm::pow(ArithmeticTerm base, ArithmeticTerm exponent) {
    return {Kind::Pow, std::move(base), std::move(exponent)};
}

ArithmeticTerm ArithmeticTerm::mod(ArithmeticTerm value, ArithmeticTerm modulus) {
    return {Kind::Mod, std::move(value), std::move(modulus)};
}

ArithmeticTerm ArithmeticTerm::floor_div(ArithmeticTerm num, ArithmeticTerm den) {
    return {Kind::FloorDiv, std::move(num), std::move(den)};
}

ArithmeticTerm ArithmeticTerm::add(ArithmeticTerm lhs, ArithmeticTerm rhs) {
    return {Kind::Add, std::move(lhs), std::move(rhs)};
}

ArithmeticTerm ArithmeticTerm::sub(ArithmeticTerm lhs, ArithmeticTerm rhs) {
    return {Kind::Sub, std::move(lhs), std::move(rhs)};
}

const Int& ArithmeticTerm::value() const {
    if (kind_ != Kind::Constant) throw InvalidArgument("value() on a non-constant node");
    return value_;
}

const ArithmeticTerm& ArithmeticTerm::lhs() const {
    if (args_.size() != 2) throw InvalidArgument("lhs() on a leaf node");
    return args_[0];
}

const ArithmeticTerm& ArithmeticTerm::rhs() const {
    if (args_.size() != 2) throw InvalidArgument("rhs() on a leaf node");
    return args_[1];
}

bool ArithmeticTerm::operator==(const ArithmeticTerm& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::Constant) return value_ == o.value_;
    return args_[0] == o.args_[0] && args_[1] == o.args_[1];
}

namespace {

const char* op_text(ArithmeticTerm::Kind k) {
    switch (k) {
        case ArithmeticTerm::Kind::Pow: return "^";
        case ArithmeticTerm::Kind::Mod: return " mod ";
        case ArithmeticTerm::Kind::FloorDiv: return " div ";
        case ArithmeticTerm::Kind::Add: return " + ";
        case ArithmeticTerm::Kind::Sub: return " - ";
        default: return "";
    }
}

} // namespace

std::string ArithmeticTerm::to_string() const {
    if (kind_ == Kind::Constant) return value_.get_str();
    return "(" + args_[0].to_string() + op_text(kind_) + args_[1].to_string() + ")";
}

// ---------------------------------------------------------------------------
// Parsing: precedence climbing over {+,- | mod,div | ^}, '^' right
// associative, everything else left associative. Accepts any spacing, not
// just the canonical fully parenthesized form.
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool eat_word(std::string_view w) {
        skip_ws();
        if (s.substr(pos, w.size()) != w) return false;
        std::size_t after = pos + w.size();
        if (after < s.size() && std::isalnum(static_cast<unsigned char>(s[after]))) return false;
        pos = after;
        return true;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw InvalidArgument("ArithmeticTerm::parse: " + why + " at offset " +
                              std::to_string(pos));
    }

    ArithmeticTerm parse_integer(bool negative) {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        Int v(std::string(s.substr(start, pos - start)), 10);
        if (negative) v = -v;
        return ArithmeticTerm::constant(std::move(v));
    }

    ArithmeticTerm parse_primary() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            ArithmeticTerm t = parse_expr(0);
            if (!eat(')')) fail("expected ')'");
            return t;
        }
        if (eat('-')) return parse_integer(true);
        return parse_integer(false);
    }

    // precedence: 1 = add/sub, 2 = mod/div, 3 = pow
    ArithmeticTerm parse_expr(int min_prec) {
        ArithmeticTerm lhs = parse_primary();
        for (;;) {
            skip_ws();
            ArithmeticTerm::Kind kind;
            int prec;
            if (min_prec <= 3 && eat('^')) {
                kind = ArithmeticTerm::Kind::Pow;
                prec = 3;
            } else if (min_prec <= 2 && eat_word("mod")) {
                kind = ArithmeticTerm::Kind::Mod;
                prec = 2;
            } else if (min_prec <= 2 && eat_word("div")) {
                kind = ArithmeticTerm::Kind::FloorDiv;
                prec = 2;
            } else if (min_prec <= 1 && eat('+')) {
                kind = ArithmeticTerm::Kind::Add;
                prec = 1;
            } else if (min_prec <= 1 && eat('-')) {
                kind = ArithmeticTerm::Kind::Sub;
                prec = 1;
            } else {
                return lhs;
            }
            // right associative for '^', left for the rest
            ArithmeticTerm rhs = parse_expr(kind == ArithmeticTerm::Kind::Pow ? prec : prec + 1);
            switch (kind) {
                case ArithmeticTerm::Kind::Pow: lhs = ArithmeticTerm::pow(std::move(lhs), std::move(rhs)); break;
                case ArithmeticTerm::Kind::Mod: lhs = ArithmeticTerm::mod(std::move(lhs), std::move(rhs)); break;
                case ArithmeticTerm::Kind::FloorDiv: lhs = ArithmeticTerm::floor_div(std::move(lhs), std::move(rhs)); break;
                case ArithmeticTerm::Kind::Add: lhs = ArithmeticTerm::add(std::move(lhs), std::move(rhs)); break;
                case ArithmeticTerm::Kind::Sub: lhs = ArithmeticTerm::sub(std::move(lhs), std::move(rhs)); break;
                default: fail("unreachable");
            }
        }
    }
};

} // namespace

ArithmeticTerm ArithmeticTerm::parse(std::string_view text) {
    Parser p{text};
    ArithmeticTerm t = p.parse_expr(0);
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return t;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

Int eval_node(const ArithmeticTerm& t, const std::string& path);

Int eval_pow_plain(const ArithmeticTerm& t, const std::string& path) {
    const Int base = eval_node(t.lhs(), path + ".lhs");
    const Int exp = eval_node(t.rhs(), path + ".rhs");
    if (exp < 0) throw InvalidArgument("negative exponent at " + path);
    if (!exp.fits_ulong_p())
        throw InvalidArgument("exponent too large to expand outside a modulus at " + path);
    return pow_int(base, exp.get_ui());
}

Int eval_node(const ArithmeticTerm& t, const std::string& path) {
    using Kind = ArithmeticTerm::Kind;
    switch (t.kind()) {
        case Kind::Constant: return t.value();
        case Kind::Pow: return eval_pow_plain(t, path);
        case Kind::Mod: {
            const Int m = eval_node(t.rhs(), path + ".rhs");
            if (m == 0) throw DivisionByZero(path + ".rhs");
            if (t.lhs().kind() == Kind::Pow) {
                // fused modular exponentiation
                const Int base = eval_node(t.lhs().lhs(), path + ".lhs.lhs");
                const Int exp = eval_node(t.lhs().rhs(), path + ".lhs.rhs");
                if (exp < 0) throw InvalidArgument("negative exponent at " + path + ".lhs");
                return powmod(base, exp, m);
            }
            return mod_canonical(eval_node(t.lhs(), path + ".lhs"), m);
        }
        case Kind::FloorDiv: {
            const Int den = eval_node(t.rhs(), path + ".rhs");
            if (den == 0) throw DivisionByZero(path + ".rhs");
            const Int num = eval_node(t.lhs(), path + ".lhs");
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return q;
        }
        case Kind::Add: return eval_node(t.lhs(), path + ".lhs") + eval_node(t.rhs(), path + ".rhs");
        case Kind::Sub: return eval_node(t.lhs(), path + ".lhs") - eval_node(t.rhs(), path + ".rhs");
    }
    throw InvalidArgument("corrupt node kind at " + path);
}

} // namespace

Int eval_formula(const ArithmeticTerm& t) { return eval_node(t, "$"); }

} // namespace ringterm
