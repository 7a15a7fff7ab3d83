#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ringterm/arith_term.hpp"
#include "ringterm/errors.hpp"
#include "ringterm/sequences.hpp"

using namespace ringterm;
using T = ArithmeticTerm;

TEST_CASE("evaluation basics") {
    CHECK(eval_formula(T::mod(T::pow(T::constant(3), T::constant(4)), T::constant(10))) == 1);
    CHECK(eval_formula(T::floor_div(T::constant(7), T::constant(2))) == 3);
    CHECK(eval_formula(T::floor_div(T::constant(-7), T::constant(2))) == -4);
    CHECK(eval_formula(T::sub(T::constant(3), T::constant(10))) == -7);
    CHECK(eval_formula(T::add(T::constant(3), T::constant(10))) == 13);
    // canonical residue even for negative left-hand sides
    CHECK(eval_formula(T::mod(T::constant(-3), T::constant(10))) == 7);
}

TEST_CASE("the Pell closed form at n = 5 as a parsed term") {
    // 3^5 = 243: ((244^4 mod 59047) mod 242)
    T t = T::parse("((244^4 mod 59047) mod 242)");
    CHECK(eval_formula(t) == 29);
}

TEST_CASE("modular exponentiation is fused") {
    // 2^(2^80) mod 1009 is computable only through the fused path
    T huge_exp = T::pow(T::constant(2), T::constant(Int(1) << 80));
    CHECK_THROWS_AS(eval_formula(huge_exp), InvalidArgument);
    T fused = T::mod(huge_exp, T::constant(1009));
    CHECK(eval_formula(fused) == powmod(2, Int(1) << 80, 1009));
}

TEST_CASE("division by zero reports the node path") {
    try {
        eval_formula(T::mod(T::constant(5), T::constant(0)));
        FAIL("expected DivisionByZero");
    } catch (const DivisionByZero& e) {
        CHECK(e.node_path == "$.rhs");
    }
    CHECK_THROWS_AS(eval_formula(T::floor_div(T::constant(5), T::constant(0))), DivisionByZero);
    CHECK_THROWS_AS(
        eval_formula(T::add(T::constant(1), T::floor_div(T::constant(5), T::constant(0)))),
        DivisionByZero);
}

TEST_CASE("canonical text form") {
    T t = T::mod(T::mod(T::pow(T::constant(92), T::constant(10)), T::constant(8371)),
                 T::constant(91));
    CHECK(t.to_string() == "(((92^10) mod 8371) mod 91)");
    CHECK(T::parse(t.to_string()) == t);
    CHECK(T::constant(-17).to_string() == "-17");
    CHECK(T::parse("-17") == T::constant(-17));
}

TEST_CASE("parser accepts uncanonical spacing and precedence") {
    CHECK(T::parse("1+2 mod 5") == T::add(T::constant(1), T::mod(T::constant(2), T::constant(5))));
    CHECK(T::parse("2^3^2") ==
          T::pow(T::constant(2), T::pow(T::constant(3), T::constant(2))));
    CHECK(T::parse("10 div 2 div 2") ==
          T::floor_div(T::floor_div(T::constant(10), T::constant(2)), T::constant(2)));
    CHECK_THROWS_AS(T::parse("(1 + 2"), InvalidArgument);
    CHECK_THROWS_AS(T::parse("1 + "), InvalidArgument);
    CHECK_THROWS_AS(T::parse("modulus"), InvalidArgument);
    CHECK_THROWS_AS(T::parse("1 2"), InvalidArgument);
}

namespace {

T random_term(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<long> leaf(-99, 999);
    if (depth == 0 || kind(rng) == 0) return T::constant(Int(leaf(rng)));
    T a = random_term(rng, depth - 1);
    T b = random_term(rng, depth - 1);
    switch (kind(rng) % 5) {
        case 0: return T::pow(std::move(a), std::move(b));
        case 1: return T::mod(std::move(a), std::move(b));
        case 2: return T::floor_div(std::move(a), std::move(b));
        case 3: return T::add(std::move(a), std::move(b));
        default: return T::sub(std::move(a), std::move(b));
    }
}

} // namespace

TEST_CASE("print/parse round-trip on random trees") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 500; ++i) {
        T t = random_term(rng, 4);
        CHECK(T::parse(t.to_string()) == t);
    }
}

TEST_CASE("synthesized formulas round-trip through text") {
    auto rec = CRecurrence::all_ones({Int(1), Int(1)});
    for (unsigned long n : {1ul, 2ul, 7ul, 10ul}) {
        T t = synth_formula(rec, n, BaseStrategy::AprioriBound);
        CHECK(T::parse(t.to_string()) == t);
        CHECK(eval_formula(T::parse(t.to_string())) == oracle_term(rec, n));
    }
}
