// Command-line front end: closed-form evaluation and verification for
// C-recursive sequences, n-th-root convergence scans, the floor-root
// conjecture scanner, and timing comparisons.
//
// Exit codes: 0 = success / all rows match, 1 = verification mismatch,
// 2 = usage or precondition error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ringterm/arith_term.hpp"
#include "ringterm/errors.hpp"
#include "ringterm/kronecker.hpp"
#include "ringterm/roots.hpp"
#include "ringterm/sequences.hpp"

using nlohmann::json;
using namespace ringterm;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

struct Range {
    unsigned long lo = 0;
    unsigned long hi = 0;
};

// --n wins over --n-min/--n-max; the range must be nonempty
int resolve_range(const CLI::Option* single, unsigned long n, unsigned long lo, unsigned long hi,
                  Range& out) {
    if (single->count() > 0) {
        out = {n, n};
        return 0;
    }
    if (lo > hi) {
        std::cerr << "error: empty range: --n-min " << lo << " > --n-max " << hi << "\n";
        return 2;
    }
    out = {lo, hi};
    return 0;
}

json base_record(const char* type) {
    json j;
    j["type"] = type;
    return j;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// ---------------------------------------------------------------------------
// pell / cbc: formula vs oracle tables
// ---------------------------------------------------------------------------

int run_sequence_table(const char* name, const Range& range, bool json_lines,
                       const std::function<Int(unsigned long)>& formula,
                       const std::function<Int(unsigned long)>& oracle) {
    bool all_match = true;
    if (!json_lines)
        std::cout << "n\tformula\toracle\tmatch\n";
    for (unsigned long n = range.lo; n <= range.hi; ++n) {
        const double t0 = now_ms();
        const Int value = formula(n);
        const Int reference = oracle(n);
        const bool matched = value == reference;
        const double elapsed = now_ms() - t0;
        all_match = all_match && matched;
        if (json_lines) {
            json j = base_record(name);
            j["n"] = n;
            j["value"] = value.get_str();
            j["oracle"] = reference.get_str();
            j["matched"] = matched;
            j["elapsed_ms"] = elapsed;
            emit(j);
        } else {
            std::cout << n << "\t" << value << "\t" << reference << "\t"
                      << (matched ? "yes" : "MISMATCH") << "\n";
        }
    }
    if (!json_lines)
        std::cout << (all_match ? "all rows match" : "MISMATCH detected") << "\n";
    return all_match ? 0 : 1;
}

// ---------------------------------------------------------------------------
// seq: formula synthesis for a user recurrence
// ---------------------------------------------------------------------------

std::vector<Int> parse_coeff_list(const std::string& text) {
    std::vector<Int> high_to_low;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InvalidArgument("empty coefficient in --coeffs");
        high_to_low.emplace_back(item);
    }
    if (high_to_low.empty()) throw InvalidArgument("--coeffs needs at least one coefficient");
    // written order is c[d-1],...,c[0]; storage order is c[0..d-1]
    std::reverse(high_to_low.begin(), high_to_low.end());
    return high_to_low;
}

int run_seq(const std::string& coeffs_text, const Range& range, const std::string& strategy_name,
            const std::string& exponent_name, bool json_lines) {
    const BaseStrategy strategy = strategy_name == "apriori" ? BaseStrategy::AprioriBound
                                                             : BaseStrategy::OracleMinimal;
    const bool shifted = exponent_name == "n-1";
    const CRecurrence rec = CRecurrence::all_ones(parse_coeff_list(coeffs_text));

    bool all_match = true;
    for (unsigned long n = range.lo; n <= range.hi; ++n) {
        if (shifted && n < 1) throw InvalidArgument("--exponent n-1 needs n >= 1");
        // with the shifted convention the written exponent is n-1 and the
        // term equals the sequence read as starting at index 1
        const unsigned long target = shifted ? n - 1 : n;
        const double t0 = now_ms();
        const ArithmeticTerm term = synth_formula(rec, target, strategy);
        const Int value = eval_formula(term);
        const Int reference = oracle_term(rec, target);
        const bool matched = value == reference;
        const double elapsed = now_ms() - t0;
        all_match = all_match && matched;
        if (json_lines) {
            json j = base_record("seq");
            j["n"] = n;
            j["exponent"] = exponent_name;
            j["term"] = term.to_string();
            j["value"] = value.get_str();
            j["oracle"] = reference.get_str();
            j["strategy"] = strategy_name;
            j["matched"] = matched;
            j["elapsed_ms"] = elapsed;
            emit(j);
        } else {
            std::cout << "n=" << n << "  " << term.to_string() << " = " << value
                      << "  oracle=" << reference << "  " << (matched ? "ok" : "MISMATCH")
                      << "\n";
        }
    }
    return all_match ? 0 : 1;
}

// ---------------------------------------------------------------------------
// root: convergence records for both arithmetic variants
// ---------------------------------------------------------------------------

json convergence_json(const ConvergenceRecord& r) {
    json j = base_record("root");
    j["a"] = r.a.get_str();
    j["n"] = r.n;
    j["k"] = r.k;
    j["c"] = r.c ? json(r.c->get_str()) : json(nullptr);
    j["variant"] = r.variant;
    j["value_decimal"] = r.value_decimal;
    j["error_decimal"] = r.error_decimal;
    j["matched"] = nullptr;
    j["skipped_reason"] = nullptr;
    j["modulus_digits"] = r.modulus_digits;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

int run_root(const Int& a, unsigned long n, unsigned long k_min, unsigned long k_max,
             const std::vector<long>& c_raw, const ScanOptions& opts, bool json_lines) {
    std::vector<Int> c_values(c_raw.begin(), c_raw.end());
    auto records = convergence_scan(a, n, k_min, k_max, c_values, opts);
    if (!json_lines)
        std::cout << "variant\tk\tc\tvalue\terror\tmodulus_digits\n";
    for (const auto& r : records) {
        if (json_lines) {
            emit(convergence_json(r));
        } else {
            std::cout << r.variant << "\t" << r.k << "\t" << (r.c ? r.c->get_str() : "-") << "\t"
                      << r.value_decimal << "\t" << r.error_decimal << "\t" << r.modulus_digits
                      << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// conjecture: floor-root scan report
// ---------------------------------------------------------------------------

int run_conjecture(const Int& a_max, const ScanOptions& opts, bool json_lines) {
    const ConjectureScanReport report = conjecture_scan(a_max, opts);
    for (const auto& r : report.records) {
        if (json_lines) {
            json j = base_record("conjecture");
            j["a"] = r.a.get_str();
            j["n"] = r.n;
            j["k"] = r.k.get_str();
            j["c"] = nullptr;
            j["variant"] = "conjecture";
            j["value_decimal"] = r.formula_value ? json(r.formula_value->get_str()) : json(nullptr);
            j["exact"] = r.exact_value ? json(r.exact_value->get_str()) : json(nullptr);
            j["error_decimal"] = nullptr;
            j["matched"] = r.matched ? json(*r.matched) : json(nullptr);
            j["skipped_reason"] =
                r.skipped_reason.empty() ? json(nullptr) : json(r.skipped_reason);
            j["modulus_digits"] = r.modulus_digits;
            j["elapsed_ms"] = r.elapsed_ms;
            emit(j);
        } else {
            std::cout << "a=" << r.a << " n=" << r.n;
            if (!r.skipped_reason.empty())
                std::cout << "  skipped (" << r.skipped_reason << ")";
            else
                std::cout << "  formula=" << *r.formula_value << " exact=" << *r.exact_value
                          << (*r.matched ? "  match" : "  MISMATCH");
            std::cout << "  modulus_digits=" << r.modulus_digits << "\n";
        }
    }
    if (json_lines) {
        json j = base_record("summary");
        j["pairs"] = report.records.size();
        j["matches"] = report.matches;
        j["mismatches"] = report.mismatches;
        j["skips"] = report.skips;
        j["max_modulus_digits"] = report.max_modulus_digits;
        emit(j);
    } else {
        std::cout << "pairs=" << report.records.size() << " matches=" << report.matches
                  << " mismatches=" << report.mismatches << " skips=" << report.skips
                  << " max_modulus_digits=" << report.max_modulus_digits << "\n";
    }
    // a mismatch is a reported finding, not a failure
    return 0;
}

// ---------------------------------------------------------------------------
// bench: wall-clock medians, no correctness assertions
// ---------------------------------------------------------------------------

template <typename Fn>
double median_ms(unsigned reps, Fn&& fn) {
    std::vector<double> times;
    times.reserve(reps);
    for (unsigned i = 0; i < reps; ++i) {
        const double t0 = now_ms();
        fn();
        times.push_back(now_ms() - t0);
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

int run_bench(const std::string& suite, unsigned reps, unsigned long n, bool json_lines) {
    std::vector<std::pair<std::string, double>> rows;
    if (suite == "pell") {
        const auto rec = CRecurrence::pell();
        rows.emplace_back("formula", median_ms(reps, [&] { (void)pell(n); }));
        rows.emplace_back("oracle", median_ms(reps, [&] { (void)oracle_term(rec, n); }));
    } else if (suite == "cbc") {
        rows.emplace_back("formula", median_ms(reps, [&] { (void)central_binomial(n); }));
        rows.emplace_back("oracle", median_ms(reps, [&] { (void)binomial_oracle(2 * n, n); }));
    } else if (suite == "substitution") {
        const Poly f = Poly::x() + Poly::constant(1);
        const MonicModulus m(2, Poly::constant(2));
        const SubstitutionParams params(3, n, 1);
        rows.emplace_back("checked",
                          median_ms(reps, [&] { (void)eval_substitution(f, m, params); }));
        rows.emplace_back("unchecked", median_ms(reps, [&] {
                              (void)eval_substitution_unchecked(f, m, params);
                          }));
    } else {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return 2;
    }
    for (const auto& [op, ms] : rows) {
        if (json_lines) {
            json j = base_record("bench");
            j["suite"] = suite;
            j["op"] = op;
            j["n"] = n;
            j["reps"] = reps;
            j["median_ms"] = ms;
            emit(j);
        } else {
            std::cout << suite << "\t" << op << "\tn=" << n << "\tmedian_ms=" << ms << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithmetic-term formulas for C-recursive sequences via quotient rings"};
    app.require_subcommand(1);

    bool json_lines = false;
    std::size_t precision = 30;
    std::size_t budget = 500000;
    unsigned jobs = 0;
    app.add_flag("--json", json_lines, "emit line-delimited JSON records");
    app.add_option("--precision", precision, "decimal digits for values and errors")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", budget, "cap on modulus decimal digits")->check(CLI::PositiveNumber);
    app.add_option("--jobs", jobs, "worker threads for scans (0 = all cores)");

    unsigned long single_n = 0, n_min = 1, n_max = 16;

    // let global flags (--json, --precision, ...) appear after the subcommand
    const auto with_fallthrough = [](CLI::App* sub) {
        sub->fallthrough();
        return sub;
    };

    auto* pell_cmd = with_fallthrough(
        app.add_subcommand("pell", "verify the Pell closed form against the recurrence"));
    auto* pell_n = pell_cmd->add_option("--n", single_n, "single index");
    pell_cmd->add_option("--n-min", n_min, "first index (default 1)");
    pell_cmd->add_option("--n-max", n_max, "last index (default 16)");

    auto* cbc_cmd = with_fallthrough(
        app.add_subcommand("cbc", "verify the central binomial closed form against C(2n,n)"));
    auto* cbc_n = cbc_cmd->add_option("--n", single_n, "single index");
    cbc_cmd->add_option("--n-min", n_min, "first index (default 1)");
    cbc_cmd->add_option("--n-max", n_max, "last index (default 16)");

    std::string coeffs_text, strategy_name = "oracle", exponent_name = "n";
    auto* seq_cmd = with_fallthrough(app.add_subcommand(
        "seq", "synthesize and verify a closed form for an all-ones-initials recurrence"));
    seq_cmd->add_option("--coeffs", coeffs_text,
                        "recurrence coefficients, highest lag weight first (e.g. 1,1)")
        ->required();
    auto* seq_n = seq_cmd->add_option("--n", single_n, "single index");
    seq_cmd->add_option("--n-min", n_min, "first index");
    seq_cmd->add_option("--n-max", n_max, "last index");
    seq_cmd->add_option("--strategy", strategy_name, "base choice: oracle | apriori")
        ->check(CLI::IsMember({"oracle", "apriori"}));
    seq_cmd->add_option("--exponent", exponent_name,
                        "written exponent convention: n (0-indexed) | n-1 (1-indexed)")
        ->check(CLI::IsMember({"n", "n-1"}));

    long root_a = 2;
    unsigned long root_n = 2, k_min = 2, k_max = 8;
    std::vector<long> c_values{1};
    auto* root_cmd = with_fallthrough(app.add_subcommand("root", "n-th-root convergence records"));
    root_cmd->add_option("--a", root_a, "radicand (> 1)")->required();
    root_cmd->add_option("--n", root_n, "root degree")->check(CLI::PositiveNumber);
    root_cmd->add_option("--k-min", k_min, "first k")->check(CLI::PositiveNumber);
    root_cmd->add_option("--k-max", k_max, "last k")->check(CLI::PositiveNumber);
    root_cmd->add_option("--c", c_values, "second-reduction offsets (>= -1, repeatable)");

    long a_max = 30;
    auto* conj_cmd = with_fallthrough(
        app.add_subcommand("conjecture", "scan the floor-root closed form against exact roots"));
    conj_cmd->add_option("--a-max", a_max, "largest radicand (>= 3)");

    std::string suite = "pell";
    unsigned reps = 5;
    unsigned long bench_n = 256;
    auto* bench_cmd = with_fallthrough(
        app.add_subcommand("bench", "median wall times for formula vs oracle paths"));
    bench_cmd->add_option("--suite", suite, "pell | cbc | substitution");
    bench_cmd->add_option("--reps", reps, "repetitions per measurement");
    bench_cmd->add_option("--n", bench_n, "operation size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    ScanOptions opts;
    opts.precision = precision;
    opts.digit_budget = budget;
    opts.jobs = jobs;
    if (budget < 1000) {
        std::cerr << "error: --budget must be at least 1000 digits\n";
        return 2;
    }

    try {
        if (*pell_cmd) {
            Range range;
            if (int rc = resolve_range(pell_n, single_n, n_min, n_max, range)) return rc;
            return run_sequence_table("pell", range, json_lines, pell, [](unsigned long n) {
                return oracle_term(CRecurrence::pell(), n);
            });
        }
        if (*cbc_cmd) {
            Range range;
            if (int rc = resolve_range(cbc_n, single_n, n_min, n_max, range)) return rc;
            return run_sequence_table("cbc", range, json_lines, central_binomial,
                                      [](unsigned long n) { return binomial_oracle(2 * n, n); });
        }
        if (*seq_cmd) {
            Range range;
            if (int rc = resolve_range(seq_n, single_n, n_min, n_max, range)) return rc;
            return run_seq(coeffs_text, range, strategy_name, exponent_name, json_lines);
        }
        if (*root_cmd) {
            if (root_a <= 1) {
                std::cerr << "error: --a must be > 1\n";
                return 2;
            }
            for (long c : c_values)
                if (c < -1) {
                    std::cerr << "error: --c values must be >= -1\n";
                    return 2;
                }
            return run_root(root_a, root_n, k_min, k_max, c_values, opts, json_lines);
        }
        if (*conj_cmd) {
            if (a_max < 3) {
                std::cerr << "error: --a-max must be >= 3\n";
                return 2;
            }
            return run_conjecture(a_max, opts, json_lines);
        }
        if (*bench_cmd) {
            if (reps == 0) {
                std::cerr << "error: --reps must be >= 1\n";
                return 2;
            }
            return run_bench(suite, reps, bench_n, json_lines);
        }
    } catch (const TheoremMismatch& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
