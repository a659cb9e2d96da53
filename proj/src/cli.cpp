#include "qcyclo/cli.hpp"

#include "qcyclo/cyclo_factor.hpp"
#include "qcyclo/dwork.hpp"
#include "qcyclo/errors.hpp"
#include "qcyclo/integrality.hpp"
#include "qcyclo/poch.hpp"
#include "qcyclo/spec_parse.hpp"
#include "qcyclo/stepfun.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <random>
#include <sstream>

namespace qcyclo::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

long to_long(const Int& v) {
    if (!v.fits_slong_p())
        throw error("value " + v.get_str() + " does not fit a machine integer");
    return v.get_si();
}

std::string pair_str(const PochParams& p) {
    return "(" + std::to_string(p.r) + "," + std::to_string(p.s) + ")";
}

ordered_json witnesses_json(const std::vector<Witness>& ws) {
    ordered_json arr = ordered_json::array();
    for (const auto& w : ws) {
        ordered_json j;
        j["b"] = w.b;
        j["abscissa"] = w.abscissa.str();
        j["value"] = to_long(w.value);
        arr.push_back(j);
    }
    return arr;
}

ordered_json verdict_json(const std::string& mode, const Verdict& v) {
    ordered_json j;
    j["decision"] = v.decision;
    j["mode"] = mode;
    j["witnesses"] = witnesses_json(v.witnesses);
    if (v.slope)
        j["slope"] = *v.slope;
    else
        j["slope"] = nullptr;
    if (mode == "q")
        j["route"] = v.general_s ? "slope+xi" : "xi";
    if (!v.period_slopes.empty()) {
        ordered_json slopes = ordered_json::array();
        for (const auto& [b, s] : v.period_slopes) {
            ordered_json entry;
            entry["b"] = b;
            entry["slope"] = to_long(s);
            slopes.push_back(entry);
        }
        j["period_slopes"] = slopes;
    }
    return j;
}

ordered_json table_json(const JumpTable& t) {
    ordered_json j;
    j["order"] = t.order == JumpOrder::christol ? "christol" : "standard";
    ordered_json jumps = ordered_json::array();
    for (const auto& jump : t.jumps) {
        ordered_json entry;
        entry["abscissa"] = jump.abscissa.str();
        entry["amplitude"] = to_long(jump.amplitude);
        jumps.push_back(entry);
    }
    j["jumps"] = jumps;
    j["period_slope"] = to_long(t.period_slope);
    ordered_json plus = ordered_json::array();
    for (const auto& g : t.raw_plus)
        plus.push_back(g.str());
    j["raw_plus"] = plus;
    ordered_json minus = ordered_json::array();
    for (const auto& g : t.raw_minus)
        minus.push_back(g.str());
    j["raw_minus"] = minus;
    return j;
}

void print_verdict(std::ostream& out, const std::string& mode, const Verdict& v, bool json) {
    if (json) {
        out << verdict_json(mode, v).dump() << "\n";
        return;
    }
    out << mode << "-integral: " << (v.decision ? "yes" : "no") << "\n";
    for (const auto& w : v.witnesses)
        out << "  negative at " << (mode == "classical" ? "a=" : "b=") << w.b << ", x="
            << w.abscissa << " (value " << w.value << ")\n";
    if (v.slope)
        out << "  q-valuation slope: " << *v.slope << (v.slope_ok ? "" : " (negative)") << "\n";
    for (const auto& [b, s] : v.period_slopes)
        if (s != 0)
            out << "  period slope at b=" << b << ": " << s << "\n";
}

struct SweepResult {
    long specs = 0;
    long terms = 0;
    long comparisons = 0;
    bool pass = true;
    std::string detail;
};

bool term_in_domain(const HypergeomSpec& h, long n) {
    for (const auto& p : h.num())
        if (!poch_defined(p, n) || !poch_nonzero(p, n))
            return false;
    for (const auto& p : h.den())
        if (!poch_defined(p, n) || !poch_nonzero(p, n))
            return false;
    return true;
}

SweepResult oracle_sweep(long max_b, long n_lo, long n_hi, long spec_count, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> size_dist(0, 3);
    std::uniform_int_distribution<long> r_dist(-12, 12);
    std::uniform_int_distribution<long> s_dist(1, 24);

    auto random_pair = [&]() {
        long s = s_dist(rng);
        if (s > 12)
            s = 12 - s; // values in {-12, ..., -1}
        return PochParams(r_dist(rng), s);
    };

    SweepResult res;
    for (long k = 0; k < spec_count; ++k) {
        std::vector<PochParams> num, den;
        long v = size_dist(rng), w = size_dist(rng);
        for (long i = 0; i < v; ++i)
            num.push_back(random_pair());
        for (long j = 0; j < w; ++j)
            den.push_back(random_pair());
        HypergeomSpec h(std::move(num), std::move(den));
        ++res.specs;

        for (long n = n_lo; n <= n_hi; ++n) {
            if (!term_in_domain(h, n))
                continue;
            ++res.terms;
            CycloFactorization f = hyper_factorization(h, n);
            Int vq = hyper_q_valuation(h, n);
            ++res.comparisons;
            if (vq != f.q_exp) {
                res.pass = false;
                std::ostringstream os;
                os << "q-valuation mismatch at n=" << n << ": formula " << vq << ", oracle "
                   << f.q_exp << " for spec";
                for (const auto& p : h.num())
                    os << " " << pair_str(p);
                os << " /";
                for (const auto& p : h.den())
                    os << " " << pair_str(p);
                res.detail = os.str();
                return res;
            }
            for (long b = 1; b <= max_b; ++b) {
                Int formula = hyper_phi_valuation(b, h, n);
                long oracle = f.exponent(b);
                ++res.comparisons;
                if (formula != oracle) {
                    res.pass = false;
                    std::ostringstream os;
                    os << "phi_" << b << " mismatch at n=" << n << ": formula " << formula
                       << ", oracle " << oracle << " for spec";
                    for (const auto& p : h.num())
                        os << " " << pair_str(p);
                    os << " /";
                    for (const auto& p : h.den())
                        os << " " << pair_str(p);
                    res.detail = os.str();
                    return res;
                }
            }
        }
    }
    return res;
}

struct Checker {
    std::ostream& out;
    bool all_ok = true;

    void operator()(bool ok, const std::string& name) {
        out << (ok ? "ok: " : "FAIL: ") << name << "\n";
        all_ok = all_ok && ok;
    }
};

int run_examples(std::ostream& out) {
    Checker check{out};

    HypergeomSpec base = parse_spec("(1,3)(2,3)", "(1,2)(1,1)");
    Verdict v1 = decide_q_integral(base);
    check(!v1.decision && !v1.witnesses.empty() && v1.witnesses[0].b == 3 &&
              v1.witnesses[0].abscissa == Rational(1, 2) && v1.witnesses[0].value == -1,
          "(q;q^3)(q^2;q^3)/(q;q^2)(q;q) is not q-integral, first dip at b=3, x=1/2");
    check(xi_jump_table(3, base).value_at(Rational(1, 2)) == -1, "Xi(3,1/2) = -1 for the base spec");

    HypergeomSpec binom = parse_spec("(1,3)(2,3)(3,3)", "(1,2)(1,1)(2,2)");
    Verdict v2 = decide_q_integral(binom);
    check(v2.decision, "the Gaussian-binomial spec is q-integral");
    JumpTable t3 = xi_jump_table(3, binom);
    std::vector<Jump> expected{{Rational(1, 3), 1}, {Rational(1, 2), -1}, {Rational(2, 3), 1},
                               {Rational(1), -1}};
    check(t3.jumps == expected, "Xi(3,.) jumps are 1/3:+1, 1/2:-1, 2/3:+1, 1:-1");

    bool gauss_ok = true;
    for (long n = 0; n <= 10 && gauss_ok; ++n) {
        CycloFactorization f = hyper_factorization(binom, n);
        CycloFactorization g;
        for (long b = 2; b <= 3 * n; ++b)
            g.mul_phi(b, 3 * n / b - 2 * n / b - n / b);
        gauss_ok = f == g;
    }
    check(gauss_ok, "Q(q;n) factors as the Gaussian binomial [3n 2n]_q for n <= 10");
    check(gaussian_binomial(3, 2) == cyclotomic_poly(3), "[3 2]_q = 1 + q + q^2");

    check(decide_n_integral_classical({Rational(1, 3), Rational(2, 3)},
                                      {Rational(1, 2), Rational(1)})
              .decision,
          "(1/3)_n(2/3)_n/((1/2)_n n!) is N-integral");

    HypergeomSpec nine = parse_spec("(1,9)(4,9)(5,9)", "(1,3)(1,1)(1,1)");
    Verdict v3 = decide_q_integral(nine);
    check(!v3.decision && !v3.witnesses.empty() && v3.witnesses[0].b == 3 &&
              v3.witnesses[0].abscissa == Rational(1),
          "the 1/9,4/9,5/9 spec is not q-integral, dip at b=3, x=1");

    HypergeomSpec nine_fixed = parse_spec("(1,9)(4,9)(5,9)(9,9)", "(1,3)(1,1)(1,1)(1,1)");
    Verdict v4 = decide_q_integral(nine_fixed);
    check(v4.decision, "adding (q^9;q^9)_n / (q;q)_n repairs q-integrality");
    std::vector<Rational> expected_plus;
    for (long k = 1; k <= 9; ++k)
        expected_plus.push_back(Rational(k, 9));
    check(xi_jump_table(9, nine_fixed).raw_plus == expected_plus,
          "positive jumps of Xi(9,.) sit at 1/9, ..., 8/9, 1");
    check(decide_n_integral_classical(
              {Rational(1, 9), Rational(4, 9), Rational(5, 9)},
              {Rational(1, 3), Rational(1), Rational(1)})
              .decision,
          "the classical 1/9,4/9,5/9 sequence is N-integral");

    HypergeomSpec nine_tilde = parse_spec("(1,9)(4,9)(5,9)", "(3,9)(9,9)(9,9)");
    Verdict v5 = decide_q_integral(nine_tilde);
    check(!v5.decision && xi_jump_table(3, nine_tilde).value_at(Rational(1)) < 0,
          "the substituted q^{1/9} analog is not q-integral: Xi(3,1) < 0");

    check(decide_factorial_ratio({30, 1}, {15, 10, 6}).decision,
          "(30n)! n! / ((15n)! (10n)! (6n)!) is q-integral");
    check(decide_factorial_ratio({3}, {2, 1}).decision, "(3n)!/((2n)! n!) is q-integral");
    check(!decide_factorial_ratio({1, 1}, {2}).decision, "n!^2/(2n)! is not q-integral");
    check(classical_landau({3}, {2, 1}, Rational(1, 3)) == 1 &&
              classical_landau({3}, {2, 1}, Rational(1, 2)) == 0,
          "Landau function of (3n)!/((2n)! n!) is 1 at 1/3 and 0 at 1/2");

    out << (check.all_ok ? "all examples reproduced\n" : "some examples FAILED\n");
    return check.all_ok ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cyclotomic valuations and q-integrality of basic hypergeometric terms"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");

    // dwork
    auto* dwork_cmd = app.add_subcommand("dwork", "evaluate the generalized Dwork map D_b");
    long dwork_b = 1;
    std::string dwork_alpha;
    dwork_cmd->add_option("--b", dwork_b, "positive integer index")->required();
    dwork_cmd->add_option("--alpha", dwork_alpha, "rational argument p/q")->required();

    // val
    auto* val_cmd = app.add_subcommand("val", "phi_b- or q-valuation of a symbol or term");
    long val_b = 0;
    bool val_has_b = false;
    std::string val_pair, val_num, val_den;
    long val_n = 0;
    val_cmd->add_option("--b", val_b, "cyclotomic index (omit for the q-valuation)")
        ->each([&](const std::string&) { val_has_b = true; });
    val_cmd->add_option("--pair", val_pair, "single Pochhammer pair \"(r,s)\"");
    val_cmd->add_option("--num", val_num, "numerator pairs \"(r,s)(r,s)\" or -");
    val_cmd->add_option("--den", val_den, "denominator pairs");
    val_cmd->add_option("--n", val_n, "argument n")->required();

    // steps
    auto* steps_cmd = app.add_subcommand("steps", "emit a jump table as JSON");
    long steps_b = 1;
    std::string steps_num = "-", steps_den = "-", steps_mode = "xi";
    steps_cmd->add_option("--b", steps_b, "index b")->required();
    steps_cmd->add_option("--num", steps_num, "numerator pairs");
    steps_cmd->add_option("--den", steps_den, "denominator pairs");
    steps_cmd->add_option("--mode", steps_mode, "delta | xi (default xi)")
        ->check(CLI::IsMember({"delta", "xi"}));

    // decide
    auto* decide_cmd = app.add_subcommand("decide", "run an integrality decision");
    std::string decide_mode = "q", decide_num = "-", decide_den = "-";
    decide_cmd->add_option("--mode", decide_mode, "q | laurent | negative | bidirectional | classical | factorial")
        ->check(CLI::IsMember({"q", "laurent", "negative", "bidirectional", "classical", "factorial"}));
    decide_cmd->add_option("--num", decide_num,
                           "numerator: pairs, or rationals (classical), or integers (factorial)");
    decide_cmd->add_option("--den", decide_den, "denominator, same grammar");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "run the formula-vs-factorization sweep");
    long oracle_max_b = 30, oracle_max_n = 40, oracle_specs = 200;
    unsigned long oracle_seed = 20240801UL;
    oracle_cmd->add_option("--max-b", oracle_max_b, "largest cyclotomic index (default 30)");
    oracle_cmd->add_option("--max-n", oracle_max_n,
                           "largest argument; n sweeps -max-n/2 .. max-n (default 40)");
    oracle_cmd->add_option("--specs", oracle_specs, "number of random specs (default 200)");
    oracle_cmd->add_option("--seed", oracle_seed, "RNG seed");

    // examples
    app.add_subcommand("examples", "replay the worked examples and verify their outcomes");

    std::vector<const char*> argv;
    argv.push_back("qcyclo");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        for (auto* sub : app.get_subcommands())
            if (sub->parsed()) {
                out << sub->help();
                return 0;
            }
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (dwork_cmd->parsed()) {
            Rational alpha = parse_rational(dwork_alpha);
            Rational d = dwork_map(dwork_b, alpha);
            if (json) {
                ordered_json j;
                j["b"] = dwork_b;
                j["alpha"] = alpha.str();
                j["value"] = d.str();
                out << j.dump() << "\n";
            } else {
                out << d << "\n";
            }
            return 0;
        }

        if (val_cmd->parsed()) {
            if (val_pair.empty() == (val_num.empty() && val_den.empty()))
                throw error("pass either --pair or --num/--den");
            Int value;
            ordered_json j;
            if (!val_pair.empty()) {
                auto pairs = parse_pairs(val_pair);
                if (pairs.size() != 1)
                    throw error("--pair takes exactly one (r,s)");
                value = val_has_b ? poch_phi_valuation(val_b, pairs[0], val_n)
                                  : poch_q_valuation(pairs[0], val_n);
                j["pair"] = pair_str(pairs[0]);
            } else {
                HypergeomSpec h = parse_spec(val_num.empty() ? "-" : val_num,
                                             val_den.empty() ? "-" : val_den);
                value = val_has_b ? hyper_phi_valuation(val_b, h, val_n)
                                  : hyper_q_valuation(h, val_n);
                j["num"] = val_num.empty() ? "-" : val_num;
                j["den"] = val_den.empty() ? "-" : val_den;
            }
            if (json) {
                if (val_has_b)
                    j["b"] = val_b;
                j["n"] = val_n;
                j["valuation"] = to_long(value);
                out << j.dump() << "\n";
            } else {
                out << value << "\n";
            }
            return 0;
        }

        if (steps_cmd->parsed()) {
            HypergeomSpec h = parse_spec(steps_num, steps_den);
            JumpTable t = steps_mode == "delta" ? delta_jump_table(steps_b, h)
                                                : xi_jump_table(steps_b, h);
            out << table_json(t).dump() << "\n";
            return 0;
        }

        if (decide_cmd->parsed()) {
            Verdict v;
            if (decide_mode == "classical") {
                v = decide_n_integral_classical(parse_rationals(decide_num),
                                                parse_rationals(decide_den));
            } else if (decide_mode == "factorial") {
                v = decide_factorial_ratio(parse_integers(decide_num), parse_integers(decide_den));
            } else {
                HypergeomSpec h = parse_spec(decide_num, decide_den);
                if (decide_mode == "q")
                    v = decide_q_integral(h);
                else if (decide_mode == "laurent")
                    v = decide_laurent_integral(h);
                else if (decide_mode == "negative")
                    v = decide_negative_q_integral(h);
                else
                    v = decide_bidirectional(h);
            }
            print_verdict(out, decide_mode, v, json);
            return v.decision ? 0 : 1;
        }

        if (oracle_cmd->parsed()) {
            SweepResult res = oracle_sweep(oracle_max_b, -oracle_max_n / 2, oracle_max_n,
                                           oracle_specs, oracle_seed);
            if (json) {
                ordered_json j;
                j["specs"] = res.specs;
                j["terms"] = res.terms;
                j["comparisons"] = res.comparisons;
                j["pass"] = res.pass;
                j["first_discrepancy"] = res.pass ? ordered_json(nullptr) : ordered_json(res.detail);
                out << j.dump() << "\n";
            } else {
                out << "oracle sweep: " << res.specs << " specs, " << res.terms << " terms, "
                    << res.comparisons << " comparisons — " << (res.pass ? "PASS" : "FAIL") << "\n";
                if (!res.pass)
                    out << res.detail << "\n";
            }
            return res.pass ? 0 : 1;
        }

        return run_examples(out);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace qcyclo::cli
