// Command-line front end: permutation statistics, the three bijections,
// generating-function tables and series, the PASEP chain, and the named
// verification suites.  Machine-readable output (JSON/TSV) goes to stdout,
// diagnostics to stderr.  Exit codes: 0 success/PASS, 1 FAIL, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "permstat/bijections.hpp"
#include "permstat/enumeration.hpp"
#include "permstat/genfun.hpp"
#include "permstat/json_io.hpp"
#include "permstat/pasep.hpp"
#include "permstat/verify.hpp"

namespace {

using namespace permstat;

int enumeration_limit() {
    int limit = kDefaultEnumerationLimit;
    if (const char* env = std::getenv("PERMSTAT_MAX_N")) {
        int v = std::atoi(env);
        if (v > limit) limit = v;
    }
    return limit;
}

bool looks_decorated(const std::string& text) {
    return text.find('+') != std::string::npos || text.find('-') != std::string::npos;
}

int cmd_stats(const std::string& perm_text) {
    if (looks_decorated(perm_text)) {
        DecoratedPermutation d = DecoratedPermutation::parse(perm_text);
        DecoratedStats s = decorated_stats(d);
        std::cout << "n=" << d.n() << " wex=" << s.wex << " nonexc=" << s.nonexc
                  << " crossings=" << s.crossings << " nestings=" << s.nestings
                  << " alignments=" << s.alignments << "\n";
        return 0;
    }
    Permutation p = Permutation::parse(perm_text);
    std::cout << "n=" << p.n() << " wex=" << weak_exceedances(p) << " des=" << descents(p)
              << " crossings=" << crossings(p) << " nestings=" << nestings(p)
              << " alignments=" << alignments(p)
              << " 31-2=" << pattern_count(p, Pattern::P31_2)
              << " 2-31=" << pattern_count(p, Pattern::P2_31)
              << " 13-2=" << pattern_count(p, Pattern::P13_2)
              << " 2-13=" << pattern_count(p, Pattern::P2_13) << "\n";
    return 0;
}

int cmd_bijection(const std::string& map_name, const std::string& perm_text) {
    Permutation p = Permutation::parse(perm_text);
    if (map_name == "fz" || map_name == "fv") {
        WeightedPath w = map_name == "fz" ? fz_map(p) : fv_map(p);
        std::cout << w.path.to_string() << "\n" << to_json(w.weights).dump() << "\n";
        return 0;
    }
    Permutation image = map_name == "direct" ? direct_map(p) : reverse_perm(p);
    std::cout << image.to_string() << "\n";
    return 0;
}

int cmd_series(const std::string& which, int order) {
    XSeries s = [&] {
        if (which == "F") return F_series(order);
        if (which == "Ehat") return e_hat_series(order);
        if (which == "A") return a_cf_series(order, false);
        return a_cf_series(order, true);  // Apq
    }();
    std::cout << to_json(s).dump() << "\n";
    return 0;
}

int cmd_table(const std::string& which, int n, int threads) {
    if (which == "B" || which == "D") {
        StatTable t = which == "B" ? enumerate_B_table(n, enumeration_limit(), threads)
                                   : enumerate_D_table(n, enumeration_limit(), threads);
        std::cout << t.to_json().dump() << "\n";
        return 0;
    }
    for (int k = 1; k <= n; ++k) {
        EulerianQPoly row = which == "Ehat" ? e_hat(k, n) : a_kn(k, n);
        std::cout << n << "\t" << k << "\t" << to_json(row.poly).dump() << "\n";
    }
    return 0;
}

int cmd_pasep_stationary(int n, const std::string& alpha_s, const std::string& beta_s,
                         const std::string& q_s) {
    Rational alpha = Rational::parse(alpha_s);
    Rational beta = Rational::parse(beta_s);
    Rational q = Rational::parse(q_s);
    PasepChain chain = build_chain(n, alpha, beta, q);
    std::vector<Rational> pi = stationary(chain);
    for (unsigned idx = 0; idx < pi.size(); ++idx) {
        std::cout << BasicConfig::from_index(n, idx).to_string() << "\t"
                  << pi[idx].to_fraction_string() << "\n";
    }
    return 0;
}

int cmd_pasep_verify(int max_n) {
    if (max_n > 6) max_n = 6;
    bool all_pass = true;
    std::vector<Rational> ab = {Rational(1), Rational(BigInt(1), BigInt(2)),
                                Rational(BigInt(1), BigInt(3))};
    std::vector<Rational> qs = {Rational(0), Rational(BigInt(1), BigInt(2)), Rational(1)};
    for (int n = 1; n <= max_n; ++n) {
        int passed = 0, total = 0;
        std::string first_failure;
        for (const Rational& alpha : ab) {
            for (const Rational& beta : ab) {
                for (const Rational& q : qs) {
                    ++total;
                    CheckReport rep = verify_stationary(n, alpha, beta, q);
                    if (rep.pass) ++passed;
                    else if (first_failure.empty()) first_failure = rep.detail;
                }
            }
        }
        bool pass = passed == total;
        all_pass = all_pass && pass;
        std::cout << (pass ? "PASS" : "FAIL") << " pasep.stationary==W/Z n=" << n << " grid="
                  << passed << "/" << total;
        if (!pass) std::cout << " (" << first_failure << ")";
        std::cout << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_verify(const std::string& suite, int max_n, int threads) {
    std::vector<SuiteResult> results = run_verify_suite(suite, max_n, threads);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.pass && !r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact permutation statistics, bijections, continued-fraction "
                 "generating functions, and the PASEP stationary distribution"};
    app.require_subcommand(1);

    std::string perm_text;
    auto* stats = app.add_subcommand("stats", "statistics of a (decorated) permutation");
    stats->add_option("perm", perm_text, "one-line notation, e.g. 4,7,3,6,2,1,5 or 1+,3,2,4-")
        ->required();

    std::string map_name;
    std::string bij_perm;
    auto* bijection = app.add_subcommand("bijection", "apply one of the bijections");
    bijection->add_option("--map", map_name, "fz | fv | direct | reverse")
        ->required()
        ->check(CLI::IsMember({"fz", "fv", "direct", "reverse"}));
    bijection->add_option("perm", bij_perm, "one-line notation")->required();

    std::string series_which = "F";
    int series_order = 6;
    auto* series = app.add_subcommand("series", "truncated generating function as JSON");
    series->add_option("--which", series_which, "F | Ehat | A | Apq")
        ->required()
        ->check(CLI::IsMember({"F", "Ehat", "A", "Apq"}));
    series->add_option("--order", series_order, "truncation order")
        ->required()
        ->check(CLI::Range(0, 12));

    std::string table_which = "B";
    int table_n = 0;
    int threads = 1;
    auto* table = app.add_subcommand("table", "distribution tables and polynomial rows");
    table->add_option("--which", table_which, "B | D | Ehat | A")
        ->required()
        ->check(CLI::IsMember({"B", "D", "Ehat", "A"}));
    table->add_option("--n", table_n, "size")->required()->check(CLI::Range(0, 12));
    table->add_option("--threads", threads, "parallel enumeration when > 1");

    auto* pasep = app.add_subcommand("pasep", "exclusion-process chain");
    pasep->require_subcommand(1);
    int pasep_n = 1;
    std::string alpha_s = "1", beta_s = "1", q_s = "1";
    auto* pasep_st = pasep->add_subcommand("stationary", "exact stationary distribution as TSV");
    pasep_st->add_option("--n", pasep_n, "number of cells")->required()->check(CLI::Range(1, 10));
    pasep_st->add_option("--alpha", alpha_s, "entry rate, rational in (0,1]");
    pasep_st->add_option("--beta", beta_s, "exit rate, rational in (0,1]");
    pasep_st->add_option("--q", q_s, "backward-hop rate, rational in [0,1]");
    int pasep_verify_n = 5;
    auto* pasep_vf = pasep->add_subcommand("verify", "stationary == W/Z over the rational grid");
    pasep_vf->add_option("--n", pasep_verify_n, "largest chain size")->check(CLI::Range(1, 6));

    std::string suite = "all";
    int max_n = 0;
    int verify_threads = 1;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite, "theorem1|prop7|theorem3|sec5|sec6|pasep|all")
        ->check(CLI::IsMember({"theorem1", "prop7", "theorem3", "sec5", "sec6", "pasep", "all"}));
    verify->add_option("--max-n", max_n, "cap for the symmetric-group suites (default 8)")
        ->check(CLI::Range(0, 9));
    verify->add_option("--threads", verify_threads, "parallel enumeration when > 1");

    try {
        app.parse(argc, argv);
        if (stats->parsed()) return cmd_stats(perm_text);
        if (bijection->parsed()) return cmd_bijection(map_name, bij_perm);
        if (series->parsed()) return cmd_series(series_which, series_order);
        if (table->parsed()) return cmd_table(table_which, table_n, threads);
        if (pasep->parsed()) {
            if (pasep_st->parsed()) return cmd_pasep_stationary(pasep_n, alpha_s, beta_s, q_s);
            return cmd_pasep_verify(pasep_verify_n);
        }
        if (verify->parsed()) return cmd_verify(suite, max_n, verify_threads);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
