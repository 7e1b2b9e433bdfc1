#ifndef PERMSTAT_VERIFY_HPP
#define PERMSTAT_VERIFY_HPP

#include <array>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permstat/bijections.hpp"
#include "permstat/enumeration.hpp"
#include "permstat/genfun.hpp"
#include "permstat/pasep.hpp"
#include "permstat/permutation.hpp"
#include "permstat/series.hpp"
#include "permstat/stats.hpp"

namespace permstat {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

namespace detail {

inline void report(std::vector<SuiteResult>& out, const std::string& name, bool pass,
                   const std::string& detail) {
    out.push_back({name, pass, detail});
}

inline BigInt factorial(int n) {
    BigInt r(1);
    for (int t = 2; t <= n; ++t) r *= BigInt(t);
    return r;
}

// polynomial assembled from a distribution table: sum count * q^l p^m y^k
inline MultiPoly table_polynomial(const StatTable& table, int n) {
    MultiPoly r;
    for (const auto& [key, count] : table.entries) {
        if (key[0] != n) continue;
        r += MultiPoly::monomial(count, key[2], key[3], key[1]);
    }
    return r;
}

}  // namespace detail

// B(n,k,l,m) == D(n,k,l,m) entrywise, plus the n! row-sum sanity check.
inline std::vector<SuiteResult> verify_theorem1(int max_n, int threads = 1) {
    std::vector<SuiteResult> out;
    bool equal = true, sums = true;
    std::string detail;
    for (int n = 0; n <= max_n && (equal && sums); ++n) {
        StatTable b = enumerate_B_table(n, max_n, threads);
        StatTable d = enumerate_D_table(n, max_n, threads);
        if (b != d) {
            equal = false;
            detail = "tables differ at n=" + std::to_string(n);
        }
        if (b.total() != detail::factorial(n)) {
            sums = false;
            detail = "row sum differs from n! at n=" + std::to_string(n);
        }
    }
    detail::report(out, "theorem1.B==D n<=" + std::to_string(max_n), equal, detail);
    detail::report(out, "theorem1.table-total==n!", sums, detail);
    return out;
}

// crossings + alignments == (k-1)(n-k) for every permutation.
inline std::vector<SuiteResult> verify_prop7(int max_n) {
    std::vector<SuiteResult> out;
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= max_n && pass; ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            if (!pass) return;
            int k = weak_exceedances(p);
            if (crossings(p) + alignments(p) != (k - 1) * (n - k)) {
                pass = false;
                detail = "counterexample " + p.to_string();
            }
        });
    }
    detail::report(out, "prop7.crossings+alignments==(k-1)(n-k) n<=" + std::to_string(max_n),
                   pass, detail);
    return out;
}

// Series identities: F coefficients against the brute-force table, the
// closed-form Ehat series against F at p = 1, and the path-transfer oracle
// against the continued-fraction expansion.
inline std::vector<SuiteResult> verify_theorem3(int max_n, int threads = 1) {
    std::vector<SuiteResult> out;
    int order = std::min(max_n, 8);
    XSeries f = F_series(order);

    bool f_ok = true;
    std::string detail;
    for (int n = 0; n <= order && f_ok; ++n) {
        StatTable b = enumerate_B_table(n, order, threads);
        if (f.coeff(n) != detail::table_polynomial(b, n)) {
            f_ok = false;
            detail = "F coefficient differs from B table at n=" + std::to_string(n);
        }
    }
    detail::report(out, "theorem3.F==B-table n<=" + std::to_string(order), f_ok, detail);

    XSeries fp1(order);
    for (int n = 0; n <= order; ++n) fp1.set_coeff(n, f.coeff(n).subst_p_one());
    bool ehat_ok = e_hat_series(order) == fp1;
    detail::report(out, "theorem3.Ehat-series==F(p=1)", ehat_ok,
                   ehat_ok ? "" : "series differ");

    bool transfer_ok = true;
    auto fz_weights = [](Step s, int h) {
        switch (s) {
            case Step::N:
            case Step::E: return pq_bracket(h + 1) * MultiPoly::var_y();
            default: return pq_bracket(h);
        }
    };
    for (int n = 0; n <= order && transfer_ok; ++n) {
        if (motzkin_transfer(fz_weights, n) != f.coeff(n)) {
            transfer_ok = false;
            detail = "transfer differs from continued fraction at n=" + std::to_string(n);
        }
    }
    detail::report(out, "theorem3.motzkin-transfer==cf", transfer_ok, detail);
    return out;
}

// Bijections: worked example, statistic transfer, round trips, bijectivity,
// reversal pattern transport.
inline std::vector<SuiteResult> verify_sec5(int max_n) {
    std::vector<SuiteResult> out;

    {
        Permutation sigma = Permutation::parse("5,1,7,4,3,6,8,2");
        Permutation expect = Permutation::parse("8,5,6,2,1,7,3,4");
        Permutation tau = direct_map(sigma);
        bool pass = tau == expect && direct_inverse(tau) == sigma;
        detail::report(out, "sec5.two-rowed-example", pass,
                       pass ? "" : "got " + tau.to_string());
    }

    bool stat_ok = true, round_ok = true, bij_ok = true;
    std::string stat_detail, round_detail, bij_detail;
    int round_max = std::min(max_n, 7);
    for (int n = 0; n <= max_n; ++n) {
        std::set<Permutation> direct_images, fz_fv_images;
        bool track_images = n <= round_max;
        for_each_permutation(n, [&](const Permutation& p) {
            Permutation tau = direct_map(p);
            if (weak_exceedances(tau) != n - descents(p) ||
                crossings(tau) != pattern_count(p, Pattern::P2_31) ||
                nestings(tau) != pattern_count(p, Pattern::P31_2)) {
                if (stat_ok) stat_detail = "statistics differ at " + p.to_string();
                stat_ok = false;
            }
            if (track_images) {
                if (direct_inverse(tau) != p || fz_inverse(fz_map(p)) != p ||
                    fv_inverse(fv_map(p)) != p) {
                    if (round_ok) round_detail = "round trip fails at " + p.to_string();
                    round_ok = false;
                }
                direct_images.insert(tau);
                fz_fv_images.insert(fz_inverse(fv_map(p)));
            }
        });
        if (track_images && n > 0) {
            BigInt images(static_cast<long long>(direct_images.size()));
            BigInt composed(static_cast<long long>(fz_fv_images.size()));
            if (images != detail::factorial(n) || composed != detail::factorial(n)) {
                if (bij_ok) bij_detail = "image count below n! at n=" + std::to_string(n);
                bij_ok = false;
            }
        }
    }
    detail::report(out, "sec5.statistic-transfer n<=" + std::to_string(max_n), stat_ok,
                   stat_detail);
    detail::report(out, "sec5.roundtrips n<=" + std::to_string(round_max), round_ok,
                   round_detail);
    detail::report(out, "sec5.bijectivity n<=" + std::to_string(round_max), bij_ok, bij_detail);

    bool rev_ok = true;
    std::string rev_detail;
    int rev_max = std::min(max_n, 7);
    for (int n = 1; n <= rev_max && rev_ok; ++n) {
        std::map<std::array<int, 3>, long long> lhs, rhs;
        for_each_permutation(n, [&](const Permutation& p) {
            ++lhs[{weak_exceedances(p), crossings(p), nestings(p)}];
            ++rhs[{descents(p) + 1, pattern_count(p, Pattern::P13_2),
                   pattern_count(p, Pattern::P2_13)}];
        });
        if (lhs != rhs) {
            rev_ok = false;
            rev_detail = "distributions differ at n=" + std::to_string(n);
        }
    }
    detail::report(out, "sec5.reversal-distribution n<=" + std::to_string(rev_max), rev_ok,
                   rev_detail);
    return out;
}

// Decorated permutations: the alignment sum rule, the two-variable continued
// fraction against the decorated table, and A_{k,n} against the
// single-variable continued fraction.
inline std::vector<SuiteResult> verify_sec6(int max_dec, int max_series) {
    std::vector<SuiteResult> out;

    bool sum_ok = true;
    std::string sum_detail;
    for (int n = 0; n <= max_dec && sum_ok; ++n) {
        for_each_decorated_permutation(n, [&](const DecoratedPermutation& d) {
            if (!sum_ok) return;
            DecoratedStats s = decorated_stats(d);
            int lhs = s.nestings + s.crossings + (s.alignments - s.nestings) +
                      strict_nonexceedances(d.perm());
            if (lhs != (n - s.wex) * s.wex) {
                sum_ok = false;
                sum_detail = "counterexample " + d.to_string();
            }
        });
    }
    detail::report(out, "sec6.decorated-sum-rule n<=" + std::to_string(max_dec), sum_ok,
                   sum_detail);

    XSeries apq = a_cf_series(max_dec, true);
    bool cf_ok = true;
    std::string cf_detail;
    for (int n = 0; n <= max_dec && cf_ok; ++n) {
        StatTable dec = enumerate_decorated_table(n, max_dec);
        if (apq.coeff(n) != detail::table_polynomial(dec, n)) {
            cf_ok = false;
            cf_detail = "two-variable coefficient differs at n=" + std::to_string(n);
        }
    }
    detail::report(out, "sec6.cf==decorated-table n<=" + std::to_string(max_dec), cf_ok,
                   cf_detail);

    int order = std::min(max_series, 8);
    XSeries a = a_cf_series(order, false);
    bool rows_ok = true;
    std::string rows_detail;
    for (int n = 0; n <= order && rows_ok; ++n) {
        MultiPoly assembled = n == 0 ? MultiPoly::one() : MultiPoly();
        if (n >= 1) {
            assembled = MultiPoly::one();  // k = 0: the all-minus identity
            for (int k = 1; k <= n; ++k)
                assembled += a_kn(k, n).poly * MultiPoly::monomial(BigInt(1), 0, 0, k);
        }
        if (a.coeff(n) != assembled) {
            rows_ok = false;
            rows_detail = "A_{k,n} rows differ from continued fraction at n=" + std::to_string(n);
        }
    }
    detail::report(out, "sec6.akn==cf-rows n<=" + std::to_string(order), rows_ok, rows_detail);
    return out;
}

// PASEP: exact stationary measure against configuration weights over a
// rational parameter grid, the height-shift path bijection, and the
// particle-count marginal against the q-Eulerian polynomials.
inline std::vector<SuiteResult> verify_pasep(int max_grid_n, int max_path_len) {
    std::vector<SuiteResult> out;
    std::vector<Rational> ab = {Rational(1), Rational(BigInt(1), BigInt(2)),
                                Rational(BigInt(1), BigInt(3))};
    std::vector<Rational> qs = {Rational(0), Rational(BigInt(1), BigInt(2)), Rational(1)};

    bool rows_ok = true, grid_ok = true;
    std::string rows_detail, grid_detail;
    for (int n = 1; n <= max_grid_n; ++n) {
        for (const Rational& alpha : ab) {
            for (const Rational& beta : ab) {
                for (const Rational& q : qs) {
                    PasepChain chain = build_chain(n, alpha, beta, q);
                    for (const auto& row : chain.transition) {
                        Rational s(0);
                        for (const auto& v : row) s += v;
                        if (s != Rational(1)) {
                            if (rows_ok) rows_detail = "row sum != 1 at n=" + std::to_string(n);
                            rows_ok = false;
                        }
                    }
                    CheckReport rep = verify_stationary(n, alpha, beta, q);
                    if (!rep.pass) {
                        if (grid_ok) grid_detail = rep.detail;
                        grid_ok = false;
                    }
                }
            }
        }
    }
    detail::report(out, "pasep.row-sums==1 n<=" + std::to_string(max_grid_n), rows_ok,
                   rows_detail);
    detail::report(out, "pasep.stationary==W/Z n<=" + std::to_string(max_grid_n), grid_ok,
                   grid_detail);

    bool lemma_ok = true;
    std::string lemma_detail;
    for (int n = 0; n <= max_path_len && lemma_ok; ++n) {
        // domain: uniformly weighted paths of length n
        std::map<int, std::set<std::string>> images_by_k;
        long long domain = 0;
        for_each_motzkin_path(n, [&](const MotzkinPath& path) {
            if (!lemma_ok) return;
            ++domain;
            std::vector<MultiPoly> weights;
            std::vector<int> h = path.heights();
            for (int i = 1; i <= n; ++i)
                weights.push_back(q_bracket(h[static_cast<std::size_t>(i) - 1] + 1));
            WeightedPath w{path, weights};
            int k = 0;
            for (Step s : path.steps())
                if (s == Step::N || s == Step::E) ++k;
            WeightedPath img = lemma7_map(w);
            // weight preservation, up-step count shift, no EBar at height 0
            if (img.path.length() != n + 1) lemma_ok = false;
            int k2 = 0;
            std::vector<int> ih = img.path.heights();
            for (int i = 1; i <= n + 1 && lemma_ok; ++i) {
                Step s = img.path.step(i);
                if (s == Step::N || s == Step::E) ++k2;
                if (s == Step::EBar && ih[static_cast<std::size_t>(i) - 1] == 0) lemma_ok = false;
                if (i <= n && img.weights[static_cast<std::size_t>(i) - 1] !=
                                  w.weights[static_cast<std::size_t>(i) - 1])
                    lemma_ok = false;
            }
            if (k2 != k + 1) lemma_ok = false;
            WeightedPath back = lemma7_inverse(img);
            if (back != w) lemma_ok = false;
            if (!lemma_ok) lemma_detail = "failure at path " + path.to_string();
            images_by_k[k].insert(img.path.to_string());
        });
        // surjectivity: image counts match the target sets
        std::map<int, long long> target;
        for_each_motzkin_path(n + 1, [&](const MotzkinPath& path) {
            std::vector<int> h = path.heights();
            int k = 0;
            bool ok = true;
            for (int i = 1; i <= n + 1; ++i) {
                Step s = path.step(i);
                if (s == Step::N || s == Step::E) ++k;
                if (s == Step::EBar && h[static_cast<std::size_t>(i) - 1] == 0) ok = false;
            }
            if (ok && k >= 1) ++target[k - 1];
        });
        long long image_total = 0;
        for (auto& [k, setk] : images_by_k) {
            image_total += static_cast<long long>(setk.size());
            if (target.count(k) == 0 || target[k] != static_cast<long long>(setk.size())) {
                lemma_ok = false;
                lemma_detail = "image count differs at n=" + std::to_string(n) +
                               " k=" + std::to_string(k);
            }
        }
        if (image_total != domain) {
            lemma_ok = false;
            lemma_detail = "map not injective at n=" + std::to_string(n);
        }
    }
    detail::report(out, "pasep.lemma7-bijection len<=" + std::to_string(max_path_len), lemma_ok,
                   lemma_detail);

    bool wkn_ok = true;
    std::string wkn_detail;
    for (int n = 1; n <= max_path_len && wkn_ok; ++n) {
        for (int k = 0; k <= n && wkn_ok; ++k) {
            if (w_kn_poly(k, n) != e_hat(k + 1, n + 1).poly) {
                wkn_ok = false;
                wkn_detail = "W(k,n) != Ehat(k+1,n+1) at k=" + std::to_string(k) +
                             " n=" + std::to_string(n);
            }
        }
    }
    detail::report(out, "pasep.w_kn==Ehat(k+1,n+1) n<=" + std::to_string(max_path_len), wkn_ok,
                   wkn_detail);

    bool collapse_ok = true;
    for (int h = 0; h <= 8 && collapse_ok; ++h) {
        for (Step s : {Step::N, Step::E, Step::EBar, Step::S}) {
            if (s == Step::S && h == 0) continue;
            if (step_weight_symbolic(s, h) != q_bracket(h + 1)) collapse_ok = false;
        }
    }
    detail::report(out, "pasep.unit-collapse==[h+1]_q", collapse_ok, "");
    return out;
}

// Named suite dispatch used by the command-line driver.  max_n caps the
// symmetric-group suites; the decorated and chain suites are additionally
// capped at their own defaults.
inline std::vector<SuiteResult> run_verify_suite(const std::string& suite, int max_n,
                                                 int threads = 1) {
    int sn = max_n > 0 ? max_n : 8;
    int dec = std::min(sn, 6);
    int chain_n = std::min(sn, 5);
    int path_len = std::min(sn, 7);
    std::vector<SuiteResult> out;
    auto append = [&](std::vector<SuiteResult> part) {
        for (auto& r : part) out.push_back(std::move(r));
    };
    if (suite == "theorem1") append(verify_theorem1(sn, threads));
    else if (suite == "prop7") append(verify_prop7(sn));
    else if (suite == "theorem3") append(verify_theorem3(sn, threads));
    else if (suite == "sec5") append(verify_sec5(sn));
    else if (suite == "sec6") append(verify_sec6(dec, sn));
    else if (suite == "pasep") append(verify_pasep(chain_n, path_len));
    else if (suite == "all") {
        append(verify_theorem1(sn, threads));
        append(verify_prop7(sn));
        append(verify_theorem3(sn, threads));
        append(verify_sec5(sn));
        append(verify_sec6(dec, sn));
        append(verify_pasep(chain_n, path_len));
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return out;
}

}  // namespace permstat

#endif
