#ifndef PERMSTAT_GENFUN_HPP
#define PERMSTAT_GENFUN_HPP

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permstat/bigint.hpp"
#include "permstat/multipoly.hpp"
#include "permstat/permutation.hpp"
#include "permstat/series.hpp"
#include "permstat/stats.hpp"

namespace permstat {

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt r(1);
    for (int t = 1; t <= k; ++t) {
        r *= BigInt(n - k + t);
        auto [q, rem] = BigInt::divmod(r, BigInt(t));
        assert(rem.is_zero());
        r = q;
    }
    return r;
}

struct CheckReport {
    bool pass = true;
    std::string detail;
};

// q-Eulerian polynomial: coefficient of q^l counts permutations of [n] with
// k weak exceedances and l crossings (equivalently (k-1)(n-k) - l
// alignments).  q = 1 gives Eulerian numbers, q = 0 Narayana, q = -1
// binomial.
struct EulerianQPoly {
    int k = 0;
    int n = 0;
    MultiPoly poly;
};

// Closed form: q^{k-k^2} * sum_{i=0}^{k-1} (-1)^i [k-i]_q^n q^{k(i-1)}
// (C(n,i) q^{k-i} + C(n,i-1)).  The Laurent prefactor cancels; this is
// asserted, not assumed.
inline EulerianQPoly e_hat(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("e_hat: need 1 <= k <= n");
    MultiPoly sum;
    for (int i = 0; i < k; ++i) {
        MultiPoly term = q_bracket(k - i).pow(static_cast<unsigned>(n));
        MultiPoly paren = MultiPoly::monomial(binomial(n, i), k - i, 0, 0) +
                          MultiPoly::constant(binomial(n, i - 1));
        term = term * paren;
        term = term.shifted_q(k * (i - 1));
        if (i % 2 == 1) term = -term;
        sum += term;
    }
    MultiPoly poly = sum.shifted_q(k - k * k);
    if (poly.min_q_exp() < 0)
        throw std::logic_error("e_hat: Laurent prefactor did not cancel");
    if (poly.max_q_exp() > (k - 1) * (n - k))
        throw std::logic_error("e_hat: degree exceeds (k-1)(n-k)");
    return {k, n, std::move(poly)};
}

// F(q,p,x,y): continued fraction with b_h = y [h+1]_{p,q} + [h]_{p,q} and
// lambda_h = y [h]_{p,q}^2.  Coefficient of x^n y^k q^l p^m counts
// permutations of [n] with k weak exceedances, l crossings, m nestings.
inline CFSpec F_spec() {
    return CFSpec{
        [](int h) { return pq_bracket(h + 1) * MultiPoly::var_y() + pq_bracket(h); },
        [](int h) { return pq_bracket(h).pow(2) * MultiPoly::var_y(); },
    };
}

inline XSeries F_series(int order) { return cf_expand(F_spec(), order); }

// Ehat(q,x,y) = sum_{n,k} Ehat_{k,n}(q) y^k x^n assembled from the closed
// form; equals F(q,1,x,y) coefficientwise.
inline XSeries e_hat_series(int order) {
    XSeries s = XSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        MultiPoly c;
        for (int k = 1; k <= n; ++k)
            c += e_hat(k, n).poly * MultiPoly::monomial(BigInt(1), 0, 0, k);
        s.set_coeff(n, std::move(c));
    }
    return s;
}

// For each (k, l): the number of permutations of [n] with k weak exceedances
// and l alignments must equal the coefficient of q^{(k-1)(n-k)-l} in
// Ehat_{k,n}(q).
inline CheckReport alignment_coefficient_check(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("alignment_coefficient_check: need 1 <= n <= 8");
    std::vector<MultiPoly> observed(static_cast<std::size_t>(n) + 1);
    for_each_permutation(n, [&](const Permutation& p) {
        int k = weak_exceedances(p);
        int deg = (k - 1) * (n - k) - alignments(p);
        observed[static_cast<std::size_t>(k)] += MultiPoly::monomial(BigInt(1), deg, 0, 0);
    });
    for (int k = 1; k <= n; ++k) {
        EulerianQPoly expect = e_hat(k, n);
        if (observed[static_cast<std::size_t>(k)] != expect.poly) {
            std::ostringstream os;
            os << "alignment distribution differs from Ehat at n=" << n << " k=" << k << ": got "
               << observed[static_cast<std::size_t>(k)] << ", formula gives " << expect.poly;
            return {false, os.str()};
        }
    }
    return {true, "alignment coefficients match Ehat for n=" + std::to_string(n)};
}

// A_{k,n}(q) = sum_i C(n,i) q^{n-i-k} Ehat_{k,n-i}(q), the i chosen points
// being the minus-colored fixed points; terms with n-i < k vanish.
inline EulerianQPoly a_kn(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("a_kn: need 1 <= k <= n");
    MultiPoly sum;
    for (int i = 0; i + k <= n; ++i) {
        MultiPoly term = e_hat(k, n - i).poly.shifted_q(n - i - k);
        sum += term.scaled(binomial(n, i));
    }
    return {k, n, std::move(sum)};
}

// Decorated-permutation continued fraction with b_h = (1+y) [h+1] and
// lambda_h = y q [h]^2; single-variable uses [.]_q, two-variable [.]_{p,q}.
// Two-variable coefficient of x^n y^k q^l p^m counts decorated permutations
// with k weak exceedances, l = crossings + strict non-exceedances, and m
// nestings.
inline XSeries a_cf_series(int order, bool two_variable) {
    auto bracket = [two_variable](int h) { return two_variable ? pq_bracket(h) : q_bracket(h); };
    CFSpec spec{
        [bracket](int h) {
            MultiPoly b = bracket(h + 1);
            return b + b * MultiPoly::var_y();
        },
        [bracket](int h) {
            return bracket(h).pow(2) * MultiPoly::var_y() * MultiPoly::var_q();
        },
    };
    return cf_expand(spec, order);
}

}  // namespace permstat

#endif
