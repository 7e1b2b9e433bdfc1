#ifndef PERMSTAT_PASEP_HPP
#define PERMSTAT_PASEP_HPP

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permstat/genfun.hpp"
#include "permstat/multipoly.hpp"
#include "permstat/paths.hpp"
#include "permstat/rational.hpp"

namespace permstat {

// ---------------------------------------------------------------------------
// Partially asymmetric exclusion process on n cells: black particles enter on
// the left at rate alpha, hop right at rate 1 and left at rate q, and leave
// on the right at rate beta.  All arithmetic is exact rational; the
// stationary-distribution identities are checked as equations.
// ---------------------------------------------------------------------------

// Row of n cells, each black or white.  Configurations are ordered by the
// binary reading of the row (white = 0, black = 1, leftmost cell most
// significant); the text form uses '.' for white and '#' for black.
class BasicConfig {
public:
    BasicConfig() = default;
    explicit BasicConfig(std::vector<bool> cells) : cells_(std::move(cells)) {}

    static BasicConfig from_index(int n, unsigned index) {
        std::vector<bool> cells(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) cells[static_cast<std::size_t>(i)] = (index >> (n - 1 - i)) & 1u;
        return BasicConfig(std::move(cells));
    }

    static BasicConfig parse(std::string_view text) {
        std::vector<bool> cells;
        for (char c : text) {
            if (c == '.') cells.push_back(false);
            else if (c == '#') cells.push_back(true);
            else throw std::invalid_argument("BasicConfig: expected '.' or '#'");
        }
        return BasicConfig(std::move(cells));
    }

    int n() const { return static_cast<int>(cells_.size()); }
    bool black(int i) const { return cells_.at(static_cast<std::size_t>(i) - 1); }  // 1-indexed

    int particle_count() const {
        int c = 0;
        for (bool b : cells_) c += b ? 1 : 0;
        return c;
    }

    unsigned index() const {
        unsigned idx = 0;
        for (bool b : cells_) idx = (idx << 1) | (b ? 1u : 0u);
        return idx;
    }

    std::string to_string() const {
        std::string out;
        for (bool b : cells_) out.push_back(b ? '#' : '.');
        return out;
    }

    friend bool operator==(const BasicConfig& a, const BasicConfig& b) {
        return a.cells_ == b.cells_;
    }

private:
    std::vector<bool> cells_;
};

struct PasepChain {
    int n = 0;
    Rational alpha, beta, q;
    std::vector<std::vector<Rational>> transition;  // 2^n x 2^n, rows sum to 1
};

inline PasepChain build_chain(int n, const Rational& alpha, const Rational& beta,
                              const Rational& q) {
    if (n < 1) throw std::invalid_argument("build_chain: need n >= 1");
    if (!(alpha > Rational(0)) || alpha > Rational(1))
        throw std::invalid_argument("build_chain: need 0 < alpha <= 1");
    if (!(beta > Rational(0)) || beta > Rational(1))
        throw std::invalid_argument("build_chain: need 0 < beta <= 1");
    if (q < Rational(0) || q > Rational(1))
        throw std::invalid_argument("build_chain: need 0 <= q <= 1");
    unsigned states = 1u << n;
    Rational unit = Rational(1) / Rational(n + 1);
    PasepChain chain{n, alpha, beta, q, {}};
    chain.transition.assign(states, std::vector<Rational>(states));
    for (unsigned x = 0; x < states; ++x) {
        Rational off(0);
        auto put = [&](unsigned y, const Rational& p) {
            chain.transition[x][y] += p;
            off += p;
        };
        // internal hops: black-white swaps right at rate 1, white-black left at rate q
        for (int i = 0; i < n - 1; ++i) {
            unsigned hi = 1u << (n - 1 - i), lo = 1u << (n - 2 - i);
            bool a = x & hi, b = x & lo;
            if (a && !b) put(x ^ hi ^ lo, unit);
            if (!a && b) put(x ^ hi ^ lo, q * unit);
        }
        // entry at the left cell, exit at the right cell
        unsigned left = 1u << (n - 1);
        if (!(x & left)) put(x | left, alpha * unit);
        if (x & 1u) put(x ^ 1u, beta * unit);
        chain.transition[x][x] += Rational(1) - off;
    }
    return chain;
}

// Unique stationary distribution: solve pi P = pi with sum(pi) = 1 by exact
// Gaussian elimination.  Result indexed by configuration index.
inline std::vector<Rational> stationary(const PasepChain& chain) {
    std::size_t m = chain.transition.size();
    // rows of (P^T - I), last balance equation replaced by sum(pi) = 1
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (std::size_t r = 0; r + 1 < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            a[r][c] = chain.transition[c][r];
            if (r == c) a[r][c] -= Rational(1);
        }
    }
    for (std::size_t c = 0; c < m; ++c) a[m - 1][c] = Rational(1);
    a[m - 1][m] = Rational(1);

    for (std::size_t col = 0, row = 0; col < m && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && a[pivot][col].is_zero()) ++pivot;
        if (pivot == m) continue;
        std::swap(a[row], a[pivot]);
        Rational inv = a[row][col].reciprocal();
        for (std::size_t c = col; c <= m; ++c) a[row][c] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
    }
    std::vector<Rational> pi(m);
    for (std::size_t r = 0; r < m; ++r) pi[r] = a[r][m];

    // the chain is irreducible for the accepted parameters; verify exactly
    Rational total(0);
    for (const auto& v : pi) total += v;
    assert(total == Rational(1));
    for (std::size_t c = 0; c < m; ++c) {
        Rational balance(0);
        for (std::size_t r = 0; r < m; ++r) balance += pi[r] * chain.transition[r][c];
        assert(balance == pi[c]);
        (void)balance;
    }
    (void)total;
    return pi;
}

namespace detail {

inline Rational ring_one(const Rational&) { return Rational(1); }
inline MultiPoly ring_one(const MultiPoly&) { return MultiPoly::one(); }

template <class R>
R ring_qbracket(const R& q, int h) {
    R sum = ring_one(q) - ring_one(q);  // zero
    R p = ring_one(q);
    for (int t = 0; t < h; ++t) {
        sum += p;
        p = p * q;
    }
    return sum;
}

template <class R>
R ring_qpow(const R& q, int e) {
    R r = ring_one(q);
    for (int t = 0; t < e; ++t) r = r * q;
    return r;
}

// weight of a step starting at height h, with 1/alpha and 1/beta supplied
template <class R>
R step_weight_impl(Step kind, int h, const R& q, const R& inv_alpha, const R& inv_beta) {
    R one = ring_one(q);
    switch (kind) {
        case Step::N:
            return ring_qbracket(q, h + 1);
        case Step::EBar:
            return ring_qbracket(q, h) + ring_qpow(q, h) * inv_alpha;
        case Step::E:
            return ring_qbracket(q, h) + ring_qpow(q, h) * inv_beta;
        case Step::S:
            return ring_qbracket(q, h) + ring_qpow(q, h) * inv_alpha * inv_beta -
                   ring_qpow(q, h - 1) * (inv_alpha - one) * (inv_beta - one);
    }
    throw std::logic_error("step_weight: bad step");
}

inline void check_step_height(Step kind, int h) {
    if (h < 0) throw std::invalid_argument("step_weight: negative height");
    if (kind == Step::S && h < 1) throw std::invalid_argument("step_weight: S step at height 0");
}

// Sum of path weights over all bicolored Motzkin paths mapping to the given
// configuration (black cells take N/E, white cells take S/EBar), by dynamic
// programming over (position, height).
template <class R>
R config_weight_impl(const BasicConfig& x, const R& q, const R& inv_alpha, const R& inv_beta) {
    int n = x.n();
    R zero = ring_one(q) - ring_one(q);
    int hmax = n / 2 + 1;
    std::vector<R> cur(static_cast<std::size_t>(hmax) + 2, zero);
    std::vector<bool> live(cur.size(), false);
    cur[0] = ring_one(q);
    live[0] = true;
    for (int i = 1; i <= n; ++i) {
        std::vector<R> next(cur.size(), zero);
        std::vector<bool> nlive(cur.size(), false);
        for (int h = 0; h <= hmax; ++h) {
            if (!live[static_cast<std::size_t>(h)]) continue;
            const R& w = cur[static_cast<std::size_t>(h)];
            auto add = [&](int nh, R val) {
                next[static_cast<std::size_t>(nh)] += val;
                nlive[static_cast<std::size_t>(nh)] = true;
            };
            if (x.black(i)) {
                if (h + 1 <= hmax)
                    add(h + 1, w * step_weight_impl(Step::N, h, q, inv_alpha, inv_beta));
                add(h, w * step_weight_impl(Step::E, h, q, inv_alpha, inv_beta));
            } else {
                add(h, w * step_weight_impl(Step::EBar, h, q, inv_alpha, inv_beta));
                if (h >= 1) add(h - 1, w * step_weight_impl(Step::S, h, q, inv_alpha, inv_beta));
            }
        }
        cur = std::move(next);
        live = std::move(nlive);
    }
    return live[0] ? cur[0] : zero;
}

}  // namespace detail

inline Rational step_weight(Step kind, int h, const Rational& alpha, const Rational& beta,
                            const Rational& q) {
    if (alpha.is_zero() || beta.is_zero())
        throw std::invalid_argument("step_weight: alpha and beta must be nonzero");
    detail::check_step_height(kind, h);
    return detail::step_weight_impl(kind, h, q, alpha.reciprocal(), beta.reciprocal());
}

// alpha = beta = 1: every step weight collapses to [h+1]_q
inline MultiPoly step_weight_symbolic(Step kind, int h) {
    detail::check_step_height(kind, h);
    return detail::step_weight_impl(kind, h, MultiPoly::var_q(), MultiPoly::one(),
                                    MultiPoly::one());
}

inline Rational config_weight(const BasicConfig& x, const Rational& alpha, const Rational& beta,
                              const Rational& q) {
    if (alpha.is_zero() || beta.is_zero())
        throw std::invalid_argument("config_weight: alpha and beta must be nonzero");
    return detail::config_weight_impl(x, q, alpha.reciprocal(), beta.reciprocal());
}

inline MultiPoly config_weight_symbolic(const BasicConfig& x) {
    return detail::config_weight_impl(x, MultiPoly::var_q(), MultiPoly::one(), MultiPoly::one());
}

inline Rational partition_fn(int n, const Rational& alpha, const Rational& beta,
                             const Rational& q) {
    if (n < 0) throw std::invalid_argument("partition_fn: negative n");
    Rational z(0);
    for (unsigned idx = 0; idx < (1u << n); ++idx)
        z += config_weight(BasicConfig::from_index(n, idx), alpha, beta, q);
    return z;
}

inline MultiPoly partition_fn_symbolic(int n) {
    if (n < 0) throw std::invalid_argument("partition_fn: negative n");
    MultiPoly z;
    for (unsigned idx = 0; idx < (1u << n); ++idx)
        z += config_weight_symbolic(BasicConfig::from_index(n, idx));
    return z;
}

// Stationary-measure identity pi(X) * Z_n == W(X), checked exactly for every
// configuration.
inline CheckReport verify_stationary(int n, const Rational& alpha, const Rational& beta,
                                     const Rational& q) {
    if (n < 1 || n > 6) throw std::invalid_argument("verify_stationary: need 1 <= n <= 6");
    PasepChain chain = build_chain(n, alpha, beta, q);
    std::vector<Rational> pi = stationary(chain);
    Rational z = partition_fn(n, alpha, beta, q);
    for (unsigned idx = 0; idx < (1u << n); ++idx) {
        BasicConfig x = BasicConfig::from_index(n, idx);
        Rational w = config_weight(x, alpha, beta, q);
        if (pi[idx] * z != w) {
            std::ostringstream os;
            os << "stationary mismatch at n=" << n << " X=" << x.to_string() << " alpha="
               << alpha << " beta=" << beta << " q=" << q << ": pi*Z=" << (pi[idx] * z)
               << " W=" << w;
            return {false, os.str()};
        }
    }
    return {true, "pi(X) * Z == W(X) for all X at n=" + std::to_string(n)};
}

// ---------------------------------------------------------------------------
// Height-shift bijection between uniformly weighted paths (every step
// [h+1]_q at start height h) of length n with k up/level-black steps and
// paths of length n+1 whose N/E steps weigh [h+1]_q and S/EBar steps [h]_q,
// with k+1 up/level-black steps.  A virtual N is prepended and a virtual S
// appended; each new step classifies the (previous, current) pair.
// ---------------------------------------------------------------------------

namespace detail {

inline bool step_up(Step s) { return s == Step::N || s == Step::E; }     // becomes a black cell
inline bool step_asc(Step s) { return s == Step::N || s == Step::EBar; }  // raises the shifted path

inline Step combine(bool up_prev, bool asc_cur) {
    if (up_prev && asc_cur) return Step::N;
    if (up_prev && !asc_cur) return Step::E;
    if (!up_prev && asc_cur) return Step::EBar;
    return Step::S;
}

}  // namespace detail

// expects every weight to equal [h+1]_q at the step's start height
inline WeightedPath lemma7_map(const WeightedPath& w) {
    int n = w.path.length();
    if (static_cast<int>(w.weights.size()) != n)
        throw std::invalid_argument("lemma7_map: weight count differs from path length");
    std::vector<int> h = w.path.heights();
    for (int i = 1; i <= n; ++i) {
        if (w.weights[static_cast<std::size_t>(i) - 1] !=
            q_bracket(h[static_cast<std::size_t>(i) - 1] + 1))
            throw std::invalid_argument("lemma7_map: weight is not [h+1]_q");
    }
    std::vector<Step> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    bool up_prev = true;  // virtual leading N
    for (int i = 1; i <= n + 1; ++i) {
        bool asc = i <= n ? detail::step_asc(w.path.step(i)) : false;  // virtual trailing S
        out.push_back(detail::combine(up_prev, asc));
        if (i <= n) up_prev = detail::step_up(w.path.step(i));
    }
    std::vector<MultiPoly> weights = w.weights;
    weights.push_back(MultiPoly::one());
    return WeightedPath{MotzkinPath(std::move(out)), std::move(weights)};
}

inline WeightedPath lemma7_inverse(const WeightedPath& w) {
    int m = w.path.length();
    if (m < 1) throw std::invalid_argument("lemma7_inverse: empty path");
    if (static_cast<int>(w.weights.size()) != m)
        throw std::invalid_argument("lemma7_inverse: weight count differs from path length");
    int n = m - 1;
    // validate the image weight law: [h+1]_q on N/E, [h]_q on S/EBar
    std::vector<int> h = w.path.heights();
    for (int i = 1; i <= m; ++i) {
        Step s = w.path.step(i);
        int hh = h[static_cast<std::size_t>(i) - 1];
        MultiPoly expect = detail::step_up(s) ? q_bracket(hh + 1) : q_bracket(hh);
        if (w.weights[static_cast<std::size_t>(i) - 1] != expect)
            throw std::invalid_argument("lemma7_inverse: weights violate the shifted law");
    }
    if (w.weights[static_cast<std::size_t>(m) - 1] != MultiPoly::one())
        throw std::invalid_argument("lemma7_inverse: last weight must be 1");
    // step i of the preimage: ascent flag from shifted step i, up flag from
    // shifted step i+1; boundary flags must match the virtual N ... S frame
    if (!detail::step_up(w.path.step(1)))
        throw std::invalid_argument("lemma7_inverse: path not in the image (bad first step)");
    if (detail::step_asc(w.path.step(m)))
        throw std::invalid_argument("lemma7_inverse: path not in the image (bad last step)");
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        bool asc = detail::step_asc(w.path.step(i));
        bool up = detail::step_up(w.path.step(i + 1));
        steps.push_back(up ? (asc ? Step::N : Step::E) : (asc ? Step::EBar : Step::S));
    }
    std::vector<MultiPoly> weights(w.weights.begin(), w.weights.end() - 1);
    WeightedPath r{MotzkinPath(std::move(steps)), std::move(weights)};
    // round-trip safety: the reconstructed weights must again be [h+1]_q
    std::vector<int> rh = r.path.heights();
    for (int i = 1; i <= n; ++i) {
        if (r.weights[static_cast<std::size_t>(i) - 1] !=
            q_bracket(rh[static_cast<std::size_t>(i) - 1] + 1))
            throw std::invalid_argument("lemma7_inverse: preimage weights inconsistent");
    }
    return r;
}

// W(k,n) at alpha = beta = 1: total symbolic weight of configurations with k
// particles; equals Ehat_{k+1, n+1}(q).
inline MultiPoly w_kn_poly(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("w_kn_poly: need 0 <= k <= n");
    MultiPoly sum;
    for (unsigned idx = 0; idx < (1u << n); ++idx) {
        BasicConfig x = BasicConfig::from_index(n, idx);
        if (x.particle_count() == k) sum += config_weight_symbolic(x);
    }
    return sum;
}

}  // namespace permstat

#endif
