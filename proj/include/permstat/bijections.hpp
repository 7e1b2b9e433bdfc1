#ifndef PERMSTAT_BIJECTIONS_HPP
#define PERMSTAT_BIJECTIONS_HPP

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permstat/multipoly.hpp"
#include "permstat/paths.hpp"
#include "permstat/permutation.hpp"
#include "permstat/stats.hpp"

namespace permstat {

namespace detail {

// sorted ascending; remove and return the element of the given 0-based rank
inline int take_ranked(std::vector<int>& sorted, int rank) {
    assert(rank >= 0 && rank < static_cast<int>(sorted.size()));
    int v = sorted[static_cast<std::size_t>(rank)];
    sorted.erase(sorted.begin() + rank);
    return v;
}

inline void insert_sorted(std::vector<int>& sorted, int v) {
    sorted.insert(std::lower_bound(sorted.begin(), sorted.end(), v), v);
}

// Step classification shared by the Foata-Zeilberger map and the two-rowed
// construction: N opens an upper and a lower arc, S closes both, E touches
// only upper arcs, EBar only lower ones.
inline Step fz_step(const Permutation& p, const Permutation& pinv, int i) {
    int v = p(i), w = pinv(i);
    if (i < v && i < w) return Step::N;
    if (i <= v && i >= w) return Step::E;
    if (i > v && i < w) return Step::EBar;
    return Step::S;
}

struct WeightExps {
    int y = 0;
    int p = 0;
    int q = 0;
};

// weights of both bijections are monomials y^{0,1} p^a q^b with coefficient 1
inline WeightExps weight_exponents(const MultiPoly& w) {
    auto mono = w.unit_monomial();
    if (!mono) throw std::invalid_argument("WeightedPath: weight is not a unit monomial");
    if (mono->y < 0 || mono->y > 1 || mono->p < 0 || mono->q < 0)
        throw std::invalid_argument("WeightedPath: weight exponents out of range");
    return {mono->y, mono->p, mono->q};
}

// Shared validation: n weights, unit monomials, y marks exactly the N/E
// steps, and the (p,q)-degree of step i is h_i for N/E and h_i - 1 for
// S/EBar.
inline std::vector<WeightExps> validate_weights(const WeightedPath& w) {
    int n = w.path.length();
    if (static_cast<int>(w.weights.size()) != n)
        throw std::invalid_argument("WeightedPath: weight count differs from path length");
    std::vector<int> h = w.path.heights();
    std::vector<WeightExps> exps;
    exps.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        WeightExps e = weight_exponents(w.weights[static_cast<std::size_t>(i) - 1]);
        Step s = w.path.step(i);
        bool up = s == Step::N || s == Step::E;
        if (e.y != (up ? 1 : 0))
            throw std::invalid_argument("WeightedPath: y-marking does not match step kind");
        int bound = up ? h[static_cast<std::size_t>(i) - 1] : h[static_cast<std::size_t>(i) - 1] - 1;
        if (e.p + e.q != bound)
            throw std::invalid_argument("WeightedPath: weight degree violates the height bound");
        exps.push_back(e);
    }
    return exps;
}

// Insertion engine shared by the inverse Francon-Viennot map and the inverse
// of the two-rowed construction.  Values 1..n are inserted into a word whose
// gaps (slots) hold the values still to come; moves[i-1] gives the step kind
// of value i and the 0-based index of the slot it uses.  The word always
// ends with a slot and never has two adjacent slots.
inline Permutation insert_by_slots(const std::vector<std::pair<Step, int>>& moves) {
    int n = static_cast<int>(moves.size());
    std::vector<int> word{0};  // 0 marks a slot
    for (int i = 1; i <= n; ++i) {
        auto [kind, s] = moves[static_cast<std::size_t>(i) - 1];
        std::vector<int> slots;
        for (int pos = 0; pos < static_cast<int>(word.size()); ++pos)
            if (word[static_cast<std::size_t>(pos)] == 0) slots.push_back(pos);
        int m = static_cast<int>(slots.size());
        bool up = kind == Step::N || kind == Step::E;
        int allowed = up ? m : m - 1;  // S/EBar need a placed value after the slot
        if (s < 0 || s >= allowed)
            throw std::invalid_argument("insert_by_slots: slot rank out of range");
        auto at = word.begin() + slots[static_cast<std::size_t>(s)];
        switch (kind) {
            case Step::N:  // valley: future values on both sides
                at = word.insert(at + 1, i);
                word.insert(at + 1, 0);
                break;
            case Step::E:  // double ascent: placed value (or word start) left, slot right
                word.insert(at, i);
                break;
            case Step::EBar:  // double descent: slot left, placed value right
                word.insert(at + 1, i);
                break;
            case Step::S:  // peak: fills the slot
                *at = i;
                break;
        }
    }
    assert(!word.empty() && word.back() == 0);
    word.pop_back();
    assert(std::count(word.begin(), word.end(), 0) == 0);
    return Permutation(std::move(word));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Foata-Zeilberger: permutation -> weighted bicolored Motzkin path tracking
// (weak exceedances, crossings, nestings).  Step i carries
// y p^{A+(i)} q^{C+(i)} for N/E and p^{A-(i)} q^{C-(i)} for S/EBar, so the
// weight product is y^wex q^crossings p^nestings.
// ---------------------------------------------------------------------------

inline WeightedPath fz_map(const Permutation& p) {
    int n = p.n();
    Permutation pinv = p.inverse();
    StatProfile prof = stat_profile(p);
    std::vector<Step> steps;
    std::vector<MultiPoly> weights;
    steps.reserve(static_cast<std::size_t>(n));
    weights.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Step s = detail::fz_step(p, pinv, i);
        steps.push_back(s);
        std::size_t ix = static_cast<std::size_t>(i) - 1;
        if (s == Step::N || s == Step::E)
            weights.push_back(MultiPoly::monomial(BigInt(1), prof.c_plus[ix], prof.a_plus[ix], 1));
        else
            weights.push_back(MultiPoly::monomial(BigInt(1), prof.c_minus[ix], prof.a_minus[ix], 0));
    }
    return WeightedPath{MotzkinPath(std::move(steps)), std::move(weights)};
}

// Inverse map.  Upper arcs are rebuilt scanning right to left: E and S steps
// contribute open arc heads, each N/E step claims the (q-exponent + 1)-th
// smallest open head as its image.  Lower arcs are rebuilt left to right
// with the p-exponent rank.  Inputs outside the image are rejected.
inline Permutation fz_inverse(const WeightedPath& w) {
    std::vector<detail::WeightExps> exps = detail::validate_weights(w);
    int n = w.path.length();
    std::vector<int> sigma(static_cast<std::size_t>(n), 0);

    std::vector<int> open;  // upper heads, sorted
    for (int t = n; t >= 1; --t) {
        Step s = w.path.step(t);
        if (s == Step::E || s == Step::S) detail::insert_sorted(open, t);
        if (s == Step::N || s == Step::E)
            sigma[static_cast<std::size_t>(t) - 1] =
                detail::take_ranked(open, exps[static_cast<std::size_t>(t) - 1].q);
    }
    assert(open.empty());

    for (int t = 1; t <= n; ++t) {
        Step s = w.path.step(t);
        if (s == Step::S || s == Step::EBar)
            sigma[static_cast<std::size_t>(t) - 1] =
                detail::take_ranked(open, exps[static_cast<std::size_t>(t) - 1].p);
        if (s == Step::N || s == Step::EBar) detail::insert_sorted(open, t);
    }
    assert(open.empty());
    return Permutation(std::move(sigma));
}

// ---------------------------------------------------------------------------
// Francon-Viennot: permutation -> weighted bicolored Motzkin path read off
// the VALUES 1..n (with boundary values sigma(0) = 0, sigma(n+1) = n+1):
// valleys become N, double ascents E, double descents EBar, peaks S, and
// value i carries y^{[N/E]} p^{(31-2)(i)} q^{(2-31)(i)}.  The weight product
// is y^(n - des) p^(31-2) q^(2-31).
// ---------------------------------------------------------------------------

inline WeightedPath fv_map(const Permutation& p) {
    int n = p.n();
    auto ext = [&](int j) { return j == 0 ? 0 : (j == n + 1 ? n + 1 : p(j)); };
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) pos[static_cast<std::size_t>(p(j))] = j;
    PerValuePatterns pv = per_value_patterns(p);
    std::vector<Step> steps;
    std::vector<MultiPoly> weights;
    for (int i = 1; i <= n; ++i) {
        int j = pos[static_cast<std::size_t>(i)];
        int left = ext(j - 1), right = ext(j + 1);
        Step s;
        if (left > i && i < right) s = Step::N;
        else if (left < i && i < right) s = Step::E;
        else if (left > i && i > right) s = Step::EBar;
        else s = Step::S;
        steps.push_back(s);
        int y = (s == Step::N || s == Step::E) ? 1 : 0;
        std::size_t ix = static_cast<std::size_t>(i) - 1;
        weights.push_back(MultiPoly::monomial(BigInt(1), pv.p2_31[ix], pv.p31_2[ix], y));
    }
    return WeightedPath{MotzkinPath(std::move(steps)), std::move(weights)};
}

// Inverse map: insert values 1..n into the growing word, choosing the slot
// of rank (31-2)(i) = p-exponent; the q-exponent is redundant given the
// height bound and is validated by validate_weights.
inline Permutation fv_inverse(const WeightedPath& w) {
    std::vector<detail::WeightExps> exps = detail::validate_weights(w);
    std::vector<std::pair<Step, int>> moves;
    moves.reserve(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        moves.emplace_back(w.path.step(static_cast<int>(i) + 1), exps[i].p);
    return detail::insert_by_slots(moves);
}

// ---------------------------------------------------------------------------
// Direct two-rowed-array construction sending (descents, 31-2, 2-31) to
// (n - wex, nestings, crossings): descent beginnings are matched to descent
// ends (bottom values below their column index), ascent beginnings to the
// remaining values.
// ---------------------------------------------------------------------------

inline Permutation direct_map(const Permutation& p) {
    int n = p.n();
    auto ext = [&](int j) { return j == 0 ? 0 : (j == n + 1 ? n + 1 : p(j)); };
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) pos[static_cast<std::size_t>(p(j))] = j;
    PerValuePatterns pv = per_value_patterns(p);

    std::vector<int> sigma(static_cast<std::size_t>(n), 0);

    // descent beginnings, ascending: bottom value is the ((31-2)(i)+1)-th
    // smallest descent end not yet chosen
    std::vector<int> descent_ends;
    for (int i = 1; i <= n; ++i)
        if (ext(pos[static_cast<std::size_t>(i)] - 1) > i) descent_ends.push_back(i);
    std::sort(descent_ends.begin(), descent_ends.end());
    for (int i = 1; i <= n; ++i) {
        if (ext(pos[static_cast<std::size_t>(i)] + 1) < i) {  // beginning of a descent
            int rank = pv.p31_2[static_cast<std::size_t>(i) - 1];
            assert(rank < static_cast<int>(descent_ends.size()));
            int v = detail::take_ranked(descent_ends, rank);
            assert(v < i);
            sigma[static_cast<std::size_t>(i) - 1] = v;
        }
    }
    assert(descent_ends.empty());

    // ascent beginnings, descending: heads (non-descent-ends) open as they
    // are passed; the ((2-31)(i)+1)-th smallest open head is claimed
    std::vector<int> open;
    for (int t = n; t >= 1; --t) {
        if (ext(pos[static_cast<std::size_t>(t)] - 1) < t) detail::insert_sorted(open, t);
        if (ext(pos[static_cast<std::size_t>(t)] + 1) > t) {  // beginning of an ascent
            int rank = pv.p2_31[static_cast<std::size_t>(t) - 1];
            assert(rank < static_cast<int>(open.size()));
            int v = detail::take_ranked(open, rank);
            assert(v >= t);
            sigma[static_cast<std::size_t>(t) - 1] = v;
        }
    }
    assert(open.empty());
    return Permutation(std::move(sigma));
}

// Inverse of the two-rowed construction: read the step kind and the
// per-index nesting counts off tau's chord diagram and replay the word
// insertion.
inline Permutation direct_inverse(const Permutation& tau) {
    int n = tau.n();
    Permutation tinv = tau.inverse();
    StatProfile prof = stat_profile(tau);
    std::vector<std::pair<Step, int>> moves;
    moves.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Step s = detail::fz_step(tau, tinv, i);
        std::size_t ix = static_cast<std::size_t>(i) - 1;
        bool up = s == Step::N || s == Step::E;
        moves.emplace_back(s, up ? prof.a_plus[ix] : prof.a_minus[ix]);
    }
    return detail::insert_by_slots(moves);
}

// Left-right reversal (sigma(n), ..., sigma(1)).
inline Permutation reverse_perm(const Permutation& p) {
    std::vector<int> v = p.one_line();
    std::reverse(v.begin(), v.end());
    return Permutation(std::move(v));
}

}  // namespace permstat

#endif
