#ifndef PERMSTAT_STATS_HPP
#define PERMSTAT_STATS_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

// ---------------------------------------------------------------------------
// Statistics of plain permutations.
//
// Chord-diagram conventions: an arc runs from i to sigma(i), drawn above the
// line when sigma(i) >= i and below otherwise.  Per-index sets:
//   C+(i) = { j : j < i <= sigma(j) < sigma(i) }   upper crossings
//   C-(i) = { j : j > i > sigma(j) > sigma(i) }    lower crossings
//   A+(i) = { j : j < i <= sigma(i) < sigma(j) }   upper nestings
//   A-(i) = { j : j > i > sigma(i) > sigma(j) }    lower nestings
//   A+-(i) = disjoint upper/lower arc pairs, counted at the lower arc
// ---------------------------------------------------------------------------

inline int weak_exceedances(const Permutation& p) {
    int count = 0;
    for (int i = 1; i <= p.n(); ++i)
        if (p(i) >= i) ++count;
    return count;
}

inline int descents(const Permutation& p) {
    int count = 0;
    for (int i = 1; i < p.n(); ++i)
        if (p(i) > p(i + 1)) ++count;
    return count;
}

inline int crossings(const Permutation& p) {
    int n = p.n(), count = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j < i && i <= p(j) && p(j) < p(i)) ++count;
            if (j > i && i > p(j) && p(j) > p(i)) ++count;
        }
    }
    return count;
}

inline int nestings(const Permutation& p) {
    int n = p.n(), count = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j < i && i <= p(i) && p(i) < p(j)) ++count;
            if (j > i && i > p(i) && p(i) > p(j)) ++count;
        }
    }
    return count;
}

inline int alignments(const Permutation& p) {
    int n = p.n(), apm = 0;
    for (int i = 1; i <= n; ++i) {
        if (p(i) >= i) continue;
        for (int j = 1; j <= n; ++j) {
            if (j <= p(j) && p(j) < p(i)) ++apm;  // upper arc entirely left of the lower arc
            if (i < j && j <= p(j)) ++apm;        // upper arc entirely right
        }
    }
    return nestings(p) + apm;
}

enum class Pattern { P31_2, P2_31, P13_2, P2_13 };

// Vincular patterns: the "31" / "13" pair occupies adjacent positions, the
// remaining letter may sit anywhere on its side.
inline int pattern_count(const Permutation& p, Pattern pat) {
    int n = p.n(), count = 0;
    switch (pat) {
        case Pattern::P31_2:
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (p(i) > p(j) && p(j) > p(i + 1)) ++count;
            break;
        case Pattern::P2_31:
            for (int j = 1; j < n; ++j)
                for (int i = 1; i < j; ++i)
                    if (p(j + 1) < p(i) && p(i) < p(j)) ++count;
            break;
        case Pattern::P13_2:
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (p(i + 1) > p(j) && p(j) > p(i)) ++count;
            break;
        case Pattern::P2_13:
            for (int j = 1; j < n; ++j)
                for (int i = 1; i < j; ++i)
                    if (p(j) < p(i) && p(i) < p(j + 1)) ++count;
            break;
    }
    return count;
}

// Per-value vincular counts with boundary values sigma(0) = 0 and
// sigma(n+1) = n+1.  For the value i at position j, p31_2[i-1] counts
// adjacent descent pairs left of j straddling i, p2_31[i-1] the same to the
// right.  Array sums equal the total pattern counts.
struct PerValuePatterns {
    std::vector<int> p31_2;
    std::vector<int> p2_31;
};

inline PerValuePatterns per_value_patterns(const Permutation& p) {
    int n = p.n();
    auto ext = [&](int j) { return j == 0 ? 0 : (j == n + 1 ? n + 1 : p(j)); };
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) pos[static_cast<std::size_t>(p(j))] = j;
    PerValuePatterns out;
    out.p31_2.assign(static_cast<std::size_t>(n), 0);
    out.p2_31.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int j = pos[static_cast<std::size_t>(i)];
        for (int k = 1; k <= n; ++k) {
            if (ext(k - 1) > i && i > ext(k)) {
                if (k < j) ++out.p31_2[static_cast<std::size_t>(i) - 1];
                if (k > j) ++out.p2_31[static_cast<std::size_t>(i) - 1];
            }
        }
    }
    return out;
}

// All per-index statistics in one structure.  Arrays are 0-based carriers of
// the 1-indexed quantities; h[i-1] counts the arcs spanning position i
// (h_i = #{ j < i : sigma(j) >= i }).
struct StatProfile {
    int wex = 0;
    int des = 0;
    std::vector<int> c_plus, c_minus, a_plus, a_minus, a_pm, h;

    int crossings() const {
        int s = 0;
        for (std::size_t i = 0; i < c_plus.size(); ++i) s += c_plus[i] + c_minus[i];
        return s;
    }
    int nestings() const {
        int s = 0;
        for (std::size_t i = 0; i < a_plus.size(); ++i) s += a_plus[i] + a_minus[i];
        return s;
    }
    int alignments() const {
        int s = nestings();
        for (int v : a_pm) s += v;
        return s;
    }
};

inline StatProfile stat_profile(const Permutation& p) {
    int n = p.n();
    StatProfile out;
    out.wex = weak_exceedances(p);
    out.des = descents(p);
    auto zero = std::vector<int>(static_cast<std::size_t>(n), 0);
    out.c_plus = zero;
    out.c_minus = zero;
    out.a_plus = zero;
    out.a_minus = zero;
    out.a_pm = zero;
    out.h = zero;
    for (int i = 1; i <= n; ++i) {
        auto& cp = out.c_plus[static_cast<std::size_t>(i) - 1];
        auto& cm = out.c_minus[static_cast<std::size_t>(i) - 1];
        auto& ap = out.a_plus[static_cast<std::size_t>(i) - 1];
        auto& am = out.a_minus[static_cast<std::size_t>(i) - 1];
        auto& pm = out.a_pm[static_cast<std::size_t>(i) - 1];
        auto& h = out.h[static_cast<std::size_t>(i) - 1];
        for (int j = 1; j <= n; ++j) {
            if (j < i && p(j) >= i) ++h;
            if (j < i && i <= p(j) && p(j) < p(i)) ++cp;
            if (j > i && i > p(j) && p(j) > p(i)) ++cm;
            if (j < i && i <= p(i) && p(i) < p(j)) ++ap;
            if (j > i && i > p(i) && p(i) > p(j)) ++am;
            if (p(i) < i) {
                if (j <= p(j) && p(j) < p(i)) ++pm;
                if (i < j && j <= p(j)) ++pm;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Statistics of decorated permutations.  A plus-colored fixed point behaves
// as a degenerate upper arc, a minus-colored one as a degenerate lower arc;
// crossings never involve fixed points and coincide with the underlying
// permutation's crossings.
// ---------------------------------------------------------------------------

struct DecoratedStats {
    int wex = 0;
    int nonexc = 0;  // n - wex
    int crossings = 0;
    int nestings = 0;
    int alignments = 0;
};

inline DecoratedStats decorated_stats(const DecoratedPermutation& d) {
    int n = d.n();
    DecoratedStats out;
    for (int i = 1; i <= n; ++i)
        if (d.le_plus(i)) ++out.wex;
    out.nonexc = n - out.wex;
    int ne = 0, apm = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i < j && j <= d(i) && d(i) < d(j)) ++out.crossings;
            if (j > i && i > d(j) && d(j) > d(i)) ++out.crossings;
            if (j < i && d.le_plus(i) && d(i) < d(j)) ++ne;
            if (j > i && d.ge_minus(i) && d(i) > d(j)) ++ne;
            if (d.ge_minus(i) && d.le_plus(j)) {
                if (d(j) < d(i)) ++apm;  // colored-lower point/arc with upper arc to its left
                if (j > i) ++apm;        // and with upper arc to its right
            }
        }
    }
    out.nestings = ne;
    out.alignments = ne + apm;
    return out;
}

// #{ i : sigma(i) < i }, independent of coloring
inline int strict_nonexceedances(const Permutation& p) {
    int count = 0;
    for (int i = 1; i <= p.n(); ++i)
        if (p(i) < i) ++count;
    return count;
}

}  // namespace permstat

#endif
