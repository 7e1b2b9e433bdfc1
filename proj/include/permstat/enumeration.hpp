#ifndef PERMSTAT_ENUMERATION_HPP
#define PERMSTAT_ENUMERATION_HPP

#include <algorithm>
#include <array>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "permstat/bigint.hpp"
#include "permstat/permutation.hpp"
#include "permstat/stats.hpp"

namespace permstat {

inline constexpr int kDefaultEnumerationLimit = 9;

// Exhaustive joint-distribution table keyed by (n, k, l, m).
struct StatTable {
    using Key = std::array<int, 4>;
    std::map<Key, BigInt> entries;

    void add(const Key& key, const BigInt& count) {
        auto [it, inserted] = entries.emplace(key, count);
        if (!inserted) it->second += count;
    }

    BigInt total() const {
        BigInt t(0);
        for (const auto& [k, c] : entries) t += c;
        return t;
    }

    friend bool operator==(const StatTable& a, const StatTable& b) {
        return a.entries == b.entries;
    }
    friend bool operator!=(const StatTable& a, const StatTable& b) { return !(a == b); }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [key, count] : entries) {
            nlohmann::ordered_json rec;
            rec["n"] = key[0];
            rec["k"] = key[1];
            rec["l"] = key[2];
            rec["m"] = key[3];
            rec["count"] = count.to_string();
            arr.push_back(std::move(rec));
        }
        return arr;
    }
};

namespace detail {

inline void check_enumeration_limit(int n, int limit) {
    if (n < 0) throw std::invalid_argument("enumeration: negative n");
    if (n > limit)
        throw std::invalid_argument("enumeration: n = " + std::to_string(n) +
                                    " exceeds the configured limit " + std::to_string(limit));
}

// Run fn over all permutations of [n], partitioned by first entry when more
// than one thread is requested.  fn fills a StatTable; partial tables are
// merged in deterministic (first-entry) order.
template <class Fn>
StatTable enumerate_table(int n, int threads, Fn&& fn) {
    StatTable table;
    if (n == 0) {
        fn(Permutation(), table);
        return table;
    }
    if (threads <= 1 || n < 4) {
        for_each_permutation(n, [&](const Permutation& p) { fn(p, table); });
        return table;
    }
    std::vector<std::future<StatTable>> parts;
    for (int first = 1; first <= n; ++first) {
        parts.push_back(std::async(std::launch::async, [n, first, &fn]() {
            StatTable local;
            std::vector<int> v(static_cast<std::size_t>(n));
            v[0] = first;
            int fill = 1;
            for (int x = 1; x <= n; ++x)
                if (x != first) v[static_cast<std::size_t>(fill++)] = x;
            do {
                fn(Permutation(v), local);
            } while (std::next_permutation(v.begin() + 1, v.end()));
            return local;
        }));
    }
    StatTable table_out;
    for (auto& f : parts)
        for (const auto& [key, count] : f.get().entries) table_out.add(key, count);
    return table_out;
}

}  // namespace detail

// B(n,k,l,m): permutations of [n] with k weak exceedances, l crossings and
// m nestings.
inline StatTable enumerate_B_table(int n, int limit = kDefaultEnumerationLimit, int threads = 1) {
    detail::check_enumeration_limit(n, limit);
    return detail::enumerate_table(n, threads, [n](const Permutation& p, StatTable& t) {
        t.add({n, weak_exceedances(p), crossings(p), nestings(p)}, BigInt(1));
    });
}

// D(n,k,l,m): permutations of [n] with n-k descents, l occurrences of 31-2
// and m occurrences of 2-31.
inline StatTable enumerate_D_table(int n, int limit = kDefaultEnumerationLimit, int threads = 1) {
    detail::check_enumeration_limit(n, limit);
    return detail::enumerate_table(n, threads, [n](const Permutation& p, StatTable& t) {
        t.add({n, n - descents(p), pattern_count(p, Pattern::P31_2),
               pattern_count(p, Pattern::P2_31)},
              BigInt(1));
    });
}

// Decorated permutations of [n] keyed by (n, k, l, m) with k weak
// exceedances, l = crossings + strict non-exceedances, m nestings; the
// grading matched by the two-variable decorated continued fraction.
inline StatTable enumerate_decorated_table(int n, int limit = kDefaultEnumerationLimit) {
    detail::check_enumeration_limit(n, limit);
    StatTable table;
    for_each_decorated_permutation(n, [&](const DecoratedPermutation& d) {
        DecoratedStats s = decorated_stats(d);
        table.add({n, s.wex, s.crossings + strict_nonexceedances(d.perm()), s.nestings},
                  BigInt(1));
    });
    return table;
}

}  // namespace permstat

#endif
