#ifndef PERMSTAT_PERMUTATION_HPP
#define PERMSTAT_PERMUTATION_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permstat {

// Permutation of [n] in one-line notation, 1-indexed.  n = 0 is the empty
// permutation.  Immutable after construction.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> one_line) : map_(std::move(one_line)) {
        int n = static_cast<int>(map_.size());
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int v : map_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("Permutation: not a bijection on [n]");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    // comma-separated one-line notation, e.g. "4,7,3,6,2,1,5"; "" is empty
    static Permutation parse(std::string_view text) {
        std::vector<int> vals;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            std::string_view tok = text.substr(pos, next - pos);
            if (tok.empty()) throw std::invalid_argument("Permutation: empty entry");
            long long v = 0;
            for (char c : tok) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("Permutation: bad character in entry");
                v = v * 10 + (c - '0');
                if (v > 1000000) throw std::invalid_argument("Permutation: entry out of range");
            }
            vals.push_back(static_cast<int>(v));
            pos = next + 1;
            if (pos == text.size() && next != text.size())
                throw std::invalid_argument("Permutation: trailing comma");
        }
        return Permutation(std::move(vals));
    }

    int n() const { return static_cast<int>(map_.size()); }

    // sigma(i), 1-indexed
    int operator()(int i) const { return map_.at(static_cast<std::size_t>(i - 1)); }

    const std::vector<int>& one_line() const { return map_; }

    Permutation inverse() const {
        std::vector<int> inv(map_.size());
        for (int i = 1; i <= n(); ++i) inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
        return Permutation(std::move(inv));
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < map_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(map_[i]);
        }
        return out;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.map_ == b.map_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.map_ < b.map_; }

    friend std::ostream& operator<<(std::ostream& os, const Permutation& p) {
        return os << p.to_string();
    }

private:
    std::vector<int> map_;
};

enum class Color { plus, minus };

// Permutation whose fixed points each carry a color in {+, -}.
class DecoratedPermutation {
public:
    DecoratedPermutation() = default;

    DecoratedPermutation(Permutation perm, std::map<int, Color> colors)
        : perm_(std::move(perm)), colors_(std::move(colors)) {
        for (int i = 1; i <= perm_.n(); ++i) {
            bool fixed = perm_(i) == i;
            bool colored = colors_.count(i) > 0;
            if (fixed != colored)
                throw std::invalid_argument(
                    "DecoratedPermutation: colors must cover exactly the fixed points");
        }
        if (static_cast<int>(colors_.size()) >
            perm_.n())  // extra keys outside [n] would also be a mismatch
            throw std::invalid_argument("DecoratedPermutation: stray color entries");
    }

    // fixed points suffixed with + or -, e.g. "1+,3,2,4-"
    static DecoratedPermutation parse(std::string_view text) {
        std::vector<int> vals;
        std::map<int, Color> colors;
        std::size_t pos = 0;
        int index = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            std::string_view tok = text.substr(pos, next - pos);
            ++index;
            if (tok.empty()) throw std::invalid_argument("DecoratedPermutation: empty entry");
            bool has_color = tok.back() == '+' || tok.back() == '-';
            Color color = tok.back() == '+' ? Color::plus : Color::minus;
            if (has_color) tok.remove_suffix(1);
            if (tok.empty()) throw std::invalid_argument("DecoratedPermutation: empty entry");
            long long v = 0;
            for (char c : tok) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("DecoratedPermutation: bad character");
                v = v * 10 + (c - '0');
                if (v > 1000000)
                    throw std::invalid_argument("DecoratedPermutation: entry out of range");
            }
            vals.push_back(static_cast<int>(v));
            if (has_color) colors[index] = color;
            pos = next + 1;
        }
        return DecoratedPermutation(Permutation(std::move(vals)), std::move(colors));
    }

    const Permutation& perm() const { return perm_; }
    int n() const { return perm_.n(); }
    int operator()(int i) const { return perm_(i); }

    Color color(int i) const { return colors_.at(i); }
    const std::map<int, Color>& colors() const { return colors_; }

    // i "weakly exceeds" sigma(i): strict exceedance or plus-colored fixed point
    bool le_plus(int i) const {
        int v = perm_(i);
        return i < v || (i == v && colors_.at(i) == Color::plus);
    }

    // i "weakly descends" to sigma(i): strict non-exceedance or minus-colored fixed point
    bool ge_minus(int i) const {
        int v = perm_(i);
        return i > v || (i == v && colors_.at(i) == Color::minus);
    }

    std::string to_string() const {
        std::string out;
        for (int i = 1; i <= perm_.n(); ++i) {
            if (i > 1) out += ',';
            out += std::to_string(perm_(i));
            if (perm_(i) == i) out += colors_.at(i) == Color::plus ? '+' : '-';
        }
        return out;
    }

    friend bool operator==(const DecoratedPermutation& a, const DecoratedPermutation& b) {
        return a.perm_ == b.perm_ && a.colors_ == b.colors_;
    }

private:
    Permutation perm_;
    std::map<int, Color> colors_;
};

// Apply fn to every permutation of [n] in lexicographic order.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

// Apply fn to every decorated permutation of [n] (all colorings of the fixed
// points of every permutation).
template <class Fn>
void for_each_decorated_permutation(int n, Fn&& fn) {
    for_each_permutation(n, [&](const Permutation& p) {
        std::vector<int> fixed;
        for (int i = 1; i <= n; ++i)
            if (p(i) == i) fixed.push_back(i);
        unsigned count = 1u << fixed.size();
        for (unsigned mask = 0; mask < count; ++mask) {
            std::map<int, Color> colors;
            for (std::size_t t = 0; t < fixed.size(); ++t)
                colors[fixed[t]] = (mask >> t & 1u) ? Color::minus : Color::plus;
            fn(DecoratedPermutation(p, std::move(colors)));
        }
    });
}

}  // namespace permstat

#endif
