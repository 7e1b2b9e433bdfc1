#ifndef PERMSTAT_PATHS_HPP
#define PERMSTAT_PATHS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permstat/multipoly.hpp"

namespace permstat {

// Steps of a bicolored Motzkin path: up, down, and two colors of level step.
// EBar is the second level-step color, written 'e' in the text format.
enum class Step { N, S, E, EBar };

inline char step_char(Step s) {
    switch (s) {
        case Step::N: return 'N';
        case Step::S: return 'S';
        case Step::E: return 'E';
        case Step::EBar: return 'e';
    }
    return '?';
}

// Bicolored Motzkin path: nonnegative prefix heights, ends at height 0.
class MotzkinPath {
public:
    MotzkinPath() = default;

    explicit MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {
        int h = 0;
        for (Step s : steps_) {
            if (s == Step::N) ++h;
            if (s == Step::S) --h;
            if (h < 0) throw std::invalid_argument("MotzkinPath: height drops below zero");
        }
        if (h != 0) throw std::invalid_argument("MotzkinPath: does not end at height zero");
    }

    static MotzkinPath parse(std::string_view text) {
        std::vector<Step> steps;
        steps.reserve(text.size());
        for (char c : text) {
            switch (c) {
                case 'N': steps.push_back(Step::N); break;
                case 'S': steps.push_back(Step::S); break;
                case 'E': steps.push_back(Step::E); break;
                case 'e': steps.push_back(Step::EBar); break;
                default: throw std::invalid_argument(std::string("MotzkinPath: bad step '") + c + "'");
            }
        }
        return MotzkinPath(std::move(steps));
    }

    int length() const { return static_cast<int>(steps_.size()); }
    Step step(int i) const { return steps_.at(static_cast<std::size_t>(i - 1)); }  // 1-indexed
    const std::vector<Step>& steps() const { return steps_; }

    // height before step i, 1-indexed; heights()[0] == 0
    std::vector<int> heights() const {
        std::vector<int> h;
        h.reserve(steps_.size() + 1);
        h.push_back(0);
        for (Step s : steps_) {
            int d = s == Step::N ? 1 : (s == Step::S ? -1 : 0);
            h.push_back(h.back() + d);
        }
        return h;
    }

    std::string to_string() const {
        std::string out;
        out.reserve(steps_.size());
        for (Step s : steps_) out.push_back(step_char(s));
        return out;
    }

    friend bool operator==(const MotzkinPath& a, const MotzkinPath& b) {
        return a.steps_ == b.steps_;
    }
    friend bool operator!=(const MotzkinPath& a, const MotzkinPath& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const MotzkinPath& p) {
        return os << p.to_string();
    }

private:
    std::vector<Step> steps_;
};

// Path plus one monomial weight per step.
struct WeightedPath {
    MotzkinPath path;
    std::vector<MultiPoly> weights;

    MultiPoly weight_product() const {
        MultiPoly r = MultiPoly::one();
        for (const auto& w : weights) r *= w;
        return r;
    }

    friend bool operator==(const WeightedPath& a, const WeightedPath& b) {
        return a.path == b.path && a.weights == b.weights;
    }
    friend bool operator!=(const WeightedPath& a, const WeightedPath& b) { return !(a == b); }
};

// Enumerate all bicolored Motzkin paths of length n (test-scale only).
template <class Fn>
void for_each_motzkin_path(int n, Fn&& fn) {
    std::vector<Step> cur;
    cur.reserve(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos, int h) -> void {
        if (pos == n) {
            if (h == 0) fn(MotzkinPath(cur));
            return;
        }
        for (Step s : {Step::N, Step::E, Step::EBar, Step::S}) {
            int nh = h + (s == Step::N ? 1 : s == Step::S ? -1 : 0);
            if (nh < 0) continue;
            if (nh > n - pos - 1) continue;  // cannot come back down in time
            cur.push_back(s);
            self(self, pos + 1, nh);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
}

}  // namespace permstat

#endif
