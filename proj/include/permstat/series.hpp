#ifndef PERMSTAT_SERIES_HPP
#define PERMSTAT_SERIES_HPP

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permstat/multipoly.hpp"
#include "permstat/paths.hpp"

namespace permstat {

// Power series in x truncated at a fixed order, with MultiPoly coefficients.
class XSeries {
public:
    explicit XSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("XSeries: negative order");
    }

    static XSeries one(int order) {
        XSeries r(order);
        r.coeffs_[0] = MultiPoly::one();
        return r;
    }

    int order() const { return order_; }

    const MultiPoly& coeff(int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
    void set_coeff(int d, MultiPoly p) { coeffs_.at(static_cast<std::size_t>(d)) = std::move(p); }

    XSeries& operator+=(const XSeries& o) {
        check_order(o);
        for (int d = 0; d <= order_; ++d) coeffs_[d] += o.coeffs_[d];
        return *this;
    }
    XSeries& operator-=(const XSeries& o) {
        check_order(o);
        for (int d = 0; d <= order_; ++d) coeffs_[d] -= o.coeffs_[d];
        return *this;
    }
    friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
    friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }

    friend XSeries operator*(const XSeries& a, const XSeries& b) {
        a.check_order(b);
        XSeries r(a.order_);
        for (int i = 0; i <= a.order_; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order_; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    // multiplicative inverse; requires constant coefficient 1
    XSeries reciprocal() const {
        if (coeffs_[0] != MultiPoly::one())
            throw std::domain_error("XSeries: reciprocal requires constant term 1");
        XSeries r(order_);
        r.coeffs_[0] = MultiPoly::one();
        for (int m = 1; m <= order_; ++m) {
            MultiPoly acc;
            for (int t = 1; t <= m; ++t) acc += coeffs_[t] * r.coeffs_[m - t];
            r.coeffs_[m] = -acc;
        }
        return r;
    }

    XSeries truncated(int lower_order) const {
        if (lower_order > order_) throw std::invalid_argument("XSeries: truncation above order");
        XSeries r(lower_order);
        for (int d = 0; d <= lower_order; ++d) r.coeffs_[d] = coeffs_[d];
        return r;
    }

    friend bool operator==(const XSeries& a, const XSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const XSeries& a, const XSeries& b) { return !(a == b); }

private:
    int order_;
    std::vector<MultiPoly> coeffs_;

    void check_order(const XSeries& o) const {
        if (order_ != o.order_) throw std::invalid_argument("XSeries: order mismatch");
    }
};

// J-type continued fraction 1/(1 - b_0 x - lambda_1 x^2/(1 - b_1 x - ...)).
// lambda(0) is never evaluated.
struct CFSpec {
    std::function<MultiPoly(int)> b;
    std::function<MultiPoly(int)> lambda;
};

// Truncated expansion of the continued fraction to order N.  Levels below
// depth floor(N/2) only contribute to x-degrees > N, so the tail can be
// replaced with 1 without changing the result.
inline XSeries cf_expand(const CFSpec& spec, int order) {
    if (order < 0) throw std::invalid_argument("cf_expand: negative order");
    XSeries tail = XSeries::one(order);
    for (int level = order / 2; level >= 0; --level) {
        XSeries denom = XSeries::one(order);
        MultiPoly b = spec.b(level);
        if (order >= 1) {
            XSeries lin(order);
            lin.set_coeff(1, -b);
            denom += lin;
        }
        if (order >= 2) {
            XSeries quad(order);
            quad.set_coeff(2, -spec.lambda(level + 1));
            denom += quad * tail;
        }
        tail = denom.reciprocal();
    }
    return tail;
}

// Sum over all bicolored Motzkin paths of length n of the product of step
// weights, where each step's weight depends on its kind and starting height.
// Computed by a transfer recursion over (position, height); serves as an
// independent route to the x^n coefficient of the matching continued
// fraction (flat steps at height h contribute to b_h, an N at h followed by
// a matching S at h+1 to lambda_{h+1}).
inline MultiPoly motzkin_transfer(const std::function<MultiPoly(Step, int)>& step_weight, int n) {
    if (n < 0) throw std::invalid_argument("motzkin_transfer: negative length");
    int hmax = n / 2;
    std::vector<MultiPoly> cur(static_cast<std::size_t>(hmax) + 2);
    cur[0] = MultiPoly::one();
    for (int pos = 0; pos < n; ++pos) {
        std::vector<MultiPoly> next(cur.size());
        int remaining = n - pos - 1;  // steps left after this one
        for (int h = 0; h <= hmax; ++h) {
            if (cur[h].is_zero()) continue;
            if (h + 1 <= remaining) next[h + 1] += cur[h] * step_weight(Step::N, h);
            if (h <= remaining) {
                next[h] += cur[h] * step_weight(Step::E, h);
                next[h] += cur[h] * step_weight(Step::EBar, h);
            }
            if (h > 0) next[h - 1] += cur[h] * step_weight(Step::S, h);
        }
        cur = std::move(next);
    }
    return cur[0];
}

}  // namespace permstat

#endif
