#ifndef PERMSTAT_MULTIPOLY_HPP
#define PERMSTAT_MULTIPOLY_HPP

#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "permstat/bigint.hpp"

namespace permstat {

// Exponent triple of a monomial q^eq * p^ep * y^ey.  Only eq may be negative
// (the polynomials are Laurent in q; p and y are ordinary variables).
struct Exponents {
    int q = 0;
    int p = 0;
    int y = 0;
    friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

// Sparse multivariate Laurent polynomial in (q, p, y) with BigInt
// coefficients.  Canonical form: no zero coefficients are stored, terms are
// kept ordered lexicographically by (eq, ep, ey).
class MultiPoly {
public:
    MultiPoly() = default;

    static MultiPoly constant(BigInt c) {
        MultiPoly r;
        if (!c.is_zero()) r.terms_[{0, 0, 0}] = std::move(c);
        return r;
    }

    static MultiPoly one() { return constant(BigInt(1)); }

    static MultiPoly monomial(BigInt coef, int eq, int ep, int ey) {
        if (ep < 0 || ey < 0)
            throw std::invalid_argument("MultiPoly: negative exponent allowed only for q");
        MultiPoly r;
        if (!coef.is_zero()) r.terms_[{eq, ep, ey}] = std::move(coef);
        return r;
    }

    static MultiPoly var_q() { return monomial(BigInt(1), 1, 0, 0); }
    static MultiPoly var_p() { return monomial(BigInt(1), 0, 1, 0); }
    static MultiPoly var_y() { return monomial(BigInt(1), 0, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }

    BigInt coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    BigInt coeff(int eq, int ep, int ey) const { return coeff(Exponents{eq, ep, ey}); }

    void add_term(const Exponents& e, const BigInt& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                r.add_term({ea.q + eb.q, ea.p + eb.p, ea.y + eb.y}, ca * cb);
            }
        }
        return r;
    }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const BigInt& s) const {
        MultiPoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = one();
        for (unsigned t = 0; t < e; ++t) r *= *this;
        return r;
    }

    // multiply by q^s (s may be negative)
    MultiPoly shifted_q(int s) const {
        MultiPoly r;
        for (const auto& [e, c] : terms_) r.terms_[{e.q + s, e.p, e.y}] = c;
        return r;
    }

    // substitute p := 1
    MultiPoly subst_p_one() const {
        MultiPoly r;
        for (const auto& [e, c] : terms_) r.add_term({e.q, 0, e.y}, c);
        return r;
    }

    // swap the exponents of p and q (valid only for non-Laurent polynomials)
    MultiPoly swap_pq() const {
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            if (e.q < 0) throw std::domain_error("MultiPoly: cannot swap p and Laurent q");
            r.terms_[{e.p, e.q, e.y}] = c;
        }
        return r;
    }

    // coefficient of y^k, as a polynomial in (q, p)
    MultiPoly coeff_of_y(int k) const {
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            if (e.y == k) r.terms_[{e.q, e.p, 0}] = c;
        }
        return r;
    }

    int min_q_exp() const {
        if (terms_.empty()) return 0;
        int m = terms_.begin()->first.q;
        for (const auto& [e, c] : terms_) m = std::min(m, e.q);
        return m;
    }

    int max_q_exp() const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            m = first ? e.q : std::max(m, e.q);
            first = false;
        }
        return m;
    }

    bool depends_only_on_q() const {
        for (const auto& [e, c] : terms_)
            if (e.p != 0 || e.y != 0) return false;
        return true;
    }

    // evaluate a q-only polynomial at an integer point; q=0 requires no
    // negative exponents
    BigInt eval_q(long long qv) const {
        BigInt result(0), point(qv);
        for (const auto& [e, c] : terms_) {
            if (e.p != 0 || e.y != 0)
                throw std::domain_error("MultiPoly: eval_q on polynomial with p or y terms");
            if (e.q >= 0) {
                BigInt t = c;
                for (int i = 0; i < e.q; ++i) t *= point;
                result += t;
            } else {
                if (qv == 1) {
                    result += c;
                } else if (qv == -1) {
                    result += ((-e.q) % 2 == 0) ? c : -c;
                } else {
                    throw std::domain_error("MultiPoly: negative q-exponent at non-unit point");
                }
            }
        }
        return result;
    }

    // monomial decomposition: returns exponents if this is a single term with
    // coefficient one (the shape of all bijection step weights)
    std::optional<Exponents> unit_monomial() const {
        if (terms_.size() != 1) return std::nullopt;
        const auto& [e, c] = *terms_.begin();
        if (c != BigInt(1)) return std::nullopt;
        return e;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // human-readable form, used in logs and test failure messages
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt a = c;
            if (first) {
                if (a.is_negative()) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a.is_negative() ? " - " : " + ");
                if (a.is_negative()) a = -a;
            }
            first = false;
            bool has_var = e.q != 0 || e.p != 0 || e.y != 0;
            if (a != BigInt(1) || !has_var) os << a.to_string();
            bool star = a != BigInt(1);
            auto put = [&](const char* name, int exp) {
                if (exp == 0) return;
                if (star) os << "*";
                os << name;
                if (exp != 1) os << "^" << exp;
                star = true;
            };
            put("q", e.q);
            put("p", e.p);
            put("y", e.y);
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& v) {
        return os << v.to_string();
    }

private:
    std::map<Exponents, BigInt> terms_;
};

// [n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}; [0] = 0
inline MultiPoly pq_bracket(int n) {
    if (n < 0) throw std::invalid_argument("pq_bracket: negative argument");
    MultiPoly r;
    for (int t = 0; t < n; ++t) r += MultiPoly::monomial(BigInt(1), t, n - 1 - t, 0);
    return r;
}

// [n]_q = 1 + q + ... + q^{n-1}
inline MultiPoly q_bracket(int n) {
    if (n < 0) throw std::invalid_argument("q_bracket: negative argument");
    MultiPoly r;
    for (int t = 0; t < n; ++t) r += MultiPoly::monomial(BigInt(1), t, 0, 0);
    return r;
}

}  // namespace permstat

#endif
