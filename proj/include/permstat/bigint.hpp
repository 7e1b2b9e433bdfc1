#ifndef PERMSTAT_BIGINT_HPP
#define PERMSTAT_BIGINT_HPP

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permstat {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs,
// schoolbook arithmetic throughout.  Magnitudes in this library stay in the
// hundreds-of-bits range.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        unsigned long long m;
        if (v < 0) {
            neg_ = true;
            m = ~static_cast<unsigned long long>(v) + 1ULL;
        } else {
            m = static_cast<unsigned long long>(v);
        }
        while (m != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
        if (limbs_.empty()) neg_ = false;
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        bool neg = false;
        std::size_t pos = 0;
        if (s[0] == '-' || s[0] == '+') {
            neg = (s[0] == '-');
            pos = 1;
        }
        if (pos == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        // consume in chunks of 9 decimal digits
        while (pos < s.size()) {
            std::size_t take = std::min<std::size_t>(9, s.size() - pos);
            std::uint32_t chunk = 0, scale = 1;
            for (std::size_t t = 0; t < take; ++t) {
                char c = s[pos + t];
                if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
                chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
                scale *= 10;
            }
            mul_small(r.limbs_, scale);
            add_small(r.limbs_, chunk);
            pos += take;
        }
        r.neg_ = neg && !r.limbs_.empty();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    int signum() const { return limbs_.empty() ? 0 : (neg_ ? -1 : 1); }

    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }

    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.limbs_.empty()) r.neg_ = !r.neg_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.neg_ = false;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.neg_ == b.neg_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.neg_ = a.neg_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.neg_ = b.neg_;
            }
        }
        if (r.limbs_.empty()) r.neg_ = false;
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry != 0) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.neg_ = (a.neg_ != b.neg_) && !r.limbs_.empty();
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division (quotient rounds toward zero, like built-in integers).
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        auto [qm, rm] = divmod_mag(a.limbs_, b.limbs_);
        BigInt q, r;
        q.limbs_ = std::move(qm);
        r.limbs_ = std::move(rm);
        q.neg_ = (a.neg_ != b.neg_) && !q.limbs_.empty();
        r.neg_ = a.neg_ && !r.limbs_.empty();
        return {std::move(q), std::move(r)};
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    std::string to_string() const {
        if (limbs_.empty()) return "0";
        return (neg_ ? "-" : "") + to_decimal(limbs_);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_string();
    }

private:
    std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zeros
    bool neg_ = false;                  // always false for zero

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) neg_ = false;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry +
                                (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        assert(borrow == 0);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static void mul_small(std::vector<std::uint32_t>& v, std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& limb : v) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        if (carry) v.push_back(static_cast<std::uint32_t>(carry));
    }

    static void add_small(std::vector<std::uint32_t>& v, std::uint32_t a) {
        std::uint64_t carry = a;
        for (std::size_t i = 0; carry != 0 && i < v.size(); ++i) {
            std::uint64_t cur = v[i] + carry;
            v[i] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        if (carry) v.push_back(static_cast<std::uint32_t>(carry));
    }

    // divide magnitude in place by small divisor, return remainder
    static std::uint32_t divmod_small(std::vector<std::uint32_t>& v, std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = v.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | v[i];
            v[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
        return static_cast<std::uint32_t>(rem);
    }

    static std::string to_decimal(const std::vector<std::uint32_t>& mag) {
        std::vector<std::uint32_t> work = mag;
        std::vector<std::uint32_t> chunks;
        while (!work.empty()) chunks.push_back(divmod_small(work, 1000000000u));
        std::string out = std::to_string(chunks.back());
        for (std::size_t i = chunks.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunks[i]);
            out.append(9 - part.size(), '0');
            out += part;
        }
        return out;
    }

    // binary long division of magnitudes
    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
    divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (cmp_mag(a, b) < 0) return {{}, a};
        std::vector<std::uint32_t> q(a.size(), 0), r;
        for (std::size_t bit = a.size() * 32; bit-- > 0;) {
            // r = (r << 1) | bit(a, bit)
            std::uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
            for (auto& limb : r) {
                std::uint32_t next = limb >> 31;
                limb = (limb << 1) | carry;
                carry = next;
            }
            if (carry) r.push_back(carry);
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                q[bit / 32] |= (1u << (bit % 32));
            }
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        return {std::move(q), std::move(r)};
    }
};

inline BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace permstat

#endif
