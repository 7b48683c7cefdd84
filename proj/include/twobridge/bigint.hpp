// Arbitrary-precision signed integer, sign/magnitude over 32-bit limbs.
//
// This covers exactly the integer arithmetic the library needs: powers of
// two, small linear combinations, gcd, and exact division with a checked
// remainder. It is not a performance-tuned bignum; magnitudes here stay in
// the low hundreds of bits.

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twobridge {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // two's-complement-safe |v|
        std::uint64_t u = v < 0 ? 0ULL - static_cast<std::uint64_t>(v)
                                : static_cast<std::uint64_t>(v);
        mag_.push_back(static_cast<std::uint32_t>(u));
        if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
    }

    explicit BigInt(std::string_view decimal) {
        std::size_t i = 0;
        int sign = 1;
        if (i < decimal.size() && (decimal[i] == '+' || decimal[i] == '-')) {
            sign = decimal[i] == '-' ? -1 : 1;
            ++i;
        }
        if (i == decimal.size())
            throw std::invalid_argument("BigInt: empty decimal string");
        for (; i < decimal.size(); ++i) {
            char ch = decimal[i];
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("BigInt: invalid decimal digit");
            mul_small(mag_, 10);
            add_small(mag_, static_cast<std::uint32_t>(ch - '0'));
        }
        trim(mag_);
        sign_ = mag_.empty() ? 0 : sign;
    }

    // 2^n, exact for any n >= 0.
    static BigInt pow2(unsigned n) {
        BigInt r;
        r.sign_ = 1;
        r.mag_.assign(n / 32 + 1, 0);
        r.mag_.back() = 1u << (n % 32);
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator-(BigInt v) {
        v.sign_ = -v.sign_;
        return v;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = a.mag_;
            add_mag(r.mag_, b.mag_);
            r.sign_ = a.sign_;
            return r;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return r;  // zero
        const BigInt& big = c > 0 ? a : b;
        const BigInt& small = c > 0 ? b : a;
        r.mag_ = big.mag_;
        sub_mag(r.mag_, small.mag_);
        r.sign_ = big.sign_;
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = r.mag_[i + j] +
                                    static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.mag_[i + b.mag_.size()] += static_cast<std::uint32_t>(carry);
        }
        trim(r.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Quotient truncates toward zero; remainder carries the dividend's sign,
    // so (a/b)*b + a%b == a always holds.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        q = BigInt();
        r = BigInt();
        if (a.sign_ == 0) return;
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b) = default;

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    long long to_int64() const {
        if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in 64 bits");
        std::uint64_t u = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
        if (sign_ >= 0) {
            if (u > static_cast<std::uint64_t>(INT64_MAX))
                throw std::overflow_error("BigInt: does not fit in 64 bits");
            return static_cast<long long>(u);
        }
        if (u > static_cast<std::uint64_t>(INT64_MAX) + 1)
            throw std::overflow_error("BigInt: does not fit in 64 bits");
        return static_cast<long long>(0ULL - u);
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> work = mag_;
        std::string digits;
        while (!work.empty()) {
            std::uint32_t rem = divmod_small(work, 1000000000u);
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_string();
    }

private:
    int sign_ = 0;                        // -1, 0, +1
    std::vector<std::uint32_t> mag_;      // little-endian, no leading zeros, empty iff sign_ == 0

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static void add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t cur = carry + a[i] + (i < b.size() ? b[i] : 0);
            a[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) a.push_back(static_cast<std::uint32_t>(carry));
    }

    // requires a >= b
    static void sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? b[i] : 0);
            borrow = cur < 0;
            if (cur < 0) cur += (1LL << 32);
            a[i] = static_cast<std::uint32_t>(cur);
        }
        trim(a);
    }

    // schoolbook binary long division on magnitudes
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        q.assign(a.size(), 0);
        r.clear();
        for (std::size_t bit = a.size() * 32; bit-- > 0;) {
            shl1(r);
            if ((a[bit / 32] >> (bit % 32)) & 1u) {
                if (r.empty()) r.push_back(0);
                r[0] |= 1u;
            }
            if (cmp_mag(r, b) >= 0) {
                sub_mag(r, b);
                q[bit / 32] |= 1u << (bit % 32);
            }
        }
        trim(q);
        trim(r);
    }

    static void shl1(std::vector<std::uint32_t>& m) {
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint32_t next = m[i] >> 31;
            m[i] = (m[i] << 1) | carry;
            carry = next;
        }
        if (carry) m.push_back(carry);
    }

    static void mul_small(std::vector<std::uint32_t>& m, std::uint32_t f) {
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(m[i]) * f + carry;
            m[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) m.push_back(static_cast<std::uint32_t>(carry));
    }

    static void add_small(std::vector<std::uint32_t>& m, std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry && i < m.size(); ++i) {
            std::uint64_t cur = m[i] + carry;
            m[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) m.push_back(static_cast<std::uint32_t>(carry));
    }

    static std::uint32_t divmod_small(std::vector<std::uint32_t>& m, std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(m);
        return static_cast<std::uint32_t>(rem);
    }
};

// Divides a by b and insists the division is exact; a non-zero remainder
// means a closed-form identity has been violated.
inline BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    if (!r.is_zero())
        throw std::logic_error(std::string("exact_div: ") + what + ": " + a.to_string() +
                               " is not divisible by " + b.to_string());
    return q;
}

}  // namespace twobridge
