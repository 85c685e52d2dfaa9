#ifndef INVAR_BIGINT_HPP
#define INVAR_BIGINT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "invar/util.hpp"

namespace invar {

// Arbitrary-precision signed integer, little-endian 32-bit limbs.
// Only what exact rational arithmetic needs: ring ops, divmod, gcd, I/O.
class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v)
    {
        if (v < 0) {
            sign_ = -1;
            // avoid overflow on INT64_MIN
            uint64_t u = ~static_cast<uint64_t>(v) + 1;
            push_u64(u);
        } else if (v > 0) {
            sign_ = 1;
            push_u64(static_cast<uint64_t>(v));
        }
    }

    static BigInt from_string(const std::string& s)
    {
        BigInt r;
        size_t i = 0;
        int sg = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-')
                sg = -1;
            ++i;
        }
        require(i < s.size(), "BigInt: empty literal '", s, "'");
        for (; i < s.size(); ++i) {
            require(s[i] >= '0' && s[i] <= '9', "BigInt: bad digit in '", s, "'");
            r.mul_small(10);
            r.add_small(static_cast<uint32_t>(s[i] - '0'));
        }
        if (!r.mag_.empty())
            r.sign_ = sg;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool fits_int64() const
    {
        if (mag_.size() > 2)
            return false;
        uint64_t u = to_u64_abs();
        if (sign_ >= 0)
            return u <= static_cast<uint64_t>(INT64_MAX);
        return u <= static_cast<uint64_t>(INT64_MAX) + 1;
    }

    int64_t to_int64() const
    {
        require(fits_int64(), "BigInt: does not fit int64");
        uint64_t u = to_u64_abs();
        if (sign_ >= 0)
            return static_cast<int64_t>(u);
        return static_cast<int64_t>(~u + 1); // two's complement of |v|
    }

    friend int cmp(const BigInt& a, const BigInt& b)
    {
        if (a.sign_ != b.sign_)
            return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }
    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }

    BigInt operator-() const
    {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b)
    {
        if (a.sign_ == 0)
            return b;
        if (b.sign_ == 0)
            return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0)
                return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b)
    {
        if (a.sign_ == 0 || b.sign_ == 0)
            return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j]
                             + r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.mag_.size();
            while (carry) {
                uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division (C semantics): q = trunc(a/b), r = a - q*b.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r)
    {
        require(!b.is_zero(), "BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        if (b.mag_.size() == 1) {
            std::vector<uint32_t> qm(a.mag_.size());
            uint64_t rem = 0, d = b.mag_[0];
            for (size_t i = a.mag_.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a.mag_[i];
                qm[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            q = BigInt();
            q.mag_ = std::move(qm);
            q.trim();
            q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
            r = BigInt();
            if (rem) {
                r.mag_.push_back(static_cast<uint32_t>(rem));
                r.sign_ = a.sign_;
            }
            return;
        }
        divmod_knuth(a.mag_, b.mag_, q.mag_, r.mag_);
        q.trim();
        r.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b)
    {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b)
    {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b)
    {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    std::string to_string() const
    {
        if (sign_ == 0)
            return "0";
        std::vector<uint32_t> chunks;
        BigInt t = *this;
        t.sign_ = 1;
        BigInt base(1000000000);
        while (!t.is_zero()) {
            BigInt q, r;
            divmod(t, base, q, r);
            chunks.push_back(r.mag_.empty() ? 0u : r.mag_[0]);
            t = q;
        }
        std::string out = sign_ < 0 ? "-" : "";
        out += std::to_string(chunks.back());
        for (size_t i = chunks.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunks[i]);
            out += std::string(9 - part.size(), '0') + part;
        }
        return out;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim()
    {
        while (!mag_.empty() && mag_.back() == 0)
            mag_.pop_back();
        if (mag_.empty())
            sign_ = 0;
    }
    void push_u64(uint64_t u)
    {
        mag_.push_back(static_cast<uint32_t>(u));
        if (u >> 32)
            mag_.push_back(static_cast<uint32_t>(u >> 32));
    }
    uint64_t to_u64_abs() const
    {
        uint64_t u = 0;
        if (mag_.size() > 0)
            u = mag_[0];
        if (mag_.size() > 1)
            u |= static_cast<uint64_t>(mag_[1]) << 32;
        return u;
    }
    void mul_small(uint32_t m)
    {
        uint64_t carry = 0;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
            limb = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry)
            mag_.push_back(static_cast<uint32_t>(carry));
        trim();
        if (!mag_.empty() && sign_ == 0)
            sign_ = 1;
    }
    void add_small(uint32_t v)
    {
        uint64_t carry = v;
        for (size_t i = 0; carry && i < mag_.size(); ++i) {
            uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry)
            mag_.push_back(static_cast<uint32_t>(carry));
        if (!mag_.empty())
            sign_ = sign_ == 0 ? 1 : sign_;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b)
    {
        if (a.size() != b.size())
            return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b)
    {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < small.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + small[i] + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        for (size_t i = small.size(); carry && i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry)
            r.push_back(static_cast<uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b)
    {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += (int64_t(1) << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }

    // Knuth algorithm D on normalized limb vectors; |a| >= |b|, b has >= 2 limbs.
    static void divmod_knuth(const std::vector<uint32_t>& a0, const std::vector<uint32_t>& b0,
                             std::vector<uint32_t>& q, std::vector<uint32_t>& r)
    {
        int shift = 0;
        uint32_t top = b0.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            ++shift;
        }
        std::vector<uint32_t> u = shl_bits(a0, shift);
        std::vector<uint32_t> v = shl_bits(b0, shift);
        size_t n = v.size(), m = u.size() - n;
        u.push_back(0);
        q.assign(m + 1, 0);
        const uint64_t BASE = uint64_t(1) << 32;
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= BASE
                   || qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= BASE)
                    break;
            }
            // multiply-subtract qhat*v from u[j..j+n]
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t prod = qhat * v[i] + carry;
                carry = prod >> 32;
                int64_t cur = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(prod & 0xffffffffu) - borrow;
                if (cur < 0) {
                    cur += static_cast<int64_t>(BASE);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<uint32_t>(cur);
            }
            int64_t cur = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (cur < 0) {
                // qhat was one too large
                cur += static_cast<int64_t>(BASE);
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(s);
                    c2 = s >> 32;
                }
                cur += static_cast<int64_t>(c2);
                cur &= static_cast<int64_t>(BASE) - 1;
            }
            u[j + n] = static_cast<uint32_t>(cur);
            q[j] = static_cast<uint32_t>(qhat);
        }
        u.resize(n);
        r = shr_bits(u, shift);
    }
    static std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& a, int s)
    {
        if (s == 0)
            return a;
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] |= static_cast<uint32_t>(static_cast<uint64_t>(a[i]) >> (32 - s));
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }
    static std::vector<uint32_t> shr_bits(const std::vector<uint32_t>& a, int s)
    {
        if (s == 0) {
            auto r = a;
            while (!r.empty() && r.back() == 0)
                r.pop_back();
            return r;
        }
        std::vector<uint32_t> r(a.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] = a[i] >> s;
            if (i + 1 < a.size())
                r[i] |= a[i + 1] << (32 - s);
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }
};

// Exact rational with normalized representation: den > 0, gcd(num, den) = 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t v) : num_(v), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static Rational from_string(const std::string& s)
    {
        size_t slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(BigInt::from_string(s), BigInt(1));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b)
    {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        require(!b.is_zero(), "Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const
    {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b)
    {
        return cmp(a.num_ * b.den_, b.num_ * a.den_) < 0;
    }

    std::string to_string() const
    {
        if (den_ == BigInt(1))
            return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;
    void normalize()
    {
        require(!den_.is_zero(), "Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
    }
};

} // namespace invar

#endif
