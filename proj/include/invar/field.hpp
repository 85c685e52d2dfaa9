#ifndef INVAR_FIELD_HPP
#define INVAR_FIELD_HPP

#include <cstdint>
#include <string>

#include "invar/bigint.hpp"
#include "invar/util.hpp"

namespace invar {

inline bool is_prime_u64(uint64_t n)
{
    if (n < 2)
        return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// Prime field F_p with machine-word residues; p < 2^31 so products fit in 64 bits.
class FpField {
public:
    using Elem = uint64_t;

    FpField() : p_(2) {}
    explicit FpField(uint64_t p) : p_(p)
    {
        require(p >= 2 && p < (uint64_t(1) << 31), "FpField: modulus out of range");
        require(is_prime_u64(p), "FpField: ", p, " is not prime");
    }

    uint64_t modulus() const { return p_; }
    uint64_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_int(int64_t v) const
    {
        int64_t m = v % static_cast<int64_t>(p_);
        if (m < 0)
            m += static_cast<int64_t>(p_);
        return static_cast<Elem>(m);
    }
    Elem from_rational(const Rational& q) const
    {
        Elem n = from_bigint(q.num());
        Elem d = from_bigint(q.den());
        require(d != 0, "FpField: denominator divisible by ", p_);
        return mul(n, inv(d));
    }
    Elem from_bigint(const BigInt& v) const
    {
        BigInt r = v % BigInt(static_cast<int64_t>(p_));
        int64_t m = r.to_int64();
        if (m < 0)
            m += static_cast<int64_t>(p_);
        return static_cast<Elem>(m);
    }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }
    Elem add(Elem a, Elem b) const
    {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem inv(Elem a) const
    {
        require(a != 0, "FpField: inverse of zero");
        int64_t t = 0, newt = 1;
        int64_t r = static_cast<int64_t>(p_), newr = static_cast<int64_t>(a);
        while (newr != 0) {
            int64_t q = r / newr;
            int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0)
            t += static_cast<int64_t>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    std::string to_string(Elem a) const { return std::to_string(a); }
    Elem parse(const std::string& s) const
    {
        size_t slash = s.find('/');
        if (slash != std::string::npos)
            return from_rational(Rational::from_string(s));
        return from_bigint(BigInt::from_string(s));
    }

    std::string describe() const { return "F" + std::to_string(p_); }
    friend bool operator==(const FpField& a, const FpField& b) { return a.p_ == b.p_; }
    friend bool operator!=(const FpField& a, const FpField& b) { return !(a == b); }

private:
    uint64_t p_;
};

// The rationals; used for characteristic-zero cross-checks.
class QField {
public:
    using Elem = Rational;

    uint64_t characteristic() const { return 0; }

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_int(int64_t v) const { return Rational(v); }
    Elem from_rational(const Rational& q) const { return q; }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return a.is_one(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const
    {
        require(!a.is_zero(), "QField: inverse of zero");
        return one() / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }

    std::string to_string(const Elem& a) const { return a.to_string(); }
    Elem parse(const std::string& s) const { return Rational::from_string(s); }

    std::string describe() const { return "Q"; }
    friend bool operator==(const QField&, const QField&) { return true; }
    friend bool operator!=(const QField&, const QField&) { return false; }
};

} // namespace invar

#endif
