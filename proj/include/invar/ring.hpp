#ifndef INVAR_RING_HPP
#define INVAR_RING_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "invar/bigint.hpp"
#include "invar/field.hpp"
#include "invar/util.hpp"

namespace invar {

// Exponent vector with cached weighted degree (scaled to an integer by the
// ring's common weight denominator).
struct Monomial {
    std::vector<uint32_t> e;
    int64_t sdeg = 0;

    bool is_one() const { return sdeg == 0 && std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; }); }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Variable list, per-variable positive rational weights, coefficient field.
// Weights are also kept as integers scaled by the common denominator so that
// weighted degrees stay in int64.
template <class F>
class Ring {
public:
    using Field = F;

    Ring(F field, std::vector<std::string> vars, std::vector<Rational> weights = {})
        : field_(std::move(field)), vars_(std::move(vars))
    {
        if (weights.empty())
            weights.assign(vars_.size(), Rational(1));
        require(weights.size() == vars_.size(), "Ring: weight count mismatch");
        for (size_t i = 0; i < vars_.size(); ++i) {
            require(!vars_[i].empty(), "Ring: empty variable name");
            for (size_t j = i + 1; j < vars_.size(); ++j)
                require(vars_[i] != vars_[j], "Ring: duplicate variable ", vars_[i]);
            require(weights[i].sign() > 0, "Ring: weight of ", vars_[i], " must be positive");
        }
        weights_ = std::move(weights);
        BigInt scale(1);
        for (const auto& w : weights_)
            scale = scale * (w.den() / BigInt::gcd(scale, w.den()));
        scale_ = scale.to_int64();
        sweights_.reserve(weights_.size());
        for (const auto& w : weights_)
            sweights_.push_back((w.num() * (scale / w.den())).to_int64());
    }

    const F& field() const { return field_; }
    size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(size_t i) const { return vars_[i]; }
    const std::vector<Rational>& weights() const { return weights_; }
    const std::vector<int64_t>& scaled_weights() const { return sweights_; }
    int64_t weight_scale() const { return scale_; }

    bool has_unit_weights() const
    {
        for (const auto& w : weights_)
            if (!w.is_one())
                return false;
        return true;
    }

    int var_index(const std::string& name) const
    {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name)
                return static_cast<int>(i);
        return -1;
    }

    Monomial one_monomial() const
    {
        Monomial m;
        m.e.assign(nvars(), 0);
        return m;
    }
    Monomial monomial(std::vector<uint32_t> e) const
    {
        require(e.size() == nvars(), "Ring: exponent length mismatch");
        Monomial m;
        m.e = std::move(e);
        m.sdeg = 0;
        for (size_t i = 0; i < m.e.size(); ++i)
            m.sdeg += static_cast<int64_t>(m.e[i]) * sweights_[i];
        return m;
    }
    int64_t recompute_sdeg(const Monomial& m) const
    {
        int64_t d = 0;
        for (size_t i = 0; i < m.e.size(); ++i)
            d += static_cast<int64_t>(m.e[i]) * sweights_[i];
        return d;
    }
    Rational degree_of(const Monomial& m) const
    {
        return Rational(BigInt(m.sdeg), BigInt(scale_));
    }
    uint32_t total_exponent(const Monomial& m) const
    {
        uint32_t t = 0;
        for (uint32_t x : m.e)
            t += x;
        return t;
    }

    Monomial mul(const Monomial& a, const Monomial& b) const
    {
        Monomial m;
        m.e.resize(nvars());
        for (size_t i = 0; i < m.e.size(); ++i)
            m.e[i] = a.e[i] + b.e[i];
        m.sdeg = a.sdeg + b.sdeg;
        return m;
    }
    bool divides(const Monomial& a, const Monomial& b) const // a | b
    {
        if (a.sdeg > b.sdeg)
            return false;
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] > b.e[i])
                return false;
        return true;
    }
    Monomial div(const Monomial& a, const Monomial& b) const // a / b, must divide
    {
        Monomial m;
        m.e.resize(nvars());
        for (size_t i = 0; i < m.e.size(); ++i) {
            require(a.e[i] >= b.e[i], "Ring: monomial not divisible");
            m.e[i] = a.e[i] - b.e[i];
        }
        m.sdeg = a.sdeg - b.sdeg;
        return m;
    }
    Monomial lcm(const Monomial& a, const Monomial& b) const
    {
        Monomial m;
        m.e.resize(nvars());
        for (size_t i = 0; i < m.e.size(); ++i)
            m.e[i] = std::max(a.e[i], b.e[i]);
        m.sdeg = recompute_sdeg(m);
        return m;
    }
    bool coprime(const Monomial& a, const Monomial& b) const
    {
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] && b.e[i])
                return false;
        return true;
    }

    std::string monomial_string(const Monomial& m) const
    {
        std::string s;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (!m.e[i])
                continue;
            if (!s.empty())
                s += "*";
            s += vars_[i];
            if (m.e[i] > 1)
                s += "^" + std::to_string(m.e[i]);
        }
        return s.empty() ? "1" : s;
    }

    friend bool operator==(const Ring& a, const Ring& b)
    {
        return a.field_ == b.field_ && a.vars_ == b.vars_ && a.weights_ == b.weights_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    F field_;
    std::vector<std::string> vars_;
    std::vector<Rational> weights_;
    std::vector<int64_t> sweights_;
    int64_t scale_ = 1;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars, std::vector<Rational> weights = {})
{
    return std::make_shared<const Ring<F>>(std::move(field), std::move(vars), std::move(weights));
}

template <class F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b)
{
    require(a && b, "null ring");
    if (a == b)
        return;
    require(*a == *b, "ring context mismatch");
}

} // namespace invar

#endif
