#ifndef INVAR_POLY_HPP
#define INVAR_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "invar/order.hpp"
#include "invar/ring.hpp"
#include "invar/util.hpp"

namespace invar {

// Canonical term order used for the internal sorted representation: weighted
// degree, then lex on exponents. Every Polynomial keeps its terms strictly
// descending under this; Groebner code re-sorts copies under the active order.
inline int canonical_cmp(const Monomial& a, const Monomial& b)
{
    if (a.sdeg != b.sdeg)
        return a.sdeg < b.sdeg ? -1 : 1;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i])
            return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

// Sparse exact multivariate polynomial over the ring's field.
template <class F>
class Polynomial {
public:
    using Elem = typename F::Elem;
    struct Term {
        Monomial m;
        Elem c;
    };

    Polynomial() = default;
    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr<F> ring, Elem c)
    {
        Polynomial p(ring);
        if (!ring->field().is_zero(c))
            p.terms_.push_back({ring->one_monomial(), c});
        return p;
    }
    static Polynomial from_int(RingPtr<F> ring, int64_t v)
    {
        return constant(ring, ring->field().from_int(v));
    }
    static Polynomial variable(RingPtr<F> ring, size_t i, uint32_t power = 1)
    {
        require(i < ring->nvars(), "Polynomial: variable index out of range");
        if (power == 0)
            return constant(ring, ring->field().one());
        std::vector<uint32_t> e(ring->nvars(), 0);
        e[i] = power;
        return monomial_poly(ring, ring->monomial(std::move(e)), ring->field().one());
    }
    static Polynomial variable(RingPtr<F> ring, const std::string& name, uint32_t power = 1)
    {
        int i = ring->var_index(name);
        require(i >= 0, "Polynomial: unknown variable ", name);
        return variable(ring, static_cast<size_t>(i), power);
    }
    static Polynomial monomial_poly(RingPtr<F> ring, Monomial m, Elem c)
    {
        Polynomial p(ring);
        if (!ring->field().is_zero(c))
            p.terms_.push_back({std::move(m), c});
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const F& field() const { return ring_->field(); }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
    }
    Elem constant_term() const
    {
        if (!terms_.empty() && terms_.back().m.is_one())
            return terms_.back().c;
        return field().zero();
    }
    Elem coeff_of(const Monomial& m) const
    {
        // binary search in descending canonical order
        size_t lo = 0, hi = terms_.size();
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            int c = canonical_cmp(terms_[mid].m, m);
            if (c == 0)
                return terms_[mid].c;
            if (c > 0)
                lo = mid + 1;
            else
                hi = mid;
        }
        return field().zero();
    }

    bool is_homogeneous() const
    {
        return terms_.empty() || terms_.front().m.sdeg == terms_.back().m.sdeg;
    }
    // weighted degree (scaled); -1 for the zero polynomial
    int64_t sdeg() const { return terms_.empty() ? -1 : terms_.front().m.sdeg; }
    Rational degree() const
    {
        require(!terms_.empty(), "degree of zero polynomial");
        return ring_->degree_of(terms_.front().m);
    }
    uint32_t total_degree() const
    {
        uint32_t d = 0;
        for (const auto& t : terms_)
            d = std::max(d, ring_->total_exponent(t.m));
        return d;
    }
    bool uses_var(size_t i) const
    {
        for (const auto& t : terms_)
            if (t.m.e[i])
                return true;
        return false;
    }
    uint32_t degree_in_var(size_t i) const
    {
        uint32_t d = 0;
        for (const auto& t : terms_)
            d = std::max(d, t.m.e[i]);
        return d;
    }

    friend Polynomial operator-(const Polynomial& a)
    {
        Polynomial r = a;
        for (auto& t : r.terms_)
            t.c = r.field().neg(t.c);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r(a.ring_);
        const F& fld = a.field();
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = canonical_cmp(a.terms_[i].m, b.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Elem s = fld.add(a.terms_[i].c, b.terms_[j].c);
                if (!fld.is_zero(s))
                    r.terms_.push_back({a.terms_[i].m, s});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i)
            r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j)
            r.terms_.push_back(b.terms_[j]);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial scaled(Elem c) const
    {
        Polynomial r(ring_);
        if (field().is_zero(c))
            return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_)
            t.c = field().mul(t.c, c);
        return r;
    }
    Polynomial times_term(const Monomial& m, Elem c) const
    {
        Polynomial r(ring_);
        if (field().is_zero(c))
            return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({ring_->mul(t.m, m), field().mul(t.c, c)});
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r(a.ring_);
        if (a.is_zero() || b.is_zero())
            return r;
        const F& fld = a.field();
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                acc.push_back({a.ring_->mul(ta.m, tb.m), fld.mul(ta.c, tb.c)});
        std::sort(acc.begin(), acc.end(),
                  [](const Term& x, const Term& y) { return canonical_cmp(x.m, y.m) > 0; });
        for (auto& t : acc) {
            if (!r.terms_.empty() && r.terms_.back().m == t.m) {
                r.terms_.back().c = fld.add(r.terms_.back().c, t.c);
                if (fld.is_zero(r.terms_.back().c))
                    r.terms_.pop_back();
            } else {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    Polynomial pow(uint32_t n) const
    {
        Polynomial base = *this;
        Polynomial r = constant(ring_, field().one());
        while (n) {
            if (n & 1)
                r = r * base;
            base = n > 1 ? base * base : base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        if (a.terms_.size() != b.terms_.size())
            return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c))
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Substitute variable i by images[i] (a polynomial over the target ring).
    Polynomial substitute(const RingPtr<F>& target, const std::vector<Polynomial>& images) const
    {
        require(images.size() == ring_->nvars(), "substitute: need one image per variable");
        for (const auto& img : images)
            require_same_ring(img.ring(), target);
        Polynomial r = zero(target);
        std::vector<std::vector<Polynomial>> powers(images.size());
        auto power_of = [&](size_t i, uint32_t e) -> const Polynomial& {
            auto& cache = powers[i];
            if (cache.empty())
                cache.push_back(constant(target, target->field().one()));
            while (cache.size() <= e)
                cache.push_back(cache.back() * images[i]);
            return cache[e];
        };
        for (const auto& t : terms_) {
            Polynomial prod = constant(target, t.c);
            for (size_t i = 0; i < images.size(); ++i)
                if (t.m.e[i])
                    prod = prod * power_of(i, t.m.e[i]);
            r = r + prod;
        }
        return r;
    }

    // Rename into a ring that contains all used variables (by name).
    Polynomial into_ring(const RingPtr<F>& target) const
    {
        std::vector<int> map(ring_->nvars(), -1);
        for (size_t i = 0; i < ring_->nvars(); ++i)
            map[i] = target->var_index(ring_->var_name(i));
        Polynomial r(target);
        std::vector<Term> acc;
        acc.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::vector<uint32_t> e(target->nvars(), 0);
            for (size_t i = 0; i < map.size(); ++i) {
                if (!t.m.e[i])
                    continue;
                require(map[i] >= 0, "into_ring: target lacks variable ", ring_->var_name(i));
                e[static_cast<size_t>(map[i])] = t.m.e[i];
            }
            acc.push_back({target->monomial(std::move(e)), t.c});
        }
        std::sort(acc.begin(), acc.end(),
                  [](const Term& x, const Term& y) { return canonical_cmp(x.m, y.m) > 0; });
        r.terms_ = std::move(acc);
        return r;
    }

    // Formal partial derivative.
    Polynomial derivative(size_t var) const
    {
        Polynomial r(ring_);
        const F& fld = field();
        std::vector<Term> acc;
        for (const auto& t : terms_) {
            if (!t.m.e[var])
                continue;
            Elem c = fld.mul(t.c, fld.from_int(static_cast<int64_t>(t.m.e[var])));
            if (fld.is_zero(c))
                continue;
            Monomial m = t.m;
            m.e[var] -= 1;
            m.sdeg = ring_->recompute_sdeg(m);
            acc.push_back({std::move(m), c});
        }
        std::sort(acc.begin(), acc.end(),
                  [](const Term& x, const Term& y) { return canonical_cmp(x.m, y.m) > 0; });
        r.terms_ = std::move(acc);
        return r;
    }

    // Exact division by a monomial; errors if some term is not divisible.
    Polynomial div_by_monomial(const Monomial& m) const
    {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            require(ring_->divides(m, t.m), "div_by_monomial: term not divisible");
            r.terms_.push_back({ring_->div(t.m, m), t.c});
        }
        return r;
    }

    // Exact polynomial division: returns q with q*d == *this, errors otherwise.
    Polynomial exact_div(const Polynomial& d) const
    {
        require_same_ring(ring_, d.ring_);
        require(!d.is_zero(), "exact_div: division by zero");
        const F& fld = field();
        Polynomial rem = *this;
        Polynomial q(ring_);
        const Term& lead = d.terms_.front();
        Elem lead_inv = fld.inv(lead.c);
        while (!rem.is_zero()) {
            const Term& rt = rem.terms_.front();
            require(ring_->divides(lead.m, rt.m), "exact_div: nonzero remainder");
            Monomial qm = ring_->div(rt.m, lead.m);
            Elem qc = fld.mul(rt.c, lead_inv);
            q = q + monomial_poly(ring_, qm, qc);
            rem = rem - d.times_term(qm, qc);
        }
        return q;
    }

    // Leading term with respect to an explicit order.
    const Term& leading_term(const OrderCmp<F>& cmp) const
    {
        require(!terms_.empty(), "leading_term of zero polynomial");
        size_t best = 0;
        for (size_t i = 1; i < terms_.size(); ++i)
            if (cmp.cmp(terms_[i].m, terms_[best].m) > 0)
                best = i;
        return terms_[best];
    }

    Polynomial monic(const OrderCmp<F>& cmp) const
    {
        if (is_zero())
            return *this;
        return scaled(field().inv(leading_term(cmp).c));
    }

    // Construction from unsorted term list (combines duplicates).
    static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> acc)
    {
        const F& fld = ring->field();
        std::sort(acc.begin(), acc.end(),
                  [](const Term& x, const Term& y) { return canonical_cmp(x.m, y.m) > 0; });
        Polynomial r(ring);
        for (auto& t : acc) {
            if (fld.is_zero(t.c))
                continue;
            if (!r.terms_.empty() && r.terms_.back().m == t.m) {
                r.terms_.back().c = fld.add(r.terms_.back().c, t.c);
                if (fld.is_zero(r.terms_.back().c))
                    r.terms_.pop_back();
            } else {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

private:
    RingPtr<F> ring_;
    std::vector<Term> terms_; // strictly descending under canonical_cmp, nonzero coeffs
};

template <class F>
Polynomial<F> operator*(const Polynomial<F>& p, typename F::Elem c)
{
    return p.scaled(c);
}

} // namespace invar

#endif
