#ifndef INVAR_GROEBNER_HPP
#define INVAR_GROEBNER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invar/format.hpp"
#include "invar/gbcache.hpp"
#include "invar/order.hpp"
#include "invar/poly.hpp"
#include "invar/ring.hpp"
#include "invar/util.hpp"

namespace invar {

class TimeBudgetExceeded : public Error {
public:
    TimeBudgetExceeded() : Error("time budget exceeded") {}
};

// Optional wall-clock budget threaded through the long-running loops.
struct Budget {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    mutable uint64_t tick = 0;

    static Budget none() { return {}; }
    static Budget seconds(double s)
    {
        Budget b;
        b.deadline = std::chrono::steady_clock::now()
                   + std::chrono::milliseconds(static_cast<int64_t>(s * 1000.0));
        return b;
    }
    void check() const
    {
        if (!deadline)
            return;
        if ((++tick & 0x3ff) != 0)
            return;
        if (std::chrono::steady_clock::now() > *deadline)
            throw TimeBudgetExceeded();
    }
};

namespace gbdetail {

// Term vector sorted strictly descending under the active order.
template <class F>
struct OTV {
    std::vector<typename Polynomial<F>::Term> t;
    bool empty() const { return t.empty(); }
    const typename Polynomial<F>::Term& lead() const { return t.front(); }
};

template <class F>
OTV<F> otv_of(const Polynomial<F>& p, const OrderCmp<F>& cmp)
{
    OTV<F> o;
    o.t = p.terms();
    std::sort(o.t.begin(), o.t.end(),
              [&](const auto& a, const auto& b) { return cmp.cmp(a.m, b.m) > 0; });
    return o;
}

template <class F>
Polynomial<F> poly_of(const RingPtr<F>& ring, OTV<F>&& o)
{
    return Polynomial<F>::from_terms(ring, std::move(o.t));
}

// a -= c * x^m * b  (merge; both inputs sorted descending under cmp)
template <class F>
void sub_mul(OTV<F>& a, const OTV<F>& b, const Monomial& m, typename F::Elem c,
             const Ring<F>& ring, const OrderCmp<F>& cmp)
{
    const F& fld = ring.field();
    std::vector<typename Polynomial<F>::Term> out;
    out.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        Monomial bm = ring.mul(b.t[j].m, m);
        int cc = cmp.cmp(a.t[i].m, bm);
        if (cc > 0) {
            out.push_back(a.t[i++]);
        } else if (cc < 0) {
            out.push_back({std::move(bm), fld.neg(fld.mul(b.t[j].c, c))});
            ++j;
        } else {
            auto s = fld.sub(a.t[i].c, fld.mul(b.t[j].c, c));
            if (!fld.is_zero(s))
                out.push_back({a.t[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.t.size(); ++i)
        out.push_back(a.t[i]);
    for (; j < b.t.size(); ++j)
        out.push_back({ring.mul(b.t[j].m, m), fld.neg(fld.mul(b.t[j].c, c))});
    a.t = std::move(out);
}

} // namespace gbdetail

// Remainder of f on division by G under `order`; no term of the result is
// divisible by any LM(g). When G is a Groebner basis this is the unique
// normal form. `choose` may override reducer selection (used by the
// reducer-independence property test); by default the lowest index wins.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& G,
                          const MonomialOrder& order,
                          const std::function<size_t(const std::vector<size_t>&)>& choose = {},
                          const Budget& budget = Budget::none())
{
    if (f.is_zero())
        return f;
    const RingPtr<F>& ring = f.ring();
    for (const auto& g : G)
        require_same_ring(ring, g.ring());
    OrderCmp<F> cmp(*ring, order);
    const F& fld = ring->field();

    std::vector<gbdetail::OTV<F>> red;
    red.reserve(G.size());
    std::vector<size_t> live;
    for (size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero())
            continue;
        red.push_back(gbdetail::otv_of(G[i], cmp));
        live.push_back(i);
    }

    gbdetail::OTV<F> work = gbdetail::otv_of(f, cmp);
    std::vector<typename Polynomial<F>::Term> out;
    std::vector<size_t> divisors;
    while (!work.empty()) {
        budget.check();
        const auto& lt = work.lead();
        divisors.clear();
        for (size_t i = 0; i < red.size(); ++i)
            if (ring->divides(red[i].lead().m, lt.m))
                divisors.push_back(i);
        if (divisors.empty()) {
            out.push_back(lt);
            work.t.erase(work.t.begin());
            continue;
        }
        size_t pick = choose ? divisors[choose(divisors)] : divisors.front();
        const auto& g = red[pick];
        Monomial q = ring->div(lt.m, g.lead().m);
        typename F::Elem c = fld.div(lt.c, g.lead().c);
        gbdetail::sub_mul(work, g, q, c, *ring, cmp);
    }
    return Polynomial<F>::from_terms(ring, std::move(out));
}

template <class F>
Polynomial<F> spoly(const Polynomial<F>& a, const Polynomial<F>& b, const MonomialOrder& order)
{
    const RingPtr<F>& ring = a.ring();
    OrderCmp<F> cmp(*ring, order);
    const auto& la = a.leading_term(cmp);
    const auto& lb = b.leading_term(cmp);
    Monomial l = ring->lcm(la.m, lb.m);
    const F& fld = ring->field();
    Polynomial<F> left = a.times_term(ring->div(l, la.m), fld.inv(la.c));
    Polynomial<F> right = b.times_term(ring->div(l, lb.m), fld.inv(lb.c));
    return left - right;
}

// Buchberger with Gebauer-Moeller pair elimination and sugar-degree normal
// selection. Deterministic: ties in the pair queue break on (lcm, i, j).
template <class F>
std::vector<Polynomial<F>> buchberger(const std::vector<Polynomial<F>>& gens,
                                      const MonomialOrder& order,
                                      const Budget& budget = Budget::none())
{
    if (gens.empty())
        return {};
    const RingPtr<F>& ring = gens.front().ring();
    OrderCmp<F> cmp(*ring, order);
    const F& fld = ring->field();

    struct Entry {
        Polynomial<F> p;
        gbdetail::OTV<F> otv;
        Monomial lm;
        int64_t sugar;
    };
    std::vector<Entry> basis;

    // full reduction against the current basis, working on pre-sorted terms
    auto reduce_full = [&](gbdetail::OTV<F> work) {
        std::vector<typename Polynomial<F>::Term> out;
        while (!work.empty()) {
            budget.check();
            const auto& lt = work.lead();
            size_t pick = basis.size();
            for (size_t i = 0; i < basis.size(); ++i) {
                if (ring->divides(basis[i].lm, lt.m)) {
                    pick = i;
                    break;
                }
            }
            if (pick == basis.size()) {
                out.push_back(lt);
                work.t.erase(work.t.begin());
                continue;
            }
            Monomial q = ring->div(lt.m, basis[pick].lm);
            typename F::Elem c = fld.div(lt.c, basis[pick].otv.lead().c);
            gbdetail::sub_mul(work, basis[pick].otv, q, c, *ring, cmp);
        }
        return Polynomial<F>::from_terms(ring, std::move(out));
    };

    struct Pair {
        size_t i, j;
        Monomial lcm;
        int64_t sugar;
    };
    std::vector<Pair> pairs;

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar)
            return a.sugar < b.sugar;
        int c = cmp.cmp(a.lcm, b.lcm);
        if (c)
            return c < 0;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    };

    auto make_pair = [&](size_t i, size_t j) {
        Monomial l = ring->lcm(basis[i].lm, basis[j].lm);
        int64_t sug = std::max(basis[i].sugar + l.sdeg - basis[i].lm.sdeg,
                               basis[j].sugar + l.sdeg - basis[j].lm.sdeg);
        return Pair{i, j, std::move(l), sug};
    };

    // Gebauer-Moeller update when element t joins the basis.
    auto update = [&](size_t t) {
        const Monomial& lt = basis[t].lm;
        std::vector<Pair> fresh;
        fresh.reserve(t);
        for (size_t i = 0; i < t; ++i)
            fresh.push_back(make_pair(i, t));
        // criterion M: drop (i,t) when lcm(j,t) properly divides lcm(i,t)
        std::vector<char> drop(fresh.size(), 0);
        for (size_t a = 0; a < fresh.size(); ++a) {
            for (size_t b = 0; b < fresh.size() && !drop[a]; ++b) {
                if (a == b || drop[b])
                    continue;
                if (fresh[b].lcm != fresh[a].lcm && ring->divides(fresh[b].lcm, fresh[a].lcm))
                    drop[a] = 1;
            }
        }
        // criterion F: among equal lcms keep the smallest index
        for (size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a])
                continue;
            for (size_t b = a + 1; b < fresh.size(); ++b)
                if (!drop[b] && fresh[b].lcm == fresh[a].lcm)
                    drop[b] = 1;
        }
        // criterion B (Buchberger 1): coprime leading monomials
        for (size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a] && ring->coprime(basis[fresh[a].i].lm, lt))
                drop[a] = 1;
        // prune old pairs strictly divisible by the new leading monomial
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (auto& pr : pairs) {
            if (ring->divides(lt, pr.lcm)
                && ring->lcm(basis[pr.i].lm, lt) != pr.lcm
                && ring->lcm(basis[pr.j].lm, lt) != pr.lcm)
                continue;
            kept.push_back(std::move(pr));
        }
        pairs = std::move(kept);
        for (size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a])
                pairs.push_back(std::move(fresh[a]));
    };

    auto add_element = [&](Polynomial<F> p, int64_t sugar) {
        gbdetail::OTV<F> otv = gbdetail::otv_of(p, cmp);
        Monomial lm = otv.lead().m;
        basis.push_back({std::move(p), std::move(otv), std::move(lm), sugar});
        update(basis.size() - 1);
    };

    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        Polynomial<F> r = reduce_full(gbdetail::otv_of(g, cmp));
        if (r.is_zero())
            continue;
        r = r.monic(cmp);
        add_element(r, r.sdeg());
    }

    while (!pairs.empty()) {
        budget.check();
        size_t best = 0;
        for (size_t i = 1; i < pairs.size(); ++i)
            if (pair_less(pairs[i], pairs[best]))
                best = i;
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<ptrdiff_t>(best));

        // s-polynomial assembled directly in sorted form
        const Entry& ei = basis[pr.i];
        const Entry& ej = basis[pr.j];
        gbdetail::OTV<F> s;
        gbdetail::sub_mul(s, ei.otv, ring->div(pr.lcm, ei.lm), fld.neg(fld.inv(ei.otv.lead().c)),
                          *ring, cmp);
        gbdetail::sub_mul(s, ej.otv, ring->div(pr.lcm, ej.lm), fld.inv(ej.otv.lead().c), *ring,
                          cmp);
        Polynomial<F> r = reduce_full(std::move(s));
        if (r.is_zero())
            continue;
        r = r.monic(cmp);
        add_element(r, pr.sugar);
    }

    // reduce: minimal leading monomials, then tail-reduce
    std::vector<size_t> keep;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            if (!ring->divides(basis[j].lm, basis[i].lm))
                continue;
            if (basis[j].lm != basis[i].lm || j < i)
                redundant = true;
        }
        if (!redundant)
            keep.push_back(i);
    }
    std::vector<Polynomial<F>> reduced;
    reduced.reserve(keep.size());
    for (size_t a = 0; a < keep.size(); ++a) {
        std::vector<Polynomial<F>> others;
        others.reserve(keep.size() - 1);
        for (size_t b = 0; b < keep.size(); ++b)
            if (b != a)
                others.push_back(basis[keep[b]].p);
        Polynomial<F> r = normal_form(basis[keep[a]].p, others, order, {}, budget);
        if (!r.is_zero())
            reduced.push_back(r.monic(cmp));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
        return cmp.cmp(a.leading_term(cmp).m, b.leading_term(cmp).m) < 0;
    });
    // reduced basis of the unit ideal is {1}
    for (const auto& g : reduced)
        if (g.is_constant() && !g.is_zero())
            return {Polynomial<F>::constant(ring, fld.one())};
    return reduced;
}

// Division with cofactor tracking: f = sum q_i g_i + r. Small-scale
// certification use; the production path is the untracked normal_form.
template <class F>
Polynomial<F> normal_form_tracked(const Polynomial<F>& f, const std::vector<Polynomial<F>>& G,
                                  const MonomialOrder& order, std::vector<Polynomial<F>>& cof)
{
    const RingPtr<F>& ring = f.ring();
    OrderCmp<F> cmp(*ring, order);
    const F& fld = ring->field();
    cof.assign(G.size(), Polynomial<F>::zero(ring));
    Polynomial<F> work = f;
    Polynomial<F> rest = Polynomial<F>::zero(ring);
    while (!work.is_zero()) {
        const auto& lt = work.leading_term(cmp);
        size_t pick = G.size();
        for (size_t i = 0; i < G.size(); ++i) {
            if (!G[i].is_zero() && ring->divides(G[i].leading_term(cmp).m, lt.m)) {
                pick = i;
                break;
            }
        }
        if (pick == G.size()) {
            Polynomial<F> t = Polynomial<F>::monomial_poly(ring, lt.m, lt.c);
            rest = rest + t;
            work = work - t;
            continue;
        }
        const auto& gl = G[pick].leading_term(cmp);
        Monomial q = ring->div(lt.m, gl.m);
        typename F::Elem c = fld.div(lt.c, gl.c);
        cof[pick] = cof[pick] + Polynomial<F>::monomial_poly(ring, q, c);
        work = work - G[pick].times_term(q, c);
    }
    return rest;
}

// Buchberger with representation tracking over the input generators; returns
// the (non-reduced) basis and, for each element, cofactors certifying
// basis[k] = sum rep[k][i] * gens[i]. Test-scale only.
template <class F>
void buchberger_tracked(const std::vector<Polynomial<F>>& gens, const MonomialOrder& order,
                        std::vector<Polynomial<F>>& basis,
                        std::vector<std::vector<Polynomial<F>>>& rep)
{
    require(!gens.empty(), "buchberger_tracked: empty input");
    const RingPtr<F>& ring = gens.front().ring();
    OrderCmp<F> cmp(*ring, order);
    const F& fld = ring->field();
    basis.clear();
    rep.clear();
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero())
            continue;
        basis.push_back(gens[i]);
        std::vector<Polynomial<F>> r(gens.size(), Polynomial<F>::zero(ring));
        r[i] = Polynomial<F>::constant(ring, fld.one());
        rep.push_back(std::move(r));
    }
    std::vector<std::pair<size_t, size_t>> todo;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            todo.push_back({i, j});
    while (!todo.empty()) {
        auto [i, j] = todo.front();
        todo.erase(todo.begin());
        const auto& li = basis[i].leading_term(cmp);
        const auto& lj = basis[j].leading_term(cmp);
        Monomial l = ring->lcm(li.m, lj.m);
        Monomial qi = ring->div(l, li.m), qj = ring->div(l, lj.m);
        typename F::Elem ci = fld.inv(li.c), cj = fld.inv(lj.c);
        Polynomial<F> s = basis[i].times_term(qi, ci) - basis[j].times_term(qj, cj);
        std::vector<Polynomial<F>> srep(gens.size(), Polynomial<F>::zero(ring));
        for (size_t k = 0; k < gens.size(); ++k)
            srep[k] = rep[i][k].times_term(qi, ci) - rep[j][k].times_term(qj, cj);
        std::vector<Polynomial<F>> cof;
        Polynomial<F> r = normal_form_tracked(s, basis, order, cof);
        if (r.is_zero())
            continue;
        for (size_t b = 0; b < basis.size(); ++b)
            for (size_t k = 0; k < gens.size(); ++k)
                srep[k] = srep[k] - cof[b] * rep[b][k];
        size_t idx = basis.size();
        basis.push_back(r);
        rep.push_back(std::move(srep));
        for (size_t b = 0; b < idx; ++b)
            todo.push_back({b, idx});
    }
}

// Ideal with per-order cached reduced Groebner bases.
template <class F>
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens)
        : state_(std::make_shared<State>())
    {
        state_->ring = std::move(ring);
        for (auto& g : gens) {
            require_same_ring(g.ring(), state_->ring);
            if (!g.is_zero())
                state_->gens.push_back(std::move(g));
        }
    }

    const RingPtr<F>& ring() const { return state_->ring; }
    const std::vector<Polynomial<F>>& gens() const { return state_->gens; }
    bool trivial() const { return state_->gens.empty(); }

    const std::vector<Polynomial<F>>& groebner_basis(const MonomialOrder& order,
                                                     const Budget& budget = Budget::none()) const
    {
        std::string key = order.describe();
        auto it = state_->cache.find(key);
        if (it != state_->cache.end())
            return it->second;
        if (auto cached = disk_cache_load(order)) {
            for (const auto& g : state_->gens)
                require(normal_form(g, *cached, order).is_zero(),
                        "gb cache: stale entry, generator does not reduce");
            return state_->cache.emplace(std::move(key), std::move(*cached)).first->second;
        }
        auto gb = buchberger(state_->gens, order, budget);
        // every input generator must reduce to zero against the result
        for (const auto& g : state_->gens)
            require(normal_form(g, gb, order).is_zero(), "buchberger: generator does not reduce");
        disk_cache_store(order, gb);
        return state_->cache.emplace(std::move(key), std::move(gb)).first->second;
    }

    Polynomial<F> normal_form_of(const Polynomial<F>& f, const MonomialOrder& order,
                                 const Budget& budget = Budget::none()) const
    {
        return normal_form(f, groebner_basis(order, budget), order, {}, budget);
    }
    bool contains(const Polynomial<F>& f, const MonomialOrder& order = MonomialOrder::grevlex(),
                  const Budget& budget = Budget::none()) const
    {
        return normal_form_of(f, order, budget).is_zero();
    }
    bool is_unit_ideal(const MonomialOrder& order = MonomialOrder::grevlex(),
                       const Budget& budget = Budget::none()) const
    {
        const auto& gb = groebner_basis(order, budget);
        return gb.size() == 1 && gb.front().is_constant();
    }

    Ideal plus(const std::vector<Polynomial<F>>& more) const
    {
        std::vector<Polynomial<F>> g = state_->gens;
        for (const auto& f : more)
            g.push_back(f);
        return Ideal(state_->ring, std::move(g));
    }

private:
    struct State {
        RingPtr<F> ring;
        std::vector<Polynomial<F>> gens;
        mutable std::map<std::string, std::vector<Polynomial<F>>> cache;
    };
    std::shared_ptr<State> state_;

    std::optional<std::vector<Polynomial<F>>> disk_cache_load(const MonomialOrder& order) const
    {
        return gb_cache_load(state_->ring, state_->gens, order);
    }
    void disk_cache_store(const MonomialOrder& order, const std::vector<Polynomial<F>>& gb) const
    {
        gb_cache_store(state_->ring, state_->gens, order, gb);
    }
};

template <class F>
bool ideal_subset(const Ideal<F>& a, const Ideal<F>& b,
                  const MonomialOrder& order = MonomialOrder::grevlex(),
                  const Budget& budget = Budget::none())
{
    for (const auto& g : a.gens())
        if (!b.contains(g, order, budget))
            return false;
    return true;
}

template <class F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b,
                 const MonomialOrder& order = MonomialOrder::grevlex(),
                 const Budget& budget = Budget::none())
{
    return ideal_subset(a, b, order, budget) && ideal_subset(b, a, order, budget);
}

namespace gbdetail {

inline std::string fresh_var_name(const std::vector<std::string>& taken, const std::string& stem)
{
    auto used = [&](const std::string& s) {
        return std::find(taken.begin(), taken.end(), s) != taken.end();
    };
    if (!used(stem))
        return stem;
    for (int i = 0;; ++i) {
        std::string cand = stem + std::to_string(i);
        if (!used(cand))
            return cand;
    }
}

} // namespace gbdetail

// I intersect K[kept variables]; `drop` lists variable names to eliminate.
// Result lives in the smaller ring. Each returned generator is certified to
// lie in I by a normal-form membership check.
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<std::string>& drop,
                   const Budget& budget = Budget::none())
{
    const RingPtr<F>& ring = I.ring();
    std::vector<uint8_t> mask = front_mask(*ring, drop);
    MonomialOrder elim = MonomialOrder::block_elimination(mask);

    std::vector<std::string> kept_names;
    std::vector<Rational> kept_weights;
    for (size_t i = 0; i < ring->nvars(); ++i) {
        if (!mask[i]) {
            kept_names.push_back(ring->var_name(i));
            kept_weights.push_back(ring->weights()[i]);
        }
    }
    auto small = make_ring(ring->field(), kept_names, kept_weights);

    const auto& gb = I.groebner_basis(elim, budget);
    std::vector<Polynomial<F>> kept;
    for (const auto& g : gb) {
        bool uses_dropped = false;
        for (size_t i = 0; i < ring->nvars() && !uses_dropped; ++i)
            if (mask[i] && g.uses_var(i))
                uses_dropped = true;
        if (uses_dropped)
            continue;
        require(I.contains(g, elim, budget), "eliminate: generator escaped the ideal");
        kept.push_back(g.into_ring(small));
    }
    return Ideal<F>(small, std::move(kept));
}

// Intersection via the t-trick: (t*I + (1-t)*J) intersect K[X].
template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J, const Budget& budget = Budget::none())
{
    require_same_ring(I.ring(), J.ring());
    const RingPtr<F>& ring = I.ring();
    std::string tname = gbdetail::fresh_var_name(ring->var_names(), "_t");
    std::vector<std::string> names = ring->var_names();
    names.insert(names.begin(), tname);
    std::vector<Rational> weights = ring->weights();
    weights.insert(weights.begin(), Rational(1));
    auto big = make_ring(ring->field(), names, weights);

    Polynomial<F> t = Polynomial<F>::variable(big, tname);
    Polynomial<F> one = Polynomial<F>::constant(big, big->field().one());
    std::vector<Polynomial<F>> gens;
    for (const auto& g : I.gens())
        gens.push_back(t * g.into_ring(big));
    for (const auto& h : J.gens())
        gens.push_back((one - t) * h.into_ring(big));
    Ideal<F> mixed(big, std::move(gens));
    Ideal<F> elim = eliminate(mixed, {tname}, budget);
    std::vector<Polynomial<F>> out;
    for (const auto& g : elim.gens())
        out.push_back(g.into_ring(ring));
    return Ideal<F>(ring, std::move(out));
}

// Ideal quotient I : (f), computed as (I intersect (f)) scaled by 1/f.
// Every returned generator q is re-checked to satisfy q*f in I.
template <class F>
Ideal<F> quotient(const Ideal<F>& I, const Polynomial<F>& f, const Budget& budget = Budget::none())
{
    require(!f.is_zero(), "quotient: f = 0 rejected");
    require_same_ring(I.ring(), f.ring());
    Ideal<F> principal(I.ring(), {f});
    Ideal<F> cap = intersect(I, principal, budget);
    std::vector<Polynomial<F>> out;
    for (const auto& g : cap.gens()) {
        Polynomial<F> q = g.exact_div(f);
        require(I.contains(q * f, MonomialOrder::grevlex(), budget),
                "quotient: certification failed");
        out.push_back(std::move(q));
    }
    return Ideal<F>(I.ring(), std::move(out));
}

// True iff f is a zero divisor modulo I, i.e. I:(f) strictly contains I.
// The containment I <= I:(f) holds identically, so only the reverse inclusion
// is tested, by normal-form membership of every quotient generator.
template <class F>
bool is_zero_divisor(const Polynomial<F>& f, const Ideal<F>& I,
                     const Budget& budget = Budget::none())
{
    require(!f.is_zero(), "is_zero_divisor: f = 0");
    Ideal<F> q = quotient(I, f, budget);
    for (const auto& g : q.gens())
        if (!I.contains(g, MonomialOrder::grevlex(), budget))
            return true;
    return false;
}

namespace gbdetail {

// Largest subset of variables meeting no leading-term support; classic
// independent-set search on the monomial supports.
inline size_t max_independent_set(const std::vector<uint64_t>& supports, size_t nvars)
{
    size_t best = 0;
    std::vector<uint64_t> sup = supports;
    std::function<void(size_t, uint64_t, size_t)> rec = [&](size_t i, uint64_t S, size_t card) {
        if (card + (nvars - i) <= best)
            return;
        if (i == nvars) {
            best = std::max(best, card);
            return;
        }
        uint64_t Sp = S | (uint64_t(1) << i);
        bool ok = true;
        for (uint64_t m : sup) {
            if ((m & ~Sp) == 0) {
                ok = false;
                break;
            }
        }
        if (ok)
            rec(i + 1, Sp, card + 1);
        rec(i + 1, S, card);
    };
    rec(0, 0, 0);
    return best;
}

} // namespace gbdetail

// Krull dimension of the quotient ring R/I (convention: dimension((1)) = -1).
template <class F>
int dimension(const Ideal<F>& I, const MonomialOrder& order = MonomialOrder::grevlex(),
              const Budget& budget = Budget::none())
{
    const RingPtr<F>& ring = I.ring();
    require(ring->nvars() <= 64, "dimension: too many variables");
    const auto& gb = I.groebner_basis(order, budget);
    if (gb.size() == 1 && gb.front().is_constant())
        return -1;
    OrderCmp<F> cmp(*ring, order);
    std::vector<uint64_t> supports;
    for (const auto& g : gb) {
        const Monomial& lm = g.leading_term(cmp).m;
        uint64_t s = 0;
        for (size_t i = 0; i < lm.e.size(); ++i)
            if (lm.e[i])
                s |= uint64_t(1) << i;
        supports.push_back(s);
    }
    // minimal supports suffice
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    return static_cast<int>(gbdetail::max_independent_set(supports, ring->nvars()));
}

// height of I inside the polynomial ring (a domain, so dim + height = nvars)
template <class F>
int height(const Ideal<F>& I, const Budget& budget = Budget::none())
{
    int d = dimension(I, MonomialOrder::grevlex(), budget);
    require(d >= 0, "height of the unit ideal");
    return static_cast<int>(I.ring()->nvars()) - d;
}

// height of J in the quotient P/I, assuming P/I is a domain:
// dim P/I - dim P/(I+J).
template <class F>
int height_in_quotient(const Ideal<F>& J, const Ideal<F>& I_presentation,
                       const Budget& budget = Budget::none())
{
    require_same_ring(J.ring(), I_presentation.ring());
    int top = dimension(I_presentation, MonomialOrder::grevlex(), budget);
    Ideal<F> sum = I_presentation.plus(J.gens());
    int bottom = dimension(sum, MonomialOrder::grevlex(), budget);
    require(top >= 0, "height_in_quotient: presentation is the unit ideal");
    require(bottom >= 0, "height_in_quotient: I+J is the unit ideal");
    return top - bottom;
}

} // namespace invar

#endif
