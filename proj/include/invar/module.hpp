#ifndef INVAR_MODULE_HPP
#define INVAR_MODULE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "invar/groebner.hpp"
#include "invar/poly.hpp"
#include "invar/util.hpp"

namespace invar {

// Element of the free module K[X]^r.
template <class F>
struct FreeModuleElement {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> comps;

    FreeModuleElement() = default;
    FreeModuleElement(RingPtr<F> r, size_t rank)
        : ring(std::move(r)), comps(rank, Polynomial<F>::zero(ring))
    {
        for (auto& c : comps)
            c = Polynomial<F>::zero(ring);
    }
    size_t rank() const { return comps.size(); }
    bool is_zero() const
    {
        for (const auto& c : comps)
            if (!c.is_zero())
                return false;
        return true;
    }
    friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b)
    {
        return a.comps == b.comps;
    }
};

template <class F>
FreeModuleElement<F> unit_vector(const RingPtr<F>& ring, size_t rank, size_t i)
{
    FreeModuleElement<F> e(ring, rank);
    e.comps[i] = Polynomial<F>::constant(ring, ring->field().one());
    return e;
}

// Total well-order on module monomials (component, monomial): either the
// monomial order extended position-over-term or term-over-position. Earlier
// components rank higher in both conventions.
struct ModuleOrder {
    enum class Ext { PositionOverTerm, TermOverPosition };
    MonomialOrder base;
    Ext ext = Ext::PositionOverTerm;

    static ModuleOrder pot(MonomialOrder b = MonomialOrder::grevlex())
    {
        return {std::move(b), Ext::PositionOverTerm};
    }
    static ModuleOrder top(MonomialOrder b = MonomialOrder::grevlex())
    {
        return {std::move(b), Ext::TermOverPosition};
    }
};

namespace moddetail {

template <class F>
struct MTerm {
    uint32_t comp;
    Monomial m;
    typename F::Elem c;
};

template <class F>
struct MVec {
    std::vector<MTerm<F>> t; // strictly descending
    bool empty() const { return t.empty(); }
    const MTerm<F>& lead() const { return t.front(); }
};

template <class F>
class MCmp {
public:
    MCmp(const Ring<F>& ring, const ModuleOrder& mo) : cmp_(ring, mo.base), ext_(mo.ext) {}

    int cmp(uint32_t c1, const Monomial& m1, uint32_t c2, const Monomial& m2) const
    {
        if (ext_ == ModuleOrder::Ext::PositionOverTerm) {
            if (c1 != c2)
                return c1 < c2 ? 1 : -1;
            return cmp_.cmp(m1, m2);
        }
        int c = cmp_.cmp(m1, m2);
        if (c)
            return c;
        if (c1 != c2)
            return c1 < c2 ? 1 : -1;
        return 0;
    }
    int cmp(const MTerm<F>& a, const MTerm<F>& b) const { return cmp(a.comp, a.m, b.comp, b.m); }

private:
    OrderCmp<F> cmp_;
    ModuleOrder::Ext ext_;
};

template <class F>
MVec<F> mvec_of(const FreeModuleElement<F>& v, const MCmp<F>& cmp)
{
    MVec<F> out;
    for (size_t c = 0; c < v.comps.size(); ++c)
        for (const auto& t : v.comps[c].terms())
            out.t.push_back({static_cast<uint32_t>(c), t.m, t.c});
    std::sort(out.t.begin(), out.t.end(),
              [&](const MTerm<F>& a, const MTerm<F>& b) { return cmp.cmp(a, b) > 0; });
    return out;
}

template <class F>
FreeModuleElement<F> element_of(const RingPtr<F>& ring, size_t rank, const MVec<F>& v)
{
    FreeModuleElement<F> out(ring, rank);
    std::vector<std::vector<typename Polynomial<F>::Term>> acc(rank);
    for (const auto& t : v.t)
        acc[t.comp].push_back({t.m, t.c});
    for (size_t c = 0; c < rank; ++c)
        out.comps[c] = Polynomial<F>::from_terms(ring, std::move(acc[c]));
    return out;
}

// a -= coef * x^m * b
template <class F>
void msub_mul(MVec<F>& a, const MVec<F>& b, const Monomial& m, typename F::Elem coef,
              const Ring<F>& ring, const MCmp<F>& cmp)
{
    const F& fld = ring.field();
    std::vector<MTerm<F>> out;
    out.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        Monomial bm = ring.mul(b.t[j].m, m);
        int cc = cmp.cmp(a.t[i].comp, a.t[i].m, b.t[j].comp, bm);
        if (cc > 0) {
            out.push_back(a.t[i++]);
        } else if (cc < 0) {
            out.push_back({b.t[j].comp, std::move(bm), fld.neg(fld.mul(b.t[j].c, coef))});
            ++j;
        } else {
            auto s = fld.sub(a.t[i].c, fld.mul(b.t[j].c, coef));
            if (!fld.is_zero(s))
                out.push_back({a.t[i].comp, a.t[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.t.size(); ++i)
        out.push_back(a.t[i]);
    for (; j < b.t.size(); ++j)
        out.push_back({b.t[j].comp, ring.mul(b.t[j].m, m), fld.neg(fld.mul(b.t[j].c, coef))});
    a.t = std::move(out);
}

} // namespace moddetail

// Reduced Groebner basis of the submodule generated by `gens` in K[X]^rank.
// Same skeleton as the ring Buchberger; pairs only form between elements with
// leading terms in the same component, and the coprimality shortcut is not
// used (it is not valid in modules of rank > 1).
template <class F>
std::vector<FreeModuleElement<F>> module_groebner(const std::vector<FreeModuleElement<F>>& gens,
                                                  size_t rank, const ModuleOrder& morder,
                                                  const Budget& budget = Budget::none())
{
    using moddetail::MCmp;
    using moddetail::MTerm;
    using moddetail::MVec;
    if (gens.empty())
        return {};
    const RingPtr<F>& ring = gens.front().ring;
    const F& fld = ring->field();
    MCmp<F> cmp(*ring, morder);

    struct Entry {
        MVec<F> v;
        uint32_t lcomp;
        Monomial lm;
        int64_t sugar;
    };
    std::vector<Entry> basis;

    auto reduce_full = [&](MVec<F> work) {
        std::vector<MTerm<F>> out;
        while (!work.empty()) {
            budget.check();
            const auto& lt = work.lead();
            size_t pick = basis.size();
            for (size_t i = 0; i < basis.size(); ++i) {
                if (basis[i].lcomp == lt.comp && ring->divides(basis[i].lm, lt.m)) {
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
            typename F::Elem c = fld.div(lt.c, basis[pick].v.lead().c);
            moddetail::msub_mul(work, basis[pick].v, q, c, *ring, cmp);
        }
        MVec<F> r;
        r.t = std::move(out);
        return r;
    };

    struct Pair {
        size_t i, j;
        Monomial lcm;
        int64_t sugar;
    };
    std::vector<Pair> pairs;
    OrderCmp<F> ringcmp(*ring, morder.base);

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar)
            return a.sugar < b.sugar;
        int c = ringcmp.cmp(a.lcm, b.lcm);
        if (c)
            return c < 0;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    };

    auto update = [&](size_t t) {
        const Monomial& lt = basis[t].lm;
        uint32_t comp = basis[t].lcomp;
        std::vector<Pair> fresh;
        for (size_t i = 0; i < t; ++i) {
            if (basis[i].lcomp != comp)
                continue;
            Monomial l = ring->lcm(basis[i].lm, lt);
            int64_t sug = std::max(basis[i].sugar + l.sdeg - basis[i].lm.sdeg,
                                   basis[t].sugar + l.sdeg - lt.sdeg);
            fresh.push_back({i, t, std::move(l), sug});
        }
        std::vector<char> drop(fresh.size(), 0);
        for (size_t a = 0; a < fresh.size(); ++a)
            for (size_t b = 0; b < fresh.size() && !drop[a]; ++b) {
                if (a == b || drop[b])
                    continue;
                if (fresh[b].lcm != fresh[a].lcm && ring->divides(fresh[b].lcm, fresh[a].lcm))
                    drop[a] = 1;
            }
        for (size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a])
                continue;
            for (size_t b = a + 1; b < fresh.size(); ++b)
                if (!drop[b] && fresh[b].lcm == fresh[a].lcm)
                    drop[b] = 1;
        }
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (auto& pr : pairs) {
            if (basis[pr.i].lcomp == comp && ring->divides(lt, pr.lcm)
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

    auto add_element = [&](MVec<F> v, int64_t sugar) {
        typename F::Elem inv = fld.inv(v.lead().c);
        if (!fld.is_one(inv))
            for (auto& t : v.t)
                t.c = fld.mul(t.c, inv);
        Entry e{std::move(v), 0, Monomial{}, sugar};
        e.lcomp = e.v.lead().comp;
        e.lm = e.v.lead().m;
        basis.push_back(std::move(e));
        update(basis.size() - 1);
    };

    for (const auto& g : gens) {
        require_same_ring(g.ring, ring);
        require(g.rank() == rank, "module_groebner: rank mismatch");
        if (g.is_zero())
            continue;
        MVec<F> r = reduce_full(moddetail::mvec_of(g, cmp));
        if (r.empty())
            continue;
        int64_t sug = r.lead().m.sdeg;
        add_element(std::move(r), sug);
    }

    while (!pairs.empty()) {
        budget.check();
        size_t best = 0;
        for (size_t i = 1; i < pairs.size(); ++i)
            if (pair_less(pairs[i], pairs[best]))
                best = i;
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<ptrdiff_t>(best));

        const Entry& ei = basis[pr.i];
        const Entry& ej = basis[pr.j];
        MVec<F> s;
        moddetail::msub_mul(s, ei.v, ring->div(pr.lcm, ei.lm), fld.neg(fld.inv(ei.v.lead().c)),
                            *ring, cmp);
        moddetail::msub_mul(s, ej.v, ring->div(pr.lcm, ej.lm), fld.inv(ej.v.lead().c), *ring, cmp);
        MVec<F> r = reduce_full(std::move(s));
        if (r.empty())
            continue;
        add_element(std::move(r), pr.sugar);
    }

    // minimalize + tail reduce
    std::vector<size_t> keep;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || basis[j].lcomp != basis[i].lcomp)
                continue;
            if (!ring->divides(basis[j].lm, basis[i].lm))
                continue;
            if (basis[j].lm != basis[i].lm || j < i)
                redundant = true;
        }
        if (!redundant)
            keep.push_back(i);
    }
    // tail-reduce each survivor against the other survivors
    auto reduce_against = [&](MVec<F> work, const std::vector<size_t>& reducers) {
        std::vector<MTerm<F>> done;
        while (!work.empty()) {
            budget.check();
            const auto& lt = work.lead();
            size_t pick = SIZE_MAX;
            for (size_t i : reducers) {
                if (basis[i].lcomp == lt.comp && ring->divides(basis[i].lm, lt.m)) {
                    pick = i;
                    break;
                }
            }
            if (pick == SIZE_MAX) {
                done.push_back(lt);
                work.t.erase(work.t.begin());
                continue;
            }
            Monomial q = ring->div(lt.m, basis[pick].lm);
            typename F::Elem c = fld.div(lt.c, basis[pick].v.lead().c);
            moddetail::msub_mul(work, basis[pick].v, q, c, *ring, cmp);
        }
        MVec<F> r;
        r.t = std::move(done);
        return r;
    };

    std::vector<FreeModuleElement<F>> out;
    for (size_t a : keep) {
        std::vector<size_t> others;
        others.reserve(keep.size() - 1);
        for (size_t b : keep)
            if (b != a)
                others.push_back(b);
        MVec<F> r = reduce_against(basis[a].v, others);
        if (!r.empty()) {
            typename F::Elem inv = fld.inv(r.lead().c);
            if (!fld.is_one(inv))
                for (auto& t : r.t)
                    t.c = fld.mul(t.c, inv);
            out.push_back(moddetail::element_of(ring, rank, r));
        }
    }
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        MVec<F> vx = moddetail::mvec_of(x, cmp), vy = moddetail::mvec_of(y, cmp);
        return cmp.cmp(vx.lead(), vy.lead()) < 0;
    });
    return out;
}

// Module membership: normal form of v against a module Groebner basis.
template <class F>
FreeModuleElement<F> module_normal_form(const FreeModuleElement<F>& v,
                                        const std::vector<FreeModuleElement<F>>& gb,
                                        const ModuleOrder& morder)
{
    using moddetail::MCmp;
    using moddetail::MVec;
    const RingPtr<F>& ring = v.ring;
    const F& fld = ring->field();
    MCmp<F> cmp(*ring, morder);
    std::vector<MVec<F>> red;
    red.reserve(gb.size());
    for (const auto& g : gb)
        if (!g.is_zero())
            red.push_back(moddetail::mvec_of(g, cmp));
    MVec<F> work = moddetail::mvec_of(v, cmp);
    std::vector<moddetail::MTerm<F>> out;
    while (!work.empty()) {
        const auto& lt = work.lead();
        size_t pick = red.size();
        for (size_t i = 0; i < red.size(); ++i) {
            if (red[i].lead().comp == lt.comp && ring->divides(red[i].lead().m, lt.m)) {
                pick = i;
                break;
            }
        }
        if (pick == red.size()) {
            out.push_back(lt);
            work.t.erase(work.t.begin());
            continue;
        }
        Monomial q = ring->div(lt.m, red[pick].lead().m);
        typename F::Elem c = fld.div(lt.c, red[pick].lead().c);
        moddetail::msub_mul(work, red[pick], q, c, *ring, cmp);
    }
    MVec<F> r;
    r.t = std::move(out);
    return moddetail::element_of(ring, v.rank(), r);
}

// Generators of the syzygy module {a in K[X]^s : sum a_i v_i = 0}, by the
// graph-module construction: Groebner basis of {(v_i ; e_i)} under a
// position-over-term order in which the value block dominates; elements with
// zero value block are the syzygies. Every returned syzygy is re-verified to
// annihilate the inputs exactly.
template <class F>
std::vector<FreeModuleElement<F>> syzygies(const std::vector<FreeModuleElement<F>>& vectors,
                                           const MonomialOrder& base = MonomialOrder::grevlex(),
                                           const Budget& budget = Budget::none())
{
    require(!vectors.empty(), "syzygies: no input vectors");
    const RingPtr<F>& ring = vectors.front().ring;
    size_t m = vectors.front().rank();
    size_t s = vectors.size();
    std::vector<FreeModuleElement<F>> graph;
    graph.reserve(s);
    for (size_t i = 0; i < s; ++i) {
        require(vectors[i].rank() == m, "syzygies: inconsistent rank");
        FreeModuleElement<F> g(ring, m + s);
        for (size_t c = 0; c < m; ++c)
            g.comps[c] = vectors[i].comps[c];
        g.comps[m + i] = Polynomial<F>::constant(ring, ring->field().one());
        graph.push_back(std::move(g));
    }
    auto gb = module_groebner(graph, m + s, ModuleOrder::pot(base), budget);
    std::vector<FreeModuleElement<F>> out;
    for (const auto& g : gb) {
        bool value_zero = true;
        for (size_t c = 0; c < m && value_zero; ++c)
            value_zero = g.comps[c].is_zero();
        if (!value_zero)
            continue;
        FreeModuleElement<F> syz(ring, s);
        for (size_t i = 0; i < s; ++i)
            syz.comps[i] = g.comps[m + i];
        // exact re-verification
        FreeModuleElement<F> acc(ring, m);
        for (size_t i = 0; i < s; ++i)
            for (size_t c = 0; c < m; ++c)
                acc.comps[c] = acc.comps[c] + syz.comps[i] * vectors[i].comps[c];
        require(acc.is_zero(), "syzygies: output does not annihilate the inputs");
        out.push_back(std::move(syz));
    }
    return out;
}

} // namespace invar

#endif
