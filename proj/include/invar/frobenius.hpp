#ifndef INVAR_FROBENIUS_HPP
#define INVAR_FROBENIUS_HPP

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "invar/actions.hpp"
#include "invar/invariants_sl2.hpp"
#include "invar/module.hpp"
#include "invar/subalgebra.hpp"

namespace invar {

// Setup for the intersection B cap K[X^p, Y]: ambient K[X, Y], generators
// split into f's (may use X-block variables) and g's (free of them), and a
// target ring whose variables stand for the p-th powers of the X-block.
template <class F>
struct FrobeniusProblem {
    uint64_t p = 2;
    RingPtr<F> ambient;
    std::vector<size_t> x_vars;          // indices of the X block in `ambient`
    std::vector<Polynomial<F>> fs;       // generators using the X block
    std::vector<Polynomial<F>> gs;       // generators in K[Y] only
    RingPtr<F> target;                   // same variable names; X-block vars now mean X^p
    size_t tensor_warn_bound = 1 << 12;  // r = p^{#fs} blow-up warning threshold
    size_t tensor_hard_bound = 1 << 20;  // refuse outright beyond this

    size_t tensor_count() const
    {
        size_t r = 1;
        for (size_t i = 0; i < fs.size(); ++i)
            r *= static_cast<size_t>(p);
        return r;
    }
};

template <class F>
FrobeniusProblem<F> make_frobenius_problem(uint64_t p, const RingPtr<F>& ambient,
                                           const std::vector<std::string>& x_block,
                                           const std::vector<Polynomial<F>>& generators)
{
    require(ambient->field().characteristic() == p, "frobenius: p must be the characteristic");
    FrobeniusProblem<F> prob;
    prob.p = p;
    prob.ambient = ambient;
    for (const auto& n : x_block) {
        int i = ambient->var_index(n);
        require(i >= 0, "frobenius: unknown X-block variable ", n);
        prob.x_vars.push_back(static_cast<size_t>(i));
    }
    require(!prob.x_vars.empty(), "frobenius: empty X block");
    for (const auto& g : generators) {
        require_same_ring(g.ring(), ambient);
        bool uses_x = false;
        for (size_t xv : prob.x_vars)
            uses_x = uses_x || g.uses_var(xv);
        (uses_x ? prob.fs : prob.gs).push_back(g);
    }
    prob.target = make_ring(ambient->field(), ambient->var_names());
    return prob;
}

// G_a vector-invariant input for the chapter's pipeline: copies 0..k with the
// de Concini-Procesi set {X_i Y_j - X_j Y_i} plus {X_i}, X block = {X0, Y0}.
template <class F>
FrobeniusProblem<F> ga_frobenius_problem(const F& field, uint64_t p, size_t k)
{
    auto ambient = make_ring(field, twisted_ring_names(k));
    auto gens = plucker_generators(GroupKind::Ga, ambient, 0, k);
    return make_frobenius_problem(p, ambient, {"X0", "Y0"}, gens);
}

// Kernel of an A-linear map D on B = sum A t_i, given the images D(t_i):
//   1. syzygies of the D(t_i) over K[X]
//   2. their intersection with A^r
//   3. c_i = sum_mu (b_i)_mu t_mu
// The caller guarantees A-linearity of D; when a verifier is supplied every
// returned kernel element is re-checked through it.
template <class F>
std::vector<Polynomial<F>> compute_kernel(
    const SubalgebraPresentation<F>& A, const std::vector<Polynomial<F>>& ts,
    const std::vector<FreeModuleElement<F>>& images,
    const std::function<bool(const Polynomial<F>&)>& in_kernel = {},
    const Budget& budget = Budget::none())
{
    require(ts.size() == images.size(), "compute_kernel: need one image per module generator");
    require(!ts.empty(), "compute_kernel: empty module");
    const RingPtr<F>& amb = A.ambient();

    std::vector<FreeModuleElement<F>> M = syzygies(images, MonomialOrder::grevlex(), budget);
    if (M.empty())
        return {};
    std::vector<FreeModuleElement<F>> B = module_intersect_with_Ar(A, M, budget);

    std::vector<Polynomial<F>> out;
    for (const auto& b : B) {
        Polynomial<F> c = Polynomial<F>::zero(amb);
        for (size_t mu = 0; mu < ts.size(); ++mu)
            c = c + A.evaluate(b.comps[mu]) * ts[mu];
        if (c.is_zero())
            continue;
        if (in_kernel)
            require(in_kernel(c), "compute_kernel: output fails the kernel re-check");
        out.push_back(std::move(c));
    }
    return out;
}

// Drop generators that already lie in the algebra of the earlier-kept ones;
// ascending degree, deterministic.
template <class F>
std::vector<Polynomial<F>> interreduce_generators(const RingPtr<F>& ring,
                                                  std::vector<Polynomial<F>> cands,
                                                  const Budget& budget = Budget::none())
{
    std::vector<Polynomial<F>> nonconst;
    for (auto& c : cands)
        if (!c.is_zero() && !c.is_constant())
            nonconst.push_back(std::move(c));
    std::sort(nonconst.begin(), nonconst.end(), [](const auto& a, const auto& b) {
        if (a.sdeg() != b.sdeg())
            return a.sdeg() < b.sdeg();
        if (a.nterms() != b.nterms())
            return a.nterms() < b.nterms();
        return print_polynomial(a) < print_polynomial(b);
    });
    std::vector<Polynomial<F>> kept;
    for (auto& c : nonconst) {
        if (!kept.empty()) {
            SubalgebraPresentation<F> K(ring, kept);
            if (K.member(c, budget).has_value())
                continue;
            bool dup = false;
            for (const auto& k : kept)
                dup = dup || k == c;
            if (dup)
                continue;
        }
        kept.push_back(std::move(c));
    }
    return kept;
}

// Algebra generators of B cap K[X^p, Y]:
//   A := K[f_1^p..f_k^p, g_1..g_l],  T := { prod f_i^{e_i} : 0 <= e_i < p },
//   D(t) := (dt/dx for x in the X block); kernel elements via compute_kernel.
// Every output is checked to have vanishing X-derivatives; kernel outputs are
// additionally certified as members of B.
template <class F>
std::vector<Polynomial<F>> intersect_xp_y(const FrobeniusProblem<F>& prob,
                                          const Budget& budget = Budget::none(),
                                          bool interreduce = true)
{
    const RingPtr<F>& amb = prob.ambient;
    const F& fld = amb->field();
    uint32_t p = static_cast<uint32_t>(prob.p);

    std::vector<Polynomial<F>> A_gens;
    for (const auto& f : prob.fs)
        A_gens.push_back(f.pow(p));
    for (const auto& g : prob.gs)
        A_gens.push_back(g);

    size_t r = prob.tensor_count();
    if (r > prob.tensor_hard_bound)
        fail("intersect_xp_y: tensor basis size ", r, " exceeds the hard bound ",
             prob.tensor_hard_bound);
    if (r > prob.tensor_warn_bound)
        std::cerr << "intersect_xp_y: warning: tensor basis has " << r
                  << " elements; this is the dominant cost driver\n";

    // tensor basis in lexicographic exponent order
    std::vector<Polynomial<F>> ts;
    std::vector<uint32_t> e(prob.fs.size(), 0);
    for (;;) {
        Polynomial<F> t = Polynomial<F>::constant(amb, fld.one());
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i])
                t = t * prob.fs[i].pow(e[i]);
        ts.push_back(std::move(t));
        size_t i = e.size();
        while (i > 0) {
            --i;
            if (e[i] + 1 < p) {
                ++e[i];
                break;
            }
            e[i] = 0;
            if (i == 0) {
                i = SIZE_MAX;
                break;
            }
        }
        if (e.empty() || i == SIZE_MAX)
            break;
    }

    std::vector<FreeModuleElement<F>> images;
    for (const auto& t : ts) {
        FreeModuleElement<F> img(amb, prob.x_vars.size());
        for (size_t j = 0; j < prob.x_vars.size(); ++j)
            img.comps[j] = t.derivative(prob.x_vars[j]);
        images.push_back(std::move(img));
    }

    std::vector<Polynomial<F>> kernel;
    {
        SubalgebraPresentation<F> A(amb, A_gens);
        std::vector<Polynomial<F>> B_gens = prob.fs;
        for (const auto& g : prob.gs)
            B_gens.push_back(g);
        SubalgebraPresentation<F> B(amb, B_gens);
        std::function<bool(const Polynomial<F>&)> in_kernel = [&](const Polynomial<F>& c) {
            for (size_t xv : prob.x_vars)
                if (!c.derivative(xv).is_zero())
                    return false;
            return B.member(c, budget).has_value();
        };
        kernel = compute_kernel(A, ts, images, in_kernel, budget);
    }

    std::vector<Polynomial<F>> out = A_gens;
    for (auto& c : kernel)
        out.push_back(std::move(c));
    for (const auto& f : out)
        for (size_t xv : prob.x_vars)
            require(f.derivative(xv).is_zero(), "intersect_xp_y: output not in K[X^p, Y]");
    if (!interreduce)
        return out;
    return interreduce_generators(amb, std::move(out), budget);
}

// Generators of S(F^p(U) + V)^G from generators of S(U + V)^G: intersect,
// then substitute X^p -> Z (exactness of every X-exponent is enforced). The
// optional action re-checks invariance of each output in the twisted ring.
template <class F>
std::vector<Polynomial<F>> frobenius_invariants(const FrobeniusProblem<F>& prob,
                                                const ActionPtr<F>& twisted_action = {},
                                                const Budget& budget = Budget::none())
{
    auto inter = intersect_xp_y(prob, budget);
    std::vector<Polynomial<F>> out;
    uint32_t p = static_cast<uint32_t>(prob.p);
    std::vector<char> is_x(prob.ambient->nvars(), 0);
    for (size_t xv : prob.x_vars)
        is_x[xv] = 1;
    for (const auto& f : inter) {
        std::vector<typename Polynomial<F>::Term> acc;
        for (const auto& t : f.terms()) {
            Monomial m = t.m;
            for (size_t i = 0; i < m.e.size(); ++i) {
                if (!is_x[i])
                    continue;
                require(m.e[i] % p == 0,
                        "frobenius_invariants: X-exponent not a multiple of p (internal bug)");
                m.e[i] /= p;
            }
            m.sdeg = prob.target->recompute_sdeg(m);
            acc.push_back({std::move(m), t.c});
        }
        Polynomial<F> h = Polynomial<F>::from_terms(prob.target, std::move(acc));
        if (twisted_action)
            require(twisted_action->is_invariant(h.into_ring(twisted_action->target())),
                    "frobenius_invariants: output not invariant under the twisted action");
        out.push_back(std::move(h));
    }
    return out;
}

// Convenience wrapper for the built-in G_a cases.
inline std::vector<Polynomial<FpField>> ga_frobenius_invariants(uint64_t p, size_t k,
                                                                const Budget& budget = Budget::none())
{
    FpField field(p);
    auto prob = ga_frobenius_problem(field, p, k);
    auto action = builtin_actions(p, k, GroupKind::Ga);
    return frobenius_invariants(prob, action, budget);
}

} // namespace invar

#endif
