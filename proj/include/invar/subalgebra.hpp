#ifndef INVAR_SUBALGEBRA_HPP
#define INVAR_SUBALGEBRA_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "invar/linalg.hpp"
#include "invar/module.hpp"

namespace invar {

// A = K[f_1..f_k] inside an ambient polynomial ring, presented with tag
// variables T_i of weight deg f_i. The joint ring carries the ambient block
// first; the graph ideal (T_i - f_i) under an ambient-eliminating order
// drives membership and the relation ideal.
template <class F>
class SubalgebraPresentation {
public:
    SubalgebraPresentation(RingPtr<F> ambient, std::vector<Polynomial<F>> gens,
                           std::string tag_stem = "T")
        : ambient_(std::move(ambient)), gens_(std::move(gens))
    {
        require(!gens_.empty(), "subalgebra: no generators");
        std::vector<std::string> tag_names;
        std::vector<Rational> tag_weights;
        for (size_t i = 0; i < gens_.size(); ++i) {
            require_same_ring(gens_[i].ring(), ambient_);
            require(!gens_[i].is_zero() && !gens_[i].is_constant(),
                    "subalgebra: generator ", i + 1, " is constant");
            tag_names.push_back(tag_stem + std::to_string(i + 1));
            tag_weights.push_back(gens_[i].degree());
        }
        for (const auto& n : tag_names)
            require(ambient_->var_index(n) < 0, "subalgebra: tag name ", n,
                    " collides with an ambient variable");
        tag_ring_ = make_ring(ambient_->field(), tag_names, tag_weights);

        std::vector<std::string> joint_names = ambient_->var_names();
        std::vector<Rational> joint_weights = ambient_->weights();
        for (size_t i = 0; i < tag_names.size(); ++i) {
            joint_names.push_back(tag_names[i]);
            joint_weights.push_back(tag_weights[i]);
        }
        joint_ring_ = make_ring(ambient_->field(), joint_names, joint_weights);

        std::vector<Polynomial<F>> graph;
        for (size_t i = 0; i < gens_.size(); ++i)
            graph.push_back(Polynomial<F>::variable(joint_ring_, tag_names[i])
                            - gens_[i].into_ring(joint_ring_));
        graph_ = Ideal<F>(joint_ring_, std::move(graph));
        elim_order_ = MonomialOrder::block_elimination(front_mask(*joint_ring_, ambient_->var_names()));
    }

    const RingPtr<F>& ambient() const { return ambient_; }
    const RingPtr<F>& tag_ring() const { return tag_ring_; }
    const RingPtr<F>& joint_ring() const { return joint_ring_; }
    const std::vector<Polynomial<F>>& generators() const { return gens_; }
    const Ideal<F>& graph_ideal() const { return graph_; }
    const MonomialOrder& elim_order() const { return elim_order_; }

    // Evaluate a tag polynomial at the generators.
    Polynomial<F> evaluate(const Polynomial<F>& tag_poly) const
    {
        require_same_ring(tag_poly.ring(), tag_ring_);
        return tag_poly.substitute(ambient_, gens_);
    }

    // Membership with witness: h in K[f_1..f_k]?
    std::optional<Polynomial<F>> member(const Polynomial<F>& h,
                                        const Budget& budget = Budget::none()) const
    {
        require_same_ring(h.ring(), ambient_);
        Polynomial<F> nf = graph_.normal_form_of(h.into_ring(joint_ring_), elim_order_, budget);
        for (size_t i = 0; i < ambient_->nvars(); ++i)
            if (nf.uses_var(i))
                return std::nullopt;
        Polynomial<F> witness = nf.into_ring(tag_ring_);
        require(evaluate(witness) == h, "member: witness failed to reconstruct input");
        return witness;
    }

    // Kernel of T_i -> f_i: eliminate the ambient block from the graph ideal.
    // Every returned generator is re-verified to vanish at the generators.
    Ideal<F> relation_ideal(const Budget& budget = Budget::none()) const
    {
        Ideal<F> rel = eliminate(graph_, ambient_->var_names(), budget);
        std::vector<Polynomial<F>> out;
        for (const auto& r : rel.gens()) {
            Polynomial<F> t = r.into_ring(tag_ring_);
            require(evaluate(t).is_zero(), "relation_ideal: generator does not vanish");
            out.push_back(std::move(t));
        }
        return Ideal<F>(tag_ring_, std::move(out));
    }

private:
    RingPtr<F> ambient_;
    std::vector<Polynomial<F>> gens_;
    RingPtr<F> tag_ring_;
    RingPtr<F> joint_ring_;
    Ideal<F> graph_;
    MonomialOrder elim_order_;
};

// Generators of M cap A^r as an A-module, components expressed in tags.
// Realization: inside K[X,T]^r form N = M K[X,T] + (T_i - f_i) K[X,T]^r, take
// a module Groebner basis under a term-over-position extension of an
// ambient-eliminating order, and keep the vectors that live in K[T]^r.
// Certifications: components reconstruct via member(); each output, evaluated
// at the generators, reduces to zero against a module basis of M.
template <class F>
std::vector<FreeModuleElement<F>> module_intersect_with_Ar(
    const SubalgebraPresentation<F>& A, const std::vector<FreeModuleElement<F>>& M_gens,
    const Budget& budget = Budget::none())
{
    require(!M_gens.empty(), "module_intersect_with_Ar: empty module");
    const RingPtr<F>& amb = A.ambient();
    const RingPtr<F>& joint = A.joint_ring();
    size_t r = M_gens.front().rank();

    std::vector<FreeModuleElement<F>> N;
    for (const auto& mg : M_gens) {
        require(mg.rank() == r, "module_intersect_with_Ar: rank mismatch");
        require_same_ring(mg.ring, amb);
        FreeModuleElement<F> v(joint, r);
        for (size_t c = 0; c < r; ++c)
            v.comps[c] = mg.comps[c].into_ring(joint);
        N.push_back(std::move(v));
    }
    for (const auto& g : A.graph_ideal().gens())
        for (size_t c = 0; c < r; ++c) {
            FreeModuleElement<F> v(joint, r);
            v.comps[c] = g;
            N.push_back(std::move(v));
        }

    ModuleOrder morder = ModuleOrder::top(A.elim_order());
    auto gb = module_groebner(N, r, morder, budget);

    // module basis of M over the ambient ring, for the span re-check
    auto mgb = module_groebner(M_gens, r, ModuleOrder::top(), budget);

    std::vector<FreeModuleElement<F>> out;
    for (const auto& v : gb) {
        bool pure_tags = true;
        for (size_t c = 0; c < r && pure_tags; ++c)
            for (size_t i = 0; i < amb->nvars() && pure_tags; ++i)
                if (v.comps[c].uses_var(i))
                    pure_tags = false;
        if (!pure_tags)
            continue;
        FreeModuleElement<F> b(A.tag_ring(), r);
        FreeModuleElement<F> evaluated(amb, r);
        for (size_t c = 0; c < r; ++c) {
            b.comps[c] = v.comps[c].into_ring(A.tag_ring());
            evaluated.comps[c] = A.evaluate(b.comps[c]);
            require(A.member(evaluated.comps[c], budget).has_value(),
                    "module_intersect_with_Ar: component escapes the subalgebra");
        }
        require(module_normal_form(evaluated, mgb, ModuleOrder::top()).is_zero(),
                "module_intersect_with_Ar: output escapes the module");
        out.push_back(std::move(b));
    }
    return out;
}

enum class JacobianVerdict { Independent, Dependent, Inconclusive };

// Jacobian criterion: rank k certifies algebraic independence in any
// characteristic; a rank drop is conclusive only over characteristic zero.
template <class F>
JacobianVerdict jacobian_independent(const std::vector<Polynomial<F>>& fs)
{
    require(!fs.empty(), "jacobian_independent: no polynomials");
    const RingPtr<F>& ring = fs.front().ring();
    size_t k = fs.size(), n = ring->nvars();
    std::vector<std::vector<Polynomial<F>>> J(k);
    for (size_t i = 0; i < k; ++i) {
        require_same_ring(fs[i].ring(), ring);
        for (size_t j = 0; j < n; ++j)
            J[i].push_back(fs[i].derivative(j));
    }
    size_t rank = bareiss_rank(std::move(J));
    if (rank == k)
        return JacobianVerdict::Independent;
    return ring->field().characteristic() == 0 ? JacobianVerdict::Dependent
                                               : JacobianVerdict::Inconclusive;
}

template <class F>
struct MinimalRelationResult {
    bool found = false;
    Polynomial<F> relation; // in tags, when found
    Rational degree;
};

// Degree-by-degree search for the minimal homogeneous relation among
// homogeneous generators: in each weighted degree, a nontrivial exact kernel
// vector of the evaluation matrix is a relation. Ties break toward the
// kernel vector with the lexicographically smallest free column.
template <class F>
MinimalRelationResult<F> find_minimal_relation(const SubalgebraPresentation<F>& A,
                                               const Rational& degree_bound)
{
    const RingPtr<F>& tags = A.tag_ring();
    const RingPtr<F>& amb = A.ambient();
    const F& fld = amb->field();
    for (const auto& f : A.generators())
        require(f.is_homogeneous(), "find_minimal_relation: generators must be homogeneous");

    // enumerate tag monomials of weighted degree <= bound (scaled integers)
    int64_t scale = tags->weight_scale();
    Rational bound_scaled = degree_bound * Rational(scale);
    require(bound_scaled.is_integer(), "find_minimal_relation: bound not representable");
    int64_t sbound = bound_scaled.num().to_int64();

    std::map<int64_t, std::vector<Monomial>> by_degree;
    std::vector<uint32_t> e(tags->nvars(), 0);
    std::function<void(size_t, int64_t)> gen = [&](size_t i, int64_t sdeg) {
        if (i == e.size()) {
            if (sdeg > 0)
                by_degree[sdeg].push_back(tags->monomial(e));
            return;
        }
        int64_t w = tags->scaled_weights()[i];
        for (uint32_t x = 0;; ++x) {
            int64_t nd = sdeg + static_cast<int64_t>(x) * w;
            if (nd > sbound)
                break;
            e[i] = x;
            gen(i + 1, nd);
        }
        e[i] = 0;
    };
    gen(0, 0);

    MinimalRelationResult<F> res;
    for (auto& [sdeg, monos] : by_degree) {
        // columns sorted by tag-lex for deterministic tie-breaking
        OrderCmp<F> lex(*tags, MonomialOrder::lex());
        std::sort(monos.begin(), monos.end(),
                  [&](const Monomial& a, const Monomial& b) { return lex.cmp(a, b) > 0; });
        std::vector<Polynomial<F>> evals;
        std::map<std::string, size_t> rowof;
        std::vector<std::tuple<size_t, size_t, typename F::Elem>> entries;
        for (size_t c = 0; c < monos.size(); ++c) {
            Polynomial<F> tp = Polynomial<F>::monomial_poly(tags, monos[c], fld.one());
            Polynomial<F> ev = A.evaluate(tp);
            for (const auto& t : ev.terms()) {
                std::string key = amb->monomial_string(t.m);
                auto it = rowof.find(key);
                if (it == rowof.end())
                    it = rowof.emplace(key, rowof.size()).first;
                entries.emplace_back(it->second, c, t.c);
            }
        }
        Matrix<F> M(fld, rowof.size(), monos.size());
        for (auto& [rr, cc, vv] : entries)
            M.at(rr, cc) = fld.add(M.at(rr, cc), vv);
        auto kernel = kernel_basis(fld, M);
        if (kernel.empty())
            continue;
        const auto& v = kernel.front();
        std::vector<typename Polynomial<F>::Term> acc;
        for (size_t c = 0; c < monos.size(); ++c)
            if (!fld.is_zero(v[c]))
                acc.push_back({monos[c], v[c]});
        res.found = true;
        res.relation = Polynomial<F>::from_terms(tags, std::move(acc));
        res.degree = Rational(BigInt(sdeg), BigInt(scale));
        require(A.evaluate(res.relation).is_zero(),
                "find_minimal_relation: relation does not vanish");
        return res;
    }
    return res;
}

} // namespace invar

#endif
