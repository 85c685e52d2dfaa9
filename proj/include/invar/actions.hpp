#ifndef INVAR_ACTIONS_HPP
#define INVAR_ACTIONS_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "invar/groebner.hpp"
#include "invar/linalg.hpp"

namespace invar {

enum class GroupKind { Ga, SL2 };

// One copy <X,Y> of the two-dimensional module inside the target ring;
// frobenius marks the twisted copy (entries of the matrix raised to the p-th
// power, i.e. <X^p, Y^p> as an abstract module).
struct CopySpec {
    size_t x, y; // variable indices in the target ring
    bool frobenius = false;
};

// Polynomial group action on a target ring: a substitution that is linear in
// the target variables with coefficients in the parameter ring, together with
// the group variety ideal ((0) for G_a, (ad-bc-1) for SL_2). The S(V)
// convention applies throughout: sigma maps X_j to the j-th column of the
// representing matrix.
template <class F>
class GroupAction {
public:
    GroupAction(GroupKind kind, uint64_t p, RingPtr<F> target, std::vector<CopySpec> copies)
        : kind_(kind), p_(p), target_(std::move(target)), copies_(std::move(copies))
    {
        std::vector<std::string> pnames =
            kind_ == GroupKind::Ga ? std::vector<std::string>{"t"}
                                   : std::vector<std::string>{"a", "b", "c", "d"};
        for (const auto& n : pnames)
            require(target_->var_index(n) < 0, "GroupAction: target uses parameter name ", n);
        param_names_ = pnames;

        std::vector<std::string> names = pnames;
        std::vector<Rational> weights(pnames.size(), Rational(1));
        for (size_t i = 0; i < target_->nvars(); ++i) {
            names.push_back(target_->var_name(i));
            weights.push_back(target_->weights()[i]);
        }
        product_ = make_ring(target_->field(), names, weights);

        copy_of_.assign(target_->nvars(), SIZE_MAX);
        for (size_t c = 0; c < copies_.size(); ++c) {
            copy_of_[copies_[c].x] = c;
            copy_of_[copies_[c].y] = c;
        }
        for (size_t i = 0; i < target_->nvars(); ++i)
            require(copy_of_[i] != SIZE_MAX, "GroupAction: variable ", target_->var_name(i),
                    " not assigned to a copy");

        build_substitution();
        if (kind_ == GroupKind::SL2) {
            auto a = pvar("a"), b = pvar("b"), c = pvar("c"), d = pvar("d");
            variety_ = Ideal<F>(product_,
                                {a * d - b * c - Polynomial<F>::from_int(product_, 1)});
        } else {
            variety_ = Ideal<F>(product_, {});
        }
        verify_identity();
        verify_composability();
    }

    GroupKind kind() const { return kind_; }
    uint64_t p() const { return p_; }
    const RingPtr<F>& target() const { return target_; }
    const RingPtr<F>& product() const { return product_; }
    const std::vector<CopySpec>& copies() const { return copies_; }
    const std::vector<std::string>& param_names() const { return param_names_; }
    const Ideal<F>& variety_ideal() const { return variety_; }
    size_t copy_of_var(size_t target_var) const { return copy_of_[target_var]; }

    Polynomial<F> embed(const Polynomial<F>& f) const { return f.into_ring(product_); }

    // sigma . f by direct substitution; SL2 results are reduced modulo the
    // variety ideal.
    Polynomial<F> act(const Polynomial<F>& f) const
    {
        require_same_ring(f.ring(), target_);
        Polynomial<F> image = f.substitute(product_, subst_);
        return reduce(image);
    }

    Polynomial<F> reduce(const Polynomial<F>& g) const
    {
        if (variety_.trivial())
            return g;
        return variety_.normal_form_of(g, MonomialOrder::grevlex());
    }

    bool is_invariant(const Polynomial<F>& f) const
    {
        return reduce(act(f) - embed(f)).is_zero();
    }

    // Substitution image of one target variable (in the product ring).
    const Polynomial<F>& image_of(size_t target_var) const { return subst_[target_var]; }

    // Image of f under the parametrized substitution with explicit parameter
    // polynomials (used by Roberts' inverse and the composability check).
    template <class Map>
    Polynomial<F> act_with(const Polynomial<F>& f, const RingPtr<F>& out_ring,
                           const Map& param_images, const std::vector<Polynomial<F>>& var_images) const
    {
        require(var_images.size() == target_->nvars(), "act_with: image count mismatch");
        std::vector<Polynomial<F>> images;
        for (size_t i = 0; i < target_->nvars(); ++i) {
            // substitute parameters inside the generic image of variable i
            std::vector<Polynomial<F>> inner(product_->nvars(), Polynomial<F>::zero(out_ring));
            for (size_t j = 0; j < param_names_.size(); ++j)
                inner[j] = param_images.at(param_names_[j]);
            for (size_t j = 0; j < target_->nvars(); ++j)
                inner[param_names_.size() + j] = var_images[j];
            images.push_back(subst_[i].substitute(out_ring, inner));
        }
        return f.substitute(out_ring, images);
    }

    // per-copy total degrees of a target monomial
    std::vector<uint32_t> multidegree(const Monomial& m) const
    {
        std::vector<uint32_t> md(copies_.size(), 0);
        for (size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i])
                md[copy_of_[i]] += m.e[i];
        return md;
    }

private:
    GroupKind kind_;
    uint64_t p_;
    RingPtr<F> target_;
    std::vector<CopySpec> copies_;
    std::vector<std::string> param_names_;
    RingPtr<F> product_;
    std::vector<Polynomial<F>> subst_;
    std::vector<size_t> copy_of_;
    Ideal<F> variety_;

    Polynomial<F> pvar(const std::string& n) const { return Polynomial<F>::variable(product_, n); }
    Polynomial<F> tvar(size_t i) const
    {
        return Polynomial<F>::variable(product_, target_->var_name(i));
    }

    void build_substitution()
    {
        subst_.assign(target_->nvars(), Polynomial<F>::zero(product_));
        uint32_t pw = static_cast<uint32_t>(p_);
        for (const auto& c : copies_) {
            Polynomial<F> X = tvar(c.x), Y = tvar(c.y);
            if (kind_ == GroupKind::Ga) {
                Polynomial<F> t = pvar("t");
                Polynomial<F> tpow = c.frobenius ? t.pow(pw) : t;
                subst_[c.x] = X;
                subst_[c.y] = tpow * X + Y;
            } else {
                Polynomial<F> a = pvar("a"), b = pvar("b"), cc = pvar("c"), d = pvar("d");
                if (c.frobenius) {
                    subst_[c.x] = a.pow(pw) * X + cc.pow(pw) * Y;
                    subst_[c.y] = b.pow(pw) * X + d.pow(pw) * Y;
                } else {
                    subst_[c.x] = a * X + cc * Y;
                    subst_[c.y] = b * X + d * Y;
                }
            }
        }
    }

    std::map<std::string, Polynomial<F>> identity_params(const RingPtr<F>& ring) const
    {
        std::map<std::string, Polynomial<F>> id;
        if (kind_ == GroupKind::Ga) {
            id.emplace("t", Polynomial<F>::zero(ring));
        } else {
            id.emplace("a", Polynomial<F>::from_int(ring, 1));
            id.emplace("b", Polynomial<F>::zero(ring));
            id.emplace("c", Polynomial<F>::zero(ring));
            id.emplace("d", Polynomial<F>::from_int(ring, 1));
        }
        return id;
    }

    void verify_identity()
    {
        auto id = identity_params(target_);
        std::vector<Polynomial<F>> self;
        for (size_t i = 0; i < target_->nvars(); ++i)
            self.push_back(Polynomial<F>::variable(target_, i));
        for (size_t i = 0; i < target_->nvars(); ++i) {
            Polynomial<F> at_id = act_with(self[i], target_, id, self);
            require(at_id == self[i], "GroupAction: substitution at identity is not identity");
            // degree preservation: the generic image is linear in target vars
            for (const auto& t : subst_[i].terms()) {
                uint32_t tdeg = 0;
                for (size_t v = 0; v < target_->nvars(); ++v)
                    tdeg += t.m.e[param_names_.size() + v];
                require(tdeg == 1, "GroupAction: substitution not linear in target variables");
            }
        }
    }

    // substitute twice with fresh parameters == substitute once with the
    // group-law-combined parameters, modulo the variety ideals
    void verify_composability()
    {
        std::vector<std::string> names;
        std::vector<std::string> set1, set2;
        for (const auto& n : param_names_) {
            set1.push_back(n + "1");
            set2.push_back(n + "2");
        }
        names = set1;
        names.insert(names.end(), set2.begin(), set2.end());
        for (size_t i = 0; i < target_->nvars(); ++i)
            names.push_back(target_->var_name(i));
        auto big = make_ring(target_->field(), names);

        auto var = [&](const std::string& n) { return Polynomial<F>::variable(big, n); };
        std::map<std::string, Polynomial<F>> p1, p2, comp;
        for (size_t j = 0; j < param_names_.size(); ++j) {
            p1.emplace(param_names_[j], var(set1[j]));
            p2.emplace(param_names_[j], var(set2[j]));
        }
        if (kind_ == GroupKind::Ga) {
            comp.emplace("t", var("t1") + var("t2"));
        } else {
            // matrix product A_sigma A_tau with sigma ~ set1, tau ~ set2
            comp.emplace("a", var("a1") * var("a2") + var("b1") * var("c2"));
            comp.emplace("b", var("a1") * var("b2") + var("b1") * var("d2"));
            comp.emplace("c", var("c1") * var("a2") + var("d1") * var("c2"));
            comp.emplace("d", var("c1") * var("b2") + var("d1") * var("d2"));
        }
        std::vector<Polynomial<F>> self;
        for (size_t i = 0; i < target_->nvars(); ++i)
            self.push_back(var(target_->var_name(i)));

        std::vector<Polynomial<F>> variety_gens;
        if (kind_ == GroupKind::SL2) {
            variety_gens.push_back(var("a1") * var("d1") - var("b1") * var("c1")
                                   - Polynomial<F>::from_int(big, 1));
            variety_gens.push_back(var("a2") * var("d2") - var("b2") * var("c2")
                                   - Polynomial<F>::from_int(big, 1));
        }
        Ideal<F> V(big, variety_gens);

        for (size_t i = 0; i < target_->nvars(); ++i) {
            Polynomial<F> x = Polynomial<F>::variable(target_, i);
            Polynomial<F> tau_x = act_with(x, big, p2, self);
            std::vector<Polynomial<F>> tau_images = self; // identity on all, then refined below
            // sigma . (tau . x): substitute the generic sigma images into tau_x's target vars
            Polynomial<F> sigma_tau;
            {
                std::vector<Polynomial<F>> images;
                for (size_t j = 0; j < target_->nvars(); ++j)
                    images.push_back(act_with(Polynomial<F>::variable(target_, j), big, p1, self));
                // tau_x lives in `big`; map its target variables through sigma
                std::vector<Polynomial<F>> full(big->nvars(), Polynomial<F>::zero(big));
                for (size_t j = 0; j < big->nvars(); ++j)
                    full[j] = Polynomial<F>::variable(big, j);
                for (size_t j = 0; j < target_->nvars(); ++j)
                    full[set1.size() + set2.size() + j] = images[j];
                sigma_tau = tau_x.substitute(big, full);
            }
            Polynomial<F> combined = act_with(x, big, comp, self);
            Polynomial<F> diff = sigma_tau - combined;
            if (!variety_gens.empty())
                diff = V.normal_form_of(diff, MonomialOrder::grevlex());
            require(diff.is_zero(), "GroupAction: composability fails on ",
                    target_->var_name(i));
        }
    }
};

template <class F>
using ActionPtr = std::shared_ptr<const GroupAction<F>>;

// Target ring X0,Y0,X1,Y1,...,Xk,Yk over F_p with copy 0 Frobenius-twisted:
// t.Y0 = t^p X0 + Y0 (SL2 via p-th power entries on copy 0).
inline std::vector<std::string> twisted_ring_names(size_t k)
{
    std::vector<std::string> names;
    for (size_t i = 0; i <= k; ++i) {
        names.push_back("X" + std::to_string(i));
        names.push_back("Y" + std::to_string(i));
    }
    return names;
}

template <class F>
ActionPtr<F> builtin_action(GroupKind kind, const F& field, uint64_t p, size_t k)
{
    auto target = make_ring(field, twisted_ring_names(k));
    std::vector<CopySpec> copies;
    for (size_t i = 0; i <= k; ++i)
        copies.push_back({2 * i, 2 * i + 1, i == 0});
    return std::make_shared<const GroupAction<F>>(kind, p, target, std::move(copies));
}

inline ActionPtr<FpField> builtin_actions(uint64_t p, size_t k, GroupKind kind = GroupKind::Ga)
{
    return builtin_action(kind, FpField(p), p, k);
}

// 1-cocycle of G_a with polynomial values: t -> value(t, X) with
// value(0, X) = 0 and g_{s+t} = s.g_t + g_s.
template <class F>
struct Cocycle1 {
    ActionPtr<F> action;
    Polynomial<F> value;     // in action->product()
    Rational target_component; // weighted degree of the value component

    bool is_zero() const { return value.is_zero(); }
};

template <class F>
bool check_cocycle(const Cocycle1<F>& c)
{
    const GroupAction<F>& A = *c.action;
    require(A.kind() == GroupKind::Ga, "check_cocycle: built for G_a cocycles");
    const RingPtr<F>& prod = A.product();
    require_same_ring(c.value.ring(), prod);

    // vanishing at the identity: t = 0
    {
        std::vector<Polynomial<F>> images;
        for (size_t i = 0; i < prod->nvars(); ++i)
            images.push_back(Polynomial<F>::variable(prod, i));
        images[0] = Polynomial<F>::zero(prod); // parameter t is variable 0
        if (!c.value.substitute(prod, images).is_zero())
            return false;
    }

    // two fresh parameters s,t: g_{s+t} = s.g_t + g_s
    std::vector<std::string> names = {"s_", "t_"};
    for (size_t i = 0; i < A.target()->nvars(); ++i)
        names.push_back(A.target()->var_name(i));
    auto big = make_ring(prod->field(), names);
    auto var = [&](const std::string& n) { return Polynomial<F>::variable(big, n); };

    auto value_at = [&](const Polynomial<F>& tparam) {
        std::vector<Polynomial<F>> images;
        images.push_back(tparam);
        for (size_t i = 0; i < A.target()->nvars(); ++i)
            images.push_back(var(A.target()->var_name(i)));
        return c.value.substitute(big, images);
    };

    Polynomial<F> g_t = value_at(var("t_"));
    Polynomial<F> g_s = value_at(var("s_"));
    Polynomial<F> g_st = value_at(var("s_") + var("t_"));

    // s . g_t: push the target variables of g_t through the action at s_
    std::map<std::string, Polynomial<F>> ps;
    ps.emplace("t", var("s_"));
    std::vector<Polynomial<F>> self;
    for (size_t i = 0; i < A.target()->nvars(); ++i)
        self.push_back(var(A.target()->var_name(i)));
    std::vector<Polynomial<F>> full(big->nvars(), Polynomial<F>::zero(big));
    for (size_t j = 0; j < big->nvars(); ++j)
        full[j] = Polynomial<F>::variable(big, j);
    for (size_t j = 0; j < A.target()->nvars(); ++j)
        full[2 + j] = A.act_with(Polynomial<F>::variable(A.target(), j), big, ps, self);
    Polynomial<F> s_g_t = g_t.substitute(big, full);

    return (g_st - (s_g_t + g_s)).is_zero();
}

// The nontrivial cocycle of the twisted G_a setup:
//   g_t = X0 * (1/X1) * ((t-1) . Y1^{p-1})
// The division by X1 must be exact; a remainder signals a malformed build.
template <class F>
Cocycle1<F> builtin_cocycle(const F& field, uint64_t p, size_t k)
{
    require(k >= 1, "builtin_cocycle: k >= 1 required");
    ActionPtr<F> A = builtin_action(GroupKind::Ga, field, p, k);
    const RingPtr<F>& target = A->target();
    Polynomial<F> y1 = Polynomial<F>::variable(target, "Y1").pow(static_cast<uint32_t>(p - 1));
    Polynomial<F> moved = A->act(y1) - A->embed(y1);
    Polynomial<F> x0 = Polynomial<F>::variable(A->product(), "X0");
    Polynomial<F> x1 = Polynomial<F>::variable(A->product(), "X1");
    Polynomial<F> value = (x0 * moved).exact_div(x1);
    Cocycle1<F> c{A, value, Rational(static_cast<int64_t>(p - 1))};
    require(check_cocycle(c), "builtin_cocycle: cocycle identity failed");
    return c;
}

inline Cocycle1<FpField> builtin_cocycle(uint64_t p, size_t k)
{
    return builtin_cocycle(FpField(p), p, k);
}

// Outcome of the coboundary search. When no witness exists the inconsistent
// linear system is certified by a Farkas row combination: farkas^T A = 0,
// farkas^T b != 0, replayable from (rows, cols).
template <class F>
struct CoboundaryResult {
    bool is_coboundary = false;
    Polynomial<F> witness;              // target ring; (t-1).witness = value
    std::vector<uint32_t> component;    // per-copy degrees of the failing component
    std::vector<Monomial> rows;         // product-ring monomials (t^e * target mono)
    std::vector<Monomial> cols;         // target-ring monomials spanning the component
    std::vector<typename F::Elem> farkas;
};

namespace actdetail {

// all target monomials with the given per-copy degree profile
template <class F>
std::vector<Monomial> component_basis(const GroupAction<F>& A, const std::vector<uint32_t>& md)
{
    const RingPtr<F>& target = A.target();
    std::vector<Monomial> out;
    std::vector<uint32_t> e(target->nvars(), 0);
    std::function<void(size_t)> rec = [&](size_t c) {
        if (c == A.copies().size()) {
            out.push_back(target->monomial(e));
            return;
        }
        const CopySpec& cp = A.copies()[c];
        for (uint32_t dx = 0; dx <= md[c]; ++dx) {
            e[cp.x] = dx;
            e[cp.y] = md[c] - dx;
            rec(c + 1);
        }
        e[cp.x] = e[cp.y] = 0;
    };
    rec(0);
    return out;
}

} // namespace actdetail

// Search v with (t-1).v = value inside the finite homogeneous components of
// the value (legitimate because the action preserves per-copy degrees).
template <class F>
CoboundaryResult<F> solve_coboundary(const Cocycle1<F>& c)
{
    const GroupAction<F>& A = *c.action;
    require(A.kind() == GroupKind::Ga, "solve_coboundary: built for G_a cocycles");
    const F& fld = A.target()->field();
    const RingPtr<F>& prod = A.product();
    require_same_ring(c.value.ring(), prod);

    CoboundaryResult<F> out;
    if (c.value.is_zero()) {
        out.is_coboundary = true;
        out.witness = Polynomial<F>::zero(A.target());
        return out;
    }

    size_t nparams = A.param_names().size();
    // split the value by per-copy multidegree of the target part
    std::map<std::vector<uint32_t>, std::vector<typename Polynomial<F>::Term>> parts;
    for (const auto& t : c.value.terms()) {
        std::vector<uint32_t> e(A.target()->nvars());
        for (size_t i = 0; i < e.size(); ++i)
            e[i] = t.m.e[nparams + i];
        parts[A.multidegree(A.target()->monomial(e))].push_back(t);
    }

    Polynomial<F> witness = Polynomial<F>::zero(A.target());
    for (auto& [md, terms] : parts) {
        Polynomial<F> component_value = Polynomial<F>::from_terms(prod, terms);
        std::vector<Monomial> basis = actdetail::component_basis(A, md);

        std::map<std::string, size_t> rowof;
        std::vector<Monomial> rows;
        std::vector<std::tuple<size_t, size_t, typename F::Elem>> entries;
        auto row_index = [&](const Monomial& m) {
            std::string key = prod->monomial_string(m);
            auto it = rowof.find(key);
            if (it == rowof.end()) {
                it = rowof.emplace(key, rowof.size()).first;
                rows.push_back(m);
            }
            return it->second;
        };
        for (size_t cidx = 0; cidx < basis.size(); ++cidx) {
            Polynomial<F> m = Polynomial<F>::monomial_poly(A.target(), basis[cidx], fld.one());
            Polynomial<F> moved = A.act(m) - A.embed(m); // (t-1).m
            for (const auto& t : moved.terms())
                entries.emplace_back(row_index(t.m), cidx, t.c);
        }
        std::vector<typename F::Elem> b;
        {
            std::vector<std::pair<size_t, typename F::Elem>> bent;
            for (const auto& t : component_value.terms())
                bent.emplace_back(row_index(t.m), t.c);
            b.assign(rows.size(), fld.zero());
            for (auto& [r, v] : bent)
                b[r] = fld.add(b[r], v);
        }
        Matrix<F> M(fld, rows.size(), basis.size());
        for (auto& [r, cc, v] : entries)
            M.at(r, cc) = fld.add(M.at(r, cc), v);

        auto sol = solve_linear(fld, M, b);
        if (!sol.consistent) {
            out.is_coboundary = false;
            out.component = md;
            out.rows = rows;
            out.cols = basis;
            out.farkas = sol.farkas;
            return out;
        }
        std::vector<typename Polynomial<F>::Term> acc;
        for (size_t cidx = 0; cidx < basis.size(); ++cidx)
            if (!fld.is_zero(sol.solution[cidx]))
                acc.push_back({basis[cidx], sol.solution[cidx]});
        witness = witness + Polynomial<F>::from_terms(A.target(), std::move(acc));
    }
    // exact round-trip
    Polynomial<F> check = A.act(witness) - A.embed(witness);
    require(check == c.value, "solve_coboundary: witness does not reproduce the cocycle");
    out.is_coboundary = true;
    out.witness = witness;
    return out;
}

// Replay a nontriviality certificate against a freshly built system.
template <class F>
bool verify_nontriviality(const Cocycle1<F>& c, const CoboundaryResult<F>& cert)
{
    const GroupAction<F>& A = *c.action;
    const F& fld = A.target()->field();
    if (cert.is_coboundary || cert.rows.empty() || cert.farkas.size() != cert.rows.size())
        return false;
    // rebuild the columns over exactly the certified rows
    std::map<std::string, size_t> rowof;
    const RingPtr<F>& prod = A.product();
    for (size_t i = 0; i < cert.rows.size(); ++i)
        rowof[prod->monomial_string(cert.rows[i])] = i;

    auto coeffs_of = [&](const Polynomial<F>& g) {
        std::vector<typename F::Elem> col(cert.rows.size(), fld.zero());
        for (const auto& t : g.terms()) {
            auto it = rowof.find(prod->monomial_string(t.m));
            if (it != rowof.end())
                col[it->second] = fld.add(col[it->second], t.c);
        }
        return col;
    };

    for (const auto& m : cert.cols) {
        Polynomial<F> mono = Polynomial<F>::monomial_poly(A.target(), m, fld.one());
        auto col = coeffs_of(A.act(mono) - A.embed(mono));
        typename F::Elem dot = fld.zero();
        for (size_t i = 0; i < col.size(); ++i)
            dot = fld.add(dot, fld.mul(cert.farkas[i], col[i]));
        if (!fld.is_zero(dot))
            return false;
    }
    // the certificate must pair nontrivially with the value
    auto bcol = coeffs_of(c.value);
    typename F::Elem dotb = fld.zero();
    for (size_t i = 0; i < bcol.size(); ++i)
        dotb = fld.add(dotb, fld.mul(cert.farkas[i], bcol[i]));
    return !fld.is_zero(dotb);
}

template <class F>
struct AnnihilatorResult {
    bool annihilates = false;
    Polynomial<F> witness; // b with a.g_t = (t-1).b
};

// Does the invariant a annihilate the cocycle, i.e. is t -> a * g_t a
// coboundary? Returns the explicit witness when it exists.
template <class F>
AnnihilatorResult<F> check_annihilator(const Polynomial<F>& a, const Cocycle1<F>& c)
{
    const GroupAction<F>& A = *c.action;
    require(A.is_invariant(a), "check_annihilator: a is not invariant");
    require(check_cocycle(c), "check_annihilator: input is not a cocycle");
    Cocycle1<F> scaled{c.action, A.embed(a) * c.value,
                       c.target_component + a.degree()};
    auto res = solve_coboundary(scaled);
    AnnihilatorResult<F> out;
    out.annihilates = res.is_coboundary;
    if (res.is_coboundary)
        out.witness = res.witness;
    return out;
}

} // namespace invar

#endif
