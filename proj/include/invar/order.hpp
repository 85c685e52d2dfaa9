#ifndef INVAR_ORDER_HPP
#define INVAR_ORDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "invar/ring.hpp"
#include "invar/util.hpp"

namespace invar {

// Total multiplicative well-orders on monomials. graded_lex / grevlex grade by
// the plain total exponent; weighted_graded grades by the ring weights and
// breaks ties with lex or grevlex. block_elimination compares the front block
// first and is what eliminate()/intersect() run on.
struct MonomialOrder {
    enum class Kind { Lex, GradedLex, Grevlex, WeightedGraded, BlockElimination };
    enum class Tiebreak { Lex, Grevlex };

    Kind kind = Kind::Grevlex;
    Tiebreak tiebreak = Tiebreak::Grevlex;          // weighted_graded only
    std::vector<uint8_t> front;                     // block_elimination: 1 = front block
    Kind front_kind = Kind::Grevlex;                // block_elimination sub-orders
    Kind back_kind = Kind::Grevlex;

    static MonomialOrder lex() { return {Kind::Lex, Tiebreak::Lex, {}, Kind::Lex, Kind::Lex}; }
    static MonomialOrder graded_lex() { return {Kind::GradedLex, Tiebreak::Lex, {}, Kind::Lex, Kind::Lex}; }
    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder weighted_graded(Tiebreak tb = Tiebreak::Grevlex)
    {
        MonomialOrder o;
        o.kind = Kind::WeightedGraded;
        o.tiebreak = tb;
        return o;
    }
    static MonomialOrder block_elimination(std::vector<uint8_t> front_mask,
                                           Kind front_kind = Kind::Grevlex,
                                           Kind back_kind = Kind::Grevlex)
    {
        MonomialOrder o;
        o.kind = Kind::BlockElimination;
        o.front = std::move(front_mask);
        o.front_kind = front_kind;
        o.back_kind = back_kind;
        return o;
    }

    std::string describe() const
    {
        switch (kind) {
        case Kind::Lex: return "lex";
        case Kind::GradedLex: return "glex";
        case Kind::Grevlex: return "grevlex";
        case Kind::WeightedGraded:
            return std::string("wdeg-") + (tiebreak == Tiebreak::Lex ? "lex" : "grevlex");
        case Kind::BlockElimination: {
            std::string s = "elim[";
            for (uint8_t b : front)
                s += b ? '1' : '0';
            s += "]";
            s += kind_name(front_kind);
            s += "/";
            s += kind_name(back_kind);
            return s;
        }
        }
        return "?";
    }

    static const char* kind_name(Kind k)
    {
        switch (k) {
        case Kind::Lex: return "lex";
        case Kind::GradedLex: return "glex";
        case Kind::Grevlex: return "grevlex";
        default: return "?";
        }
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b)
    {
        return a.kind == b.kind && a.tiebreak == b.tiebreak && a.front == b.front
            && a.front_kind == b.front_kind && a.back_kind == b.back_kind;
    }
};

// Comparator bound to one ring; returns <0, 0, >0 like strcmp.
template <class F>
class OrderCmp {
public:
    OrderCmp(const Ring<F>& ring, MonomialOrder order) : ring_(&ring), ord_(std::move(order))
    {
        if (ord_.kind == MonomialOrder::Kind::BlockElimination)
            require(ord_.front.size() == ring.nvars(), "block order: mask length mismatch");
    }

    const MonomialOrder& order() const { return ord_; }

    int cmp(const Monomial& a, const Monomial& b) const
    {
        switch (ord_.kind) {
        case MonomialOrder::Kind::Lex:
            return cmp_lex(a.e.data(), b.e.data(), a.e.size());
        case MonomialOrder::Kind::GradedLex: {
            int c = cmp_total(a, b);
            return c ? c : cmp_lex(a.e.data(), b.e.data(), a.e.size());
        }
        case MonomialOrder::Kind::Grevlex: {
            int c = cmp_total(a, b);
            return c ? c : cmp_revlex(a.e.data(), b.e.data(), a.e.size());
        }
        case MonomialOrder::Kind::WeightedGraded: {
            if (a.sdeg != b.sdeg)
                return a.sdeg < b.sdeg ? -1 : 1;
            if (ord_.tiebreak == MonomialOrder::Tiebreak::Lex)
                return cmp_lex(a.e.data(), b.e.data(), a.e.size());
            return cmp_revlex(a.e.data(), b.e.data(), a.e.size());
        }
        case MonomialOrder::Kind::BlockElimination: {
            int c = cmp_block(a, b, true, ord_.front_kind);
            if (c)
                return c;
            return cmp_block(a, b, false, ord_.back_kind);
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

private:
    const Ring<F>* ring_;
    MonomialOrder ord_;

    static int cmp_lex(const uint32_t* a, const uint32_t* b, size_t n)
    {
        for (size_t i = 0; i < n; ++i)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    // grevlex tiebreak: last variable where exponents differ, smaller exponent wins
    static int cmp_revlex(const uint32_t* a, const uint32_t* b, size_t n)
    {
        for (size_t i = n; i-- > 0;)
            if (a[i] != b[i])
                return a[i] < b[i] ? 1 : -1;
        return 0;
    }
    int cmp_total(const Monomial& a, const Monomial& b) const
    {
        if (ring_->has_unit_weights()) {
            if (a.sdeg != b.sdeg)
                return a.sdeg < b.sdeg ? -1 : 1;
            return 0;
        }
        uint32_t ta = ring_->total_exponent(a), tb = ring_->total_exponent(b);
        if (ta != tb)
            return ta < tb ? -1 : 1;
        return 0;
    }
    int cmp_block(const Monomial& a, const Monomial& b, bool front, MonomialOrder::Kind k) const
    {
        uint64_t ta = 0, tb = 0;
        size_t n = a.e.size();
        for (size_t i = 0; i < n; ++i) {
            if ((ord_.front[i] != 0) != front)
                continue;
            ta += a.e[i];
            tb += b.e[i];
        }
        if (k != MonomialOrder::Kind::Lex) {
            if (ta != tb)
                return ta < tb ? -1 : 1;
        }
        if (k == MonomialOrder::Kind::Grevlex) {
            for (size_t i = n; i-- > 0;) {
                if ((ord_.front[i] != 0) != front)
                    continue;
                if (a.e[i] != b.e[i])
                    return a.e[i] < b.e[i] ? 1 : -1;
            }
            return 0;
        }
        for (size_t i = 0; i < n; ++i) {
            if ((ord_.front[i] != 0) != front)
                continue;
            if (a.e[i] != b.e[i])
                return a.e[i] < b.e[i] ? -1 : 1;
        }
        return 0;
    }
};

// Mask helper: front block given by variable names.
template <class F>
std::vector<uint8_t> front_mask(const Ring<F>& ring, const std::vector<std::string>& front_vars)
{
    std::vector<uint8_t> mask(ring.nvars(), 0);
    for (const auto& v : front_vars) {
        int i = ring.var_index(v);
        require(i >= 0, "front_mask: unknown variable ", v);
        mask[static_cast<size_t>(i)] = 1;
    }
    return mask;
}

} // namespace invar

#endif
