#include "doctest.h"

#include "invar/invariants_sl2.hpp"

#include "properties.hpp"

using namespace invar;
using invar_tests::FpPoly;

namespace {

FpPoly g_ij(const RingPtr<FpField>& R, size_t i, size_t j)
{
    auto v = [&](const char* s, size_t k) { return FpPoly::variable(R, s + std::to_string(k)); };
    return v("X", i) * v("Y", j) - v("X", j) * v("Y", i);
}

} // namespace

TEST_CASE("plucker generator sets")
{
    FpField f2(2);
    // SL2, n = 2: the single determinant
    auto sl2 = plucker_generators(f2, {GroupKind::SL2, 2, false, 2});
    REQUIRE(sl2.size() == 1);
    CHECK(sl2[0] == g_ij(sl2[0].ring(), 1, 2));

    // Ga, n = 1: only X1
    auto ga = plucker_generators(f2, {GroupKind::Ga, 1, false, 2});
    REQUIRE(ga.size() == 1);
    CHECK(ga[0] == FpPoly::variable(ga[0].ring(), "X1"));

    // SL2, n = 1: no generators (constants only)
    CHECK(plucker_generators(f2, {GroupKind::SL2, 1, false, 2}).empty());
}

TEST_CASE("every emitted generator is invariant for its group")
{
    for (uint64_t p : {2ull, 3ull}) {
        FpField f(p);
        for (size_t n : {2, 3}) {
            auto gens_sl2 = plucker_generators(f, {GroupKind::SL2, n, false, p});
            auto A = natural_action(GroupKind::SL2, f, p, 1, n);
            for (const auto& g : gens_sl2)
                CHECK(A->is_invariant(g.into_ring(A->target())));
            auto gens_ga = plucker_generators(f, {GroupKind::Ga, n, false, p});
            auto B = natural_action(GroupKind::Ga, f, p, 1, n);
            for (const auto& g : gens_ga)
                CHECK(B->is_invariant(g.into_ring(B->target())));
        }
    }
}

TEST_CASE("roberts forward: worked examples")
{
    RobertsContext<FpField> ctx(FpField(3), 3, 2, false);
    auto big = ctx.big_ring();
    FpPoly X = FpPoly::variable(big, "X"), Y = FpPoly::variable(big, "Y");
    FpPoly X1 = FpPoly::variable(big, "X1"), Y1 = FpPoly::variable(big, "Y1");

    // phi(Y X1 - X Y1) = X1
    CHECK(ctx.forward(Y * X1 - X * Y1) == FpPoly::variable(ctx.v_ring(), "X1"));
    // phi(X1 Y2 - X2 Y1) = X1 Y2 - X2 Y1
    CHECK(ctx.forward(g_ij(big, 1, 2)) == g_ij(ctx.v_ring(), 1, 2));
    // constants map to themselves
    CHECK(ctx.forward(FpPoly::from_int(big, 2)) == FpPoly::from_int(ctx.v_ring(), 2));
    // non-invariant input rejected
    CHECK_THROWS(ctx.forward(X1));
}

TEST_CASE("roberts inverse: worked examples and round trips")
{
    RobertsContext<FpField> ctx(FpField(3), 3, 2, false);
    auto big = ctx.big_ring();
    auto v = ctx.v_ring();
    FpPoly X = FpPoly::variable(big, "X"), Y = FpPoly::variable(big, "Y");
    FpPoly X1b = FpPoly::variable(big, "X1"), Y1b = FpPoly::variable(big, "Y1");

    // phi^{-1}(X1) = Y X1 - X Y1
    CHECK(ctx.inverse(FpPoly::variable(v, "X1")) == Y * X1b - X * Y1b);
    // phi^{-1}(X1 Y2 - X2 Y1) = X1 Y2 - X2 Y1
    CHECK(ctx.inverse(g_ij(v, 1, 2)) == g_ij(big, 1, 2));
    // phi^{-1}(1) = 1
    CHECK(ctx.inverse(FpPoly::from_int(v, 1)) == FpPoly::from_int(big, 1));

    // round trips both ways on all Plucker/Ga generators, n <= 4 shapes
    for (uint64_t p : {2ull, 5ull}) {
        RobertsContext<FpField> c4(FpField(p), p, 3, false);
        auto gens = plucker_generators(GroupKind::Ga, c4.v_ring(), 1, 3);
        for (const auto& g : gens) {
            FpPoly lift = c4.inverse(g);
            CHECK(c4.forward(lift) == g); // also asserted inside inverse()
        }
        // inverse . forward = id on SL2 invariants of the big ring
        auto big_gens = plucker_generators(GroupKind::SL2, c4.big_ring(), 1, 3);
        for (const auto& f : big_gens) {
            CHECK(c4.inverse(c4.forward(f)) == f);
        }
        FpPoly fdist = FpPoly::variable(c4.big_ring(), "X1") * FpPoly::variable(c4.big_ring(), "Y")
                     - FpPoly::variable(c4.big_ring(), "X") * FpPoly::variable(c4.big_ring(), "Y1");
        CHECK(c4.inverse(c4.forward(fdist)) == fdist);
    }
}

TEST_CASE("roberts on the twisted layout")
{
    for (uint64_t p : {2ull, 3ull}) {
        RobertsContext<FpField> ctx(FpField(p), p, 2, true);
        auto v = ctx.v_ring();
        // tw_i = X0 Y_i^p - X_i^p Y0 is Ga-invariant and maps to itself
        FpPoly tw = FpPoly::variable(v, "X0") * FpPoly::variable(v, "Y1").pow(uint32_t(p))
                  - FpPoly::variable(v, "X1").pow(uint32_t(p)) * FpPoly::variable(v, "Y0");
        FpPoly lift = ctx.inverse(tw);
        CHECK(ctx.forward(lift) == tw);
        CHECK(ctx.sl2_action()->is_invariant(lift));
        CHECK(lift == tw.into_ring(ctx.big_ring()));
    }
}

TEST_CASE("hsop builder shapes")
{
    FpField f2(2);
    auto R2 = copies_ring(f2, 1, 2);
    auto h2 = hsop_builder<FpField>(R2, 2);
    REQUIRE(h2.size() == 1);
    CHECK(h2[0] == g_ij(R2, 1, 2));

    auto R3 = copies_ring(f2, 1, 3);
    auto h3 = hsop_builder<FpField>(R3, 3);
    REQUIRE(h3.size() == 3);
    CHECK(h3[0] == g_ij(R3, 1, 2));
    CHECK(h3[1] == g_ij(R3, 1, 3));
    CHECK(h3[2] == g_ij(R3, 2, 3));

    auto R4 = copies_ring(f2, 1, 4);
    auto h4 = hsop_builder<FpField>(R4, 4);
    REQUIRE(h4.size() == 5);
    CHECK(h4[2] == g_ij(R4, 1, 4) + g_ij(R4, 2, 3)); // f_5 combines two terms
}

TEST_CASE("hsop and annihilator elements are invariant for their groups")
{
    FpField f3(3);
    auto A = natural_action(GroupKind::SL2, f3, 3, 1, 3);
    for (const auto& f : hsop_builder<FpField>(A->target(), 3))
        CHECK(A->is_invariant(f));
    auto B = builtin_actions(3, 3, GroupKind::Ga);
    for (const auto& a : annihilator_phsop<FpField>(B->target(), 3, 3))
        CHECK(B->is_invariant(a));
}

TEST_CASE("zero-dimensionality of the plucker ideal plus the F's (n = 2, 3)")
{
    for (uint64_t p : {2ull, 5ull}) {
        for (size_t n : {2, 3}) {
            auto P = plucker_presentation(FpField(p), n);
            Ideal<FpField> sum = P.relations.plus(P.F_tags);
            CHECK(dimension(sum) == 0);
            // dim R = 2n-3
            CHECK(dimension(P.relations) == static_cast<int>(2 * n - 3));
        }
    }
}

TEST_CASE("power variant keeps the hsop property (n = 3, squares)")
{
    std::map<std::pair<size_t, size_t>, uint32_t> sq;
    for (size_t i = 1; i <= 3; ++i)
        for (size_t j = i + 1; j <= 3; ++j)
            sq[{i, j}] = 2;
    auto P = plucker_presentation(FpField(2), 3, sq);
    Ideal<FpField> sum = P.relations.plus(P.F_tags);
    CHECK(dimension(sum) == 0);
}

TEST_CASE("depth test sequence: plain display")
{
    FpField f2(2);
    auto Z = make_ring(f2, twisted_ring_names(3));
    auto seq = depth_test_sequence<FpField>(Z, 2, 3);
    REQUIRE(seq.size() == 5); // f_3..f_7
    CHECK(seq[0] == g_ij(Z, 1, 2));
    CHECK(seq[1] == g_ij(Z, 1, 3));
    // middle block (not homogenized): tw_1 + g_23
    FpPoly tw1 = FpPoly::variable(Z, "X0") * FpPoly::variable(Z, "Y1").pow(2)
               - FpPoly::variable(Z, "X1").pow(2) * FpPoly::variable(Z, "Y0");
    CHECK(seq[2] == tw1 + g_ij(Z, 2, 3));
    // last two: tw_2, tw_3
    FpPoly tw3 = FpPoly::variable(Z, "X0") * FpPoly::variable(Z, "Y3").pow(2)
               - FpPoly::variable(Z, "X3").pow(2) * FpPoly::variable(Z, "Y0");
    CHECK(seq[4] == tw3);

    // homogenized middle block
    auto seqh = depth_test_sequence<FpField>(Z, 2, 3, true);
    CHECK(seqh[2] == tw1.pow(2) + g_ij(Z, 2, 3).pow(3));
    CHECK(seqh[4] == tw3);

    // k = 2: middle block empty
    auto Z2 = make_ring(f2, twisted_ring_names(2));
    auto seq2 = depth_test_sequence<FpField>(Z2, 2, 2);
    REQUIRE(seq2.size() == 3);
    CHECK(seq2[0] == g_ij(Z2, 1, 2));
}

TEST_CASE("depth test sequence: roberts-extended variant")
{
    FpField f2(2);
    auto Z = make_ring(f2, twisted_ring_names(3));
    auto seq = depth_test_sequence<FpField>(Z, 2, 3, false, true);
    REQUIRE(seq.size() == 7); // f_3..f_9 with one phantom copy
    CHECK(seq[0] == g_ij(Z, 1, 2));
    CHECK(seq[1] == g_ij(Z, 1, 3));
    // f_5 = X1 + g_23 (phantom pair (1,4))
    CHECK(seq[2] == FpPoly::variable(Z, "X1") + g_ij(Z, 2, 3));
    // f_6 = tw_1 + X2 (phantom pair (2,4) in the middle block)
    FpPoly tw1 = FpPoly::variable(Z, "X0") * FpPoly::variable(Z, "Y1").pow(2)
               - FpPoly::variable(Z, "X1").pow(2) * FpPoly::variable(Z, "Y0");
    CHECK(seq[3] == tw1 + FpPoly::variable(Z, "X2"));
    // f_9 = X0 (phantom-twisted pair)
    CHECK(seq[6] == FpPoly::variable(Z, "X0"));
}

TEST_CASE("annihilator phsop lists and the SL2 lift heights")
{
    FpField f3(3);
    auto R = copies_ring(f3, 1, 3);
    auto a2 = annihilator_phsop<FpField>(R, 3, 2);
    REQUIRE(a2.size() == 2);
    CHECK(a2[0] == FpPoly::variable(R, "X1"));
    CHECK(a2[1] == FpPoly::variable(R, "X2").pow(2));

    auto a3 = annihilator_phsop<FpField>(R, 3, 3);
    REQUIRE(a3.size() == 3);
    CHECK(a3[2] == g_ij(R, 1, 3));

    auto R4 = copies_ring(f3, 1, 4);
    auto a4 = annihilator_phsop<FpField>(R4, 3, 4);
    REQUIRE(a4.size() == 4);
    CHECK(a4[3] == g_ij(R4, 3, 4).pow(2));

    // lifted collection is a phsop in the polynomial ring: height = k
    for (uint64_t p : {2ull, 3ull}) {
        for (size_t k : {2, 3}) {
            auto ring = copies_ring(FpField(p), 1, k + 1);
            auto lift = annihilator_phsop_sl2_lift<FpField>(ring, p, k);
            REQUIRE(lift.size() == k);
            Ideal<FpField> I(ring, lift);
            CHECK(height(I) == static_cast<int>(k));
        }
    }
}

TEST_CASE("annihilator phsop elements annihilate the builtin cocycle (p=2, k=3)")
{
    auto c = builtin_cocycle(2, 3);
    auto R = c.action->target();
    auto elts = annihilator_phsop<FpField>(R, 2, 3);
    for (const auto& a : elts) {
        auto r = check_annihilator(a, c);
        CHECK(r.annihilates);
    }
}
