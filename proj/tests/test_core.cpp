#include "doctest.h"

#include "invar/bigint.hpp"
#include "invar/field.hpp"
#include "invar/format.hpp"
#include "invar/poly.hpp"

#include "properties.hpp"

using namespace invar;
using invar_tests::FpPoly;
using invar_tests::QPoly;

TEST_CASE("bigint arithmetic vs int64")
{
    Rng rng(1);
    for (int i = 0; i < 500; ++i) {
        int64_t a = static_cast<int64_t>(rng.next() % 2000001) - 1000000;
        int64_t b = static_cast<int64_t>(rng.next() % 2000001) - 1000000;
        BigInt A(a), B(b);
        CHECK((A + B).to_int64() == a + b);
        CHECK((A - B).to_int64() == a - b);
        CHECK((A * B).to_int64() == a * b);
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(A, B, q, r);
            CHECK(q.to_int64() == a / b);
            CHECK(r.to_int64() == a % b);
        }
    }
}

TEST_CASE("bigint multi-limb divmod reconstructs")
{
    Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        BigInt a(1), b(1);
        int la = 1 + static_cast<int>(rng.below(4)), lb = 1 + static_cast<int>(rng.below(3));
        for (int k = 0; k < la; ++k)
            a = a * BigInt(static_cast<int64_t>(rng.next() % 1000000007)) + BigInt(static_cast<int64_t>(rng.below(97)));
        for (int k = 0; k < lb; ++k)
            b = b * BigInt(static_cast<int64_t>(rng.next() % 1000000007)) + BigInt(static_cast<int64_t>(rng.below(97)));
        if (rng.below(2))
            a = -a;
        if (rng.below(2))
            b = -b;
        if (b.is_zero())
            continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        // |r| < |b|
        BigInt absr = r.sign() < 0 ? -r : r;
        BigInt absb = b.sign() < 0 ? -b : b;
        CHECK(cmp(absr, absb) < 0);
    }
}

TEST_CASE("bigint string round-trip")
{
    const char* cases[] = {"0", "-1", "123456789012345678901234567890", "-999999999999999999"};
    for (const char* s : cases)
        CHECK(BigInt::from_string(s).to_string() == s);
    CHECK(BigInt::gcd(BigInt(48), BigInt(-18)).to_int64() == 6);
}

TEST_CASE("rational arithmetic")
{
    Rational a = Rational::from_string("3/4");
    Rational b = Rational::from_string("-5/6");
    CHECK((a + b).to_string() == "-1/12");
    CHECK((a * b).to_string() == "-5/8");
    CHECK((a / b).to_string() == "-9/10");
    CHECK(Rational(BigInt(4), BigInt(-8)).to_string() == "-1/2");
}

TEST_CASE("prime field")
{
    CHECK_THROWS(FpField(4));
    CHECK_THROWS(FpField(1));
    FpField f7(7);
    for (uint64_t a = 1; a < 7; ++a)
        CHECK(f7.mul(a, f7.inv(a)) == 1);
    CHECK(f7.from_int(-1) == 6);
    CHECK(f7.from_rational(Rational::from_string("1/2")) == 4);
}

TEST_CASE("derivative of p-th power vanishes in char p")
{
    // d/dX (X^p) = 0 over F_p
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        auto R = make_ring(FpField(p), {std::string("X"), std::string("Y")});
        FpPoly xp = FpPoly::variable(R, "X").pow(static_cast<uint32_t>(p));
        CHECK(xp.derivative(0).is_zero());
    }
}

TEST_CASE("char-2 sign collapse: (X+Y)(X-Y) = X^2+Y^2 over F_2")
{
    auto R = make_ring(FpField(2), {std::string("X"), std::string("Y")});
    FpPoly X = FpPoly::variable(R, "X"), Y = FpPoly::variable(R, "Y");
    CHECK((X + Y) * (X - Y) == X * X + Y * Y);
}

TEST_CASE("substitution X -> tX+Y in X^2")
{
    // over Q: t^2 X^2 + 2 t X Y + Y^2; over F_2 the middle term dies
    auto RQ = make_ring(QField(), {std::string("t"), std::string("X"), std::string("Y")});
    QPoly t = QPoly::variable(RQ, "t"), X = QPoly::variable(RQ, "X"), Y = QPoly::variable(RQ, "Y");
    QPoly x2 = X * X;
    std::vector<QPoly> images = {t, t * X + Y, Y};
    QPoly got = x2.substitute(RQ, images);
    QPoly expect = t * t * X * X + QPoly::from_int(RQ, 2) * t * X * Y + Y * Y;
    CHECK(got == expect);

    auto R2 = make_ring(FpField(2), {std::string("t"), std::string("X"), std::string("Y")});
    FpPoly t2 = FpPoly::variable(R2, "t"), X2 = FpPoly::variable(R2, "X"),
           Y2 = FpPoly::variable(R2, "Y");
    std::vector<FpPoly> img2 = {t2, t2 * X2 + Y2, Y2};
    CHECK((X2 * X2).substitute(R2, img2) == t2 * t2 * X2 * X2 + Y2 * Y2);
}

TEST_CASE("monomial order examples")
{
    // X1Y2 vs X2Y1 under graded lex X1>Y1>X2>Y2: X1Y2 is larger
    auto R = make_ring(FpField(2), {std::string("X1"), std::string("Y1"), std::string("X2"),
                                    std::string("Y2")});
    OrderCmp<FpField> glex(*R, MonomialOrder::graded_lex());
    Monomial x1y2 = R->monomial({1, 0, 0, 1});
    Monomial x2y1 = R->monomial({0, 1, 1, 0});
    CHECK(glex.cmp(x1y2, x2y1) > 0);

    // 1 vs X under any order: X larger
    for (auto ord : {MonomialOrder::lex(), MonomialOrder::graded_lex(), MonomialOrder::grevlex()}) {
        OrderCmp<FpField> c(*R, ord);
        CHECK(c.cmp(R->monomial({1, 0, 0, 0}), R->one_monomial()) > 0);
    }

    // X^2Y vs XY^2 under grevlex X>Y: X^2Y larger
    auto R2 = make_ring(FpField(2), {std::string("X"), std::string("Y")});
    OrderCmp<FpField> grev(*R2, MonomialOrder::grevlex());
    CHECK(grev.cmp(R2->monomial({2, 1}), R2->monomial({1, 2})) > 0);
}

TEST_CASE("fractional weights: degree scaling by p")
{
    auto R = make_ring(FpField(2),
                       {std::string("X0"), std::string("Y0"), std::string("X1"), std::string("Y1")},
                       {Rational::from_string("1/2"), Rational::from_string("1/2"), Rational(1),
                        Rational(1)});
    CHECK(R->weight_scale() == 2);
    FpPoly f = FpPoly::variable(R, "X0").pow(2) * FpPoly::variable(R, "Y1");
    CHECK(f.degree() == Rational(2)); // 2*(1/2) + 1
    CHECK(f.is_homogeneous());
    FpPoly g = FpPoly::variable(R, "X0") + FpPoly::variable(R, "X1");
    CHECK(!g.is_homogeneous());
}

TEST_CASE("exact division helpers")
{
    auto R = make_ring(FpField(5), {std::string("X"), std::string("Y")});
    FpPoly X = FpPoly::variable(R, "X"), Y = FpPoly::variable(R, "Y");
    FpPoly f = (X + Y) * (X * X + Y);
    CHECK(f.exact_div(X + Y) == X * X + Y);
    CHECK_THROWS(f.exact_div(X * X + X));
    FpPoly m = X * Y;
    CHECK((X * Y * Y + X * X * Y).div_by_monomial(m.terms()[0].m) == X + Y);
    CHECK_THROWS((X + Y).div_by_monomial(m.terms()[0].m));
}

TEST_CASE("ring context mismatch is rejected")
{
    auto R1 = make_ring(FpField(5), {std::string("X")});
    auto R2 = make_ring(FpField(5), {std::string("Y")});
    auto R3 = make_ring(FpField(7), {std::string("X")});
    FpPoly a = FpPoly::variable(R1, "X");
    CHECK_THROWS(a + FpPoly::variable(R2, "Y"));
    CHECK_THROWS(a * FpPoly::variable(R3, "X"));
}

TEST_CASE("ring declaration parse/print")
{
    RingDecl d = parse_ring_decl("ring F2[X0,Y0,X1,Y1] weights [1,1,2,2]");
    CHECK(d.p == 2);
    CHECK(d.vars.size() == 4);
    CHECK(d.weights[2] == Rational(2));
    auto R = ring_from_decl<FpField>(d);
    CHECK(print_ring_decl(*R) == "ring F2[X0,Y0,X1,Y1] weights [1,1,2,2]");

    RingDecl q = parse_ring_decl("ring Q[x,y]");
    CHECK(q.is_q);
    auto RQ = ring_from_decl<QField>(q);
    CHECK(print_ring_decl(*RQ) == "ring Q[x,y]");
}

TEST_CASE("polynomial parse examples")
{
    auto R = make_ring(FpField(7), {std::string("x"), std::string("y")});
    FpPoly x = FpPoly::variable(R, "x"), y = FpPoly::variable(R, "y");
    CHECK(parse_polynomial(R, "x^2*y - 3*x + 2") == x * x * y - FpPoly::from_int(R, 3) * x + FpPoly::from_int(R, 2));
    CHECK(parse_polynomial(R, "(x+y)^2") == x * x + FpPoly::from_int(R, 2) * x * y + y * y);
    CHECK(parse_polynomial(R, "0").is_zero());
    CHECK(parse_polynomial(R, "1/2") == FpPoly::constant(R, FpField(7).from_rational(Rational::from_string("1/2"))));
    CHECK_THROWS(parse_polynomial(R, "z + 1"));
    CHECK_THROWS(parse_polynomial(R, "x +"));
}

TEST_CASE("property: ring axioms")
{
    invar_tests::prop_ring_axioms(200);
}
TEST_CASE("property: order laws")
{
    invar_tests::prop_order_laws(200);
}
TEST_CASE("property: substitution and derivative")
{
    invar_tests::prop_subst_derivative(200);
}
TEST_CASE("property: format round-trip")
{
    invar_tests::prop_format_roundtrip(200);
}
