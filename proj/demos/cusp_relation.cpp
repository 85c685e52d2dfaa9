// Smallest end-to-end example: present K[X^2, X^3] and print its relation
// ideal and a few membership witnesses.

#include <iostream>

#include "invar/subalgebra.hpp"

using namespace invar;
using Poly = Polynomial<FpField>;

int main()
{
    auto R = make_ring(FpField(7), {std::string("X")});
    Poly X = Poly::variable(R, "X");

    SubalgebraPresentation<FpField> A(R, {X * X, X * X * X});
    auto rel = A.relation_ideal();
    std::cout << "relation ideal of {X^2, X^3} in " << print_ring_decl(*A.tag_ring()) << ":\n";
    for (const auto& r : rel.gens())
        std::cout << "  " << print_polynomial(r) << "\n";

    for (uint32_t d = 1; d <= 6; ++d) {
        auto w = A.member(X.pow(d));
        std::cout << "X^" << d << ": "
                  << (w ? "member, witness " + print_polynomial(*w) : std::string("not a member"))
                  << "\n";
    }
    return 0;
}
