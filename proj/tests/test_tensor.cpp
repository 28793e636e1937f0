#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagbethe/tensor.hpp"

using namespace fb;

namespace {
MPoly z(unsigned s, int e = 1) { return MPoly::var(z_var(s), e); }
}  // namespace

TEST_CASE("weights and decompositions") {
    Weight lam{{1, 1}};
    CHECK(lam.n() == 2);
    CHECK(weight_multiplicity(lam) == 2);
    CHECK(enumerate_decompositions(lam).size() == 2);
    CHECK(weight_multiplicity(Weight{{2, 1, 1}}) == 12);
    CHECK(all_weights(2, 3).size() == 4);

    Decomp I{{0, 1, 0}};  // positions 1,3 in block 1; position 2 in block 2
    CHECK(I.block(0) == std::vector<unsigned>{1, 3});
    CHECK(I.block(1) == std::vector<unsigned>{2});
    CHECK(I.weight(2) == Weight{{2, 1}});
}

TEST_CASE("generator action on basis vectors") {
    // e_21 t^r moves a position from block 1 to block 2 with weight z^r
    Decomp I{{0, 1}};
    VElement x = VElement::basis(I, 2);
    VElement y = act_generator(2, 1, 3, x);
    Decomp J{{1, 1}};
    CHECK(y.coeff(J) == z(1, 3));
    // nothing to move: e_12 on a vector with empty second block
    CHECK(act_generator(1, 2, 0, VElement::basis(Decomp{{0, 0}}, 2)).is_zero());
}

TEST_CASE("symmetric group acts on the left") {
    Weight lam{{1, 1, 1}};
    VElement x(3, 3);
    x.add(Decomp{{0, 1, 2}}, z(1) * z(2, 2));
    for (auto& s : all_permutations(3))
        for (auto& t : all_permutations(3)) {
            std::vector<unsigned> st(3);
            for (unsigned k = 0; k < 3; ++k) st[k] = s[t[k] - 1];
            CHECK(sn_act(s, sn_act(t, x)) == sn_act(st, x));
        }
}

TEST_CASE("projectors are idempotent and have the right symmetry") {
    VElement x(2, 2);
    x.add(Decomp{{0, 1}}, MPoly(1) + z(1));
    x.add(Decomp{{1, 0}}, z(2, 2));
    for (int sign : {+1, -1}) {
        VElement p = project_symmetric(x, sign);
        CHECK(project_symmetric(p, sign) == p);
        std::vector<unsigned> swap{2, 1};
        VElement q = sn_act(swap, p);
        if (sign < 0) q = -q;
        CHECK(q == p);
    }
}

TEST_CASE("Shapovalov form is v_I-orthonormal") {
    Decomp I{{0, 1}}, J{{1, 0}};
    VElement vi = VElement::basis(I, 2), vj = VElement::basis(J, 2);
    CHECK(shapovalov(vi, vi) == MPoly(1));
    CHECK(shapovalov(vi, vj).is_zero());
    CHECK(shapovalov(z(1) * vi, z(2) * vi) == z(1) * z(2));
}

TEST_CASE("sign and factored form of D/R(I)") {
    for (auto& lam : all_weights(2, 3))
        for (auto& I : enumerate_decompositions(lam)) {
            MPoly lhs = d_over_r(I, 2) * r_of_decomp(I, 2);
            CHECK(lhs == z_vandermonde(3));
        }
    // the interleaved decomposition (1,2,1) has one inversion pair
    CHECK(decomp_sign(Decomp{{0, 1, 0}}) == -1);
}

TEST_CASE("induced pairing divides by the Vandermonde") {
    Weight lam{{1, 1}};
    // x = v_I + v_J symmetric, y numerator antisymmetric
    VElement x(2, 2), y(2, 2);
    x.add(Decomp{{0, 1}}, MPoly(1));
    x.add(Decomp{{1, 0}}, MPoly(1));
    y.add(Decomp{{0, 1}}, MPoly(1));
    y.add(Decomp{{1, 0}}, MPoly(Rat(-1)));
    // (x, y/D) = (1 - 1) / (z2 - z1) = 0
    CHECK(shapovalov_pm(x, FracVElement(y)).is_zero());
    VElement y2(2, 2);
    y2.add(Decomp{{0, 1}}, z(2));
    y2.add(Decomp{{1, 0}}, z(1) * MPoly(Rat(-1)));
    CHECK(shapovalov_pm(x, FracVElement(y2)) == MPoly(1));
    // non-divisible numerator is a hard error
    VElement bad(2, 2);
    bad.add(Decomp{{0, 1}}, MPoly(1));
    CHECK_THROWS_AS(shapovalov_pm(x, FracVElement(bad)), std::logic_error);
}
