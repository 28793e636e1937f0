#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagbethe/bethe.hpp"

using namespace fb;

TEST_CASE("universal operator for one block") {
    // D = d - K_1 - e_11(u): B_10 = -K_1, B_1j = -(e_11 t^{j-1})
    BetheFamily f = expand_universal_operator(1, 3);
    CHECK(f.at(1, 0) == -UEA(MPoly::var(k_var(1))));
    for (int j = 1; j <= 3; ++j) CHECK(f.at(1, j) == -UEA::generator(1, 1, unsigned(j - 1)));
}

TEST_CASE("universal operator for two blocks") {
    BetheFamily f = expand_universal_operator(2, 3);
    MPoly k1 = MPoly::var(k_var(1)), k2 = MPoly::var(k_var(2));
    // first coefficient: B_1(u) = -K_1 - K_2 - e_11(u) - e_22(u)
    CHECK(f.at(1, 0) == -UEA(k1 + k2));
    for (int j = 1; j <= 3; ++j)
        CHECK(f.at(1, j) ==
              -(UEA::generator(1, 1, unsigned(j - 1)) + UEA::generator(2, 2, unsigned(j - 1))));
    // the constant part of the second coefficient is sigma_2(K)
    CHECK(f.at(2, 0) == UEA(k1 * k2));
}

TEST_CASE("Bethe generators commute on a small weight space") {
    BetheFamily f = expand_universal_operator(2, 2);
    Decomp I{{0, 1}};
    VElement v = VElement::basis(I, 2);
    for (unsigned i = 1; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            for (unsigned k = 1; k <= 2; ++k)
                for (int l = 0; l <= 2; ++l) {
                    VElement a = apply_uea(f.at(i, j), apply_uea(f.at(k, l), v));
                    VElement b = apply_uea(f.at(k, l), apply_uea(f.at(i, j), v));
                    CHECK(a == b);
                }
}

TEST_CASE("zone values") {
    auto k = zone_k_values(3, Rat(10));
    CHECK(k == std::vector<Rat>{Rat(1000), Rat(100), Rat(10)});
    auto kp = zone_k_values(2, Rat(10), {2, 1});
    CHECK(kp == std::vector<Rat>{Rat(10), Rat(100)});
}

TEST_CASE("K substitution") {
    BetheFamily f = expand_universal_operator(2, 1).substituted({Rat(3), Rat(5)});
    CHECK(f.at(1, 0) == UEA(MPoly(Rat(-8))));
    CHECK(f.at(2, 0) == UEA(MPoly(Rat(15))));
}

TEST_CASE("words apply right to left") {
    // (e_21 t^0 e_12 t^1) v moves up then down, collecting z^1 on the way up
    UEA w = UEA::generator(2, 1, 0) * UEA::generator(1, 2, 1);
    Decomp I{{1}};
    VElement v = VElement::basis(I, 2);
    VElement y = apply_uea(w, v);
    CHECK(y.coeff(I) == MPoly::var(z_var(1)));
}
