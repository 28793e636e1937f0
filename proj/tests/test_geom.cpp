#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagbethe/geom.hpp"

using namespace fb;

namespace {
MPoly z(unsigned s, int e = 1) { return MPoly::var(z_var(s), e); }
const Weight kHook{{1, 1}};
}  // namespace

TEST_CASE("raising the unit class") {
    CohClass u = unit_class(kHook);
    // target weight (2,0): a single fixed point
    CohClass up = rho_generator(+1, true, 1, 0, u);
    CHECK(up.lam == Weight{{2, 0}});
    REQUIRE(up.restr.size() == 1);
    CHECK(up.restr[0] == MPoly(2));
    CHECK(rho_generator(+1, true, 1, 1, u).restr[0] == z(1) + z(2));

    // the minus-structure transport weights by Euler ratios
    CHECK(rho_generator(-1, true, 1, 0, u).restr[0].is_zero());
    CHECK(rho_generator(-1, true, 1, 1, u).restr[0] == MPoly(1));
}

TEST_CASE("lowering the unit class") {
    CohClass u = unit_class(Weight{{2, 0}});
    CohClass dn = rho_generator(+1, false, 1, 0, u);
    CHECK(dn.lam == kHook);
    REQUIRE(dn.restr.size() == 2);
    // each fixed point receives exactly one term
    CHECK(dn.restr[0] == MPoly(1));
    CHECK(dn.restr[1] == MPoly(1));
}

TEST_CASE("out-of-range weights give the zero class") {
    CohClass u = unit_class(Weight{{2, 0}});
    CohClass r = rho_generator(+1, true, 1, 0, u);
    for (auto& p : r.restr) CHECK(p.is_zero());
    CohClass l = rho_generator(-1, false, 1, 0, unit_class(Weight{{0, 2}}));
    for (auto& p : l.restr) CHECK(p.is_zero());
}

TEST_CASE("transport diagrams commute on small weights") {
    for (auto lam : {Weight{{1, 1}}, Weight{{2, 0}}, Weight{{2, 1}}})
        for (int sign : {+1, -1})
            for (bool raise : {true, false})
                for (unsigned j = 0; j <= 1; ++j) {
                    auto r = diagram_check(sign, raise, 1, j, lam);
                    INFO(r.witness);
                    CHECK(r.ok);
                }
    // a three-block instance exercises a != 1
    auto r = diagram_check(+1, true, 2, 1, Weight{{1, 0, 1}});
    INFO(r.witness);
    CHECK(r.ok);
}

TEST_CASE("transport is linear over symmetric functions") {
    for (int sign : {+1, -1})
        for (bool raise : {true, false}) {
            auto r = descended_check(sign, raise, 1, 1, kHook);
            INFO(r.witness);
            CHECK(r.ok);
        }
}

TEST_CASE("weight-gap commutator") {
    for (auto lam : {Weight{{1, 1}}, Weight{{2, 0}}, Weight{{0, 2}}, Weight{{2, 1}}})
        for (int sign : {+1, -1}) {
            auto r = serre_instance_check(lam, sign);
            INFO(r.witness);
            CHECK(r.ok);
        }
}
