#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagbethe/quasi_exp.hpp"

using namespace fb;

namespace {
const Weight kHook{{1, 1}};
Frac fvar(Var v) { return Frac(MPoly::var(v)); }
}  // namespace

TEST_CASE("generic family layout") {
    QuasiExponentialFamily f = generic_family(kHook);
    REQUIRE(f.N == 2);
    CHECK(!f.singular);
    CHECK(f.expo[0] == fvar(k_var(1)));
    CHECK(f.expo[1] == fvar(k_var(2)));
    CHECK(f.p[0].coeff(1) == Frac(1ll));
    CHECK(f.p[0].coeff(0) == fvar(sigma_var(1, 1)));
    CHECK(family_sigma_vars(f) ==
          std::vector<Var>{sigma_var(1, 1), sigma_var(2, 1)});
    QuasiExponentialFamily fn = generic_family(kHook, {Rat(2), Rat(5)});
    CHECK(fn.expo[0] == Frac(2ll));
    CHECK(fn.expo[1] == Frac(5ll));
}

TEST_CASE("singular family has the gap pattern") {
    // exponents d = (2, 1): the top polynomial skips the u^1 slot
    QuasiExponentialFamily f = singular_family(kHook);
    CHECK(f.singular);
    CHECK(f.expo[0] == Frac(0ll));
    CHECK(f.p[0].coeff(2) == Frac(1ll));
    CHECK(f.p[0].coeff(1) == Frac(0ll));
    CHECK(f.p[0].coeff(0) == fvar(sigma_var(1, 2)));
    CHECK(f.p[1].coeff(1) == Frac(1ll));
    CHECK(f.p[1].coeff(0) == fvar(sigma_var(2, 1)));
    CHECK(family_sigma_vars(f) ==
          std::vector<Var>{sigma_var(1, 2), sigma_var(2, 1)});
    CHECK_THROWS(singular_family(Weight{{0, 1}}));
}

TEST_CASE("shifted derivative") {
    // (E + d/du)^2 u = E^2 u + 2E
    Frac e = fvar(k_var(1));
    Series<Frac> u = Series<Frac>::monomial(1, Frac(1ll));
    Series<Frac> r = shifted_derivative(e, u, 2);
    CHECK(r.coeff(1) == e * e);
    CHECK(r.coeff(0) == Frac(2ll) * e);
}

TEST_CASE("wronskian coefficients for two quasi-exponentials") {
    QuasiExponentialFamily f = generic_family(kHook);
    auto a = extract_wk(f);
    REQUIRE(a.size() == 2);
    Frac s11 = fvar(sigma_var(1, 1)), s21 = fvar(sigma_var(2, 1));
    Frac k1 = fvar(k_var(1)), k2 = fvar(k_var(2));
    CHECK(a[0] == -(s11 + s21));
    CHECK(a[1] == s11 * s21 + (s11 - s21) * (k2 - k1).inverse());
    // equal exponents collapse the prefactor
    CHECK_THROWS(extract_wk(generic_family(kHook, {Rat(1), Rat(1)})));
}

TEST_CASE("coefficients of the limiting product") {
    auto a = winfty(kHook);
    MPoly s11 = MPoly::var(sigma_var(1, 1)), s21 = MPoly::var(sigma_var(2, 1));
    REQUIRE(a.size() == 2);
    CHECK(a[0] == -(s11 + s21));
    CHECK(a[1] == s11 * s21);
}

TEST_CASE("fundamental operator for one quasi-exponential") {
    // F_1(u) = -K_1 - 1/(u + Sigma_11): geometric tail
    QuasiExponentialFamily f = generic_family(Weight{{1}});
    DiffOp<Frac> d = fundamental_diffop(f, 4);
    Frac s = fvar(sigma_var(1, 1));
    CHECK(f_coeff(d, 1, 1, 0) == -fvar(k_var(1)));
    Frac pw(1ll);
    for (int j = 1; j <= 4; ++j) {
        CHECK(f_coeff(d, 1, 1, j) == -pw);
        pw = pw * (-s);
    }
}

TEST_CASE("the operator annihilates its family") {
    for (auto lam : {Weight{{1, 1}}, Weight{{2, 0}}, Weight{{0, 2}}}) {
        QuasiExponentialFamily f = generic_family(lam);
        CHECK(annihilates_family(fundamental_diffop(f, 4), f));
    }
    QuasiExponentialFamily fs = singular_family(kHook);
    CHECK(annihilates_family(fundamental_diffop(fs, 4), fs));
}

TEST_CASE("first-order factorization") {
    CHECK(factorization_holds(generic_family(kHook), 4));
    CHECK(factorization_holds(generic_family(Weight{{2, 0}}), 4));
    CHECK(factorization_holds(generic_family(Weight{{1, 1, 1}}), 3));
}

TEST_CASE("eta substitution sends tails to elementary symmetric classes") {
    MPoly s11 = MPoly::var(sigma_var(1, 1));
    CHECK(eta_substitute(s11, kHook) == -MPoly::var(gamma_var(1, 1)));
    Weight lam{{2, 1}};
    MPoly s12 = MPoly::var(sigma_var(1, 2));
    MPoly g11 = MPoly::var(gamma_var(1, 1)), g12 = MPoly::var(gamma_var(1, 2));
    CHECK(eta_substitute(s12, lam) == g11 * g12);
    CHECK(eta_substitute(MPoly::var(sigma_var(1, 1)), lam) == -(g11 + g12));
    // z variables pass through unchanged
    CHECK(eta_substitute(MPoly::var(z_var(1)), lam) == MPoly::var(z_var(1)));
}

TEST_CASE("eta lands in the cohomology model") {
    // eta(Sigma_11) restricts to (-z1, -z2)
    CohClass c = eta_iso(MPoly::var(sigma_var(1, 1)), kHook);
    CHECK(c.restr == std::vector<MPoly>{-MPoly::var(z_var(1)), -MPoly::var(z_var(2))});
}
