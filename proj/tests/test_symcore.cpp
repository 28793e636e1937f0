#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagbethe/frac.hpp"
#include "flagbethe/mpoly.hpp"
#include "flagbethe/series.hpp"
#include "flagbethe/uea.hpp"

using namespace fb;

namespace {
MPoly z(unsigned s, int e = 1) { return MPoly::var(z_var(s), e); }
}  // namespace

TEST_CASE("elementary symmetric polynomials") {
    std::vector<Var> v2{z_var(1), z_var(2)};
    std::vector<Var> v3{z_var(1), z_var(2), z_var(3)};
    CHECK(elementary_symmetric(1, v2) == z(1) + z(2));
    CHECK(elementary_symmetric(2, v2) == z(1) * z(2));
    CHECK(elementary_symmetric(2, v3) == z(1) * z(2) + z(1) * z(3) + z(2) * z(3));
    CHECK_THROWS_AS(elementary_symmetric(3, v2), std::invalid_argument);
}

TEST_CASE("vandermonde") {
    CHECK(vandermonde({z_var(1)}) == MPoly(1));
    CHECK(vandermonde({z_var(1), z_var(2)}) == z(2) - z(1));
    MPoly v3 = (z(2) - z(1)) * (z(3) - z(1)) * (z(3) - z(2));
    CHECK(vandermonde({z_var(1), z_var(2), z_var(3)}) == v3);
    CHECK(vandermonde({z_var(1), z_var(2), z_var(3)}).total_degree() == 3);
}

TEST_CASE("block resultant") {
    CHECK(block_resultant({{1}, {2}}) == z(2) - z(1));
    CHECK(block_resultant({{1, 2}, {3}}) == (z(3) - z(1)) * (z(3) - z(2)));
    CHECK_THROWS_AS(block_resultant({{1, 2}, {2}}), std::invalid_argument);
}

TEST_CASE("exact division and substitution") {
    MPoly p = (z(1) + z(2)) * (z(1) - z(2));
    auto q = p.divide_exact(z(1) + z(2));
    REQUIRE(q);
    CHECK(*q == z(1) - z(2));
    CHECK(!p.divide_exact(z(3)).has_value());

    std::map<Var, MPoly> repl{{z_var(1), z(2)}};
    CHECK(p.substitute(repl).is_zero());

    std::map<Var, Rat> vals{{z_var(1), Rat(3)}, {z_var(2), Rat(2)}};
    CHECK(p.evaluate(vals).constant_value() == Rat(5));
}

TEST_CASE("fraction arithmetic and cancellation") {
    // z1/(z2-z1) + z2/(z1-z2) = -1
    Frac a(z(1), {{z(2) - z(1), 1}});
    Frac b(z(2), {{z(1) - z(2), 1}});
    Frac s = a + b;
    CHECK(s.is_polynomial());
    CHECK(*s.as_polynomial() == MPoly(Rat(-1)));

    Frac c(z(1) * z(1) - z(2) * z(2), {{z(1) + z(2), 1}});
    CHECK(c.is_polynomial());  // cancels on construction
    CHECK(*c.as_polynomial() == z(1) - z(2));

    // cross-multiplied equality across split factorizations
    Frac d(MPoly(1), {{z(1) + z(2), 1}, {z(1) - z(2), 1}});
    Frac e(MPoly(1), {{z(1) * z(1) - z(2) * z(2), 1}});
    CHECK(d == e);
    CHECK(d.inverse() * d == Frac(1ll));
}

TEST_CASE("series validity bookkeeping") {
    // s = u + 1 + 2/u known to O(u^{-2})
    Series<Frac> s = Series<Frac>::zero_to(1);
    s.set(1, Frac(1ll));
    s.set(0, Frac(1ll));
    s.set(-1, Frac(2ll));
    CHECK(s.valid_order() == 1);
    CHECK(s.coeff(-1) == Frac(2ll));
    CHECK_THROWS_AS(s.coeff(-2), std::logic_error);

    // multiplying by an exact polynomial of degree 1 costs one order
    Series<Frac> u = Series<Frac>::monomial(1, Frac(1ll));
    CHECK((s * u).valid_order() == 0);
    CHECK((s * s).valid_order() == 0);
    CHECK(s.derivative().valid_order() == 2);
    CHECK(s.shifted(2).valid_order() == -1);
}

TEST_CASE("series inverse") {
    // 1/(u + a): geometric expansion
    MPoly a = z(1);
    Series<Frac> s;
    s.set(1, Frac(1ll));
    s.set(0, Frac(a));
    Series<Frac> inv = series_inverse(s, 4);
    CHECK(inv.coeff(-1) == Frac(1ll));
    CHECK(inv.coeff(-2) == Frac(-a));
    CHECK(inv.coeff(-3) == Frac(a * a));
    Series<Frac> prod = s * inv;
    CHECK(prod == Series<Frac>(Frac(1ll), prod.valid_order()));
}

TEST_CASE("differential operator composition uses the Leibniz rule") {
    // d . u = u d + 1
    Series<Frac> u = Series<Frac>::monomial(1, Frac(1ll));
    DiffOp<Frac> d = DiffOp<Frac>::d();
    DiffOp<Frac> mu = DiffOp<Frac>::mult(u);
    DiffOp<Frac> lhs = d.compose(mu);
    CHECK(lhs.coeff(1) == u);
    CHECK(lhs.coeff(0) == Series<Frac>(Frac(1ll)));

    // order-2 coefficient composes with binomial weights:
    // d^2 . f = f d^2 + 2 f' d + f''
    DiffOp<Frac> d2 = DiffOp<Frac>::d(2);
    Series<Frac> u2 = Series<Frac>::monomial(2, Frac(1ll));
    DiffOp<Frac> r = d2.compose(DiffOp<Frac>::mult(u2));
    CHECK(r.coeff(2) == u2);
    CHECK(r.coeff(1) == Series<Frac>::monomial(1, Frac(4ll)));
    CHECK(r.coeff(0) == Series<Frac>(Frac(2ll)));
}

TEST_CASE("composition keeps noncommutative coefficients in row order") {
    UEA x = UEA::generator(1, 2, 0), y = UEA::generator(2, 1, 0);
    DiffOp<UEA> mx = DiffOp<UEA>::mult(Series<UEA>(x));
    DiffOp<UEA> my = DiffOp<UEA>::mult(Series<UEA>(y));
    CHECK(mx.compose(my).coeff(0) == Series<UEA>(x * y));
    CHECK(!(mx.compose(my) == my.compose(mx)));
}

TEST_CASE("row determinant of a noncommutative 2x2 matrix") {
    UEA a = UEA::generator(1, 1, 0), b = UEA::generator(1, 2, 0);
    UEA c = UEA::generator(2, 1, 0), d = UEA::generator(2, 2, 0);
    auto m00 = DiffOp<UEA>::mult(Series<UEA>(a));
    auto m01 = DiffOp<UEA>::mult(Series<UEA>(b));
    auto m10 = DiffOp<UEA>::mult(Series<UEA>(c));
    auto m11 = DiffOp<UEA>::mult(Series<UEA>(d));
    DiffOp<UEA> det = rdet<UEA>({{m00, m01}, {m10, m11}});
    CHECK(det.coeff(0) == Series<UEA>(a * d - b * c));
}
