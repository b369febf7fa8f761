#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zernike/jsonio.hpp"
#include "zernike/poly.hpp"
#include "zernike/zernike2d.hpp"

#include <random>

using namespace zern;

TEST_CASE("cartesian products") {
    CartPoly2 x, y;
    x.add(1, 0, SurdSum(1));
    y.add(0, 1, SurdSum(1));
    CartPoly2 xy = x * y;
    CHECK(xy.coeff(1, 1) == SurdSum(1));
    CHECK(xy.coeffs().size() == 1);

    // (x^2 + y^2)^2 = x^4 + 2 x^2 y^2 + y^4, the r^4 line
    CartPoly2 r2;
    r2.add(2, 0, SurdSum(1));
    r2.add(0, 2, SurdSum(1));
    CartPoly2 r4 = r2 * r2;
    CHECK(r4.coeff(4, 0) == SurdSum(1));
    CHECK(r4.coeff(2, 2) == SurdSum(2));
    CHECK(r4.coeff(0, 4) == SurdSum(1));
}

TEST_CASE("radial product by hand: R_2^0 * R_2^2") {
    RadialPoly a = radial_2d(Index2D(2, 0));  // -1 + 2r^2
    RadialPoly b = radial_2d(Index2D(2, 2));  // r^2
    RadialPoly p = a * b;
    CHECK(p.coeff(2) == SurdSum(-1));
    CHECK(p.coeff(4) == SurdSum(2));
    CHECK(p.coeffs().size() == 2);
}

TEST_CASE("trinomial expansion") {
    CHECK(trinomial_expand(0).coeff(0, 0, 0) == ComplexSurd(SurdSum(1)));
    CHECK(trinomial_expand(0).coeffs().size() == 1);

    CartPoly3 t1 = trinomial_expand(1);
    CHECK(t1.coeff(2, 0, 0) == ComplexSurd(SurdSum(1)));
    CHECK(t1.coeff(0, 2, 0) == ComplexSurd(SurdSum(1)));
    CHECK(t1.coeff(0, 0, 2) == ComplexSurd(SurdSum(1)));
    CHECK(t1.coeffs().size() == 3);

    // square the half_degree = 1 result
    CHECK(trinomial_expand(2) == t1 * t1);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    CartPoly2 a, b;
    a.add(2, 0, SurdSum(Rational(3, 7)));
    a.add(1, 1, SurdSum::sqrt_term(Rational(-1, 2), 5));
    a.add(0, 0, SurdSum(1));
    b.add(0, 2, SurdSum::sqrt_term(Rational(2, 3), 2));
    b.add(1, 0, SurdSum(Rational(-4, 5)));
    CartPoly2 ab = a * b;
    for (int i = 0; i < 50; ++i) {
        double x = uni(rng), y = uni(rng);
        double lhs = ab.eval(x, y);
        double rhs = a.eval(x, y) * b.eval(x, y);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("json round-trips are lossless") {
    RadialPoly r = radial_2d(Index2D(13, 1));
    CHECK(radial_from_json(to_json(r)) == r);

    CartPoly2 c2 = zernike_to_cart_2d(NollIndex(14));
    CHECK(cart2_from_json(to_json(c2)) == c2);

    CartPoly3 c3 = trinomial_expand(3);
    c3.add(1, 2, 3, ComplexSurd(SurdSum::sqrt_term(Rational(22, 7), 6),
                                SurdSum(Rational(-1, 3))));
    CHECK(cart3_from_json(to_json(c3)) == c3);

    ZernExpansion2D e2 = cart_monomial_to_zernike_2d(3, 2);
    CHECK(zexp2_from_json(to_json(e2)) == e2);

    ZernExpansion3D e3;
    e3.add(2, 2, -1, ComplexSurd(SurdSum(), SurdSum::sqrt_term(Rational(1, 105), 210)));
    CHECK(zexp3_from_json(to_json(e3)) == e3);
}
