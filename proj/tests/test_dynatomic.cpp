#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadpreper/dynatomic.hpp"
#include "quadpreper/textio.hpp"

using namespace quadpreper;

TEST_CASE("iterate_poly small cases") {
    BivarPoly f1 = iterate_poly(1);
    CHECK(f1.str() == "x^2 + c");

    BivarPoly f2 = iterate_poly(2);
    // (x^2+c)^2 + c = x^4 + 2cx^2 + c^2 + c
    CHECK(f2.coeff(4, 0) == 1);
    CHECK(f2.coeff(2, 1) == 2);
    CHECK(f2.coeff(0, 2) == 1);
    CHECK(f2.coeff(0, 1) == 1);
    CHECK(f2.deg_x() == 4);

    BivarPoly f3 = iterate_poly(3);
    CHECK(f3.deg_x() == 8);
    // constant-in-x term is (c^2+c)^2 + c
    CHECK(f3.coeff(0, 4) == 1);
    CHECK(f3.coeff(0, 3) == 2);
    CHECK(f3.coeff(0, 2) == 1);
    CHECK(f3.coeff(0, 1) == 1);

    CHECK_THROWS_AS(iterate_poly(0), LimitError);
    CHECK_THROWS_AS(iterate_poly(9), LimitError);
}

TEST_CASE("dynatomic polynomials for small N") {
    CHECK(dynatomic_poly(1).str() == "x^2 - x + c");
    CHECK(dynatomic_poly(2).str() == "x^2 + x + c + 1");
    CHECK(dynatomic_poly(3).deg_x() == 6);
    CHECK_THROWS_AS(dynatomic_poly(0), LimitError);
}

TEST_CASE("d(N), r(N) match the known table") {
    const long d_expected[] = {2, 2, 6, 12, 30, 54, 126, 240};
    const long r_expected[] = {2, 1, 2, 3, 6, 9, 18, 30};
    for (int n = 1; n <= 8; ++n) {
        auto [d, r] = dnrn(n);
        CHECK(d == d_expected[n - 1]);
        CHECK(r == r_expected[n - 1]);
    }
}

TEST_CASE("deg_x Phi_N = d(N) for N <= 8") {
    for (int n = 1; n <= 8; ++n) {
        auto [d, r] = dnrn(n);
        CHECK(dynatomic_poly(n).deg_x() == d.get_si());
    }
}

TEST_CASE("product identity: prod_{n|N} Phi_n = f^N - x for N <= 6") {
    BivarPoly x = BivarPoly::monomial(1, 1, 0);
    for (int N = 1; N <= 6; ++N) {
        BivarPoly prod = BivarPoly::constant(1);
        for (int n = 1; n <= N; ++n)
            if (N % n == 0) prod = prod * dynatomic_poly(n);
        CHECK(prod == iterate_poly(N) - x);
    }
}

TEST_CASE("eval_dynatomic worked examples") {
    QuadElem zero{Rational(0)};
    CHECK(eval_dynatomic(3, parse_elem("5/4"), parse_elem("-29/16")) == zero);
    CHECK(eval_dynatomic(1, parse_elem("3/4"), parse_elem("3/16")) == zero);
    CHECK(eval_dynatomic(2, parse_elem("0"), parse_elem("0")) == QuadElem(Rational(1)));
    // quadratic arguments are fine
    QuadElem c = parse_elem("-3/4");
    QuadElem alpha = parse_elem("3/2");
    CHECK(eval_dynatomic(1, alpha, c) == zero);
    CHECK_THROWS_AS(eval_dynatomic(1, parse_elem("sqrt(2)"), parse_elem("sqrt(3)")),
                    FieldMismatchError);
}

TEST_CASE("moebius values") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(8) == 0);
    CHECK(moebius(30) == -1);
}

TEST_CASE("polynomial printing is graded-lex and bit-exact") {
    BivarPoly p;
    p.add_term(3, 2, 1);
    p.add_term(-1, 0, 0);
    p.add_term(1, 1, 2);
    CHECK(p.str() == "3*x^2*c + x*c^2 - 1");
}

TEST_CASE("unipoly parse/print and arithmetic") {
    UniPoly f = parse_unipoly("t^6+2*t^5+5*t^4+10*t^3+10*t^2+4*t+1");
    CHECK(f.degree() == 6);
    CHECK(f.eval(QuadElem(Rational(0))) == QuadElem(Rational(1)));
    CHECK(f.eval(QuadElem(Rational(-1))) == QuadElem(Rational(1)));

    UniPoly g = parse_unipoly("-u(u^2+1)(u^2-2u-1)");  // implicit '*'
    CHECK(g.degree() == 5);
    CHECK(g.eval(QuadElem(Rational(2))) == QuadElem(Rational(10)));

    CHECK(parse_unipoly("(x-1)^2") == parse_unipoly("x^2 - 2x + 1"));
    CHECK_THROWS_AS(parse_unipoly("x + y"), ParseError);

    UniPoly h = parse_unipoly(unipoly_str(f, "t"));
    CHECK(h == f);

    CHECK(UniPoly::gcd(parse_unipoly("x^2-1"), parse_unipoly("x^2-2x+1")) ==
          parse_unipoly("x-1"));
    CHECK(UniPoly::gcd(parse_unipoly("x^2+1"), parse_unipoly("x+2")).degree() == 0);
}
