#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quadpreper/dynatomic.hpp"
#include "quadpreper/qfield.hpp"

namespace quadpreper {

// Hyperelliptic/affine plane model y^2 = f(x) with rational coefficients.
struct CurveModel {
    UniPoly f;
    std::string name;
    std::optional<int> genus_annotation;
    std::string ref;

    // parse one line:  name; y^2 = <poly in x>; genus=<n>?; ref=<string>?
    static CurveModel parse_line(const std::string& line);
    std::string to_line() const;
};

// f squarefree over Q, i.e. gcd(f, f') constant
bool is_squarefree(const UniPoly& f);

// genus of y^2 = f(x): ceil(deg f / 2) - 1; throws unless f squarefree of
// degree >= 3
int hyperelliptic_genus(const CurveModel& model);

struct FpCount {
    Integer p;
    long affine = 0;
    int at_infinity = 0;
    long total = 0;
};

// Point count of y^2 = f(x) over F_p, p odd of good reduction.  Affine count
// is sum over x of 1 + chi(f(x)) with chi(0) = 0; infinity contributes 1 for
// odd degree, else 2 when the leading coefficient is a square mod p, else 0.
FpCount count_points_mod_p(const CurveModel& model, const Integer& p);

// #X(Q) <= count + 2r + floor(2r/(p-2)); rank r is always caller-supplied
Integer stoll_bound(const Integer& count, const Integer& rank, const Integer& p);

// All affine rational points (x, y) with |num x|, |den x| <= H, by exact
// square testing of f(x).
std::vector<std::pair<Rational, Rational>> search_rational_points(const CurveModel& model,
                                                                  long height);

struct ObviousQuadPoint {
    FieldDesc field;
    QuadElem x;
    QuadElem y;
};

// (x0, sqrt(f(x0))) in Q(sqrt(D)) with D the squarefree kernel of f(x0);
// throws OffCurveError when f(x0) = 0 and signals rationality when f(x0) is
// a square.
struct PointIsRational {
    Rational y;
};
std::variant<ObviousQuadPoint, PointIsRational> obvious_quadratic_point(
    const CurveModel& model, const Rational& x0);

// Monic quadratic from the elliptic quadratic-point relation on
// y^2 = ax^3 + bx^2 + cx + d through (x0, y0) with slope parameter v.
UniPoly ec_quadratic_relation(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d, const Rational& x0, const Rational& y0,
                              const Rational& v);

// Exact resultant of rational-coefficient polynomials (Sylvester matrix with
// fraction-free elimination).
Rational resultant(const UniPoly& f, const UniPoly& g);

}  // namespace quadpreper
