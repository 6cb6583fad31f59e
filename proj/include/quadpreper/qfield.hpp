#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>

#include "quadpreper/errors.hpp"

namespace quadpreper {

using Integer  = mpz_class;
using Rational = mpq_class;  // always canonical: gcd(num, den) = 1, den > 0

// ---- exact integer/rational square helpers --------------------------------

bool is_square(const Integer& n);
bool is_square(const Rational& q);
// exact square root; caller must ensure the argument is a square
Rational sqrt_exact(const Rational& q);
// floor(sqrt(n)) for n >= 0
Integer isqrt_floor(const Integer& n);
// smallest integer s with s*s >= n (n >= 0)
Integer isqrt_ceil(const Integer& n);
// rational r with r >= sqrt(q) (q >= 0), within a factor 2 of sqrt(q)
Rational sqrt_upper(const Rational& q);
// rational r with 0 <= r <= sqrt(q)
Rational sqrt_lower(const Rational& q);
// squarefree kernel of a nonzero integer (sign preserved)
Integer squarefree_kernel(const Integer& n);

Integer floor_div(const Integer& a, const Integer& b);
Rational rat_abs(const Rational& q);
long ord_p(const Rational& q, const Integer& p);  // p-adic valuation, q != 0

// ---- quadratic fields ------------------------------------------------------

// K = Q or K = Q(sqrt(D)) with D a squarefree integer, D not in {0, 1}.
class FieldDesc {
public:
    FieldDesc() : d_(0) {}  // rational field
    static FieldDesc rational() { return FieldDesc(); }
    // normalizes D_raw to its squarefree kernel; kernel 1 means Q
    static FieldDesc make(const Integer& d_raw);

    bool is_rational() const { return d_ == 0; }
    // only valid when !is_rational()
    const Integer& D() const { return d_; }
    bool operator==(const FieldDesc&) const = default;

    std::string str() const;

private:
    explicit FieldDesc(Integer d) : d_(std::move(d)) {}
    Integer d_;  // 0 encodes Q
};

// Element a + b*sqrt(D) of K.  b is zero whenever the field is Q.
class QuadElem {
public:
    QuadElem() : field_(FieldDesc::rational()), a_(0), b_(0) {}
    QuadElem(Rational a) : field_(FieldDesc::rational()), a_(std::move(a)), b_(0) {}
    QuadElem(long a) : QuadElem(Rational(a)) {}
    QuadElem(FieldDesc field, Rational a, Rational b);

    // ambient field tag (kept even when the value happens to be rational)
    const FieldDesc& field() const { return field_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_rational_value() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // componentwise; the field tag only matters for genuinely quadratic values
    bool operator==(const QuadElem& o) const {
        if (a_ != o.a_ || b_ != o.b_) return false;
        return b_ == 0 || field_ == o.field_;
    }

    std::string str() const;  // bit-exact element grammar, see textio

private:
    FieldDesc field_;
    Rational a_, b_;
};

// Two elements are compatible when their fields match or either is a plain
// rational (rationals embed everywhere); genuinely quadratic elements of
// distinct D never mix.
FieldDesc common_field(const QuadElem& x, const QuadElem& y);
QuadElem in_field(const QuadElem& x, const FieldDesc& k);

QuadElem operator+(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x);
QuadElem operator*(const QuadElem& x, const QuadElem& y);
QuadElem operator/(const QuadElem& x, const QuadElem& y);

QuadElem conj(const QuadElem& x);
Rational norm(const QuadElem& x);   // a^2 - D b^2
Rational trace(const QuadElem& x);  // 2a

struct ConjNormTrace {
    QuadElem conj;
    Rational norm;
    Rational trace;
};
ConjNormTrace conj_norm_trace(const QuadElem& x);

// Square root of x inside its own field, if one exists.  The returned
// representative has a > 0, or a = 0 and b > 0; the other root is its
// negation.  x = 0 yields 0.
std::optional<QuadElem> sqrt_in_field(const QuadElem& x);

// Rational B with |sigma(x)| <= B for every archimedean embedding sigma,
// within a factor 2 of the best bound.
Rational arch_abs_bound(const QuadElem& x);

// Exact sign of a + b*sqrt(D) under the embedding sqrt(D) -> +sqrt(D)
// (real fields only; rationals allowed).
int sign_at_positive_embedding(const QuadElem& x);

// Total order usable for deterministic sorting (lexicographic on (a, b)).
bool lex_less(const QuadElem& x, const QuadElem& y);

struct QuadElemHash {
    size_t operator()(const QuadElem& x) const;
};

}  // namespace quadpreper
