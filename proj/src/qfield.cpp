#include "quadpreper/qfield.hpp"

#include <sstream>

namespace quadpreper {

bool is_square(const Integer& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(const Rational& q) {
    return is_square(q.get_num()) && is_square(q.get_den());
}

Rational sqrt_exact(const Rational& q) {
    if (!is_square(q)) throw ArithmeticError("sqrt_exact: not a rational square");
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(n) / Rational(d);
}

Integer isqrt_floor(const Integer& n) {
    if (n < 0) throw ArithmeticError("isqrt_floor: negative argument");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer isqrt_ceil(const Integer& n) {
    Integer r = isqrt_floor(n);
    if (r * r < n) r += 1;
    return r;
}

Rational sqrt_upper(const Rational& q) {
    if (q < 0) throw ArithmeticError("sqrt_upper: negative argument");
    // sqrt(p/q) = sqrt(p*q)/q <= ceil(sqrt(p*q))/q
    Integer pq = q.get_num() * q.get_den();
    return Rational(isqrt_ceil(pq)) / Rational(q.get_den());
}

Rational sqrt_lower(const Rational& q) {
    if (q < 0) throw ArithmeticError("sqrt_lower: negative argument");
    Integer pq = q.get_num() * q.get_den();
    return Rational(isqrt_floor(pq)) / Rational(q.get_den());
}

Integer squarefree_kernel(const Integer& n) {
    if (n == 0) throw ArithmeticError("squarefree_kernel: zero argument");
    Integer m = abs(n);
    Integer kernel = 1;
    // trial division; inputs here are discriminants and values of small
    // polynomials, well within reach
    Integer p = 2;
    while (p * p <= m) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            if (e % 2 == 1) kernel *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    kernel *= m;  // leftover prime
    return n < 0 ? Integer(-kernel) : kernel;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

long ord_p(const Rational& q, const Integer& p) {
    if (q == 0) throw ArithmeticError("ord_p of zero");
    long v = 0;
    Integer n = q.get_num();
    while (n % p == 0) { n /= p; ++v; }
    Integer d = q.get_den();
    while (d % p == 0) { d /= p; --v; }
    return v;
}

// ---- FieldDesc -------------------------------------------------------------

FieldDesc FieldDesc::make(const Integer& d_raw) {
    if (d_raw == 0) throw ParseError("invalid field: D = 0");
    Integer k = squarefree_kernel(d_raw);
    if (k == 1) return rational();
    return FieldDesc(k);
}

std::string FieldDesc::str() const {
    if (is_rational()) return "Q";
    return "Q(sqrt(" + d_.get_str() + "))";
}

// ---- QuadElem --------------------------------------------------------------

QuadElem::QuadElem(FieldDesc field, Rational a, Rational b)
    : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {
    if (field_.is_rational() && b_ != 0)
        throw FieldMismatchError("nonzero sqrt coefficient over Q");
}

FieldDesc common_field(const QuadElem& x, const QuadElem& y) {
    // rational values embed anywhere regardless of their ambient tag
    bool xr = x.is_rational_value() || x.field().is_rational();
    bool yr = y.is_rational_value() || y.field().is_rational();
    if (x.field() == y.field()) return x.field();
    if (yr) return x.field();
    if (xr) return y.field();
    throw FieldMismatchError("elements of distinct quadratic fields: " +
                             x.field().str() + " vs " + y.field().str());
}

QuadElem in_field(const QuadElem& x, const FieldDesc& k) {
    if (x.field() == k) return x;
    if (x.is_rational_value()) return QuadElem(k, x.a(), 0);
    if (k.is_rational())
        throw FieldMismatchError("quadratic value cannot embed into Q");
    throw FieldMismatchError("cannot move " + x.field().str() + " element into " + k.str());
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
    FieldDesc k = common_field(x, y);
    return QuadElem(k, x.a() + y.a(), x.b() + y.b());
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
    FieldDesc k = common_field(x, y);
    return QuadElem(k, x.a() - y.a(), x.b() - y.b());
}

QuadElem operator-(const QuadElem& x) { return QuadElem(x.field(), -x.a(), -x.b()); }

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    FieldDesc k = common_field(x, y);
    if (k.is_rational()) return QuadElem(x.a() * y.a());
    Rational d(k.D());
    return QuadElem(k, x.a() * y.a() + d * x.b() * y.b(),
                    x.a() * y.b() + x.b() * y.a());
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) {
    if (y.is_zero()) throw ArithmeticError("division by zero");
    FieldDesc k = common_field(x, y);
    if (k.is_rational()) return QuadElem(x.a() / y.a());
    Rational n = norm(in_field(y, k));
    return x * QuadElem(k, y.a() / n, -y.b() / n);
}

QuadElem conj(const QuadElem& x) { return QuadElem(x.field(), x.a(), -x.b()); }

Rational norm(const QuadElem& x) {
    if (x.field().is_rational()) return x.a() * x.a();
    return x.a() * x.a() - Rational(x.field().D()) * x.b() * x.b();
}

Rational trace(const QuadElem& x) { return 2 * x.a(); }

ConjNormTrace conj_norm_trace(const QuadElem& x) {
    return {conj(x), norm(x), trace(x)};
}

namespace {

QuadElem canonical_root(const FieldDesc& k, const Rational& a, const Rational& b) {
    if (a > 0 || (a == 0 && b > 0)) return QuadElem(k, a, b);
    return QuadElem(k, -a, -b);
}

}  // namespace

std::optional<QuadElem> sqrt_in_field(const QuadElem& x) {
    if (x.is_zero()) return QuadElem(Rational(0));
    const Rational& u = x.a();
    const Rational& v = x.b();
    if (x.field().is_rational()) {
        if (u < 0) return std::nullopt;
        if (!is_square(u)) return std::nullopt;
        return QuadElem(sqrt_exact(u));
    }
    Rational d(x.field().D());
    if (v == 0) {
        // u rational: root is rational or a pure sqrt(D) multiple
        if (u > 0 && is_square(u))
            return canonical_root(x.field(), sqrt_exact(u), 0);
        Rational ud = u / d;
        if (ud > 0 && is_square(ud))
            return canonical_root(x.field(), 0, sqrt_exact(ud));
        return std::nullopt;
    }
    // (p + q sqrt(D))^2 = u + v sqrt(D) with 2pq = v forces p^2 = (u +- n)/2,
    // n = sqrt(u^2 - D v^2)
    Rational nn = norm(x);
    if (nn < 0 || !is_square(nn)) return std::nullopt;
    Rational n = sqrt_exact(nn);
    for (int sign : {+1, -1}) {
        Rational p2 = (u + sign * n) / 2;
        if (p2 > 0 && is_square(p2)) {
            Rational p = sqrt_exact(p2);
            Rational q = v / (2 * p);
            return canonical_root(x.field(), p, q);
        }
    }
    return std::nullopt;
}

Rational arch_abs_bound(const QuadElem& x) {
    if (x.field().is_rational()) return rat_abs(x.a());
    Rational d(x.field().D());
    if (d > 0) {
        // max over |a +- b sqrt(D)| <= |a| + |b| sqrt(D)
        return rat_abs(x.a()) + rat_abs(x.b()) * sqrt_upper(d);
    }
    // one complex place: |x|^2 = a^2 + |D| b^2
    return sqrt_upper(x.a() * x.a() + (-d) * x.b() * x.b());
}

int sign_at_positive_embedding(const QuadElem& x) {
    if (x.is_zero()) return 0;
    if (x.b() == 0) return sgn(x.a());
    const Integer& d = x.field().D();
    if (d < 0) throw ArithmeticError("sign at a complex place");
    if (x.a() == 0) return sgn(x.b());
    // sign of a + b sqrt(D): compare a^2 vs D b^2
    int sa = sgn(x.a()), sb = sgn(x.b());
    if (sa == sb) return sa;
    Rational a2 = x.a() * x.a();
    Rational db2 = Rational(d) * x.b() * x.b();
    return a2 > db2 ? sa : sb;
}

bool lex_less(const QuadElem& x, const QuadElem& y) {
    if (x.a() != y.a()) return x.a() < y.a();
    return x.b() < y.b();
}

size_t QuadElemHash::operator()(const QuadElem& x) const {
    std::hash<std::string> h;
    return h(x.a().get_str() + "|" + x.b().get_str());
}

// str() lives here but follows the grammar documented in textio.hpp
std::string QuadElem::str() const {
    auto rat = [](const Rational& q) {
        std::string s = q.get_num().get_str();
        if (q.get_den() != 1) s += "/" + q.get_den().get_str();
        return s;
    };
    if (b_ == 0) return rat(a_);
    std::ostringstream os;
    os << "(" << rat(a_) << ")+(" << rat(b_) << ")*sqrt(" << field_.D().get_str() << ")";
    return os.str();
}

}  // namespace quadpreper
