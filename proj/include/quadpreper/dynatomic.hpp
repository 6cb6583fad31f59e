#pragma once

#include <map>
#include <utility>
#include <vector>

#include "quadpreper/qfield.hpp"

namespace quadpreper {

// ---- polynomials in Z[x,c] -------------------------------------------------

// Sparse map representation keyed by (x-degree, c-degree).  Degrees stay
// small (deg_x <= 256) so simplicity wins over a dense layout.
class BivarPoly {
public:
    using Key = std::pair<int, int>;

    BivarPoly() = default;
    static BivarPoly constant(const Integer& k);
    static BivarPoly monomial(const Integer& k, int xdeg, int cdeg);

    const std::map<Key, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int deg_x() const;
    int deg_c() const;  // here "c" is just the second variable
    const Integer& coeff(int xdeg, int cdeg) const;

    void add_term(const Integer& k, int xdeg, int cdeg);

    bool operator==(const BivarPoly&) const = default;

    BivarPoly operator+(const BivarPoly& g) const;
    BivarPoly operator-(const BivarPoly& g) const;
    BivarPoly operator*(const BivarPoly& g) const;
    BivarPoly operator*(const Integer& k) const;

    // division by a divisor monic in x; throws ConsistencyError unless the
    // remainder vanishes
    BivarPoly exact_divide_monic_x(const BivarPoly& divisor) const;

    // pseudo-remainder of *this by g with respect to the second variable:
    // lc_y(g)^k * this = q*g + r, returns r
    BivarPoly prem_in_y(const BivarPoly& g) const;

    QuadElem eval(const QuadElem& x0, const QuadElem& c0) const;

    // "k*x^i*c^j" monomials in graded-lex order, bit-exact fixture format
    std::string str(const std::string& xname = "x", const std::string& cname = "c") const;

private:
    std::map<Key, Integer> terms_;  // no zero coefficients stored
};

// ---- polynomials in K[x] ---------------------------------------------------

// Coefficients ascending by degree; leading coefficient nonzero unless the
// zero polynomial.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<QuadElem> coeffs);
    static UniPoly constant(const QuadElem& k);
    static UniPoly from_rationals(const std::vector<Rational>& coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const QuadElem& coeff(int i) const;
    const QuadElem& leading() const;
    const std::vector<QuadElem>& coeffs() const { return coeffs_; }
    bool all_rational() const;

    bool operator==(const UniPoly&) const = default;

    UniPoly operator+(const UniPoly& g) const;
    UniPoly operator-(const UniPoly& g) const;
    UniPoly operator*(const UniPoly& g) const;
    UniPoly scaled(const QuadElem& k) const;

    QuadElem eval(const QuadElem& x0) const;
    UniPoly derivative() const;

    static UniPoly gcd(UniPoly f, UniPoly g);  // monic gcd

private:
    void trim();
    std::vector<QuadElem> coeffs_;
};

// ---- dynatomic machinery ---------------------------------------------------

inline constexpr int kMaxIterate = 8;  // coefficient growth guard

// f_c^N(x) as an element of Z[x,c]; deg_x = 2^N, N in [1, 8]
BivarPoly iterate_poly(int n);

// Nth dynatomic polynomial, computed by exact division of the Moebius
// products; deg_x = d(N)
BivarPoly dynatomic_poly(int n);

// d(N) = sum_{n|N} mu(N/n) 2^n  and  r(N) = d(N)/N
std::pair<Integer, Integer> dnrn(int n);

int moebius(int n);

// exact value of Phi_N(x0, c0); zero iff x0 has formal period N for f_{c0}
QuadElem eval_dynatomic(int n, const QuadElem& x0, const QuadElem& c0);

}  // namespace quadpreper
