#include "quadpreper/dynatomic.hpp"

#include <mutex>
#include <sstream>

namespace quadpreper {

// ---- BivarPoly -------------------------------------------------------------

BivarPoly BivarPoly::constant(const Integer& k) { return monomial(k, 0, 0); }

BivarPoly BivarPoly::monomial(const Integer& k, int xdeg, int cdeg) {
    BivarPoly p;
    p.add_term(k, xdeg, cdeg);
    return p;
}

int BivarPoly::deg_x() const {
    int d = -1;
    for (const auto& [key, _] : terms_) d = std::max(d, key.first);
    return d;
}

int BivarPoly::deg_c() const {
    int d = -1;
    for (const auto& [key, _] : terms_) d = std::max(d, key.second);
    return d;
}

const Integer& BivarPoly::coeff(int xdeg, int cdeg) const {
    static const Integer zero(0);
    auto it = terms_.find({xdeg, cdeg});
    return it == terms_.end() ? zero : it->second;
}

void BivarPoly::add_term(const Integer& k, int xdeg, int cdeg) {
    if (k == 0) return;
    auto [it, inserted] = terms_.try_emplace({xdeg, cdeg}, k);
    if (!inserted) {
        it->second += k;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly BivarPoly::operator+(const BivarPoly& g) const {
    BivarPoly r = *this;
    for (const auto& [key, v] : g.terms_) r.add_term(v, key.first, key.second);
    return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& g) const {
    BivarPoly r = *this;
    for (const auto& [key, v] : g.terms_) r.add_term(-v, key.first, key.second);
    return r;
}

BivarPoly BivarPoly::operator*(const Integer& k) const {
    BivarPoly r;
    for (const auto& [key, v] : terms_) r.add_term(v * k, key.first, key.second);
    return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& g) const {
    BivarPoly r;
    for (const auto& [ka, va] : terms_)
        for (const auto& [kb, vb] : g.terms_)
            r.add_term(va * vb, ka.first + kb.first, ka.second + kb.second);
    return r;
}

BivarPoly BivarPoly::exact_divide_monic_x(const BivarPoly& divisor) const {
    int dd = divisor.deg_x();
    if (dd < 0) throw ArithmeticError("division by zero polynomial");
    if (divisor.coeff(dd, 0) != 1 || [&] {
            for (const auto& [key, _] : divisor.terms())
                if (key.first == dd && key.second != 0) return true;
            return false;
        }())
        throw ConsistencyError("divisor not monic in x");

    BivarPoly rem = *this;
    BivarPoly quot;
    while (!rem.is_zero() && rem.deg_x() >= dd) {
        int dr = rem.deg_x();
        // peel the whole leading x-layer at once
        BivarPoly layer;
        for (const auto& [key, v] : rem.terms())
            if (key.first == dr) layer.add_term(v, dr - dd, key.second);
        quot = quot + layer;
        rem = rem - layer * divisor;
    }
    if (!rem.is_zero())
        throw ConsistencyError("dynatomic division left a nonzero remainder");
    return quot;
}

BivarPoly BivarPoly::prem_in_y(const BivarPoly& g) const {
    int dg = g.deg_c();
    if (dg < 0) throw ArithmeticError("prem by zero polynomial");
    // leading coefficient of g in y, as a polynomial in x
    BivarPoly lc;
    for (const auto& [key, v] : g.terms())
        if (key.second == dg) lc.add_term(v, key.first, 0);
    BivarPoly r = *this;
    while (!r.is_zero() && r.deg_c() >= dg) {
        int dr = r.deg_c();
        BivarPoly lr;
        for (const auto& [key, v] : r.terms())
            if (key.second == dr) lr.add_term(v, key.first, 0);
        // lc * r - lr * y^(dr-dg) * g
        BivarPoly shift;
        for (const auto& [key, v] : lr.terms())
            shift.add_term(v, key.first, dr - dg);
        r = r * lc - shift * g;
    }
    return r;
}

QuadElem BivarPoly::eval(const QuadElem& x0, const QuadElem& c0) const {
    // Horner in x over precomputed c-powers
    int dx = deg_x();
    if (dx < 0) return QuadElem(Rational(0));
    int dc = deg_c();
    std::vector<QuadElem> cpow(dc + 1, QuadElem(Rational(1)));
    for (int j = 1; j <= dc; ++j) cpow[j] = cpow[j - 1] * c0;

    QuadElem acc{Rational(0)};
    for (int i = dx; i >= 0; --i) {
        QuadElem layer{Rational(0)};
        for (int j = 0; j <= dc; ++j) {
            const Integer& k = coeff(i, j);
            if (k != 0) layer = layer + QuadElem(Rational(k)) * cpow[j];
        }
        acc = acc * x0 + layer;
    }
    return acc;
}

std::string BivarPoly::str(const std::string& xname, const std::string& cname) const {
    if (terms_.empty()) return "0";
    // graded-lex: total degree descending, then x-degree descending
    std::vector<std::pair<Key, Integer>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, v] : ts) {
        Integer av = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        bool coeff_one = (av == 1) && (key.first > 0 || key.second > 0);
        if (!coeff_one) os << av.get_str();
        bool need_star = !coeff_one;
        if (key.first > 0) {
            if (need_star) os << "*";
            os << xname;
            if (key.first > 1) os << "^" << key.first;
            need_star = true;
        }
        if (key.second > 0) {
            if (need_star) os << "*";
            os << cname;
            if (key.second > 1) os << "^" << key.second;
        }
    }
    return os.str();
}

// ---- UniPoly ---------------------------------------------------------------

UniPoly::UniPoly(std::vector<QuadElem> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const QuadElem& k) { return UniPoly({k}); }

UniPoly UniPoly::from_rationals(const std::vector<Rational>& coeffs) {
    std::vector<QuadElem> v;
    v.reserve(coeffs.size());
    for (const auto& q : coeffs) v.emplace_back(q);
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const QuadElem& UniPoly::coeff(int i) const {
    static const QuadElem zero{Rational(0)};
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[i];
}

const QuadElem& UniPoly::leading() const {
    if (coeffs_.empty()) throw ArithmeticError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool UniPoly::all_rational() const {
    for (const auto& c : coeffs_)
        if (!c.is_rational_value()) return false;
    return true;
}

UniPoly UniPoly::operator+(const UniPoly& g) const {
    std::vector<QuadElem> v(std::max(coeffs_.size(), g.coeffs_.size()), QuadElem(Rational(0)));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(int(i)) + g.coeff(int(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& g) const {
    std::vector<QuadElem> v(std::max(coeffs_.size(), g.coeffs_.size()), QuadElem(Rational(0)));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(int(i)) - g.coeff(int(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& g) const {
    if (is_zero() || g.is_zero()) return UniPoly();
    std::vector<QuadElem> v(coeffs_.size() + g.coeffs_.size() - 1, QuadElem(Rational(0)));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < g.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * g.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const QuadElem& k) const {
    std::vector<QuadElem> v = coeffs_;
    for (auto& c : v) c = c * k;
    return UniPoly(std::move(v));
}

QuadElem UniPoly::eval(const QuadElem& x0) const {
    QuadElem acc{Rational(0)};
    for (int i = degree(); i >= 0; --i) acc = acc * x0 + coeffs_[i];
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (degree() <= 0) return UniPoly();
    std::vector<QuadElem> v;
    v.reserve(coeffs_.size() - 1);
    for (int i = 1; i <= degree(); ++i)
        v.push_back(coeffs_[i] * QuadElem(Rational(i)));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::gcd(UniPoly f, UniPoly g) {
    while (!g.is_zero()) {
        // remainder of f by g
        UniPoly r = f;
        while (!r.is_zero() && r.degree() >= g.degree()) {
            QuadElem q = r.leading() / g.leading();
            int shift = r.degree() - g.degree();
            std::vector<QuadElem> sub(shift, QuadElem(Rational(0)));
            sub.push_back(q);
            r = r - UniPoly(std::move(sub)) * g;
        }
        f = g;
        g = r;
    }
    if (!f.is_zero()) f = f.scaled(QuadElem(Rational(1)) / f.leading());
    return f;
}

// ---- dynatomic -------------------------------------------------------------

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

namespace {

std::vector<BivarPoly>& iterate_cache() {
    static std::vector<BivarPoly> cache;  // cache[n-1] = f^n
    return cache;
}
std::mutex cache_mutex;

BivarPoly iterate_poly_locked(int n) {
    auto& cache = iterate_cache();
    while (static_cast<int>(cache.size()) < n) {
        if (cache.empty()) {
            BivarPoly f1;
            f1.add_term(1, 2, 0);
            f1.add_term(1, 0, 1);
            cache.push_back(f1);  // x^2 + c
        } else {
            const BivarPoly& prev = cache.back();
            BivarPoly next = prev * prev;
            next.add_term(1, 0, 1);
            cache.push_back(next);
        }
    }
    return cache[n - 1];
}

}  // namespace

BivarPoly iterate_poly(int n) {
    if (n < 1 || n > kMaxIterate)
        throw LimitError("iterate_poly: N must be in [1, 8]");
    std::lock_guard<std::mutex> lock(cache_mutex);
    return iterate_poly_locked(n);
}

BivarPoly dynatomic_poly(int n) {
    if (n < 1 || n > kMaxIterate)
        throw LimitError("dynatomic_poly: N must be in [1, 8]");
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::map<int, BivarPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    BivarPoly x = BivarPoly::monomial(1, 1, 0);
    BivarPoly numer = BivarPoly::constant(1);
    BivarPoly denom = BivarPoly::constant(1);
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = moebius(n / d);
        if (mu == 0) continue;
        BivarPoly factor = iterate_poly_locked(d) - x;
        (mu == 1 ? numer : denom) = (mu == 1 ? numer : denom) * factor;
    }
    BivarPoly phi = numer.exact_divide_monic_x(denom);
    cache.emplace(n, phi);
    return phi;
}

std::pair<Integer, Integer> dnrn(int n) {
    if (n < 1) throw LimitError("dnrn: N must be positive");
    Integer d(0);
    for (int k = 1; k <= n; ++k) {
        if (n % k != 0) continue;
        Integer two_k;
        mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
        d += moebius(n / k) * two_k;
    }
    if (d % n != 0) throw ConsistencyError("d(N) not divisible by N");
    return {d, d / n};
}

QuadElem eval_dynatomic(int n, const QuadElem& x0, const QuadElem& c0) {
    common_field(x0, c0);
    return dynatomic_poly(n).eval(x0, c0);
}

}  // namespace quadpreper
