#include "quadpreper/curves.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quadpreper/textio.hpp"

namespace quadpreper {

namespace {

Integer i128_to_mpz(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    Integer hi(static_cast<unsigned long>(u >> 64));
    Integer lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    Integer out = (hi << 64) + lo;
    return neg ? Integer(-out) : out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<Rational> rational_coeffs(const UniPoly& f) {
    std::vector<Rational> v;
    v.reserve(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        if (!f.coeff(i).is_rational_value())
            throw ArithmeticError("curve model requires rational coefficients");
        v.push_back(f.coeff(i).a());
    }
    return v;
}

}  // namespace

CurveModel CurveModel::parse_line(const std::string& line) {
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ';')) parts.push_back(trim(item));
    if (parts.size() < 2) throw ParseError("curve model line needs `name; y^2 = <poly>`");

    CurveModel m;
    m.name = parts[0];
    const std::string& eq = parts[1];
    size_t pos = eq.find('=');
    if (pos == std::string::npos || trim(eq.substr(0, pos)) != "y^2")
        throw ParseError("curve model equation must have the form y^2 = <poly>");
    m.f = parse_unipoly(eq.substr(pos + 1));
    for (size_t i = 2; i < parts.size(); ++i) {
        if (parts[i].rfind("genus=", 0) == 0)
            m.genus_annotation = std::stoi(parts[i].substr(6));
        else if (parts[i].rfind("ref=", 0) == 0)
            m.ref = parts[i].substr(4);
        else if (!parts[i].empty())
            throw ParseError("unknown curve model attribute: " + parts[i]);
    }
    return m;
}

std::string CurveModel::to_line() const {
    std::string s = name + "; y^2 = " + unipoly_str(f);
    if (genus_annotation) s += "; genus=" + std::to_string(*genus_annotation);
    if (!ref.empty()) s += "; ref=" + ref;
    return s;
}

bool is_squarefree(const UniPoly& f) {
    if (f.is_zero()) return false;
    return UniPoly::gcd(f, f.derivative()).degree() == 0;
}

int hyperelliptic_genus(const CurveModel& model) {
    if (model.f.degree() < 3)
        throw ArithmeticError("hyperelliptic model needs deg f >= 3");
    if (!is_squarefree(model.f))
        throw ArithmeticError("not smooth: f has repeated roots");
    return (model.f.degree() + 1) / 2 - 1;
}

// ---- point counting ---------------------------------------------------------

namespace {

long mod_p(const Rational& q, const Integer& p) {
    Integer den = q.get_den() % p;
    if (den == 0) throw ReductionError("denominator vanishes mod p");
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw ReductionError("denominator not invertible mod p");
    Integer r = (q.get_num() % p) * inv % p;
    if (r < 0) r += p;
    return r.get_si();
}

// Legendre symbol for 0 <= a < p, p an odd prime
int legendre(long a, long p) {
    if (a == 0) return 0;
    Integer az(a), pz(p);
    return mpz_legendre(az.get_mpz_t(), pz.get_mpz_t());
}

}  // namespace

FpCount count_points_mod_p(const CurveModel& model, const Integer& p) {
    if (p < 3 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw ReductionError("p must be an odd prime");
    auto coeffs = rational_coeffs(model.f);
    if (coeffs.empty()) throw ArithmeticError("zero polynomial");
    long pl = p.get_si();
    std::vector<long> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = mod_p(coeffs[i], p);

    if (c.back() == 0) throw ReductionError("leading coefficient vanishes mod p");
    // good reduction: disc(f) = res(f, f')/lc invertible mod p
    Rational disc = resultant(model.f, model.f.derivative());
    if (mod_p(disc, p) == 0) throw ReductionError("discriminant vanishes mod p: bad reduction");

    FpCount out;
    out.p = p;
    for (long x = 0; x < pl; ++x) {
        long fx = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            fx = (fx * x + c[i]) % pl;
        out.affine += 1 + legendre(fx, pl);
    }
    if (model.f.degree() % 2 == 1)
        out.at_infinity = 1;
    else
        out.at_infinity = legendre(c.back(), pl) == 1 ? 2 : 0;
    out.total = out.affine + out.at_infinity;
    return out;
}

Integer stoll_bound(const Integer& count, const Integer& rank, const Integer& p) {
    if (rank < 0) throw ArithmeticError("rank must be nonnegative");
    if (p < 3) throw ArithmeticError("p must be at least 3");
    return count + 2 * rank + floor_div(2 * rank, p - 2);
}

// ---- rational point search --------------------------------------------------

namespace {

// residue bitmask filter for perfect squares mod 64
bool maybe_square_mod64(unsigned long r) {
    static const uint64_t mask = [] {
        uint64_t m = 0;
        for (unsigned long i = 0; i < 64; ++i) m |= uint64_t(1) << ((i * i) & 63);
        return m;
    }();
    return (mask >> (r & 63)) & 1;
}

bool is_square_i128(__int128 v, __int128& root) {
    if (v < 0) return false;
    if (!maybe_square_mod64(static_cast<unsigned long>(v))) return false;
    // Newton on top of a double seed
    __int128 r = static_cast<__int128>(__builtin_sqrtl(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r == v) {
        root = r;
        return true;
    }
    return false;
}

}  // namespace

std::vector<std::pair<Rational, Rational>> search_rational_points(const CurveModel& model,
                                                                  long height) {
    if (height < 1 || height > 1000000) throw LimitError("height must be in [1, 10^6]");
    if (!is_squarefree(model.f)) throw ArithmeticError("not smooth: f has repeated roots");

    auto coeffs = rational_coeffs(model.f);
    int deg = model.f.degree();
    // clear denominators: y^2 = f(x)  <=>  (L y)^2 = L^2 f(x), integer coeffs
    Integer lcm(1);
    for (const auto& q : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    Integer lcm2 = lcm * lcm;
    std::vector<Integer> ic(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Rational scaled = coeffs[i] * Rational(lcm2);
        ic[i] = scaled.get_num();
    }

    // For x = a/b:  (L y b^ceil(deg/2 rounded))^2 ... we test the integer
    //   F(a, b) = sum ic[i] a^i b^(D-i)   with D = deg rounded up to even,
    // which equals L^2 f(x) b^D, a square times the square b^D.
    int D = deg + (deg % 2);  // pad odd degree with one extra power of b
    bool pad = (D != deg);

    // decide whether the int128 fast path is safe
    Integer bound(0);
    Integer hpow(1);
    for (int i = 0; i < D; ++i) hpow *= height;
    for (const auto& k : ic) bound += abs(k) * hpow;
    bool fits128 = mpz_sizeinbase(bound.get_mpz_t(), 2) <= 120;

    std::vector<std::pair<Rational, Rational>> found;
    auto record = [&](long a, long b, const Rational& y_abs) {
        Rational x(a, b);
        x.canonicalize();
        found.emplace_back(x, y_abs);
        if (y_abs != 0) found.emplace_back(x, -y_abs);
    };

    if (fits128) {
        std::vector<__int128> ic128(ic.size());
        for (size_t i = 0; i < ic.size(); ++i) {
            if (!ic[i].fits_slong_p()) throw LimitError("coefficient too large");
            ic128[i] = ic[i].get_si();
        }
        // duplicates from non-reduced a/b collapse in the final sort+unique,
        // so the hot loop never computes a gcd
        std::vector<__int128> cb(deg + 1);
        for (long b = 1; b <= height; ++b) {
            __int128 bp = 1;
            for (int i = deg; i >= 0; --i) {
                cb[i] = ic128[i] * bp;
                bp *= b;
            }
            for (long a = -height; a <= height; ++a) {
                // Horner in a with the b-powers folded into the coefficients
                __int128 acc = cb[deg];
                for (int i = deg - 1; i >= 0; --i) acc = acc * a + cb[i];
                if (pad) acc *= b;
                __int128 root;
                if (!is_square_i128(acc, root)) continue;
                // y = root / (L * b^(D/2))
                Integer denom = lcm;
                for (int i = 0; i < D / 2; ++i) denom *= b;
                Rational yq = Rational(i128_to_mpz(root)) / Rational(denom);
                yq.canonicalize();
                record(a, b, yq);
            }
        }
    } else {
        for (long b = 1; b <= height; ++b) {
            for (long a = -height; a <= height; ++a) {
                if (std::gcd(std::abs(a), b) != 1) continue;
                Integer acc(0), apow(1);
                std::vector<Integer> bpow(deg + 1);
                bpow[deg] = 1;
                for (int i = deg - 1; i >= 0; --i) bpow[i] = bpow[i + 1] * b;
                for (int i = 0; i <= deg; ++i) {
                    acc += ic[i] * apow * bpow[i];
                    apow *= a;
                }
                if (pad) acc *= b;
                if (acc < 0 || !is_square(acc)) continue;
                Integer root = isqrt_floor(acc);
                Integer denom = lcm;
                for (int i = 0; i < D / 2; ++i) denom *= b;
                Rational yq = Rational(root) / Rational(denom);
                yq.canonicalize();
                record(a, b, yq);
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const auto& u, const auto& v) {
        if (u.first != v.first) return u.first < v.first;
        return u.second < v.second;
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

std::variant<ObviousQuadPoint, PointIsRational> obvious_quadratic_point(
    const CurveModel& model, const Rational& x0) {
    QuadElem fx = model.f.eval(QuadElem(x0));
    if (!fx.is_rational_value()) throw ArithmeticError("model must have rational coefficients");
    Rational v = fx.a();
    if (v == 0) throw OffCurveError("f(x0) = 0: Weierstrass point, not quadratic");
    if (is_square(v)) return PointIsRational{sqrt_exact(v)};

    Integer kernel = squarefree_kernel(v.get_num() * v.get_den());
    FieldDesc k = FieldDesc::make(kernel);
    // f(x0) = s^2 * D  with  s = sqrt(f(x0)/D)
    Rational s = sqrt_exact(v / Rational(kernel));
    return ObviousQuadPoint{k, in_field(QuadElem(x0), k), QuadElem(k, 0, s)};
}

UniPoly ec_quadratic_relation(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d, const Rational& x0, const Rational& y0,
                              const Rational& v) {
    if (a == 0) throw ArithmeticError("leading coefficient a must be nonzero");
    if (y0 * y0 != ((a * x0 + b) * x0 + c) * x0 + d)
        throw OffCurveError("(x0, y0) not on y^2 = ax^3 + bx^2 + cx + d");
    Rational lin = (a * x0 - v * v + b) / a;
    Rational cst = (a * x0 * x0 + v * v * x0 + b * x0 - 2 * y0 * v + c) / a;
    return UniPoly::from_rationals({cst, lin, Rational(1)});
}

// ---- resultant ---------------------------------------------------------------

Rational resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ArithmeticError("resultant of zero polynomial");
    auto fc = rational_coeffs(f);
    auto gc = rational_coeffs(g);
    int m = f.degree(), n = g.degree();
    if (m == 0) {
        Rational acc(1);
        for (int i = 0; i < n; ++i) acc *= fc[0];
        return acc;
    }
    if (n == 0) {
        Rational acc(1);
        for (int i = 0; i < m; ++i) acc *= gc[0];
        return acc;
    }

    // Sylvester matrix, ordinary fraction-free Gaussian elimination (Bareiss)
    int N = m + n;
    std::vector<std::vector<Rational>> s(N, std::vector<Rational>(N, Rational(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = fc[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = gc[n - i];

    Rational det(1);
    for (int col = 0; col < N; ++col) {
        int pivot = -1;
        for (int r = col; r < N; ++r)
            if (s[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(s[pivot], s[col]);
            det = -det;
        }
        det *= s[col][col];
        Rational inv = Rational(1) / s[col][col];
        for (int r = col + 1; r < N; ++r) {
            if (s[r][col] == 0) continue;
            Rational factor = s[r][col] * inv;
            for (int cc = col; cc < N; ++cc) s[r][cc] -= factor * s[col][cc];
        }
    }
    return det;
}

}  // namespace quadpreper
