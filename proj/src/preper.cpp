#include "quadpreper/preper.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace quadpreper {

namespace {

long mod4(const Integer& d) { Integer r = (d % 4) + 4; return r.get_si() % 4; }
long mod8(const Integer& d) { Integer r = (d % 8) + 8; return r.get_si() % 8; }

// least positive m with m^2 * q integral
Integer sqrt_denominator_clear(const Rational& q) {
    Integer m(1);
    Integer d = q.get_den();
    Integer p(2);
    while (p * p <= d) {
        if (d % p == 0) {
            int e = 0;
            while (d % p == 0) { d /= p; ++e; }
            Integer pe(1);
            for (int i = 0; i < (e + 1) / 2; ++i) pe *= p;
            m *= pe;
        }
        p += (p == 2) ? 1 : 2;
    }
    if (d > 1) m *= d;  // leftover prime to the first power
    return m;
}

long ord_or_inf(const Rational& q, const Integer& p) {
    if (q == 0) return 1 << 30;
    return ord_p(q, p);
}

// does some place of K above p have odd negative valuation at c = x + y sqrt(D)?
bool odd_negative_place(const Integer& p, const FieldDesc& k, const Rational& x,
                        const Rational& y) {
    if (k.is_rational()) {
        long v = ord_or_inf(x, p);
        return v < 0 && (v % 2 != 0);
    }
    const Integer& d = k.D();
    Rational nrm = x * x - Rational(d) * y * y;
    bool ramified = (p == 2) ? (mod4(d) != 1) : (d % p == 0);
    if (ramified) {
        long v = ord_or_inf(nrm, p);
        return v < 0 && (v % 2 != 0);
    }
    Rational u = x, w = y;
    if (p == 2) {  // integral basis {1, (1+sqrt(D))/2}
        u = x - y;
        w = 2 * y;
    }
    long k_min = std::min(ord_or_inf(u, p), ord_or_inf(w, p));
    if (k_min >= 0) return false;
    bool split = (p == 2) ? (mod8(d) == 1)
                          : (mpz_legendre(d.get_mpz_t(), p.get_mpz_t()) == 1);
    if (!split) return (k_min % 2) != 0;  // inert: single place with v = k_min
    long n = ord_or_inf(nrm, p);
    long v_other = n - k_min;
    if (k_min % 2 != 0) return true;
    return v_other < 0 && (v_other % 2 != 0);
}

std::vector<Integer> denominator_primes(const Rational& x, const Rational& y) {
    Integer lcm(1);
    mpz_lcm(lcm.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
    std::vector<Integer> primes;
    Integer p(2);
    Integer rest = lcm;
    while (p * p <= rest) {
        if (rest % p == 0) {
            primes.push_back(p);
            while (rest % p == 0) rest /= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    if (rest > 1) primes.push_back(rest);
    return primes;
}

Rational escape_radius(const Rational& abs_c_upper) {
    // (1 + sqrt(1 + 4|c|)) / 2, rounded outward
    return (1 + sqrt_upper(1 + 4 * abs_c_upper)) / 2;
}

}  // namespace

std::pair<Integer, Integer> PreperBounds::p_range(const FieldDesc& k, const Integer& q) const {
    Integer M = denominator;
    if (k.is_rational()) {
        // |p| <= M * b1
        Rational mb = Rational(M) * b1;
        Integer hi = mb.get_num() / mb.get_den();
        return {Integer(-hi), hi};
    }
    const Integer& d = k.D();
    if (d < 0) {
        // p^2 <= (M b)^2 - |D| q^2
        Rational cap = Rational(M) * b1 * Rational(M) * b1 - Rational(-d) * Rational(Integer(q * q));
        if (cap < 0) return {Integer(1), Integer(0)};
        Integer hi = isqrt_floor(cap.get_num() / cap.get_den());
        return {Integer(-hi), hi};
    }
    // real field: intersect the two embedding strips, rounding outward
    Rational sq_lo = Rational(q) * sqrt_lower(Rational(d));
    Rational sq_hi = Rational(q) * sqrt_upper(Rational(d));
    if (q < 0) std::swap(sq_lo, sq_hi);
    Rational mb1 = Rational(M) * b1, mb2 = Rational(M) * b2;
    Rational lo = std::max(Rational(-mb1 - sq_hi), Rational(-mb2 + sq_lo));
    Rational hi = std::min(Rational(mb1 - sq_lo), Rational(mb2 + sq_hi));
    if (lo > hi) return {Integer(1), Integer(0)};
    Integer plo, phi;
    mpz_cdiv_q(plo.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    mpz_fdiv_q(phi.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
    return {plo, phi};
}

PreperBounds preper_bounds(const FieldDesc& k, const QuadElem& c_in) {
    QuadElem c = in_field(c_in, k);
    PreperBounds out;

    // finite places: odd negative valuation of c empties the graph
    if (!c.is_zero()) {
        for (const Integer& p : denominator_primes(c.a(), c.b())) {
            if (odd_negative_place(p, k, c.a(), c.b())) {
                out.empty = true;
                return out;
            }
        }
    }

    // global denominator bound: least m with m^2 c integral in O_K, doubled
    // for D = 1 (mod 4) so the lattice (1/M)(Z + Z sqrt(D)) covers the
    // half-integer coordinates of Z + Z(1+sqrt(D))/2
    Integer m(1);
    if (k.is_rational()) {
        m = sqrt_denominator_clear(c.a());
        out.denominator = m;
    } else {
        Integer m1, m2;
        if (mod4(k.D()) == 1) {
            m1 = sqrt_denominator_clear(c.a() - c.b());
            m2 = sqrt_denominator_clear(2 * c.b());
        } else {
            m1 = sqrt_denominator_clear(c.a());
            m2 = sqrt_denominator_clear(c.b());
        }
        mpz_lcm(m.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
        out.denominator = (mod4(k.D()) == 1) ? Integer(2 * m) : m;
    }

    // archimedean boxes
    if (k.is_rational()) {
        out.b1 = out.b2 = escape_radius(rat_abs(c.a()));
        auto [plo, phi] = out.p_range(k, 0);
        out.q_min = out.q_max = 0;
        out.box_cardinality = phi - plo + 1;
        return out;
    }
    const Integer& d = k.D();
    const Integer& M = out.denominator;
    if (d < 0) {
        Rational abs2 = c.a() * c.a() + Rational(-d) * c.b() * c.b();
        out.b1 = out.b2 = escape_radius(sqrt_upper(abs2));
        Rational qcap = Rational(M) * out.b1 / sqrt_lower(Rational(-d));
        out.q_max = qcap.get_num() / qcap.get_den();
        out.q_min = -out.q_max;
    } else {
        Rational sl = sqrt_lower(Rational(d)), su = sqrt_upper(Rational(d));
        // |a + b sqrt(D)| <= max over the interval ends
        auto abs_up = [&](const Rational& a, const Rational& b) {
            Rational e1 = rat_abs(a + b * sl), e2 = rat_abs(a + b * su);
            return std::max(e1, e2);
        };
        out.b1 = escape_radius(abs_up(c.a(), c.b()));
        out.b2 = escape_radius(abs_up(c.a(), -c.b()));
        Rational qcap = Rational(M) * (out.b1 + out.b2) / (2 * sl);
        out.q_max = qcap.get_num() / qcap.get_den();
        out.q_min = -out.q_max;
    }
    Integer cells(0);
    for (Integer q = out.q_min; q <= out.q_max; ++q) {
        auto [plo, phi] = out.p_range(k, q);
        if (plo <= phi) cells += phi - plo + 1;
    }
    out.box_cardinality = cells;
    return out;
}

// ---- orbits ------------------------------------------------------------------

namespace {

bool in_lattice(const QuadElem& x, const Integer& M) {
    Rational pa = x.a() * Rational(M);
    if (pa.get_den() != 1) return false;
    Rational pb = x.b() * Rational(M);
    return pb.get_den() == 1;
}

bool within_arch_box(const QuadElem& x, const FieldDesc& k, const PreperBounds& b) {
    if (k.is_rational() || x.field().is_rational())
        return rat_abs(x.a()) <= b.b1;
    const Integer& d = k.D();
    if (d < 0)
        return x.a() * x.a() + Rational(-d) * x.b() * x.b() <= b.b1 * b.b1;
    // |a + b sqrt(D)| <= B1  and  |a - b sqrt(D)| <= B2, decided exactly
    QuadElem v1 = x;
    QuadElem v2 = conj(x);
    auto le = [&](const QuadElem& v, const Rational& bound) {
        QuadElem hi = QuadElem(k, bound, 0) - v;
        QuadElem lo = v + QuadElem(k, bound, 0);
        return sign_at_positive_embedding(hi) >= 0 && sign_at_positive_embedding(lo) >= 0;
    };
    return le(v1, b.b1) && le(v2, b.b2);
}

}  // namespace

OrbitRecord orbit(const QuadElem& c, const QuadElem& x, long step_cap) {
    if (step_cap < 1) throw LimitError("step_cap must be positive");
    FieldDesc k = common_field(x, c);
    QuadElem cf = in_field(c, k);
    PreperBounds bounds = preper_bounds(k, cf);

    OrbitRecord rec;
    rec.start = x;
    if (bounds.empty) {
        rec.escape = OrbitRecord::EscapeReason::LATTICE;
        rec.trajectory.push_back(x);
        return rec;
    }
    std::map<std::pair<Rational, Rational>, int> seen;
    QuadElem cur = in_field(x, k);
    for (long step = 0; step <= step_cap; ++step) {
        if (!in_lattice(cur, bounds.denominator)) {
            rec.escape = OrbitRecord::EscapeReason::LATTICE;
            rec.trajectory.push_back(cur);
            return rec;
        }
        if (!within_arch_box(cur, k, bounds)) {
            rec.escape = OrbitRecord::EscapeReason::ARCHIMEDEAN;
            rec.trajectory.push_back(cur);
            return rec;
        }
        auto [it, fresh] = seen.try_emplace({cur.a(), cur.b()}, static_cast<int>(step));
        if (!fresh) {
            int n = it->second;
            int m = static_cast<int>(step) - n;
            rec.type = PointType{m, n};
            return rec;
        }
        rec.trajectory.push_back(cur);
        cur = cur * cur + cf;
    }
    rec.escape = OrbitRecord::EscapeReason::STEP_CAP;
    return rec;
}

std::vector<QuadElem> preimages(const QuadElem& c, const QuadElem& beta) {
    FieldDesc k = common_field(beta, c);
    QuadElem diff = in_field(beta, k) - in_field(c, k);
    auto root = sqrt_in_field(diff);
    if (!root) return {};
    if (root->is_zero()) return {in_field(*root, k)};
    std::vector<QuadElem> out{in_field(*root, k), in_field(-*root, k)};
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// ---- full preperiodic sets -----------------------------------------------------

namespace {

using Key = std::pair<Rational, Rational>;

PointSet finalize_set(const QuadElem& c, const std::vector<QuadElem>& members) {
    // derive types structurally from the successor map on the finite set
    std::vector<QuadElem> verts = members;
    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::map<Key, int> index;
    for (size_t i = 0; i < verts.size(); ++i) index[{verts[i].a(), verts[i].b()}] = int(i);
    PreperGraph g;
    for (const auto& v : verts) g.add_vertex(v.str());
    for (size_t i = 0; i < verts.size(); ++i) {
        QuadElem img = verts[i] * verts[i] + c;
        auto it = index.find({img.a(), img.b()});
        if (it == index.end())
            throw ConsistencyError("preperiodic set not closed under the map");
        g.set_successor(int(i), it->second);
    }
    PointSet out;
    out.reserve(verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
        out.emplace_back(verts[i], g.vertex_type(int(i)));
    return out;
}

}  // namespace

PointSet preperiodic_points(const FieldDesc& k, const QuadElem& c) {
    return preperiodic_points(k, c, PreperOptions{});
}

PointSet preperiodic_points(const FieldDesc& k, const QuadElem& c_in, const PreperOptions& opt) {
    QuadElem c = in_field(c_in, k);
    PreperBounds bounds = preper_bounds(k, c);
    if (bounds.empty) return {};
    if (bounds.box_cardinality > opt.box_limit)
        throw LimitError("search box of " + bounds.box_cardinality.get_str() +
                         " candidates exceeds the configured limit");

    const Integer& M = bounds.denominator;
    long cap = bounds.box_cardinality.get_si() + 1;

    // verdict memo: value -> is-preperiodic
    std::map<Key, bool> verdict;
    std::vector<QuadElem> members;

    auto consider = [&](QuadElem alpha) {
        std::vector<QuadElem> path;
        std::map<Key, int> path_index;
        QuadElem cur = alpha;
        std::optional<bool> result;
        for (long step = 0; step <= cap; ++step) {
            Key key{cur.a(), cur.b()};
            auto memo = verdict.find(key);
            if (memo != verdict.end()) {
                result = memo->second;
                break;
            }
            auto it = path_index.find(key);
            if (it != path_index.end()) {
                result = true;  // revisit inside the fresh path: a cycle
                break;
            }
            if (!in_lattice(cur, M) || !within_arch_box(cur, k, bounds)) {
                result = false;
                break;
            }
            path_index[key] = static_cast<int>(step);
            path.push_back(cur);
            cur = cur * cur + c;
        }
        if (!result.has_value())
            throw ConsistencyError("orbit exhausted the pigeonhole cap");
        bool good = *result;
        for (const auto& v : path) {
            verdict[{v.a(), v.b()}] = good;
            if (good) members.push_back(v);
        }
    };

    for (Integer q = bounds.q_min; q <= bounds.q_max; ++q) {
        auto [plo, phi] = bounds.p_range(k, q);
        for (Integer p = plo; p <= phi; ++p) {
            QuadElem alpha = k.is_rational()
                                 ? QuadElem(Rational(p) / Rational(M))
                                 : QuadElem(k, Rational(p) / Rational(M), Rational(q) / Rational(M));
            consider(alpha);
        }
    }
    return finalize_set(c, members);
}

PointSet preper_via_closure(const FieldDesc& k, const QuadElem& c_in) {
    QuadElem c = in_field(c_in, k);
    PreperBounds bounds = preper_bounds(k, c);
    if (bounds.empty) return {};
    if (bounds.box_cardinality > kDefaultBoxLimit)
        throw LimitError("search box exceeds the configured limit");

    const Integer& M = bounds.denominator;
    long cap = bounds.box_cardinality.get_si() + 1;

    // periodic points straight from enumeration
    std::vector<QuadElem> stack;
    std::map<Key, bool> present;
    for (Integer q = bounds.q_min; q <= bounds.q_max; ++q) {
        auto [plo, phi] = bounds.p_range(k, q);
        for (Integer p = plo; p <= phi; ++p) {
            QuadElem alpha = k.is_rational()
                                 ? QuadElem(Rational(p) / Rational(M))
                                 : QuadElem(k, Rational(p) / Rational(M), Rational(q) / Rational(M));
            OrbitRecord rec = orbit(c, alpha, cap);
            if (rec.type && rec.type->periodic()) {
                if (!present.count({alpha.a(), alpha.b()})) {
                    present[{alpha.a(), alpha.b()}] = true;
                    stack.push_back(alpha);
                }
            }
        }
    }
    // backward closure under preimages
    std::vector<QuadElem> members = stack;
    while (!stack.empty()) {
        QuadElem beta = stack.back();
        stack.pop_back();
        for (const auto& gamma : preimages(c, beta)) {
            Key key{gamma.a(), gamma.b()};
            if (!present.count(key)) {
                present[key] = true;
                members.push_back(gamma);
                stack.push_back(gamma);
            }
        }
    }
    return finalize_set(c, members);
}

PreperGraph build_graph(const PointSet& points, const QuadElem& c) {
    std::map<Key, int> index;
    for (size_t i = 0; i < points.size(); ++i)
        index[{points[i].first.a(), points[i].first.b()}] = static_cast<int>(i);
    PreperGraph g;
    for (const auto& [v, t] : points) g.add_vertex(v.str());
    for (size_t i = 0; i < points.size(); ++i) {
        QuadElem img = points[i].first * points[i].first + c;
        auto it = index.find({img.a(), img.b()});
        if (it == index.end())
            throw ConsistencyError("point set not closed under the map");
        g.set_successor(static_cast<int>(i), it->second);
    }
    return g;
}

}  // namespace quadpreper
