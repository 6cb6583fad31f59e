#include "quadpreper/families.hpp"

#include <algorithm>
#include <map>

namespace quadpreper {

namespace {

using QE = QuadElem;

QE q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return QE(r);
}

QE fc(const QE& c, const QE& x) { return x * x + c; }

QE iter(const QE& c, QE x, int n) {
    for (int i = 0; i < n; ++i) x = fc(c, x);
    return x;
}

void require_cusp(const QE& value, const std::string& factor) {
    if (value.is_zero()) throw CuspError(factor);
}

void require_on_curve(bool ok, const std::string& equation) {
    if (!ok) throw OffCurveError("parameters violate " + equation);
}

void require_params(const std::vector<QE>& params, size_t n, const char* family) {
    if (params.size() != n)
        throw ParseError(std::string(family) + " expects " + std::to_string(n) +
                         " parameter(s), got " + std::to_string(params.size()));
}

// the degree-6 numerator of the period-3 parameter map
QE per3_numer(const QE& t) {
    QE t2 = t * t, t3 = t2 * t;
    return t3 * t3 + q(2) * t3 * t2 + q(4) * t2 * t2 + q(8) * t3 + q(9) * t2 + q(4) * t + q(1);
}

QE per3_c(const QE& t) {
    QE tt1 = t * (t + q(1));
    return QE(q(0)) - per3_numer(t) / (q(4) * tt1 * tt1);
}

QE per3_alpha(const QE& t) {
    QE t2 = t * t, t3 = t2 * t;
    return (t3 + q(2) * t2 + t + q(1)) / (q(2) * t * (t + q(1)));
}

QE per4_c(const QE& u) {
    QE u2 = u * u;
    QE num = (u2 - q(4) * u - q(1)) * (u2 * u2 + u2 * u + q(2) * u2 - u + q(1));
    QE den = q(4) * u * (u + q(1)) * (u + q(1)) * (u - q(1)) * (u - q(1));
    return num / den;
}

QE per4_alpha(const QE& u, const QE& v) {
    return (u - q(1)) / (q(2) * (u + q(1))) + v / (q(2) * u * (u - q(1)));
}

// v^2 for the period-4 curve
QE per4_v2(const QE& u) { return QE(q(0)) - u * (u * u + q(1)) * (u * u - q(2) * u - q(1)); }

QE per13_y2(const QE& t) {
    QE t2 = t * t, t3 = t2 * t;
    return t3 * t3 + q(2) * t3 * t2 + q(5) * t2 * t2 + q(10) * t3 + q(10) * t2 + q(4) * t + q(1);
}

QE per23_z2(const QE& t) {
    QE t2 = t * t, t3 = t2 * t;
    return t3 * t3 + q(2) * t3 * t2 + t2 * t2 + q(2) * t3 + q(6) * t2 + q(4) * t + q(1);
}

QE per12_c(const QE& x) {
    QE den = (x - q(1)) * (x + q(1));
    return QE(q(0)) - (x * x + q(3)) * (q(3) * x * x + q(1)) / (q(4) * den * den);
}

MarkedConfig finish(QE c, std::vector<std::pair<QE, PointType>> pts) {
    MarkedConfig cfg{std::move(c), std::move(pts)};
    for (const auto& [x, t] : cfg.points)
        if (!verify_point_type(cfg.c, x, t))
            throw ConsistencyError("marked point " + x.str() + " failed its type check " +
                                   t.str());
    return cfg;
}

}  // namespace

bool verify_point_type(const QE& c, const QE& x, const PointType& want) {
    // first revisit within preperiod+period steps decides the exact type
    int cap = want.preperiod + want.period + 2;
    std::vector<QE> seen{x};
    QE cur = x;
    for (int step = 1; step <= cap; ++step) {
        cur = fc(c, cur);
        for (int i = 0; i < static_cast<int>(seen.size()); ++i) {
            if (seen[i] == cur) {
                int n = i;
                int m = step - i;
                return n == want.preperiod && m == want.period;
            }
        }
        seen.push_back(cur);
    }
    return false;
}

const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table = {
        {FamilyId::PER1, "PER1", 1, "r", "1_0, 1_0", {}, "r != 0", std::nullopt},
        {FamilyId::PER2, "PER2", 1, "s", "2_0, 2_0", {}, "s != 0", std::nullopt},
        {FamilyId::PER3, "PER3", 1, "t", "3_0 x3", {}, "t(t+1)(t^2+t+1) != 0", std::nullopt},
        {FamilyId::PER4, "PER4", 2, "u,v", "4_0 x4",
         {"v^2 = -u(u^2+1)(u^2-2u-1)"}, "v(u-1)(u+1) != 0", 2},
        {FamilyId::PER12, "PER12", 1, "q", "1_0, 2_0", {}, "q(q-1)(q+1) != 0", std::nullopt},
        {FamilyId::PER13, "PER13", 2, "t,y", "1_0, 3_0",
         {"y^2 = t^6+2t^5+5t^4+10t^3+10t^2+4t+1"}, "t(t+1)(t^2+t+1) != 0", 2},
        {FamilyId::PER23, "PER23", 2, "t,z", "2_0, 3_0",
         {"z^2 = t^6+2t^5+t^4+2t^3+6t^2+4t+1"}, "t(t+1)(t^2+t+1)z != 0", 2},
        {FamilyId::PER33, "PER33", 2, "t,u", "3_0, 3_0 (disjoint)",
         {"t(t+1)u^3 + (t^3+2t^2-t-1)u^2 + (t^3-t^2-4t-1)u - t(t+1) = 0"},
         "t(t+1)(t^2+t+1)(u^2+u+1)(u^3+u^2-2u-1) != 0", 4},
        {FamilyId::PER14, "PER14", 3, "u,v,w", "1_0, 4_0",
         {"v^2 = -u(u^2+1)(u^2-2u-1)", "w^2 = -u(u^6-4u^5-3u^4-8u^3+3u^2-4u-1)"},
         "(u-1)(u+1)v != 0", 9},
        {FamilyId::PER34, "PER34", 3, "t,u,v", "3_0, 4_0",
         {"-(t^6+2t^5+4t^4+8t^3+9t^2+4t+1)u(u+1)^2(u-1)^2 = "
          "(u^2-4u-1)(u^4+u^3+2u^2-u+1)t^2(t+1)^2",
          "v^2 = -u(u^2+1)(u^2-2u-1)"},
         "t(t+1)(t^2+t+1)(u-1)(u+1)v != 0", 49},
        {FamilyId::PER123, "PER123", 3, "t,y,z", "1_0, 2_0, 3_0",
         {"y^2 = t^6+2t^5+5t^4+10t^3+10t^2+4t+1", "z^2 = t^6+2t^5+t^4+2t^3+6t^2+4t+1"},
         "t(t+1)(t^2+t+1)z != 0", 9},
        {FamilyId::G1, "G1", 3, "x,y,z", "1_3, 1_2",
         {"y^2 = -(x^2-3)(x^2+1)", "z^2 = -2(x^3-x^2-x-1)"},
         "(x-1)(x+1)(x^2+1)(x^2+3) != 0", 5},
        {FamilyId::G4P, "G4P", 3, "x,y,z", "1_0, 2_3",
         {"y^2 = 2(x^3+x^2-x+1)", "z^2 = 5x^4+8x^3+6x^2-8x+5"},
         "x(x-1)(x+1)(x^2+4x-1) != 0", 5},
        {FamilyId::G5, "G5", 3, "x,y,z", "1_2, 1_2, 2_0",
         {"y^2 = (5x^2-1)(x^2+3)", "z^2 = -(3x^2+1)(x^2-5)"},
         "x(x-1)(x+1)(x^2+1)(x^2+3)(3x^2+1) != 0", 5},
        {FamilyId::G6P, "G6P", 3, "q,y,z", "1_2, 2_2",
         {"y^2 = (5q^2-1)(q^2+3)", "z^2 = 5q^4-8q^3+6q^2+8q+5"},
         "q(q-1)(q+1)(q^2+3)(q^2-4q-1) != 0", 5},
        {FamilyId::G8P, "G8P", 3, "t,y,z", "1_2, 3_0",
         {"y^2 = t^6+2t^5+5t^4+10t^3+10t^2+4t+1",
          "z^2 = t^6+2t^5+2t^4+4t^3+7t^2+4t+1 - 2t(t+1)y"},
         "t(t+1)(t^2+t+1)(y+t^2+t) != 0", 9},
        {FamilyId::G10, "G10", 3, "t,y,z", "2_2, 3_0",
         {"y^2 = t^6+2t^5+t^4+2t^3+6t^2+4t+1",
          "z^2 = t^6+2t^5+6t^4+12t^3+11t^2+4t+1 - 2t(t+1)y"},
         "t(t+1)(t^2+t+1)y(y-t^2-t) != 0", 9},
    };
    return table;
}

const FamilyInfo& family_info(FamilyId id) {
    for (const auto& f : family_table())
        if (f.id == id) return f;
    throw ConsistencyError("unknown family id");
}

FamilyId family_from_name(const std::string& name) {
    for (const auto& f : family_table())
        if (f.name == name) return f.id;
    throw ParseError("unknown family: " + name + " (try `family list`)");
}

MarkedConfig family_forward(FamilyId id, const std::vector<QE>& params) {
    switch (id) {
        case FamilyId::PER1: {
            require_params(params, 1, "PER1");
            const QE& r = params[0];
            require_cusp(r, "r");
            QE c = q(1, 4) - r * r;
            return finish(c, {{q(1, 2) + r, {1, 0}}, {q(1, 2) - r, {1, 0}}});
        }
        case FamilyId::PER2: {
            require_params(params, 1, "PER2");
            const QE& s = params[0];
            require_cusp(s, "s");
            QE c = q(-3, 4) - s * s;
            return finish(c, {{q(-1, 2) + s, {2, 0}}, {q(-1, 2) - s, {2, 0}}});
        }
        case FamilyId::PER3: {
            require_params(params, 1, "PER3");
            const QE& t = params[0];
            require_cusp(t, "t");
            require_cusp(t + q(1), "t+1");
            require_cusp(t * t + t + q(1), "t^2+t+1");
            QE c = per3_c(t);
            QE den = q(2) * t * (t + q(1));
            QE t2 = t * t, t3 = t2 * t;
            QE a0 = (t3 + q(2) * t2 + t + q(1)) / den;
            QE a1 = (t3 - t - q(1)) / den;
            QE a2 = QE(q(0)) - (t3 + q(2) * t2 + q(3) * t + q(1)) / den;
            return finish(c, {{a0, {3, 0}}, {a1, {3, 0}}, {a2, {3, 0}}});
        }
        case FamilyId::PER4: {
            require_params(params, 2, "PER4");
            const QE& u = params[0];
            const QE& v = params[1];
            require_on_curve(v * v == per4_v2(u), "v^2 = -u(u^2+1)(u^2-2u-1)");
            require_cusp(v, "v");
            require_cusp(u - q(1), "u-1");
            require_cusp(u + q(1), "u+1");
            QE c = per4_c(u);
            QE a0 = per4_alpha(u, v);
            QE b0 = QE(q(0)) - (u + q(1)) / (q(2) * (u - q(1))) + v / (q(2) * u * (u + q(1)));
            QE a1 = per4_alpha(u, QE(q(0)) - v);
            QE b1 = QE(q(0)) - (u + q(1)) / (q(2) * (u - q(1))) - v / (q(2) * u * (u + q(1)));
            return finish(c, {{a0, {4, 0}}, {b0, {4, 0}}, {a1, {4, 0}}, {b1, {4, 0}}});
        }
        case FamilyId::PER12: {
            require_params(params, 1, "PER12");
            const QE& x = params[0];
            require_cusp(x, "q");
            require_cusp(x - q(1), "q-1");
            require_cusp(x + q(1), "q+1");
            QE den = (x - q(1)) * (x + q(1));
            QE r = QE(q(0)) - (x * x + q(1)) / den;
            QE s = q(2) * x / den;
            QE c = per12_c(x);
            return finish(c, {{q(1, 2) + r, {1, 0}}, {q(-1, 2) + s, {2, 0}}});
        }
        case FamilyId::PER13: {
            require_params(params, 2, "PER13");
            const QE& t = params[0];
            const QE& y = params[1];
            require_on_curve(y * y == per13_y2(t), "y^2 = t^6+2t^5+5t^4+10t^3+10t^2+4t+1");
            require_cusp(t, "t");
            require_cusp(t + q(1), "t+1");
            require_cusp(t * t + t + q(1), "t^2+t+1");
            QE c = per3_c(t);
            QE alpha = (t * t + t + y) / (q(2) * t * (t + q(1)));
            return finish(c, {{alpha, {1, 0}}, {per3_alpha(t), {3, 0}}});
        }
        case FamilyId::PER23: {
            require_params(params, 2, "PER23");
            const QE& t = params[0];
            const QE& z = params[1];
            require_on_curve(z * z == per23_z2(t), "z^2 = t^6+2t^5+t^4+2t^3+6t^2+4t+1");
            require_cusp(t, "t");
            require_cusp(t + q(1), "t+1");
            require_cusp(t * t + t + q(1), "t^2+t+1");
            require_cusp(z, "z");
            QE c = per3_c(t);
            QE alpha = QE(q(0)) - (t * t + t - z) / (q(2) * t * (t + q(1)));
            return finish(c, {{alpha, {2, 0}}, {per3_alpha(t), {3, 0}}});
        }
        case FamilyId::PER33: {
            require_params(params, 2, "PER33");
            const QE& t = params[0];
            const QE& u = params[1];
            QE h = t * (t + q(1)) * u * u * u +
                   (t * t * t + q(2) * t * t - t - q(1)) * u * u +
                   (t * t * t - t * t - q(4) * t - q(1)) * u - t * (t + q(1));
            require_on_curve(h.is_zero(), "h(t,u) = 0");
            require_cusp(t, "t");
            require_cusp(t + q(1), "t+1");
            require_cusp(t * t + t + q(1), "t^2+t+1");
            require_cusp(u * u + u + q(1), "u^2+u+1");
            require_cusp(u * u * u + u * u - q(2) * u - q(1), "u^3+u^2-2u-1");
            QE c = per3_c(t);
            return finish(c, {{per3_alpha(t), {3, 0}}, {per3_alpha(u), {3, 0}}});
        }
        case FamilyId::PER14: {
            require_params(params, 3, "PER14");
            const QE& u = params[0];
            const QE& v = params[1];
            const QE& w = params[2];
            require_on_curve(v * v == per4_v2(u), "v^2 = -u(u^2+1)(u^2-2u-1)");
            QE u2 = u * u, u3 = u2 * u;
            QE sext = u3 * u3 - q(4) * u3 * u2 - q(3) * u2 * u2 - q(8) * u3 + q(3) * u2 -
                      q(4) * u - q(1);
            require_on_curve(w * w == QE(q(0)) - u * sext,
                             "w^2 = -u(u^6-4u^5-3u^4-8u^3+3u^2-4u-1)");
            require_cusp(u - q(1), "u-1");
            require_cusp(u + q(1), "u+1");
            require_cusp(v, "v");
            QE c = per4_c(u);
            QE alpha = q(1, 2) + w / (q(2) * u * (u - q(1)) * (u + q(1)));
            return finish(c, {{alpha, {1, 0}}, {per4_alpha(u, v), {4, 0}}});
        }
        case FamilyId::PER34: {
            require_params(params, 3, "PER34");
            const QE& t = params[0];
            const QE& u = params[1];
            const QE& v = params[2];
            QE lhs = QE(q(0)) - per3_numer(t) * u * (u + q(1)) * (u + q(1)) * (u - q(1)) * (u - q(1));
            QE u2 = u * u;
            QE rhs = (u2 - q(4) * u - q(1)) * (u2 * u2 + u2 * u + q(2) * u2 - u + q(1)) * t * t *
                     (t + q(1)) * (t + q(1));
            require_on_curve(lhs == rhs, "the period-(3,4) compatibility equation");
            require_on_curve(v * v == per4_v2(u), "v^2 = -u(u^2+1)(u^2-2u-1)");
            require_cusp(t, "t");
            require_cusp(t + q(1), "t+1");
            require_cusp(t * t + t + q(1), "t^2+t+1");
            require_cusp(u - q(1), "u-1");
            require_cusp(u + q(1), "u+1");
            require_cusp(v, "v");
            QE c = per3_c(t);
            return finish(c, {{per3_alpha(t), {3, 0}}, {per4_alpha(u, v), {4, 0}}});
        }
        case FamilyId::PER123: {
            require_params(params, 3, "PER123");
            const QE& t = params[0];
            const QE& y = params[1];
            const QE& z = params[2];
            require_on_curve(y * y == per13_y2(t), "y^2 = t^6+2t^5+5t^4+10t^3+10t^2+4t+1");
            require_on_curve(z * z == per23_z2(t), "z^2 = t^6+2t^5+t^4+2t^3+6t^2+4t+1");
            require_cusp(t, "t");
            require_cusp(t + q(1), "t+1");
            require_cusp(t * t + t + q(1), "t^2+t+1");
            require_cusp(z, "z");
            QE c = per3_c(t);
            QE den = q(2) * t * (t + q(1));
            QE a1 = (t * t + t + y) / den;
            QE a2 = QE(q(0)) - (t * t + t - z) / den;
            return finish(c, {{a1, {1, 0}}, {a2, {2, 0}}, {per3_alpha(t), {3, 0}}});
        }
        case FamilyId::G1: {
            require_params(params, 3, "G1");
            const QE& x = params[0];
            const QE& y = params[1];
            const QE& z = params[2];
            QE x2 = x * x;
            require_on_curve(y * y == QE(q(0)) - (x2 - q(3)) * (x2 + q(1)),
                             "y^2 = -(x^2-3)(x^2+1)");
            require_on_curve(z * z == q(-2) * (x2 * x - x2 - x - q(1)),
                             "z^2 = -2(x^3-x^2-x-1)");
            require_cusp(x - q(1), "x-1");
            require_cusp(x + q(1), "x+1");
            require_cusp(x2 + q(1), "x^2+1");
            require_cusp(x2 + q(3), "x^2+3");
            QE den = (x - q(1)) * (x + q(1));
            QE c = q(-2) * (x2 + q(1)) / (den * den);
            return finish(c, {{z / den, {1, 3}}, {y / den, {1, 2}}});
        }
        case FamilyId::G4P: {
            require_params(params, 3, "G4P");
            const QE& x = params[0];
            const QE& y = params[1];
            const QE& z = params[2];
            QE x2 = x * x, x3 = x * x * x;
            require_on_curve(y * y == q(2) * (x3 + x2 - x + q(1)), "y^2 = 2(x^3+x^2-x+1)");
            require_on_curve(z * z == q(5) * x2 * x2 + q(8) * x3 + q(6) * x2 - q(8) * x + q(5),
                             "z^2 = 5x^4+8x^3+6x^2-8x+5");
            require_cusp(x, "x");
            require_cusp(x - q(1), "x-1");
            require_cusp(x + q(1), "x+1");
            require_cusp(x2 + q(4) * x - q(1), "x^2+4x-1");
            QE den = (x - q(1)) * (x + q(1));
            QE c = QE(q(0)) - (x2 * x2 + q(2) * x3 + q(2) * x2 - q(2) * x + q(1)) / (den * den);
            QE alpha = (x2 - q(1) + z) / (q(2) * den);
            QE beta = y / den;
            return finish(c, {{alpha, {1, 0}}, {beta, {2, 3}}});
        }
        case FamilyId::G5: {
            require_params(params, 3, "G5");
            const QE& x = params[0];
            const QE& y = params[1];
            const QE& z = params[2];
            QE x2 = x * x;
            require_on_curve(y * y == (q(5) * x2 - q(1)) * (x2 + q(3)),
                             "y^2 = (5x^2-1)(x^2+3)");
            require_on_curve(z * z == QE(q(0)) - (q(3) * x2 + q(1)) * (x2 - q(5)),
                             "z^2 = -(3x^2+1)(x^2-5)");
            require_cusp(x, "x");
            require_cusp(x - q(1), "x-1");
            require_cusp(x + q(1), "x+1");
            require_cusp(x2 + q(1), "x^2+1");
            require_cusp(x2 + q(3), "x^2+3");
            require_cusp(q(3) * x2 + q(1), "3x^2+1");
            QE den = (x - q(1)) * (x + q(1));
            QE c = QE(q(0)) - (x2 + q(3)) * (q(3) * x2 + q(1)) / (q(4) * den * den);
            QE a1 = y / (q(2) * den);
            QE a2 = z / (q(2) * den);
            QE beta = QE(q(0)) - (x2 - q(4) * x - q(1)) / (q(2) * den);
            return finish(c, {{a1, {1, 2}}, {a2, {1, 2}}, {beta, {2, 0}}});
        }
        case FamilyId::G6P: {
            require_params(params, 3, "G6P");
            const QE& x = params[0];
            const QE& y = params[1];
            const QE& z = params[2];
            QE x2 = x * x, x3 = x * x * x;
            require_on_curve(y * y == (q(5) * x2 - q(1)) * (x2 + q(3)),
                             "y^2 = (5q^2-1)(q^2+3)");
            require_on_curve(z * z == q(5) * x2 * x2 - q(8) * x3 + q(6) * x2 + q(8) * x + q(5),
                             "z^2 = 5q^4-8q^3+6q^2+8q+5");
            require_cusp(x, "q");
            require_cusp(x - q(1), "q-1");
            require_cusp(x + q(1), "q+1");
            require_cusp(x2 + q(3), "q^2+3");
            require_cusp(x2 - q(4) * x - q(1), "q^2-4q-1");
            QE den = (x - q(1)) * (x + q(1));
            QE c = QE(q(0)) - (x2 + q(3)) * (q(3) * x2 + q(1)) / (q(4) * den * den);
            return finish(c, {{y / (q(2) * den), {1, 2}}, {z / (q(2) * den), {2, 2}}});
        }
        case FamilyId::G8P: {
            require_params(params, 3, "G8P");
            const QE& t = params[0];
            const QE& y = params[1];
            const QE& z = params[2];
            require_on_curve(y * y == per13_y2(t), "y^2 = t^6+2t^5+5t^4+10t^3+10t^2+4t+1");
            QE t2 = t * t, t3 = t2 * t;
            QE rhs = t3 * t3 + q(2) * t3 * t2 + q(2) * t2 * t2 + q(4) * t3 + q(7) * t2 +
                     q(4) * t + q(1) - q(2) * t * (t + q(1)) * y;
            require_on_curve(z * z == rhs, "z^2 = t^6+2t^5+2t^4+4t^3+7t^2+4t+1 - 2t(t+1)y");
            require_cusp(t, "t");
            require_cusp(t + q(1), "t+1");
            require_cusp(t2 + t + q(1), "t^2+t+1");
            require_cusp(y + t2 + t, "y+t^2+t");
            QE c = per3_c(t);
            QE alpha = z / (q(2) * t * (t + q(1)));
            return finish(c, {{alpha, {1, 2}}, {per3_alpha(t), {3, 0}}});
        }
        case FamilyId::G10: {
            require_params(params, 3, "G10");
            const QE& t = params[0];
            const QE& y = params[1];
            const QE& z = params[2];
            require_on_curve(y * y == per23_z2(t), "y^2 = t^6+2t^5+t^4+2t^3+6t^2+4t+1");
            QE t2 = t * t, t3 = t2 * t;
            QE rhs = t3 * t3 + q(2) * t3 * t2 + q(6) * t2 * t2 + q(12) * t3 + q(11) * t2 +
                     q(4) * t + q(1) - q(2) * t * (t + q(1)) * y;
            require_on_curve(z * z == rhs, "z^2 = t^6+2t^5+6t^4+12t^3+11t^2+4t+1 - 2t(t+1)y");
            require_cusp(t, "t");
            require_cusp(t + q(1), "t+1");
            require_cusp(t2 + t + q(1), "t^2+t+1");
            require_cusp(y, "y");
            require_cusp(y - t2 - t, "y-t^2-t");
            QE c = per3_c(t);
            QE alpha = z / (q(2) * t * (t + q(1)));
            return finish(c, {{alpha, {2, 2}}, {per3_alpha(t), {3, 0}}});
        }
    }
    throw ConsistencyError("unhandled family id");
}

namespace {

const QE& point_of_type(const MarkedConfig& cfg, PointType t, int skip = 0) {
    for (const auto& [x, ty] : cfg.points) {
        if (ty == t) {
            if (skip == 0) return x;
            --skip;
        }
    }
    throw ParseError("configuration lacks a point of type " + t.str());
}

QE safe_div(const QE& a, const QE& b, const std::string& what) {
    if (b.is_zero()) throw CuspError(what);
    return a / b;
}

}  // namespace

std::vector<QuadElem> family_inverse(FamilyId id, const MarkedConfig& cfg) {
    const QE& c = cfg.c;
    switch (id) {
        case FamilyId::PER1:
            return {point_of_type(cfg, {1, 0}) - q(1, 2)};
        case FamilyId::PER2:
            return {point_of_type(cfg, {2, 0}) + q(1, 2)};
        case FamilyId::PER3: {
            const QE& a = point_of_type(cfg, {3, 0});
            return {a + fc(c, a)};
        }
        case FamilyId::PER4: {
            const QE& a = point_of_type(cfg, {4, 0});
            QE s = fc(c, fc(c, a)) + a;
            QE u = safe_div(QE(q(0)) - (s + q(1)), s - q(1), "f^2(a)+a-1");
            QE v = safe_div(u * (u - q(1)) * (q(2) * a * u + q(2) * a - u + q(1)), u + q(1),
                            "u+1");
            return {u, v};
        }
        case FamilyId::PER12: {
            QE r = point_of_type(cfg, {1, 0}) - q(1, 2);
            QE s = point_of_type(cfg, {2, 0}) + q(1, 2);
            return {safe_div(q(1) - r, s, "s")};
        }
        case FamilyId::PER13: {
            const QE& b = point_of_type(cfg, {3, 0});
            QE t = b + fc(c, b);
            QE y = (q(2) * point_of_type(cfg, {1, 0}) - q(1)) * t * (t + q(1));
            return {t, y};
        }
        case FamilyId::PER23: {
            const QE& b = point_of_type(cfg, {3, 0});
            QE t = b + fc(c, b);
            QE z = (q(2) * point_of_type(cfg, {2, 0}) + q(1)) * t * (t + q(1));
            return {t, z};
        }
        case FamilyId::PER33: {
            const QE& a = point_of_type(cfg, {3, 0}, 0);
            const QE& b = point_of_type(cfg, {3, 0}, 1);
            return {a + fc(c, a), b + fc(c, b)};
        }
        case FamilyId::PER14: {
            const QE& b = point_of_type(cfg, {4, 0});
            QE s = b + fc(c, fc(c, b));
            QE u = safe_div(QE(q(0)) - (s + q(1)), s - q(1), "b+f^2(b)-1");
            QE v = safe_div(u * (u - q(1)) * (q(2) * b * u + q(2) * b - u + q(1)), u + q(1),
                            "u+1");
            QE w = u * (u - q(1)) * (u + q(1)) * (q(2) * point_of_type(cfg, {1, 0}) - q(1));
            return {u, v, w};
        }
        case FamilyId::PER34: {
            const QE& a = point_of_type(cfg, {3, 0});
            const QE& b = point_of_type(cfg, {4, 0});
            QE t = a + fc(c, a);
            QE s = fc(c, fc(c, b)) + b;
            QE u = safe_div(QE(q(0)) - (s + q(1)), s - q(1), "f^2(b)+b-1");
            QE v = safe_div(u * (u - q(1)) * (q(2) * b * u + q(2) * b - u + q(1)), u + q(1),
                            "u+1");
            return {t, u, v};
        }
        case FamilyId::PER123: {
            const QE& a3 = point_of_type(cfg, {3, 0});
            QE t = a3 + fc(c, a3);
            QE y = (q(2) * point_of_type(cfg, {1, 0}) - q(1)) * t * (t + q(1));
            QE z = (q(2) * point_of_type(cfg, {2, 0}) + q(1)) * t * (t + q(1));
            return {t, y, z};
        }
        case FamilyId::G1: {
            const QE& a = point_of_type(cfg, {1, 3});
            const QE& b = point_of_type(cfg, {1, 2});
            QE x = safe_div(QE(q(0)) - fc(c, a), fc(c, fc(c, a)), "f^2(a)");
            QE den = (x - q(1)) * (x + q(1));
            return {x, b * den, a * den};
        }
        case FamilyId::G4P: {
            const QE& a = point_of_type(cfg, {1, 0});
            const QE& b = point_of_type(cfg, {2, 3});
            QE x = safe_div(fc(c, b) - q(1), fc(c, fc(c, b)), "f^2(b)");
            QE den = (x - q(1)) * (x + q(1));
            return {x, b * den, (q(2) * a - q(1)) * den};
        }
        case FamilyId::G5: {
            const QE& a1 = point_of_type(cfg, {1, 2}, 0);
            const QE& a2 = point_of_type(cfg, {1, 2}, 1);
            const QE& b = point_of_type(cfg, {2, 0});
            QE x = safe_div(q(2) * fc(c, a1) + q(3), q(2) * b + q(1), "2b+1");
            QE den = (x - q(1)) * (x + q(1));
            return {x, q(2) * a1 * den, q(2) * a2 * den};
        }
        case FamilyId::G6P: {
            const QE& a = point_of_type(cfg, {1, 2});
            const QE& b = point_of_type(cfg, {2, 2});
            QE x = safe_div(QE(q(0)) - (q(3) + q(2) * fc(c, a)),
                            q(1) + q(2) * fc(c, fc(c, b)), "1+2f^2(b)");
            QE den = (x - q(1)) * (x + q(1));
            return {x, q(2) * a * den, q(2) * b * den};
        }
        case FamilyId::G8P: {
            const QE& a = point_of_type(cfg, {1, 2});
            const QE& b = point_of_type(cfg, {3, 0});
            QE t = b + fc(c, b);
            QE y = QE(q(0)) - t * (t + q(1)) * (q(2) * fc(c, a) + q(1));
            QE z = q(2) * t * (t + q(1)) * a;
            return {t, y, z};
        }
        case FamilyId::G10: {
            const QE& a = point_of_type(cfg, {2, 2});
            const QE& b = point_of_type(cfg, {3, 0});
            QE t = b + fc(c, b);
            QE y = QE(q(0)) - t * (t + q(1)) * (q(2) * fc(c, a) - q(1));
            QE z = q(2) * t * (t + q(1)) * a;
            return {t, y, z};
        }
    }
    throw ConsistencyError("unhandled family id");
}

std::vector<QuadElem> curve_automorphism(CurveAutomorphism name,
                                         const std::vector<QE>& pt) {
    auto need = [&](size_t n) {
        if (pt.size() != n)
            throw ParseError("automorphism expects " + std::to_string(n) + " coordinates");
    };
    switch (name) {
        case CurveAutomorphism::SIGMA3_T: {
            need(1);
            const QE& t = pt[0];
            if (t.is_zero()) throw ArithmeticError("pole of the map at t = 0");
            return {QE(q(0)) - (t + q(1)) / t};
        }
        case CurveAutomorphism::SIGMA4_UV: {
            need(2);
            const QE& u = pt[0];
            const QE& v = pt[1];
            if (u.is_zero()) throw ArithmeticError("pole of the map at u = 0");
            return {QE(q(0)) - q(1) / u, v / (u * u * u)};
        }
        case CurveAutomorphism::SIGMA33: {
            need(2);
            const QE& t = pt[0];
            const QE& u = pt[1];
            if (t.is_zero()) throw ArithmeticError("pole of the map at t = 0");
            if ((u + q(1)).is_zero()) throw ArithmeticError("pole of the map at u = -1");
            return {QE(q(0)) - (t + q(1)) / t, QE(q(0)) - q(1) / (u + q(1))};
        }
        case CurveAutomorphism::SIGMA6_12AND3: {
            need(2);
            const QE& t = pt[0];
            const QE& w = pt[1];
            if (t.is_zero()) throw ArithmeticError("pole of the map at t = 0");
            QE t3 = t * t * t;
            return {QE(q(0)) - (t + q(1)) / t, QE(q(0)) - w / (t3 * t3)};
        }
        case CurveAutomorphism::AUTO_C3: {
            need(2);
            const QE& u = pt[0];
            const QE& w = pt[1];
            if (u.is_zero()) throw ArithmeticError("pole of the map at u = 0");
            return {QE(q(0)) - q(1) / u, w / (u * u * u * u)};
        }
        case CurveAutomorphism::AUTO_C4: {
            need(2);
            const QE& u = pt[0];
            const QE& y = pt[1];
            if (u.is_zero()) throw ArithmeticError("pole of the map at u = 0");
            return {QE(q(0)) - q(1) / u, y / (u * u * u * u * u)};
        }
    }
    throw ConsistencyError("unhandled automorphism");
}

X034Image x034_quotient(const QE& t, const QE& u) {
    if (t.is_zero() || (t + q(1)).is_zero() || u.is_zero())
        throw ArithmeticError("pole: t(t+1)u = 0");
    X034Image img;
    QE t3 = t * t * t;
    img.T = (t3 - q(3) * t - q(1)) / (t * (t + q(1)));
    img.U = (u - q(1)) * (u + q(1)) / u;
    img.x = QE(q(0)) - img.U / q(4);
    img.y = QE(q(0)) - (img.T * img.U + img.U + q(4)) / q(8);
    return img;
}

}  // namespace quadpreper
