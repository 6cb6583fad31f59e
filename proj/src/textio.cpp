#include "quadpreper/textio.hpp"

#include <cctype>
#include <sstream>

namespace quadpreper {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' at position " +
                             std::to_string(i) + " in \"" + s + "\"");
    }
    Integer integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw ParseError("expected integer in \"" + s + "\"");
        return Integer(s.substr(start, i - start));
    }
    Rational rational() {
        Integer num = integer();
        if (accept('/')) {
            Integer den = integer();
            if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }
};

// one signed component: rational, possibly wrapped in parens, possibly a
// sqrt(D) multiple: [(] r [)] [* sqrt(D)]  or  sqrt(D) alone
struct Component {
    Rational value;
    bool has_sqrt = false;
    Integer d;
};

bool starts_with(const std::string& s, size_t i, const char* kw) {
    size_t n = std::char_traits<char>::length(kw);
    return s.compare(i, n, kw) == 0;
}

Component parse_component(Cursor& cur) {
    Component comp;
    comp.value = 1;
    int sign = 1;
    while (true) {
        if (cur.accept('-')) sign = -sign;
        else if (!cur.accept('+')) break;
    }
    bool have_number = false;
    cur.skip_ws();
    if (cur.peek() == '(') {
        cur.expect('(');
        comp.value = Rational(sign) * cur.rational();
        cur.expect(')');
        have_number = true;
    } else if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        comp.value = Rational(sign) * cur.rational();
        have_number = true;
    } else {
        comp.value = Rational(sign);
    }
    cur.skip_ws();
    bool saw_star = cur.accept('*');
    cur.skip_ws();
    if (starts_with(cur.s, cur.i, "sqrt")) {
        cur.i += 4;
        cur.expect('(');
        comp.d = cur.integer();
        cur.expect(')');
        comp.has_sqrt = true;
    } else if (saw_star || !have_number) {
        throw ParseError("malformed element: \"" + cur.s + "\"");
    }
    return comp;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    Cursor cur{text, 0};
    Rational q = cur.rational();
    if (!cur.eof()) throw ParseError("trailing characters in rational: \"" + text + "\"");
    return q;
}

QuadElem parse_elem(const std::string& text) {
    Cursor cur{text, 0};
    Rational rat_part(0), sqrt_part(0);
    Integer d(0);
    bool any = false;
    while (!cur.eof()) {
        if (any) {
            char c = cur.peek();
            if (c != '+' && c != '-')
                throw ParseError("expected '+' or '-' in element: \"" + text + "\"");
        }
        Component comp = parse_component(cur);
        any = true;
        if (comp.has_sqrt) {
            FieldDesc k = FieldDesc::make(comp.d);
            if (k.is_rational()) {
                // sqrt of a positive perfect square folds into the rational part
                rat_part += comp.value * sqrt_exact(Rational(comp.d));
            } else {
                // normalize sqrt(k^2 D) = k sqrt(D)
                Integer kernel = k.D();
                Rational scale = sqrt_exact(Rational(comp.d) / Rational(kernel));
                if (d == 0) d = kernel;
                else if (d != kernel)
                    throw FieldMismatchError("mixed radicands in element: \"" + text + "\"");
                sqrt_part += comp.value * scale;
            }
        } else {
            rat_part += comp.value;
        }
    }
    if (!any) throw ParseError("empty element");
    if (d == 0 || sqrt_part == 0) return QuadElem(rat_part);
    return QuadElem(FieldDesc::make(d), rat_part, sqrt_part);
}

QuadElem parse_elem(const std::string& text, const FieldDesc& k) {
    return in_field(parse_elem(text), k);
}

// ---- polynomial expressions ------------------------------------------------

namespace {

// grammar: expr := term (('+'|'-') term)* ; term := factor (('*')? factor)* ;
// factor := base ('^' uint)? ; base := rational | var | '(' expr ')' | '-' factor
struct PolyParser {
    Cursor cur;
    std::string var;  // discovered variable name

    UniPoly parse_expr() {
        UniPoly acc = parse_term();
        while (true) {
            if (cur.accept('+')) acc = acc + parse_term();
            else if (cur.accept('-')) acc = acc - parse_term();
            else return acc;
        }
    }

    UniPoly parse_term() {
        UniPoly acc = parse_factor();
        while (true) {
            cur.skip_ws();
            char c = cur.peek();
            if (c == '*') {
                cur.expect('*');
                acc = acc * parse_factor();
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
                acc = acc * parse_factor();  // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    UniPoly parse_factor() {
        UniPoly base = parse_base();
        if (cur.accept('^')) {
            Integer e = cur.integer();
            if (e < 0 || e > 64) throw ParseError("unsupported exponent");
            UniPoly acc = UniPoly::constant(QuadElem(Rational(1)));
            for (Integer i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    UniPoly parse_base() {
        cur.skip_ws();
        char c = cur.peek();
        if (c == '-') {
            cur.expect('-');
            return parse_factor().scaled(QuadElem(Rational(-1)));
        }
        if (c == '+') {
            cur.expect('+');
            return parse_factor();
        }
        if (c == '(') {
            cur.expect('(');
            UniPoly inner = parse_expr();
            cur.expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return UniPoly::constant(QuadElem(cur.rational()));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (cur.i < cur.s.size() &&
                   (std::isalnum(static_cast<unsigned char>(cur.s[cur.i])) || cur.s[cur.i] == '_'))
                name += cur.s[cur.i++];
            if (var.empty()) var = name;
            else if (var != name)
                throw ParseError("polynomial uses two variables: " + var + ", " + name);
            return UniPoly({QuadElem(Rational(0)), QuadElem(Rational(1))});
        }
        throw ParseError("unexpected character in polynomial: \"" + cur.s + "\"");
    }
};

}  // namespace

UniPoly parse_unipoly(const std::string& text) {
    PolyParser p{Cursor{text, 0}, {}};
    UniPoly f = p.parse_expr();
    if (!p.cur.eof()) throw ParseError("trailing characters in polynomial: \"" + text + "\"");
    return f;
}

std::string unipoly_str(const UniPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const QuadElem& c = f.coeff(i);
        if (c.is_zero()) continue;
        Rational q = c.a();  // rational printing only; quadratic coeffs print via str()
        std::string body;
        if (c.is_rational_value()) {
            Rational aq = rat_abs(q);
            bool minus = q < 0;
            if (first) {
                if (minus) os << "-";
            } else {
                os << (minus ? " - " : " + ");
            }
            if (aq != 1 || i == 0) {
                body = aq.get_num().get_str();
                if (aq.get_den() != 1) body += "/" + aq.get_den().get_str();
            }
        } else {
            if (!first) os << " + ";
            body = "(" + c.str() + ")";
        }
        os << body;
        if (i > 0) {
            if (!body.empty()) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace quadpreper
