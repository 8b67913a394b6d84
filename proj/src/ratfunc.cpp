#include "hitbox/ratfunc.hpp"

namespace hitbox {

std::optional<Rational> eval(const QFrac& f, const Rational& v) {
    const Rational d = f.den().eval(v);
    if (d.is_zero()) return std::nullopt;
    return f.num().eval(v) / d;
}

std::optional<Rational> eval(const BiFrac& f, const Rational& t, const Rational& x) {
    const Rational d = eval2(f.den(), t, x);
    if (d.is_zero()) return std::nullopt;
    return eval2(f.num(), t, x) / d;
}

QFrac substitute(const BiPoly& p, const QFrac& t, const QFrac& x) {
    QFrac acc;
    for (int j = p.degree(); j >= 0; --j) {
        const QPoly& cj = p.coeff(j);
        QFrac inner;
        for (int i = cj.degree(); i >= 0; --i) inner = inner * t + QFrac(QPoly::constant(cj.coeff(i)));
        acc = acc * x + inner;
    }
    return acc;
}

QFrac substitute(const BiFrac& f, const QFrac& t, const QFrac& x) {
    return substitute(f.num(), t, x) / substitute(f.den(), t, x);
}

BiPoly bi_t() { return BiPoly::constant(QPoly::x()); }
BiPoly bi_x() { return BiPoly::x(); }

std::string to_string(const QFrac& f, char var) {
    const std::string n = to_string(f.num(), var);
    if (f.den().degree() == 0 && f.den().coeff(0) == Rational(1)) return n;
    return "(" + n + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace hitbox
