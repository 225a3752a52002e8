#pragma once

#include <vector>

#include "mtpath/bivar_poly.hpp"
#include "mtpath/errors.hpp"

namespace mtpath {

/// Bivariate rational expression num/den with a nonzero polynomial denominator.
struct rational_expr {
    bivar_poly num;
    bivar_poly den = bivar_poly(1);
};

/// A variable substitution x -> x_image, y -> y_image followed by
/// multiplication with a polynomial prefactor.  Prefactors such as x^{n-t},
/// (-x)^{n-1} or (1-x)^{n-1} are ordinary polynomials here.
struct substitution_spec {
    rational_expr x_image;
    rational_expr y_image;
    bivar_poly prefactor = bivar_poly(1);
};

/// Evaluate prefactor * p(x_image, y_image) and clear denominators by one
/// exact polynomial division at the end.  Throws non_polynomial_result when
/// the cleared expression is not a polynomial (wrong transform or prefactor).
inline bivar_poly substitute(const bivar_poly& p, const substitution_spec& spec) {
    if (spec.x_image.den.is_zero() || spec.y_image.den.is_zero())
        throw std::invalid_argument("substitute: zero denominator in image");
    if (p.is_zero()) return bivar_poly();

    const int dx = p.degree_x();
    const int dy = p.degree_y();

    auto powers = [](const bivar_poly& base, int up) {
        std::vector<bivar_poly> v;
        v.reserve(up + 1);
        v.push_back(bivar_poly(1));
        for (int i = 1; i <= up; ++i) v.push_back(v.back() * base);
        return v;
    };
    const auto xn = powers(spec.x_image.num, dx);
    const auto xd = powers(spec.x_image.den, dx);
    const auto yn = powers(spec.y_image.num, dy);
    const auto yd = powers(spec.y_image.den, dy);

    // p(xn/xd, yn/yd) = N / (xd^dx * yd^dy) with
    // N = sum c_ab xn^a xd^{dx-a} yn^b yd^{dy-b}
    bivar_poly numerator;
    for (const auto& [e, c] : p.terms())
        numerator += xn[e.a] * xd[dx - e.a] * yn[e.b] * yd[dy - e.b] * c;
    numerator *= spec.prefactor;

    bivar_poly denominator = xd[dx] * yd[dy];
    if (denominator == bivar_poly(1)) return numerator;

    auto q = numerator.divided_by(denominator);
    if (!q)
        throw non_polynomial_result("substitution left a nontrivial denominator remainder");
    return *q;
}

/// Coefficient reversal in x: x^a y^b -> x^{degree-a} y^b.
inline bivar_poly reverse_x(const bivar_poly& p, int degree) {
    if (degree < p.degree_x())
        throw std::invalid_argument("reverse_x: degree smaller than x-degree of polynomial");
    bivar_poly r;
    for (const auto& [e, c] : p.terms()) r.add_term(degree - e.a, e.b, c);
    return r;
}

} // namespace mtpath
