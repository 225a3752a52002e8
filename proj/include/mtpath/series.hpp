#pragma once

#include <vector>

#include "mtpath/bivar_poly.hpp"
#include "mtpath/errors.hpp"

namespace mtpath {

/// Truncated formal power series in z with bivar_poly coefficients.
/// Every operation truncates consistently at the fixed order.
class zseries {
public:
    explicit zseries(int order) : c_(order + 1) {
        if (order < 0) throw std::invalid_argument("zseries: negative order");
    }

    static zseries z(int order) {
        zseries s(order);
        if (order >= 1) s.c_[1] = bivar_poly(1);
        return s;
    }

    static zseries constant(const bivar_poly& v, int order) {
        zseries s(order);
        s.c_[0] = v;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const bivar_poly& at(int k) const { return c_.at(k); }
    void set(int k, bivar_poly v) { c_.at(k) = std::move(v); }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }

    zseries truncated(int new_order) const {
        zseries s(new_order);
        for (int k = 0; k <= new_order && k <= order(); ++k) s.c_[k] = c_[k];
        return s;
    }

    friend zseries operator+(const zseries& a, const zseries& b) {
        zseries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }

    friend zseries operator-(const zseries& a, const zseries& b) {
        zseries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }

    friend zseries operator*(const zseries& a, const zseries& b) {
        zseries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= r.order(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend zseries operator*(const zseries& a, const bivar_poly& p) {
        zseries r(a.order());
        for (int k = 0; k <= a.order(); ++k)
            if (!a.c_[k].is_zero()) r.c_[k] = a.c_[k] * p;
        return r;
    }

    friend zseries operator+(const zseries& a, const bivar_poly& p) {
        zseries r = a;
        r.c_[0] += p;
        return r;
    }

    zseries& operator+=(const zseries& o) { return *this = *this + o; }

    friend bool operator==(const zseries& a, const zseries& b) { return a.c_ == b.c_; }

    /// Multiply by z^k, dropping overflowed coefficients.
    zseries shifted_up(int k = 1) const {
        zseries r(order());
        for (int i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    /// Divide by z^k; the dropped low coefficients must vanish.
    zseries shifted_down(int k) const {
        for (int i = 0; i < k; ++i)
            if (!c_[i].is_zero()) throw std::invalid_argument("zseries: shift below a nonzero coefficient");
        zseries r(order() - k);
        for (int i = 0; i + k <= order(); ++i) r.c_[i] = c_[i + k];
        return r;
    }

    zseries pow(unsigned e) const {
        zseries r = constant(bivar_poly(1), order()), b = *this;
        while (e != 0) {
            if (e & 1u) r = r * b;
            e >>= 1;
            if (e != 0) b = b * b;
        }
        return r;
    }

    /// d/dz; order drops by one.
    zseries derivative() const {
        if (order() == 0) return zseries(0);
        zseries r(order() - 1);
        for (int k = 1; k <= order(); ++k) r.c_[k - 1] = c_[k] * bigint(k);
        return r;
    }

    /// Multiplicative inverse of a series whose constant term is +1 or -1.
    zseries inverted_unit() const {
        const bivar_poly& u0 = c_[0];
        bool plus = u0 == bivar_poly(1);
        if (!plus && !(u0 == bivar_poly(-1)))
            throw std::invalid_argument("zseries: constant term is not a unit");
        zseries r(order());
        r.c_[0] = u0;  // 1/(+-1) = +-1
        for (int k = 1; k <= order(); ++k) {
            bivar_poly acc;
            for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
            r.c_[k] = plus ? -acc : acc;  // r_k = -acc / u0
        }
        return r;
    }

private:
    std::vector<bivar_poly> c_;
};

/// Polynomial in a formal variable w with bivar_poly coefficients
/// (w^0 first).  These are the right-hand-side test functions of the
/// functional equations.
using wpoly = std::vector<bivar_poly>;

inline wpoly wp_linear(bivar_poly c0, bivar_poly c1) { return {std::move(c0), std::move(c1)}; }

inline wpoly wp_mul(const wpoly& a, const wpoly& b) {
    wpoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline wpoly wp_pow(const wpoly& base, unsigned e) {
    wpoly r{bivar_poly(1)};
    wpoly b = base;
    while (e != 0) {
        if (e & 1u) r = wp_mul(r, b);
        e >>= 1;
        if (e != 0) b = wp_mul(b, b);
    }
    return r;
}

/// View a w-polynomial as a series in z.
inline zseries wp_to_series(const wpoly& g, int order) {
    zseries s(order);
    for (std::size_t k = 0; k < g.size() && static_cast<int>(k) <= order; ++k)
        s.set(static_cast<int>(k), g[k]);
    return s;
}

/// Horner composition of a polynomial outer with a series inner.
inline zseries compose(const wpoly& outer, const zseries& inner) {
    zseries r = zseries::constant(outer.empty() ? bivar_poly() : outer.back(), inner.order());
    for (std::size_t k = outer.size() - 1; k-- > 0;) r = r * inner + outer[k];
    return r;
}

/// Composition outer(inner) of two truncated series; inner must have zero
/// constant term so that the truncation is well defined.
inline zseries compose(const zseries& outer, const zseries& inner) {
    if (!inner.at(0).is_zero())
        throw std::invalid_argument("compose: inner series has nonzero constant term");
    zseries r = zseries::constant(outer.at(outer.order()), inner.order());
    for (int k = outer.order(); k-- > 0;) r = r * inner + outer.at(k);
    return r;
}

/// Compositional inverse: returns G with s(G(z)) = z up to the truncation
/// order.  Requires zero constant term and linear coefficient +1 or -1.
inline zseries compositional_inverse(const zseries& s) {
    if (!s.at(0).is_zero())
        throw std::invalid_argument("compositional_inverse: nonzero constant term");
    const int order = s.order();
    const bivar_poly& u = order >= 1 ? s.at(1) : bivar_poly();
    bool plus = u == bivar_poly(1);
    if (!plus && !(u == bivar_poly(-1)))
        throw std::invalid_argument("compositional_inverse: linear coefficient is not a unit");
    zseries g(order);
    if (order >= 1) g.set(1, u);  // g1 = 1/u = u
    for (int k = 2; k <= order; ++k) {
        bivar_poly err = compose(s, g).at(k);
        g.set(k, plus ? -err : err);  // cancel via g_k = -err / u
    }
    return g;
}

// ---- functional equations ----

/// The generating-function equations for Dyck-path statistics.
/// basic/noret/mval/... are the t = 1 building blocks; full and the two
/// mval_full variants carry the start-height parameter t and a return
/// variable y.  Solutions are the shifted enumerators (zero constant term);
/// the z^n coefficient is the height-n counting polynomial.
enum class path_equation {
    basic,         // F = z (F+1) (xF+1)^m            -> valleys, t=1
    noret,         // z (F0+1) (xF0+1)^{m-1}          -> valleys, no returns
    full,          // sum_s (xy)^s z^{s+t} (F0+1)^{s+1} (xF0+1)^{m(s+t)-s-1}
    mval,          // H = z (H+1)^m (xH+1)            -> m-valleys, t=1
    mval_noret_m,  // z (H0+1)^m                      -> m-valleys, no returns
    mval_noret_i,  // z (H0+1)^{m-1} (xH0+1)          -> i-valleys (i<m), no returns
    mval_full_m,   // sum_s (xy)^s z^{s+t} (xH0+1)^{t-1} (H0+1)^{(m-1)(t-1)+m(s+1)}
    mval_full_i,   // sum_s  y^s  z^{s+t} (xH0+1)^{s+t} (H0+1)^{(s+t)(m-1)}
};

namespace detail {

template <typename Rhs>
zseries solve_fixed_point(int order, Rhs&& rhs_of) {
    zseries f(order);
    for (int it = 0; it < order; ++it) f = rhs_of(f);
    if (!(rhs_of(f) == f))
        throw std::logic_error("functional equation: fixed point did not stabilize");
    return f;
}

inline zseries basic_solution(int m, int order) {
    const bivar_poly x = bivar_poly::var_x();
    return solve_fixed_point(order, [&](const zseries& f) {
        return ((f + bivar_poly(1)) * (f * x + bivar_poly(1)).pow(m)).shifted_up();
    });
}

inline zseries mval_solution(int m, int order) {
    const bivar_poly x = bivar_poly::var_x();
    return solve_fixed_point(order, [&](const zseries& h) {
        return ((h + bivar_poly(1)).pow(m) * (h * x + bivar_poly(1))).shifted_up();
    });
}

} // namespace detail

/// Solve the requested equation, truncated at z^order.  For the equations
/// with an infinite sum over the number of returns s, terms with s + t >
/// order vanish, so s_cutoff = order (the default) is lossless.
inline zseries solve_functional_equation(path_equation eq, int m, int t, int order,
                                         int s_cutoff = -1) {
    if (m <= 0) throw std::invalid_argument("solve_functional_equation: m must be positive");
    if (t <= 0) throw std::invalid_argument("solve_functional_equation: t must be positive");
    if (order < 1) throw std::invalid_argument("solve_functional_equation: order must be >= 1");
    if (s_cutoff < 0) s_cutoff = order;
    if (s_cutoff < order)
        throw std::invalid_argument("solve_functional_equation: s_cutoff below order loses terms");

    const bivar_poly x = bivar_poly::var_x();
    const bivar_poly one(1);

    switch (eq) {
        case path_equation::basic: return detail::basic_solution(m, order);
        case path_equation::mval: return detail::mval_solution(m, order);
        case path_equation::noret: {
            zseries f0 = detail::basic_solution(m, order);
            return ((f0 + one) * (f0 * x + one).pow(m - 1)).shifted_up();
        }
        case path_equation::mval_noret_m: {
            zseries h0 = detail::mval_solution(m, order);
            return (h0 + one).pow(m).shifted_up();
        }
        case path_equation::mval_noret_i: {
            zseries h0 = detail::mval_solution(m, order);
            return ((h0 + one).pow(m - 1) * (h0 * x + one)).shifted_up();
        }
        case path_equation::full: {
            zseries f0 = detail::basic_solution(m, order);
            zseries acc(order);
            for (int s = 0; s + t <= order && s <= s_cutoff; ++s) {
                zseries term = (f0 + one).pow(s + 1) * (f0 * x + one).pow(m * (s + t) - s - 1);
                term = term * bivar_poly::monomial(s, s);  // (xy)^s
                acc += term.shifted_up(s + t);
            }
            return acc;
        }
        case path_equation::mval_full_m: {
            zseries h0 = detail::mval_solution(m, order);
            zseries acc(order);
            for (int s = 0; s + t <= order && s <= s_cutoff; ++s) {
                zseries term =
                    (h0 * x + one).pow(t - 1) * (h0 + one).pow((m - 1) * (t - 1) + m * (s + 1));
                term = term * bivar_poly::monomial(s, s);
                acc += term.shifted_up(s + t);
            }
            return acc;
        }
        case path_equation::mval_full_i: {
            zseries h0 = detail::mval_solution(m, order);
            zseries acc(order);
            for (int s = 0; s + t <= order && s <= s_cutoff; ++s) {
                zseries term = (h0 * x + one).pow(s + t) * (h0 + one).pow((s + t) * (m - 1));
                term = term * bivar_poly::monomial(0, s);  // y^s
                acc += term.shifted_up(s + t);
            }
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

// ---- Lagrange-Buermann machinery ----

/// The two compositional-inverse kernels:
/// valley kernel  f(z) = z / ((z+1)(xz+1)^m), inverse of the basic solution;
/// mvalley kernel h(z) = z / ((z+1)^m(xz+1)), inverse of the mval solution.
enum class lb_kernel { valley, mvalley };

/// The denominator polynomial of a kernel, as a series.
inline zseries lb_kernel_denominator(lb_kernel k, int m, int order) {
    const bivar_poly x = bivar_poly::var_x();
    zseries zp1 = zseries::z(order) + bivar_poly(1);
    zseries xzp1 = zseries::z(order) * x + bivar_poly(1);
    return k == lb_kernel::valley ? zp1 * xzp1.pow(m) : zp1.pow(m) * xzp1;
}

/// Expansion of the kernel itself: z * (denominator)^{-1}.
inline zseries lb_kernel_series(lb_kernel k, int m, int order) {
    return lb_kernel_denominator(k, m, order).inverted_unit().shifted_up();
}

// Test functions paired with the kernels.  All are polynomials in w.
inline wpoly lb_gen_valley(int m) {
    const bivar_poly x = bivar_poly::var_x(), one(1);
    return wp_mul(wp_linear(one, one), wp_pow(wp_linear(one, x), m));
}
inline wpoly lb_gen_valley_noret(int m) {
    const bivar_poly x = bivar_poly::var_x(), one(1);
    return wp_mul(wp_linear(one, one), wp_pow(wp_linear(one, x), m - 1));
}
inline wpoly lb_gen_valley_returns(int m, int s, int t) {
    const bivar_poly x = bivar_poly::var_x(), one(1);
    return wp_mul(wp_pow(wp_linear(one, one), s + 1),
                  wp_pow(wp_linear(one, x), m * (s + t) - s - 1));
}
inline wpoly lb_gen_mvalley(int m) {
    const bivar_poly x = bivar_poly::var_x(), one(1);
    return wp_mul(wp_pow(wp_linear(one, one), m), wp_linear(one, x));
}
inline wpoly lb_gen_mvalley_noret_div(int m) {
    return wp_pow(wp_linear(bivar_poly(1), bivar_poly(1)), m);
}
inline wpoly lb_gen_mvalley_noret_res(int m) {
    const bivar_poly x = bivar_poly::var_x(), one(1);
    return wp_mul(wp_pow(wp_linear(one, one), m - 1), wp_linear(one, x));
}
inline wpoly lb_gen_mvalley_returns_div(int m, int s, int t) {
    const bivar_poly x = bivar_poly::var_x(), one(1);
    return wp_mul(wp_pow(wp_linear(one, x), t - 1),
                  wp_pow(wp_linear(one, one), (m - 1) * (t - 1) + m * (s + 1)));
}
inline wpoly lb_gen_mvalley_returns_res(int m, int s, int t) {
    const bivar_poly x = bivar_poly::var_x(), one(1);
    return wp_mul(wp_pow(wp_linear(one, x), s + t), wp_pow(wp_linear(one, one), (s + t) * (m - 1)));
}

struct lb_report {
    bool ok = false;
    bivar_poly lhs;  // <z^a> g(F(z)) via compositional inverse + composition
    bivar_poly rhs;  // (1/a) <z^{-1}> g'(z) f(z)^{-a} via Laurent expansion
};

/// Check the coefficient-extraction identity
///   <z^a> g(F(z)) = (1/a) <z^{-1}> g'(z) (f(z))^{-a}
/// numerically, computing the two sides by independent routes.
inline lb_report lagrange_burmann_check(lb_kernel kernel, int m, const wpoly& g, int a) {
    if (a < 1) throw std::invalid_argument("lagrange_burmann_check: a must be >= 1");
    const int order = a + 1;

    zseries f = lb_kernel_series(kernel, m, order);
    zseries big_f = compositional_inverse(f);
    bivar_poly lhs = compose(g, big_f).at(a);

    // f = z * u with u a unit series; f^{-a} = z^{-a} * u^{-a}, so
    // <z^{-1}> g'(z) f(z)^{-a} = <z^{a-1}> g'(z) (u^{-1})^a.
    zseries u = f.shifted_down(1);
    zseries u_inv_pow = u.inverted_unit().pow(static_cast<unsigned>(a));
    zseries rhs_series = wp_to_series(g, order).derivative() * u_inv_pow;
    auto divided = rhs_series.at(a - 1).divided_by_integer(bigint(a));
    if (!divided)
        throw integrality_violation("lagrange_burmann_check: residue not divisible by a");
    lb_report rep;
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(*divided);
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

} // namespace mtpath
