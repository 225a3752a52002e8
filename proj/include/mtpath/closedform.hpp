#pragma once

#include <array>
#include <string>

#include "mtpath/bivar_poly.hpp"
#include "mtpath/rational.hpp"

namespace mtpath {

/// Generalized binomial coefficient C(top, k) for arbitrary integer top:
/// top*(top-1)*...*(top-k+1)/k! for k >= 0, and 0 for k < 0.
/// This falling-factorial convention is the one that keeps the negative-m
/// evaluations integral.
inline bigint binomial(long long top, long long k) {
    if (k < 0) return bigint();
    bigint r(1);
    for (long long i = 0; i < k; ++i) {
        r *= bigint(top - i);
        r /= bigint(i + 1);  // exact at every step
    }
    return r;
}

/// The nine polynomial families with explicit coefficient formulas.
/// N: Dyck paths by (valleys, returns).
/// A: Dyck paths by (m-valleys, returns).
/// B: Dyck paths by (i-valleys, returns) for any fixed residue i < m.
/// F / Fm: small (m-divisible) Schroeder paths by (codim - returns, returns).
/// S / Sm: small (m-divisible) Schroeder paths by ((m-)diagonals, cornered).
/// P / Pm: positive (m-divisible) Schroeder paths by the same pair.
enum class family { N, A, B, F, Fm, S, Sm, P, Pm };

inline const char* family_name(family f) {
    switch (f) {
        case family::N: return "N";
        case family::A: return "A";
        case family::B: return "B";
        case family::F: return "F";
        case family::Fm: return "Fm";
        case family::S: return "S";
        case family::Sm: return "Sm";
        case family::P: return "P";
        case family::Pm: return "Pm";
    }
    return "?";
}

inline family family_from_name(const std::string& s) {
    for (family f : {family::N, family::A, family::B, family::F, family::Fm, family::S, family::Sm,
                     family::P, family::Pm})
        if (s == family_name(f)) return f;
    throw std::invalid_argument("unknown family: " + s);
}

namespace detail {

/// num/den with the vanishing-numerator convention: a zero numerator kills
/// the term before the denominator is inspected, the same convention by
/// which vanishing binomials silence out-of-range summands.
inline rational term_ratio(bigint num, bigint den) {
    if (num.is_zero()) return rational();
    return rational(std::move(num), std::move(den));
}

inline void check_family_params(int m, int n, int t) {
    if (m == 0) throw std::invalid_argument("family parameter m must be nonzero");
    if (n <= 0 || t <= 0 || t > n) throw std::invalid_argument("family parameters need 1 <= t <= n");
}

} // namespace detail

/// Coefficient of x^a y^b in the given family's polynomial; m may be negative
/// (the reciprocity results evaluate exactly these formulas at -m).  All
/// fractional factors are carried as exact rationals and the result is
/// asserted integral.
inline bigint family_coefficient(family f, long long m, long long n, long long t, long long a,
                                 long long b) {
    detail::check_family_params(static_cast<int>(m), static_cast<int>(n), static_cast<int>(t));
    using detail::term_ratio;
    rational r;
    switch (f) {
        case family::N:
            r = rational(binomial(n - t, a) * binomial(m * n - b - 1, a - b) -
                         bigint(m) * binomial(n - t + 1, a + 1) * binomial(m * n - b - 2, a - b - 1));
            break;
        case family::A:
            r = rational(binomial(n - b - 2, a - b) * binomial(m * n - t + 1, n - t - a) -
                         bigint(m) * binomial(n - b - 1, a - b) * binomial(m * n - t, n - t - a - 1));
            break;
        case family::B:
            r = term_ratio(bigint(t + b) * binomial(n, a) * binomial(m * n - t - b - 1, n - t - a - b),
                           bigint(n));
            break;
        case family::F:
            r = term_ratio(bigint(t + b) * binomial(m * n + a - 1, a) * binomial(m * n, n - t - a - b),
                           bigint(n));
            break;
        case family::Fm:
            r = term_ratio(bigint(t + b) * binomial(m * n + a - 1, a) * binomial(n, t + a + b),
                           bigint(n));
            break;
        case family::S:
            // Summand rewritten without removable singularities via
            // C(N,k)*k = N*C(N-1,k-1):
            //   [(n+b+1-i)C(N,k) - (b+1)C(N-1,k-1)]/n * C(n-t+1, n-t-i+1)
            //   - C(n-t, n-t-i)*C(N,k),   all times C(mn, i-a-1).
            for (long long i = 1; i <= n - t + 1; ++i) {
                const long long N = m * n - i + a - b, k = a - b;
                rational part =
                    term_ratio((bigint(n + b + 1 - i) * binomial(N, k) -
                                bigint(b + 1) * binomial(N - 1, k - 1)) *
                                   binomial(n - t + 1, n - t - i + 1),
                               bigint(n)) -
                    rational(binomial(n - t, n - t - i) * binomial(N, k));
                r += part * rational(binomial(m * n, i - a - 1));
            }
            break;
        case family::Sm:
            // Same treatment via C(N,k)*(N-k) = N*C(N-1,k).
            for (long long i = 1; i <= n - t + 1; ++i) {
                rational part =
                    term_ratio(bigint(n - i + a + 1) * binomial(n - i + a - b - 1, a - b) *
                                   binomial(m * n - t + 1, n - t - i + 1),
                               bigint(n)) -
                    rational(bigint(m) * binomial(n - i + a - b, a - b) *
                             binomial(m * n - t, n - t - i));
                r += part * rational(binomial(n, i - a - 1));
            }
            break;
        case family::P:
            r = (term_ratio(bigint(t + a) * binomial(m * n - b - 1, a - b), bigint(n)) -
                 rational(bigint(m) * binomial(m * n - b - 2, a - b - 1))) *
                rational(binomial(m * n + n - t - a - 1, n - t - a));
            break;
        case family::Pm:
            r = (term_ratio(bigint(t + a) * binomial(n - b - 1, a - b), bigint(n)) -
                 rational(binomial(n - b - 2, a - b - 1))) *
                rational(binomial(m * n + n - t - a - 1, n - t - a));
            break;
    }
    return r.to_integer();
}

/// Inner b-range of a family's double sum at a given a.
inline long long family_b_limit(family f, long long n, long long t, long long a) {
    switch (f) {
        case family::B:
        case family::F:
        case family::Fm: return n - t - a;
        default: return a;
    }
}

/// Assemble the full polynomial of a family over its index ranges.
inline bivar_poly family_polynomial(family f, long long m, long long n, long long t) {
    detail::check_family_params(static_cast<int>(m), static_cast<int>(n), static_cast<int>(t));
    bivar_poly p;
    for (long long a = 0; a <= n - t; ++a)
        for (long long b = 0; b <= family_b_limit(f, n, t, a); ++b)
            p.add_term(static_cast<int>(a), static_cast<int>(b), family_coefficient(f, m, n, t, a, b));
    return p;
}

// ---- univariate specializations (polynomials in x) ----

/// Valley enumerator of t=1 Dyck paths: sum (1/n) C(n,r+1) C(mn,r) x^r.
inline bivar_poly narayana_poly(long long m, long long n) {
    bivar_poly p;
    for (long long r = 0; r <= n - 1; ++r)
        p.add_term(static_cast<int>(r), 0,
                   detail::term_ratio(binomial(n, r + 1) * binomial(m * n, r), bigint(n)).to_integer());
    return p;
}

/// Same without returns: sum (1/n) C(n,r+1) C(mn-2,r) x^r.
inline bivar_poly narayana_noret_poly(long long m, long long n) {
    bivar_poly p;
    for (long long r = 0; r <= n - 1; ++r)
        p.add_term(static_cast<int>(r), 0,
                   detail::term_ratio(binomial(n, r + 1) * binomial(m * n - 2, r), bigint(n)).to_integer());
    return p;
}

/// m-valley enumerator of t=1 Dyck paths: sum (1/n) C(n,r) C(mn,n-r-1) x^r.
inline bivar_poly ball_poly(long long m, long long n) {
    bivar_poly p;
    for (long long r = 0; r <= n - 1; ++r)
        p.add_term(static_cast<int>(r), 0,
                   detail::term_ratio(binomial(n, r) * binomial(m * n, n - r - 1), bigint(n)).to_integer());
    return p;
}

/// m-valley enumerator without returns: sum m/(n-1) C(n-1,r) C(mn-1,n-r-2) x^r.
/// Divides by n-1, so n >= 2 territory.
inline bivar_poly ball_noret_m_poly(long long m, long long n) {
    bivar_poly p;
    for (long long r = 0; r <= n - 1; ++r)
        p.add_term(static_cast<int>(r), 0,
                   detail::term_ratio(bigint(m) * binomial(n - 1, r) * binomial(m * n - 1, n - r - 2),
                                      bigint(n - 1))
                       .to_integer());
    return p;
}

/// i-valley (i < m) enumerator without returns: sum (1/n) C(n,r) C(mn-2,n-r-1) x^r.
inline bivar_poly ball_noret_i_poly(long long m, long long n) {
    bivar_poly p;
    for (long long r = 0; r <= n - 1; ++r)
        p.add_term(static_cast<int>(r), 0,
                   detail::term_ratio(binomial(n, r) * binomial(m * n - 2, n - r - 1), bigint(n)).to_integer());
    return p;
}

/// Rank generating function evaluation of the A family at y = 1:
/// sum [mnt-(t-1)(n-a)] / [n(mn-t+1)] * C(mn-t+1, n-t-a) * C(n, a) * x^a.
inline bivar_poly rank_generating_poly(long long m, long long n, long long t) {
    bivar_poly p;
    for (long long a = 0; a <= n - t; ++a)
        p.add_term(static_cast<int>(a), 0,
                   detail::term_ratio(bigint(m * n * t - (t - 1) * (n - a)) *
                                          binomial(m * n - t + 1, n - t - a) * binomial(n, a),
                                      bigint(n) * bigint(m * n - t + 1))
                       .to_integer());
    return p;
}

// ---- counting numbers ----

/// Fuss-Catalan number Cat(m,n) = C((m+1)n, n) / (mn+1); integer m of either sign.
inline bigint fuss_catalan(long long m, long long n) {
    return detail::term_ratio(binomial((m + 1) * n, n), bigint(m * n + 1)).to_integer();
}

/// Positive Fuss-Catalan number Cat+(m,n) = C((m+1)n-2, n) / (mn-1).
inline bigint fuss_catalan_positive(long long m, long long n) {
    return detail::term_ratio(binomial((m + 1) * n - 2, n), bigint(m * n - 1)).to_integer();
}

/// Nar(m,n,k) = C(n-1, n-k-1) C(mn+1, n-k) / (mn+1).
inline bigint narayana_number(long long m, long long n, long long k) {
    return detail::term_ratio(binomial(n - 1, n - k - 1) * binomial(m * n + 1, n - k),
                              bigint(m * n + 1))
        .to_integer();
}

/// Nar+(m,n,k) = C(n-1, n-k-1) C(mn-1, n-k) / (mn-1).
inline bigint narayana_number_positive(long long m, long long n, long long k) {
    return detail::term_ratio(binomial(n - 1, n - k - 1) * binomial(m * n - 1, n - k),
                              bigint(m * n - 1))
        .to_integer();
}

/// Cardinality of the (m,t)-Dyck family: (mt+1)/(mn+1) * C((m+1)n - t, n - t).
inline bigint dyck_family_size(long long m, long long n, long long t) {
    return detail::term_ratio(bigint(m * t + 1) * binomial((m + 1) * n - t, n - t),
                              bigint(m * n + 1))
        .to_integer();
}

} // namespace mtpath
