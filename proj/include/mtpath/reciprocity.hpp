#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mtpath/closedform.hpp"
#include "mtpath/substitute.hpp"

namespace mtpath {

/// The negative-m identities of the polynomial families (all at t=1), plus
/// the coefficient-level Dyck/Schroeder reciprocity, its generating-function
/// form, the Catalan-number reciprocity and the shifted N-identity feeding
/// the Ehrhart argument.
enum class reciprocity_id {
    A,
    B,
    N,
    F,
    Fm,
    S,
    Sm,
    P,
    Pm,
    dyck_schroder,       // d(-m,n,1,a,b) = (-1)^{n-1-a} p(m,n,1,a,b)
    dyck_schroder_gf,    // Pm_{m,n,1}(x,y) = (-1)^{n-1} A_{-m,n,1}(-x,y)
    catalan,             // Cat(-m,n) = (-1)^{n-1} Cat+(m-1,n)
    n_shift,             // N_{m,n,1}(x+1,y+1) = (-x)^{n-1} N_{-m,n,1}((x+1)/x,-y)
    nar_gf,              // N_{m,n,1}(x+1,0) = (-x)^{n-1} N_{-m,n,1}((x+1)/x,1)
};

inline const char* reciprocity_name(reciprocity_id id) {
    switch (id) {
        case reciprocity_id::A: return "A";
        case reciprocity_id::B: return "B";
        case reciprocity_id::N: return "N";
        case reciprocity_id::F: return "F";
        case reciprocity_id::Fm: return "Fm";
        case reciprocity_id::S: return "S";
        case reciprocity_id::Sm: return "Sm";
        case reciprocity_id::P: return "P";
        case reciprocity_id::Pm: return "Pm";
        case reciprocity_id::dyck_schroder: return "dyck_schroder";
        case reciprocity_id::dyck_schroder_gf: return "dyck_schroder_gf";
        case reciprocity_id::catalan: return "catalan";
        case reciprocity_id::n_shift: return "n_shift";
        case reciprocity_id::nar_gf: return "nar_gf";
    }
    return "?";
}

inline const std::vector<reciprocity_id>& all_reciprocity_ids() {
    static const std::vector<reciprocity_id> ids = {
        reciprocity_id::A,  reciprocity_id::B,  reciprocity_id::N,
        reciprocity_id::F,  reciprocity_id::Fm, reciprocity_id::S,
        reciprocity_id::Sm, reciprocity_id::P,  reciprocity_id::Pm,
        reciprocity_id::dyck_schroder, reciprocity_id::dyck_schroder_gf,
        reciprocity_id::catalan, reciprocity_id::n_shift, reciprocity_id::nar_gf};
    return ids;
}

struct identity_report {
    bool ok = false;
    std::string detail;  // rendered left/right sides on mismatch
};

namespace detail {

inline bivar_poly lin2(long long c0, long long cx, long long cy) {
    bivar_poly p(c0);
    p.add_term(1, 0, bigint(cx));
    p.add_term(0, 1, bigint(cy));
    return p;
}

inline bivar_poly sign_pow(long long e) { return e % 2 == 0 ? bivar_poly(1) : bivar_poly(-1); }

inline identity_report compare_polys(const bivar_poly& lhs, const bivar_poly& rhs) {
    identity_report rep;
    rep.ok = lhs == rhs;
    if (!rep.ok) rep.detail = "left = " + lhs.to_text() + "; right = " + rhs.to_text();
    return rep;
}

} // namespace detail

/// Evaluate one reciprocity identity exactly at (m, n): left side from the
/// closed forms at -m, right side by polynomial substitution of the +m
/// polynomial.  Mismatches come back as a rendered coefficient diff.
inline identity_report verify_identity(reciprocity_id id, int m, int n) {
    if (m <= 0 || n <= 0) throw std::invalid_argument("verify_identity: m, n must be positive");
    using detail::lin2;
    using detail::sign_pow;
    const bivar_poly one(1), x = bivar_poly::var_x(), y = bivar_poly::var_y();

    auto poly_case = [&](family f, substitution_spec spec) {
        return detail::compare_polys(family_polynomial(f, -m, n, 1),
                                     substitute(family_polynomial(f, m, n, 1), spec));
    };

    switch (id) {
        case reciprocity_id::A: {
            substitution_spec s;
            s.x_image = {lin2(1, -1, 0), one};
            s.y_image = {bivar_poly::monomial(1, 1, bigint(-1)), lin2(1, -1, 0)};
            s.prefactor = sign_pow(n - 1);
            return poly_case(family::A, s);
        }
        case reciprocity_id::B: {
            substitution_spec s;
            s.x_image = {lin2(1, -1, 0), one};
            s.y_image = {lin2(1, 0, -1), one};
            s.prefactor = sign_pow(n - 1);
            return poly_case(family::B, s);
        }
        case reciprocity_id::N: {
            substitution_spec s;
            s.x_image = {x, lin2(-1, 1, 0)};
            s.y_image = {lin2(1, 0, -1), one};
            s.prefactor = lin2(1, -1, 0).pow(n - 1);
            return poly_case(family::N, s);
        }
        case reciprocity_id::F: {
            substitution_spec s;
            s.x_image = {one, x};
            s.y_image = {bivar_poly::monomial(0, 1, bigint(-1)), x};
            s.prefactor = bivar_poly::monomial(1, 0, bigint(-1)).pow(n - 1);
            return poly_case(family::F, s);
        }
        case reciprocity_id::Fm: {
            substitution_spec s;
            s.x_image = {bivar_poly::monomial(1, 0, bigint(-1)), lin2(1, 1, 0)};
            s.y_image = {lin2(0, -1, 1), lin2(1, 1, 0)};
            s.prefactor = lin2(1, 1, 0).pow(n - 1);
            return poly_case(family::Fm, s);
        }
        case reciprocity_id::S: {
            substitution_spec s;
            s.x_image = {one, x};
            s.y_image = {bivar_poly::monomial(1, 1, bigint(-1)), one};
            s.prefactor = bivar_poly::monomial(1, 0, bigint(-1)).pow(n - 1);
            return poly_case(family::S, s);
        }
        case reciprocity_id::Sm: {
            substitution_spec s;
            s.x_image = {lin2(-1, -1, 0), one};
            s.y_image = {bivar_poly::monomial(1, 1) + bivar_poly(2), lin2(1, 1, 0)};
            s.prefactor = sign_pow(n - 1);
            return poly_case(family::Sm, s);
        }
        case reciprocity_id::P: {
            substitution_spec s;
            s.x_image = {one, x};
            s.y_image = {lin2(1, 1, 0) - bivar_poly::monomial(1, 1), one};  // x(1-y)+1
            s.prefactor = bivar_poly::monomial(1, 0, bigint(-1)).pow(n - 1);
            return poly_case(family::P, s);
        }
        case reciprocity_id::Pm: {
            substitution_spec s;
            s.x_image = {lin2(-1, -1, 0), one};
            s.y_image = {bivar_poly::monomial(1, 1), lin2(1, 1, 0)};
            s.prefactor = sign_pow(n - 1);
            return poly_case(family::Pm, s);
        }
        case reciprocity_id::dyck_schroder: {
            for (long long a = 0; a <= n - 1; ++a)
                for (long long b = 0; b <= a; ++b) {
                    bigint lhs = family_coefficient(family::A, -m, n, 1, a, b);
                    bigint rhs = family_coefficient(family::Pm, m, n, 1, a, b);
                    if ((n - 1 - a) % 2 != 0) rhs = -rhs;
                    if (!(lhs == rhs)) {
                        identity_report rep;
                        std::ostringstream os;
                        os << "a=" << a << " b=" << b << ": left = " << lhs.to_string()
                           << "; right = " << rhs.to_string();
                        rep.detail = os.str();
                        return rep;
                    }
                }
            return {true, {}};
        }
        case reciprocity_id::dyck_schroder_gf: {
            substitution_spec s;
            s.x_image = {bivar_poly::monomial(1, 0, bigint(-1)), one};
            s.y_image = {y, one};
            s.prefactor = sign_pow(n - 1);
            return detail::compare_polys(family_polynomial(family::Pm, m, n, 1),
                                         substitute(family_polynomial(family::A, -m, n, 1), s));
        }
        case reciprocity_id::catalan: {
            bigint lhs = fuss_catalan(-m, n);
            bigint rhs = fuss_catalan_positive(m - 1, n);
            if ((n - 1) % 2 != 0) rhs = -rhs;
            identity_report rep;
            rep.ok = lhs == rhs;
            if (!rep.ok) rep.detail = "left = " + lhs.to_string() + "; right = " + rhs.to_string();
            return rep;
        }
        case reciprocity_id::n_shift: {
            substitution_spec shift;  // N(x+1, y+1)
            shift.x_image = {lin2(1, 1, 0), one};
            shift.y_image = {lin2(1, 0, 1), one};
            bivar_poly lhs = substitute(family_polynomial(family::N, m, n, 1), shift);
            substitution_spec s;  // (-x)^{n-1} N_{-m}((x+1)/x, -y)
            s.x_image = {lin2(1, 1, 0), x};
            s.y_image = {bivar_poly::monomial(0, 1, bigint(-1)), one};
            s.prefactor = bivar_poly::monomial(1, 0, bigint(-1)).pow(n - 1);
            return detail::compare_polys(lhs, substitute(family_polynomial(family::N, -m, n, 1), s));
        }
        case reciprocity_id::nar_gf: {
            substitution_spec shift;  // N(x+1, 0)
            shift.x_image = {lin2(1, 1, 0), one};
            shift.y_image = {bivar_poly(), one};
            bivar_poly lhs = substitute(family_polynomial(family::N, m, n, 1), shift);
            substitution_spec s;  // (-x)^{n-1} N_{-m}((x+1)/x, 1)
            s.x_image = {lin2(1, 1, 0), x};
            s.y_image = {one, one};
            s.prefactor = bivar_poly::monomial(1, 0, bigint(-1)).pow(n - 1);
            return detail::compare_polys(lhs, substitute(family_polynomial(family::N, -m, n, 1), s));
        }
    }
    throw std::logic_error("unreachable");
}

// ---- lattice points of the dilated simplex ----

/// Integer point of a dilation of the simplex
///   { x in R^n : x_1 >= x_2 >= ... >= x_n >= x_1 - 1, sum x_i = 0 },
/// together with the number of facet hyperplanes containing it.
struct simplex_point {
    std::vector<long long> coords;  // weakly decreasing, sum 0
    int walls_hit = 0;
    unsigned wall_mask = 0;  // bits 0..n-2: x_i = x_{i+1}; bit n-1: x_n = x_1 - dilation
};

/// Enumerate all lattice points of dilation * A via nonnegative difference
/// vectors d_i = x_i - x_{i+1} with sum d_i <= dilation; the translate is a
/// lattice point iff n divides sum (n-i) d_i.
inline std::vector<simplex_point> simplex_points(int n, long long dilation) {
    if (n < 2) throw std::invalid_argument("simplex_points: need n >= 2");
    if (dilation < 1) throw std::invalid_argument("simplex_points: dilation must be positive");
    std::vector<simplex_point> out;
    std::vector<long long> d(n - 1, 0);

    auto emit = [&]() {
        long long weighted = 0, total = 0;
        for (int i = 0; i < n - 1; ++i) {
            weighted += (n - 1 - i) * d[i];  // (n - i) d_i with 1-based i
            total += d[i];
        }
        if (weighted % n != 0) return;
        simplex_point pt;
        pt.coords.resize(n);
        pt.coords[0] = weighted / n;
        for (int i = 1; i < n; ++i) pt.coords[i] = pt.coords[i - 1] - d[i - 1];
        for (int i = 0; i < n - 1; ++i)
            if (d[i] == 0) {
                ++pt.walls_hit;
                pt.wall_mask |= 1u << i;
            }
        if (total == dilation) {
            ++pt.walls_hit;
            pt.wall_mask |= 1u << (n - 1);
        }
        out.push_back(std::move(pt));
    };

    auto rec = [&](auto&& self, int i, long long budget) -> void {
        if (i == n - 1) {
            emit();
            return;
        }
        for (long long v = 0; v <= budget; ++v) {
            d[i] = v;
            self(self, i + 1, budget - v);
        }
        d[i] = 0;
    };
    rec(rec, 0, dilation);
    return out;
}

/// Count points lying in exactly k walls, k = 0..n-1.
inline std::vector<bigint> wall_histogram(int n, long long dilation) {
    std::vector<bigint> counts(n, bigint(0));
    for (const auto& pt : simplex_points(n, dilation)) counts.at(pt.walls_hit) += bigint(1);
    return counts;
}

struct wall_count_report {
    bool ok = true;
    std::string detail;
};

/// Exactly-k wall counts at dilations mn+1 and mn-1 match Nar(m,n,k) and
/// Nar+(m,n,k) for every k.
inline wall_count_report nar_wall_check(int m, int n) {
    wall_count_report rep;
    std::ostringstream os;
    auto closed_counts = wall_histogram(n, static_cast<long long>(m) * n + 1);
    auto open_counts = wall_histogram(n, static_cast<long long>(m) * n - 1);
    for (int k = 0; k < n; ++k) {
        bigint nar = narayana_number(m, n, k);
        bigint nar_plus = narayana_number_positive(m, n, k);
        if (!(closed_counts[k] == nar)) {
            rep.ok = false;
            os << "k=" << k << ": points(mn+1)=" << closed_counts[k].to_string()
               << " Nar=" << nar.to_string() << "; ";
        }
        if (!(open_counts[k] == nar_plus)) {
            rep.ok = false;
            os << "k=" << k << ": points(mn-1)=" << open_counts[k].to_string()
               << " Nar+=" << nar_plus.to_string() << "; ";
        }
    }
    rep.detail = os.str();
    return rep;
}

/// Verify both halves of the Ehrhart argument:
/// (i)  Nar+(-m,n,n-1-k) = (-1)^k sum_i Nar(m,n,n-1-i) C(n-1-i, n-1-k);
/// (ii) that sum counts closed lattice points over all k-faces of the
///      (mn+1)-fold dilation, faces indexed by facet subsets of size n-1-k.
inline wall_count_report ehrhart_face_check(int n, int m) {
    wall_count_report rep;
    std::ostringstream os;
    auto points = simplex_points(n, static_cast<long long>(m) * n + 1);

    for (int k = 0; k <= n - 1; ++k) {
        rational sum;
        for (int i = 0; i <= k; ++i)
            sum += rational(narayana_number(m, n, n - 1 - i) * binomial(n - 1 - i, n - 1 - k));
        bigint rhs = sum.to_integer();

        bigint lhs = narayana_number_positive(-m, n, n - 1 - k);
        bigint signed_rhs = k % 2 == 0 ? rhs : -rhs;
        if (!(lhs == signed_rhs)) {
            rep.ok = false;
            os << "reciprocity k=" << k << ": Nar+(-m)=" << lhs.to_string()
               << " vs " << signed_rhs.to_string() << "; ";
        }

        // face sums: subsets T of the n facets with |T| = n-1-k; each k-face
        // of the simplex is the intersection of exactly one such subset, and
        // its closed points are those whose wall set contains T.
        bigint face_sum;
        const int facet_count = n;
        const int pick = n - 1 - k;
        for (unsigned tmask = 0; tmask < (1u << facet_count); ++tmask) {
            if (__builtin_popcount(tmask) != pick) continue;
            long long cnt = 0;
            for (const auto& pt : points)
                if ((pt.wall_mask & tmask) == tmask) ++cnt;
            face_sum += bigint(cnt);
        }
        if (!(face_sum == rhs)) {
            rep.ok = false;
            os << "face count k=" << k << ": faces=" << face_sum.to_string()
               << " vs sum=" << rhs.to_string() << "; ";
        }
    }
    rep.detail = os.str();
    return rep;
}

} // namespace mtpath
