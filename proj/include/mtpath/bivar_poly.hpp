#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtpath/bigint.hpp"
#include "mtpath/errors.hpp"

namespace mtpath {

/// Exponent pair (a, b) for x^a * y^b, compared in graded lex order so that
/// the map's last entry is the leading term used by exact division and so
/// that reverse iteration yields the canonical rendering order
/// (descending total degree, then descending x-exponent).
struct exponent_pair {
    int a = 0;
    int b = 0;

    friend bool operator==(const exponent_pair&, const exponent_pair&) = default;
    friend bool operator<(const exponent_pair& l, const exponent_pair& r) {
        if (l.a + l.b != r.a + r.b) return l.a + l.b < r.a + r.b;
        return l.a < r.a;
    }
};

/// Sparse bivariate polynomial in x, y with bigint coefficients.
/// Zero coefficients are never stored.
class bivar_poly {
public:
    struct term {
        int a;
        int b;
        bigint coeff;
    };

    bivar_poly() = default;
    bivar_poly(long long c) {
        if (c != 0) terms_[{0, 0}] = bigint(c);
    }
    bivar_poly(const bigint& c) {
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }

    static bivar_poly monomial(int a, int b, bigint c = bigint(1)) {
        bivar_poly p;
        if (!c.is_zero()) {
            if (a < 0 || b < 0) throw std::invalid_argument("bivar_poly: negative exponent");
            p.terms_[{a, b}] = std::move(c);
        }
        return p;
    }

    static bivar_poly var_x() { return monomial(1, 0); }
    static bivar_poly var_y() { return monomial(0, 1); }

    /// Convenience builder for test fixtures: {{a, b, coeff}, ...}.
    static bivar_poly from_terms(std::initializer_list<std::tuple<int, int, long long>> ts) {
        bivar_poly p;
        for (const auto& [a, b, c] : ts) p.add_term(a, b, bigint(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bigint coeff(int a, int b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? bigint() : it->second;
    }

    int degree_x() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.a);
        return d;
    }

    int degree_y() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.b);
        return d;
    }

    void add_term(int a, int b, const bigint& c) {
        if (c.is_zero()) return;
        if (a < 0 || b < 0) throw std::invalid_argument("bivar_poly: negative exponent");
        auto it = terms_.find({a, b});
        if (it == terms_.end()) {
            terms_.emplace(exponent_pair{a, b}, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bivar_poly operator+(const bivar_poly& p, const bivar_poly& q) {
        bivar_poly r = p;
        for (const auto& [e, c] : q.terms_) r.add_term(e.a, e.b, c);
        return r;
    }

    friend bivar_poly operator-(const bivar_poly& p, const bivar_poly& q) {
        bivar_poly r = p;
        for (const auto& [e, c] : q.terms_) r.add_term(e.a, e.b, -c);
        return r;
    }

    bivar_poly operator-() const {
        bivar_poly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend bivar_poly operator*(const bivar_poly& p, const bivar_poly& q) {
        bivar_poly r;
        for (const auto& [ep, cp] : p.terms_)
            for (const auto& [eq, cq] : q.terms_) r.add_term(ep.a + eq.a, ep.b + eq.b, cp * cq);
        return r;
    }

    friend bivar_poly operator*(const bivar_poly& p, const bigint& c) {
        bivar_poly r;
        if (c.is_zero()) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_[e] = pc * c;
        return r;
    }

    bivar_poly& operator+=(const bivar_poly& o) { return *this = *this + o; }
    bivar_poly& operator-=(const bivar_poly& o) { return *this = *this - o; }
    bivar_poly& operator*=(const bivar_poly& o) { return *this = *this * o; }

    bivar_poly pow(unsigned e) const {
        bivar_poly r(1), b = *this;
        while (e != 0) {
            if (e & 1u) r *= b;
            e >>= 1;
            if (e != 0) b *= b;
        }
        return r;
    }

    friend bool operator==(const bivar_poly& p, const bivar_poly& q) { return p.terms_ == q.terms_; }

    /// Exact multivariate division; nullopt when *this is not a polynomial
    /// multiple of d.  Graded-lex leading-term elimination: if the division is
    /// exact the leading monomial stays divisible at every step, so the first
    /// failure proves inexactness.
    std::optional<bivar_poly> divided_by(const bivar_poly& d) const {
        if (d.is_zero()) throw std::domain_error("bivar_poly: division by zero polynomial");
        bivar_poly rem = *this, quot;
        const auto& dl = *d.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& rl = *rem.terms_.rbegin();
            int da = rl.first.a - dl.first.a;
            int db = rl.first.b - dl.first.b;
            if (da < 0 || db < 0) return std::nullopt;
            bigint qc, qr;
            bigint::divmod(rl.second, dl.second, qc, qr);
            if (!qr.is_zero()) return std::nullopt;
            bivar_poly mono = monomial(da, db, qc);
            quot += mono;
            rem -= mono * d;
        }
        return quot;
    }

    /// Divide every coefficient by an integer; nullopt unless all divisions
    /// are exact.
    std::optional<bivar_poly> divided_by_integer(const bigint& d) const {
        if (d.is_zero()) throw std::domain_error("bivar_poly: division by zero");
        bivar_poly r;
        for (const auto& [e, c] : terms_) {
            bigint q, rem;
            bigint::divmod(c, d, q, rem);
            if (!rem.is_zero()) return std::nullopt;
            r.terms_[e] = q;
        }
        return r;
    }

    /// Terms in canonical order: descending total degree, then descending a.
    std::vector<term> ordered_terms() const {
        std::vector<term> out;
        out.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            out.push_back({it->first.a, it->first.b, it->second});
        return out;
    }

    const std::map<exponent_pair, bigint>& terms() const { return terms_; }

    /// Canonical text rendering, e.g. "x^2*y^2 + 4*x*y + 2*x + 5".
    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const term& t : ordered_terms()) {
            bigint c = t.coeff;
            bool neg = c.sign() < 0;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            c = c.abs();
            std::string mono;
            if (t.a > 0) mono += t.a == 1 ? "x" : "x^" + std::to_string(t.a);
            if (t.b > 0) {
                if (!mono.empty()) mono += "*";
                mono += t.b == 1 ? "y" : "y^" + std::to_string(t.b);
            }
            if (mono.empty()) {
                out += c.to_string();
            } else if (c == bigint(1)) {
                out += mono;
            } else {
                out += c.to_string() + "*" + mono;
            }
        }
        return out;
    }

    /// Term list with decimal-string coefficients, the wire format used by
    /// the CLI's JSON output.
    struct wire_term {
        int a;
        int b;
        std::string coeff;
    };

    std::vector<wire_term> to_wire_terms() const {
        std::vector<wire_term> out;
        for (const term& t : ordered_terms()) out.push_back({t.a, t.b, t.coeff.to_string()});
        return out;
    }

    static bivar_poly from_wire_terms(const std::vector<wire_term>& ts) {
        bivar_poly p;
        for (const auto& t : ts) p.add_term(t.a, t.b, bigint::from_decimal(t.coeff));
        return p;
    }

private:
    std::map<exponent_pair, bigint> terms_;
};

/// p(x, 0): keep only the b = 0 terms.
inline bivar_poly eval_y_zero(const bivar_poly& p) {
    bivar_poly r;
    for (const auto& [e, c] : p.terms())
        if (e.b == 0) r.add_term(e.a, 0, c);
    return r;
}

/// p(x, 1): collapse y.
inline bivar_poly eval_y_one(const bivar_poly& p) {
    bivar_poly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e.a, 0, c);
    return r;
}

/// p(1, 1): coefficient sum.
inline bigint eval_all_one(const bivar_poly& p) {
    bigint s;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

} // namespace mtpath
