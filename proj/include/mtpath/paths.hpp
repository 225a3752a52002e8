#pragma once

#include <string>
#include <vector>

#include "mtpath/bivar_poly.hpp"

namespace mtpath {

enum class step : unsigned char { north, east, diag };

inline char step_char(step s) {
    switch (s) {
        case step::north: return 'N';
        case step::east: return 'E';
        default: return 'D';
    }
}

/// Lattice path from (0,0) to (m*n, n) over steps N=(0,1), E=(1,0), D=(1,1),
/// staying weakly above x = m*y and starting with at least t north steps.
/// Pure Dyck paths use no D steps.
struct lattice_path {
    int m = 1;
    int t = 1;
    std::vector<step> steps;

    int height() const {
        int n = 0;
        for (step s : steps)
            if (s != step::east) ++n;
        return n;
    }

    std::string to_string() const {
        std::string out;
        out.reserve(steps.size());
        for (step s : steps) out.push_back(step_char(s));
        return out;
    }

    static lattice_path from_string(int m, int t, const std::string& text) {
        lattice_path p{m, t, {}};
        for (char c : text) {
            switch (c) {
                case 'N': p.steps.push_back(step::north); break;
                case 'E': p.steps.push_back(step::east); break;
                case 'D': p.steps.push_back(step::diag); break;
                default: throw std::invalid_argument("lattice_path: bad step character");
            }
        }
        return p;
    }

    bool is_dyck() const {
        for (step s : steps)
            if (s == step::diag) return false;
        return true;
    }

    /// Structural validity: endpoint, start condition, prefix condition.
    bool valid() const {
        if (m <= 0 || t <= 0) return false;
        long long x = 0, y = 0;
        int norths = 0, easts = 0, diags = 0;
        for (step s : steps) {
            if (s != step::north && y < t) return false;  // must start with >= t norths
            switch (s) {
                case step::north:
                    ++y;
                    ++norths;
                    break;
                case step::east:
                    ++x;
                    ++easts;
                    break;
                case step::diag:
                    ++x;
                    ++y;
                    ++diags;
                    break;
            }
            if (x > static_cast<long long>(m) * y) return false;
        }
        int n = norths + diags;
        if (t > n) return false;
        return easts + diags == static_cast<long long>(m) * n;
    }

    bool is_small() const {
        long long x = 0, y = 0;
        for (step s : steps) {
            if (s == step::diag && x == static_cast<long long>(m) * y) return false;
            x += s == step::north ? 0 : 1;
            y += s == step::east ? 0 : 1;
        }
        return true;
    }

    bool is_positive() const {
        long long x = 0, y = 0;
        const long long n = height();
        for (step s : steps) {
            x += s == step::north ? 0 : 1;
            y += s == step::east ? 0 : 1;
            bool at_end = x == static_cast<long long>(m) * n && y == n;
            if (x == static_cast<long long>(m) * y && !at_end) return false;
        }
        return true;
    }

    bool is_m_divisible() const {
        long long x = 0;
        for (step s : steps) {
            if (s != step::north) ++x;
            if (s == step::diag && x % m != 0) return false;
        }
        return true;
    }

    friend bool operator==(const lattice_path&, const lattice_path&) = default;
    friend bool operator<(const lattice_path& a, const lattice_path& b) { return a.steps < b.steps; }
};

/// All statistics of a path, computed by one left-to-right scan.
/// Residue convention: a valley with x divisible by m is an m-valley
/// (index m, never 0).
struct path_stats {
    int val = 0;                        // valleys (EN corners)
    std::vector<int> val_by_residue;    // index 1..m; [0] unused
    int ret = 0;                        // valleys on the line x = m*y
    int dg = 0;                         // diagonal steps
    int dg_m = 0;                       // diagonals ending at x divisible by m
    int cd = 0;                         // cornered diagonals (im-1, i) -> (im, i+1)
    int codim = 0;                      // n - t - dg
};

inline path_stats compute_stats(const std::vector<step>& steps, int m, int t) {
    path_stats st;
    st.val_by_residue.assign(m + 1, 0);
    long long x = 0, y = 0;
    step prev = step::north;
    bool have_prev = false;
    int n = 0;
    for (step s : steps) {
        if (s == step::north && have_prev && prev == step::east) {
            ++st.val;
            int res = static_cast<int>(x % m);
            if (res == 0) res = m;
            ++st.val_by_residue[res];
            if (x == m * y) ++st.ret;
        }
        if (s == step::diag) {
            ++st.dg;
            if ((x + 1) % m == 0) ++st.dg_m;
            if (x == m * y - 1) ++st.cd;
        }
        x += s == step::north ? 0 : 1;
        y += s == step::east ? 0 : 1;
        if (s != step::east) ++n;
        prev = s;
        have_prev = true;
    }
    st.codim = n - t - st.dg;
    return st;
}

inline path_stats compute_stats(const lattice_path& p) { return compute_stats(p.steps, p.m, p.t); }

namespace detail {

inline void check_path_params(int m, int n, int t) {
    if (m <= 0 || n <= 0 || t <= 0) throw std::invalid_argument("path parameters must be positive");
    if (t > n) throw std::invalid_argument("path parameter t must satisfy t <= n");
}

} // namespace detail

/// Streaming generator for the (m,t)-Dyck paths of height n, in lexicographic
/// step order with N < E.  The visitor receives the step vector of each path.
template <typename Visitor>
void for_each_dyck(int m, int n, int t, bool no_returns, Visitor&& visit) {
    detail::check_path_params(m, n, t);
    std::vector<step> buf;
    buf.reserve((m + 1) * n);
    const long long total_x = static_cast<long long>(m) * n;

    auto rec = [&](auto&& self, long long x, long long y, step prev) -> void {
        if (y == n && x == total_x) {
            visit(static_cast<const std::vector<step>&>(buf));
            return;
        }
        if (y < n) {
            bool forms_return = prev == step::east && x == m * y;
            if (!(no_returns && forms_return)) {
                buf.push_back(step::north);
                self(self, x, y + 1, step::north);
                buf.pop_back();
            }
        }
        if (x < total_x && y >= t && x + 1 <= m * y) {
            buf.push_back(step::east);
            self(self, x + 1, y, step::east);
            buf.pop_back();
        }
    };
    rec(rec, 0, 0, step::north);
}

enum class schroder_variant { small, small_mdiv, positive, positive_mdiv };

inline bool variant_mdiv(schroder_variant v) {
    return v == schroder_variant::small_mdiv || v == schroder_variant::positive_mdiv;
}

inline bool variant_positive(schroder_variant v) {
    return v == schroder_variant::positive || v == schroder_variant::positive_mdiv;
}

/// Streaming generator for small (m,t)-Schroeder paths of height n and their
/// m-divisible / positive refinements, lexicographic with N < E < D.
template <typename Visitor>
void for_each_schroder(int m, int n, int t, schroder_variant variant, Visitor&& visit) {
    detail::check_path_params(m, n, t);
    std::vector<step> buf;
    buf.reserve((m + 1) * n);
    const long long total_x = static_cast<long long>(m) * n;
    const bool mdiv = variant_mdiv(variant);
    const bool positive = variant_positive(variant);

    auto rec = [&](auto&& self, long long x, long long y) -> void {
        if (y == n && x == total_x) {
            visit(static_cast<const std::vector<step>&>(buf));
            return;
        }
        if (y < n) {
            buf.push_back(step::north);
            self(self, x, y + 1);
            buf.pop_back();
        }
        if (x < total_x && y >= t && x + 1 <= m * y) {
            bool lands_on_line = x + 1 == m * y;
            bool at_end = x + 1 == total_x && y == n;
            if (!(positive && lands_on_line && !at_end)) {
                buf.push_back(step::east);
                self(self, x + 1, y);
                buf.pop_back();
            }
        }
        if (x < total_x && y < n && y >= t && x < m * y && (!mdiv || (x + 1) % m == 0)) {
            // x < m*y keeps the diagonal off the boundary line (smallness);
            // weak prefix condition then holds automatically.
            buf.push_back(step::diag);
            self(self, x + 1, y + 1);
            buf.pop_back();
        }
    };
    rec(rec, 0, 0);
}

inline std::vector<lattice_path> enumerate_dyck(int m, int n, int t, bool no_returns = false) {
    std::vector<lattice_path> out;
    for_each_dyck(m, n, t, no_returns,
                  [&](const std::vector<step>& s) { out.push_back({m, t, s}); });
    return out;
}

inline std::vector<lattice_path> enumerate_schroder(int m, int n, int t, schroder_variant variant) {
    std::vector<lattice_path> out;
    for_each_schroder(m, n, t, variant,
                      [&](const std::vector<step>& s) { out.push_back({m, t, s}); });
    return out;
}

/// Statistic selector for aggregation into generating polynomials.
struct stat_selector {
    enum class kind {
        valleys,
        residue_valleys,  // uses residue field, 1..m
        returns,
        diagonals,
        m_diagonals,
        cornered_diagonals,
        codim,
        codim_minus_returns,
    };

    kind which = kind::valleys;
    int residue = 0;

    static stat_selector valleys() { return {kind::valleys, 0}; }
    static stat_selector residue_valleys(int i) { return {kind::residue_valleys, i}; }
    static stat_selector m_valleys(int m) { return {kind::residue_valleys, m}; }
    static stat_selector returns() { return {kind::returns, 0}; }
    static stat_selector diagonals() { return {kind::diagonals, 0}; }
    static stat_selector m_diagonals() { return {kind::m_diagonals, 0}; }
    static stat_selector cornered_diagonals() { return {kind::cornered_diagonals, 0}; }
    static stat_selector codim() { return {kind::codim, 0}; }
    static stat_selector codim_minus_returns() { return {kind::codim_minus_returns, 0}; }

    int eval(const path_stats& st) const {
        switch (which) {
            case kind::valleys: return st.val;
            case kind::residue_valleys: return st.val_by_residue.at(residue);
            case kind::returns: return st.ret;
            case kind::diagonals: return st.dg;
            case kind::m_diagonals: return st.dg_m;
            case kind::cornered_diagonals: return st.cd;
            case kind::codim: return st.codim;
            case kind::codim_minus_returns: return st.codim - st.ret;
        }
        return 0;
    }
};

namespace detail {

/// Dense machine-word counter grid, promoted to bigint coefficients at the end.
class stat_accumulator {
public:
    explicit stat_accumulator(int max_stat) : side_(max_stat + 1), counts_(side_ * side_, 0) {}

    void record(int sx, int sy) {
        if (sx < 0 || sy < 0 || sx >= side_ || sy >= side_)
            throw std::logic_error("statistic out of expected range");
        ++counts_[static_cast<std::size_t>(sx) * side_ + sy];
    }

    bivar_poly to_poly() const {
        bivar_poly p;
        for (int a = 0; a < side_; ++a)
            for (int b = 0; b < side_; ++b) {
                unsigned long long c = counts_[static_cast<std::size_t>(a) * side_ + b];
                if (c != 0) p.add_term(a, b, bigint(static_cast<long long>(c)));
            }
        return p;
    }

private:
    int side_;
    std::vector<unsigned long long> counts_;
};

} // namespace detail

/// Sum of x^{xstat(P)} y^{ystat(P)} over an explicit path list.
/// All paths must share (m, n, t).
inline bivar_poly brute_polynomial(const std::vector<lattice_path>& paths, stat_selector xstat,
                                   stat_selector ystat) {
    if (paths.empty()) return bivar_poly();
    const int m = paths.front().m, t = paths.front().t;
    const int n = paths.front().height();
    for (const auto& p : paths)
        if (p.m != m || p.t != t || p.height() != n)
            throw std::invalid_argument("brute_polynomial: mixed path parameters");
    detail::stat_accumulator acc(n + 1);
    for (const auto& p : paths) {
        path_stats st = compute_stats(p);
        acc.record(xstat.eval(st), ystat.eval(st));
    }
    return acc.to_poly();
}

/// Streaming brute-force polynomial over a Dyck family, no materialized list.
inline bivar_poly brute_dyck_polynomial(int m, int n, int t, bool no_returns, stat_selector xstat,
                                        stat_selector ystat) {
    detail::stat_accumulator acc(n + 1);
    for_each_dyck(m, n, t, no_returns, [&](const std::vector<step>& s) {
        path_stats st = compute_stats(s, m, t);
        acc.record(xstat.eval(st), ystat.eval(st));
    });
    return acc.to_poly();
}

/// Streaming brute-force polynomial over a Schroeder family.
inline bivar_poly brute_schroder_polynomial(int m, int n, int t, schroder_variant variant,
                                            stat_selector xstat, stat_selector ystat) {
    detail::stat_accumulator acc(n + 1);
    for_each_schroder(m, n, t, variant, [&](const std::vector<step>& s) {
        path_stats st = compute_stats(s, m, t);
        acc.record(xstat.eval(st), ystat.eval(st));
    });
    return acc.to_poly();
}

/// Streaming variant aggregating several statistic pairs in one sweep.
template <typename ForEach>
std::vector<bivar_poly> brute_polynomials_multi(
    int n, ForEach&& sweep, const std::vector<std::pair<stat_selector, stat_selector>>& stats,
    int m, int t) {
    std::vector<detail::stat_accumulator> accs(stats.size(), detail::stat_accumulator(n + 1));
    sweep([&](const std::vector<step>& s) {
        path_stats st = compute_stats(s, m, t);
        for (std::size_t i = 0; i < stats.size(); ++i)
            accs[i].record(stats[i].first.eval(st), stats[i].second.eval(st));
    });
    std::vector<bivar_poly> out;
    out.reserve(accs.size());
    for (const auto& a : accs) out.push_back(a.to_poly());
    return out;
}

} // namespace mtpath
