#pragma once

#include <utility>
#include <vector>

#include "mtpath/bivar_poly.hpp"

namespace mtpath {

/// Lexicographic weight "units + eps * epsilon" used to decide strict
/// difference-constraint systems exactly: x_v <= x_u + w edges with an
/// infinitesimal epsilon encode strict inequalities without floating point.
struct lex_weight {
    long long units = 0;
    long long eps = 0;

    friend lex_weight operator+(lex_weight a, lex_weight b) {
        return {a.units + b.units, a.eps + b.eps};
    }
    friend bool operator<(lex_weight a, lex_weight b) {
        if (a.units != b.units) return a.units < b.units;
        return a.eps < b.eps;
    }
    friend bool operator==(lex_weight, lex_weight) = default;
};

struct diff_edge {
    int from = 0;  // x_to <= x_from + w
    int to = 0;
    lex_weight w;
};

/// Feasibility of the conjunction of x_to - x_from <= w constraints over the
/// reals: Bellman-Ford negative-cycle test with lexicographic weights.
inline bool diff_system_feasible(int n, const std::vector<diff_edge>& edges) {
    std::vector<lex_weight> dist(n, lex_weight{0, 0});
    for (int pass = 0; pass < n; ++pass) {
        bool changed = false;
        for (const auto& e : edges) {
            lex_weight cand = dist[e.from] + e.w;
            if (cand < dist[e.to]) {
                dist[e.to] = cand;
                changed = true;
            }
        }
        if (!changed) return true;
    }
    for (const auto& e : edges)
        if (dist[e.from] + e.w < dist[e.to]) return false;
    return true;
}

/// Dominant region of the m-Catalan arrangement in the cone
/// x_1 > x_2 > ... > x_n, described by capped difference floors:
/// floors[(i,j)] = k < m means k < x_i - x_j < k+1, and = m means
/// x_i - x_j > m.  Indices are 0-based here.
struct region_code {
    int n = 1;
    int m = 1;
    std::vector<int> floors;  // pair (i,j), i<j, lex order

    static std::size_t pair_index(int n, int i, int j) {
        return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 +
               (j - i - 1);
    }

    int floor_at(int i, int j) const { return floors[pair_index(n, i, j)]; }

    friend bool operator==(const region_code&, const region_code&) = default;
    friend bool operator<(const region_code& a, const region_code& b) { return a.floors < b.floors; }
};

namespace detail {

/// Constraints of the first `assigned` pairs of a (possibly partial) code;
/// pairs listed in `equalities` get x_i - x_j = m instead of their strict
/// band.
inline std::vector<diff_edge> region_edges(const region_code& r, std::size_t assigned,
                                           const std::vector<std::pair<int, int>>& equalities = {}) {
    std::vector<diff_edge> edges;
    std::size_t idx = 0;
    for (int i = 0; i < r.n; ++i)
        for (int j = i + 1; j < r.n; ++j) {
            if (idx >= assigned) return edges;
            bool eq = false;
            for (const auto& [p, q] : equalities)
                if (p == i && q == j) eq = true;
            if (eq) {
                edges.push_back({i, j, {-r.m, 0}});  // x_i - x_j >= m
                edges.push_back({j, i, {r.m, 0}});   // x_i - x_j <= m
            } else {
                int k = r.floors[idx];
                edges.push_back({i, j, {-k, -1}});  // x_i - x_j > k
                if (k < r.m) edges.push_back({j, i, {k + 1, -1}});  // x_i - x_j < k+1
            }
            ++idx;
        }
    return edges;
}

inline void check_arrangement_scale(int m, int n, bool unrestricted) {
    if (m <= 0 || n <= 0) throw std::invalid_argument("arrangement parameters must be positive");
    if (!unrestricted && (m > 3 || n > 5))
        throw std::invalid_argument(
            "arrangement scale limit (m <= 3, n <= 5) exceeded; pass unrestricted to override");
}

} // namespace detail

inline bool region_feasible(const region_code& r) {
    return diff_system_feasible(r.n, detail::region_edges(r, r.floors.size()));
}

/// All dominant regions, depth-first over the floor entries with incremental
/// infeasibility pruning; emitted in lexicographic code order.
inline std::vector<region_code> enumerate_regions(int m, int n, bool unrestricted = false) {
    detail::check_arrangement_scale(m, n, unrestricted);
    std::vector<region_code> out;
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    region_code r{n, m, std::vector<int>(pairs, 0)};

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == pairs) {
            out.push_back(r);
            return;
        }
        for (int k = 0; k <= m; ++k) {
            r.floors[idx] = k;
            if (diff_system_feasible(n, detail::region_edges(r, idx + 1))) self(self, idx + 1);
        }
        r.floors[idx] = 0;
    };
    rec(rec, 0);
    return out;
}

struct wall_sets {
    std::vector<std::pair<int, int>> separating;  // pairs (i,j), i<j, of x_i - x_j = m walls
    std::vector<std::pair<int, int>> simple;      // the j = i+1 subset
};

/// Separating walls of type x_i - x_j = m: the pair must sit on the far side
/// (floor = m) and the hyperplane must support the region, i.e. turning that
/// single constraint into an equality while keeping all others strict stays
/// feasible.
inline wall_sets separating_walls(const region_code& r) {
    if (!region_feasible(r)) throw std::invalid_argument("separating_walls: infeasible region code");
    wall_sets w;
    for (int i = 0; i < r.n; ++i)
        for (int j = i + 1; j < r.n; ++j) {
            if (r.floor_at(i, j) != r.m) continue;
            auto edges = detail::region_edges(r, r.floors.size(), {{i, j}});
            if (diff_system_feasible(r.n, edges)) {
                w.separating.emplace_back(i, j);
                if (j == i + 1) w.simple.emplace_back(i, j);
            }
        }
    return w;
}

/// Sum over dominant regions of x^{sw(R)} y^{ssw(R)}; equals the A family at t=1.
inline bivar_poly region_h_polynomial(int m, int n, bool unrestricted = false) {
    bivar_poly p;
    for (const auto& r : enumerate_regions(m, n, unrestricted)) {
        wall_sets w = separating_walls(r);
        p.add_term(static_cast<int>(w.separating.size()), static_cast<int>(w.simple.size()),
                   bigint(1));
    }
    return p;
}

/// Flat of the restricted arrangement: a region R together with a subset S of
/// its separating walls turned into equalities.  dim = n-1-|S| (the selected
/// walls are independent; violations throw), ssw counts the simple separating
/// walls of R not contained in the flat.
struct flat_descriptor {
    region_code region;
    std::vector<std::pair<int, int>> walls;
    int dim = 0;
    int ssw = 0;
};

namespace detail {

inline bool wall_subset_independent(int n, const std::vector<std::pair<int, int>>& walls) {
    // x_i - x_j = m equations are independent iff the wall graph is a forest
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [i, j] : walls) {
        int a = find(i), b = find(j);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

} // namespace detail

inline std::vector<flat_descriptor> enumerate_flats(int m, int n, bool unrestricted = false) {
    std::vector<flat_descriptor> out;
    for (const auto& r : enumerate_regions(m, n, unrestricted)) {
        wall_sets w = separating_walls(r);
        const std::size_t sw = w.separating.size();
        for (std::size_t mask = 0; mask < (1ull << sw); ++mask) {
            flat_descriptor fd;
            fd.region = r;
            for (std::size_t b = 0; b < sw; ++b)
                if (mask & (1ull << b)) fd.walls.push_back(w.separating[b]);
            if (!detail::wall_subset_independent(n, fd.walls))
                throw std::logic_error("enumerate_flats: dependent separating wall subset");
            if (!diff_system_feasible(n, detail::region_edges(r, r.floors.size(), fd.walls)))
                throw std::logic_error("enumerate_flats: empty flat for a wall subset");
            fd.dim = n - 1 - static_cast<int>(fd.walls.size());
            int simple_in_subset = 0;
            for (const auto& [i, j] : fd.walls)
                if (j == i + 1) ++simple_in_subset;
            fd.ssw = static_cast<int>(w.simple.size()) - simple_in_subset;
            out.push_back(std::move(fd));
        }
    }
    return out;
}

/// Sum over flats of x^{dim(F)-ssw(F)} y^{ssw(F)}; equals the Chapoton
/// transform x^{n-1} A((x+1)/x, (y+1)/(x+1)) of the t=1 A family.
inline bivar_poly flats_f_polynomial(int m, int n, bool unrestricted = false) {
    bivar_poly p;
    for (const auto& fd : enumerate_flats(m, n, unrestricted))
        p.add_term(fd.dim - fd.ssw, fd.ssw, bigint(1));
    return p;
}

} // namespace mtpath
