#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "mtpath/paths.hpp"

namespace mtpath {

/// A Dyck path together with a subset of its valleys.  Marks are the valleys
/// that get CONVERTED to diagonal steps by to_schroder; callers wanting the
/// complementary selection flip the subset themselves.  Marks are kept
/// sorted by x-coordinate.
struct marked_path {
    lattice_path base;
    std::vector<std::pair<long long, long long>> marks;

    friend bool operator==(const marked_path&, const marked_path&) = default;
};

/// Valley coordinates of a path, left to right; m-valleys only when
/// mdiv_only is set.
inline std::vector<std::pair<long long, long long>> valley_coordinates(const lattice_path& p,
                                                                       bool mdiv_only) {
    std::vector<std::pair<long long, long long>> out;
    long long x = 0, y = 0;
    step prev = step::north;
    bool have_prev = false;
    for (step s : p.steps) {
        if (s == step::north && have_prev && prev == step::east)
            if (!mdiv_only || x % p.m == 0) out.emplace_back(x, y);
        x += s == step::north ? 0 : 1;
        y += s == step::east ? 0 : 1;
        prev = s;
        have_prev = true;
    }
    return out;
}

/// Stream all (path, mark subset) pairs of the universe; subsets iterate in
/// bitmask order over the left-to-right valley list.
template <typename Visitor>
void for_each_marked(int m, int n, int t, bool mdiv_only, Visitor&& visit) {
    for_each_dyck(m, n, t, false, [&](const std::vector<step>& steps) {
        lattice_path base{m, t, steps};
        auto valleys = valley_coordinates(base, mdiv_only);
        const std::size_t v = valleys.size();
        for (std::size_t mask = 0; mask < (1ull << v); ++mask) {
            marked_path mp{base, {}};
            for (std::size_t i = 0; i < v; ++i)
                if (mask & (1ull << i)) mp.marks.push_back(valleys[i]);
            visit(mp);
        }
    });
}

inline std::vector<marked_path> enumerate_marked(int m, int n, int t, bool mdiv_only) {
    std::vector<marked_path> out;
    for_each_marked(m, n, t, mdiv_only, [&](const marked_path& mp) { out.push_back(mp); });
    return out;
}

/// Replace every marked valley (p,q) by a diagonal step (p-1,q) -> (p,q+1).
/// The image is a small (m,t)-Schroeder path with
///   val(base) = val(image) + dg(image), ret(base) = ret(image) + cd(image),
/// and it is m-divisible exactly when all marks are m-valleys.
inline lattice_path to_schroder(const marked_path& mp) {
    auto mark_set = mp.marks;
    std::sort(mark_set.begin(), mark_set.end());
    const auto valleys = valley_coordinates(mp.base, false);
    for (const auto& mk : mark_set)
        if (std::find(valleys.begin(), valleys.end(), mk) == valleys.end())
            throw std::invalid_argument("to_schroder: mark is not a valley of the base path");
    lattice_path out{mp.base.m, mp.base.t, {}};
    long long x = 0, y = 0;
    const auto& steps = mp.base.steps;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == step::east && i + 1 < steps.size() && steps[i + 1] == step::north &&
            std::binary_search(mark_set.begin(), mark_set.end(), std::pair{x + 1, y})) {
            out.steps.push_back(step::diag);
            x += 1;
            y += 1;
            ++i;  // consume the N of the EN pair
            continue;
        }
        out.steps.push_back(steps[i]);
        x += steps[i] == step::north ? 0 : 1;
        y += steps[i] == step::east ? 0 : 1;
    }
    return out;
}

/// Inverse direction: convert every diagonal step (p,q) -> (p+1,q+1) into an
/// EN pair, recording the created valley (p+1, q) as a mark.  Input must be
/// a small path (no diagonal starting on x = m*y).
inline marked_path from_schroder(const lattice_path& s) {
    marked_path out{{s.m, s.t, {}}, {}};
    long long x = 0, y = 0;
    for (step st : s.steps) {
        if (st == step::diag) {
            if (x == static_cast<long long>(s.m) * y)
                throw std::domain_error("from_schroder: diagonal starts on the boundary line");
            out.base.steps.push_back(step::east);
            out.base.steps.push_back(step::north);
            out.marks.emplace_back(x + 1, y);
            x += 1;
            y += 1;
        } else {
            out.base.steps.push_back(st);
            x += st == step::north ? 0 : 1;
            y += st == step::east ? 0 : 1;
        }
    }
    std::sort(out.marks.begin(), out.marks.end());
    return out;
}

} // namespace mtpath
