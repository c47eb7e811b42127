// lattice.hpp -- finite lattice sets E <= N^m (identified with their antichain
// of minimal generators), the counting functions attached to them, and the
// recursive computation of the Kolchin polynomial
//
//   omega_E(s) = #{ xi in N^m : ord xi <= s, xi not >= any generator }
//
// which agrees with a numerical polynomial for all large s.

#pragma once

#include "bigint.hpp"
#include "binomial.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kolchin {

using multidegree = std::vector<int>;

inline long ord(const multidegree& xi)
{
    long sum = 0;
    for (int u : xi)
        sum += u;
    return sum;
}

// Product (componentwise) order.
inline bool dominates(const multidegree& xi, const multidegree& eta)
{
    for (std::size_t i = 0; i < xi.size(); ++i)
        if (xi[i] < eta[i])
            return false;
    return true;
}

inline bool strictly_below(const multidegree& xi, const multidegree& eta)
{
    return dominates(eta, xi) && xi != eta;
}

inline multidegree lub(const multidegree& a, const multidegree& b)
{
    multidegree out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = std::max(a[i], b[i]);
    return out;
}

// The orderly ranking: compare by order first, then lexicographically by
// coordinates.  A total order on N^m; ties are impossible for distinct points.
inline bool orderly_less(const multidegree& a, const multidegree& b)
{
    long oa = ord(a), ob = ord(b);
    if (oa != ob)
        return oa < ob;
    return a < b;
}

// A lattice set, stored canonically: the antichain of minimal generators,
// deduplicated and sorted in ascending orderly order.  The represented set is
// { xi : xi >= some generator }; its complement in N^m is what omega counts.
struct lattice_set {
    int m = 0;
    std::vector<multidegree> mins;

    bool contains_zero() const
    {
        return mins.size() == 1 && ord(mins.front()) == 0;
    }

    // Membership of xi in the generated up-set.
    bool covers(const multidegree& xi) const
    {
        for (const auto& g : mins)
            if (dominates(xi, g))
                return true;
        return false;
    }

    friend bool operator==(const lattice_set& a, const lattice_set& b)
    {
        return a.m == b.m && a.mins == b.mins;
    }
};

// Reduce an arbitrary generating family to the canonical antichain.
inline lattice_set minimal_elements(int m, std::vector<multidegree> points)
{
    if (m < 0)
        throw std::invalid_argument("lattice_set: m must be >= 0");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != m)
            throw std::invalid_argument("lattice_set: point arity does not match m");
        for (int u : p)
            if (u < 0)
                throw std::invalid_argument("lattice_set: negative coordinate");
    }
    std::sort(points.begin(), points.end(), orderly_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    lattice_set out;
    out.m = m;
    for (const auto& p : points) {
        bool redundant = false;
        // earlier kept points are orderly-smaller, so only they can sit below p
        for (const auto& q : out.mins)
            if (dominates(p, q)) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.mins.push_back(p);
    }
    return out;
}

// Enumerate every point of N^m with ord == d, in descending orderly
// (= descending lexicographic, within the level) order.
inline void for_each_point_of_order(int m, long d, const std::function<void(const multidegree&)>& fn)
{
    if (m == 0) {
        if (d == 0) {
            multidegree empty;
            fn(empty);
        }
        return;
    }
    multidegree point(static_cast<std::size_t>(m), 0);
    std::function<void(int, long)> rec = [&](int pos, long budget) {
        if (pos == m - 1) {
            point[static_cast<std::size_t>(pos)] = static_cast<int>(budget);
            fn(point);
            return;
        }
        for (long u = budget; u >= 0; --u) {
            point[static_cast<std::size_t>(pos)] = static_cast<int>(u);
            rec(pos + 1, budget - u);
        }
    };
    rec(0, d);
}

// #{ xi : ord xi == d, xi not in E }.  Counts fit comfortably in 64 bits for
// every argument range this library enumerates; the bigint conversion happens
// at the API boundary.
inline bigint hilbert_samuel(const lattice_set& E, long d)
{
    if (d < 0)
        throw std::invalid_argument("hilbert_samuel: d must be >= 0");
    long long count = 0;
    for_each_point_of_order(E.m, d, [&](const multidegree& p) {
        if (!E.covers(p))
            ++count;
    });
    return count;
}

// #{ xi : ord xi <= s, xi not in E }.
inline bigint volume(const lattice_set& E, long s)
{
    if (s < 0)
        throw std::invalid_argument("volume: s must be >= 0");
    bigint total = 0;
    for (long d = 0; d <= s; ++d)
        total += hilbert_samuel(E, d);
    return total;
}

// A set is compressed when, level by level, the points of E form an initial
// segment of the level in *descending* orderly order: once a point outside E
// shows up in that scan, no later point of the level may lie in E.  Levels
// 0..cutoff are checked; callers pass cutoff >= 1 + (max generator order) + m,
// beyond which the level pattern repeats.
inline bool is_compressed(const lattice_set& E, long cutoff)
{
    for (long d = 0; d <= cutoff; ++d) {
        bool seen_outside = false;
        bool ok = true;
        for_each_point_of_order(E.m, d, [&](const multidegree& p) {
            if (!ok)
                return;
            if (E.covers(p)) {
                if (seen_outside)
                    ok = false;
            } else {
                seen_outside = true;
            }
        });
        if (!ok)
            return false;
    }
    return true;
}

// ord of the componentwise maximum of the generators: beyond this level the
// counting function provably agrees with the Kolchin polynomial.
inline long stability_bound(const lattice_set& E)
{
    if (E.mins.empty())
        return 0;
    multidegree top(static_cast<std::size_t>(E.m), 0);
    for (const auto& g : E.mins)
        top = lub(top, g);
    return ord(top);
}

// ---------------------------------------------------------------------------
// Kolchin polynomial via the splitting recursion.
//
// For nonempty E not containing 0, pick the orderly-largest generator and let
// k be the position of its last nonzero coordinate.  Splitting N^m \ E by the
// k-th coordinate (zero / positive) gives
//
//   omega_E(t) = omega_{E_1}(t) + omega_{E_2}(t - 1)
//
// where E_1 <= N^{m-1} is generated by the generators with k-th coordinate 0
// (coordinate k dropped) and E_2 <= N^m by the generators with k-th
// coordinate decremented (clamped at 0).  The pivot's coordinate sum strictly
// drops in E_2 and the arity drops in E_1, so the recursion terminates; a
// process-wide memo keyed by the canonical generator list makes repeated and
// concurrent calls cheap.
// ---------------------------------------------------------------------------
inline numerical_polynomial kolchin_polynomial(const lattice_set& E)
{
    if (E.mins.empty()) {
        // free case: all of N^m survives, C(t+m, m) many points up to order t
        return numerical_polynomial::basis(E.m);
    }
    if (E.contains_zero())
        return numerical_polynomial();

    using memo_key = std::pair<int, std::vector<multidegree>>;
    static std::map<memo_key, numerical_polynomial> memo;
    static std::mutex memo_mutex;

    memo_key key{E.m, E.mins};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }

    const multidegree& pivot = E.mins.back(); // orderly-largest generator
    int k = -1;
    for (int i = E.m - 1; i >= 0; --i)
        if (pivot[static_cast<std::size_t>(i)] > 0) {
            k = i;
            break;
        }
    // pivot != 0 here, so k is well defined

    std::vector<multidegree> slice;
    std::vector<multidegree> shifted;
    for (const auto& g : E.mins) {
        if (g[static_cast<std::size_t>(k)] == 0) {
            multidegree reduced;
            reduced.reserve(g.size() - 1);
            for (std::size_t i = 0; i < g.size(); ++i)
                if (static_cast<int>(i) != k)
                    reduced.push_back(g[i]);
            slice.push_back(std::move(reduced));
        }
        multidegree moved = g;
        if (moved[static_cast<std::size_t>(k)] > 0)
            --moved[static_cast<std::size_t>(k)];
        shifted.push_back(std::move(moved));
    }

    numerical_polynomial result = kolchin_polynomial(minimal_elements(E.m - 1, std::move(slice))) +
                                  shift_back(kolchin_polynomial(minimal_elements(E.m, std::move(shifted))));

    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(key), result);
    return result;
}

// Degree of the Kolchin polynomial; -1 for the zero polynomial, where both the
// type and the typical dimension are undefined.
inline int lattice_type(const numerical_polynomial& p)
{
    return p.degree();
}

inline bigint typical_dimension(const numerical_polynomial& p)
{
    if (p.is_zero())
        throw std::invalid_argument("typical_dimension: undefined for the zero polynomial");
    return p.leading();
}

// ---------------------------------------------------------------------------
// Indexed families: n lattice sets over the same arity, one per differential
// indeterminate; the family polynomial is the sum of the members'.
// ---------------------------------------------------------------------------
struct indexed_family {
    int n = 0;
    std::vector<lattice_set> sets; // sets[j-1] belongs to index j
};

inline indexed_family make_family(std::vector<lattice_set> sets)
{
    if (sets.empty())
        throw std::invalid_argument("indexed_family: needs at least one set");
    for (const auto& s : sets)
        if (s.m != sets.front().m)
            throw std::invalid_argument("indexed_family: members must share the same m");
    indexed_family f;
    f.n = static_cast<int>(sets.size());
    f.sets = std::move(sets);
    return f;
}

inline numerical_polynomial family_polynomial(const indexed_family& f)
{
    numerical_polynomial sum;
    for (const auto& s : f.sets)
        sum += kolchin_polynomial(s);
    return sum;
}

// Tail sums of absolute coefficient values: S_j = |a_m| + ... + |a_{m-j}|,
// j = 0..m, with a_i read from the binomial-basis expansion (0 above the
// degree).  These are the quantities the order-sum bound controls.
inline std::vector<bigint> coefficient_sums(const numerical_polynomial& p, int m)
{
    if (m < 0)
        throw std::invalid_argument("coefficient_sums: m must be >= 0");
    std::vector<bigint> sums;
    sums.reserve(static_cast<std::size_t>(m) + 1);
    bigint acc = 0;
    for (int j = 0; j <= m; ++j) {
        acc += abs(p.coeff(m - j));
        sums.push_back(acc);
    }
    return sums;
}

// ---------------------------------------------------------------------------
// Connectivity of generator pairs, used by the sharpness criteria.  Two
// generators xi, xi' are "connected within caps (v, e)" when some chain
// xi = eta_0, eta_1, ..., eta_k = xi' of generators exists with every interior
// eta_i strictly below lub(xi, xi'), every vertex of order <= v, and every
// consecutive pair satisfying ord lub(eta_i, eta_{i+1}) <= e.  The endpoints
// are always admitted as vertices regardless of the strictness condition.
// ---------------------------------------------------------------------------
inline bool connected_within(const lattice_set& M, const multidegree& from, const multidegree& to,
                             long vertex_cap, long edge_cap)
{
    if (from == to)
        return true;
    multidegree top = lub(from, to);
    std::vector<const multidegree*> vertices;
    std::size_t start = static_cast<std::size_t>(-1), goal = static_cast<std::size_t>(-1);
    for (const auto& g : M.mins) {
        bool endpoint = (g == from) || (g == to);
        if (!endpoint && (ord(g) > vertex_cap || !strictly_below(g, top)))
            continue;
        if (endpoint && ord(g) > vertex_cap)
            continue;
        if (g == from)
            start = vertices.size();
        if (g == to)
            goal = vertices.size();
        vertices.push_back(&g);
    }
    if (start == static_cast<std::size_t>(-1) || goal == static_cast<std::size_t>(-1))
        return false;
    std::vector<char> seen(vertices.size(), 0);
    std::vector<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
        std::size_t cur = queue.back();
        queue.pop_back();
        if (cur == goal)
            return true;
        for (std::size_t next = 0; next < vertices.size(); ++next) {
            if (seen[next])
                continue;
            if (ord(lub(*vertices[cur], *vertices[next])) <= edge_cap) {
                seen[next] = 1;
                queue.push_back(next);
            }
        }
    }
    return false;
}

struct pair_connectivity {
    multidegree from;
    multidegree to;
    bool connected = false;
};

struct connectivity_report {
    bool all_connected = true;
    std::vector<pair_connectivity> pairs;
};

// The chain condition attached to level d: pairs of generators of order
// <= d - 1, interior vertices of order <= d - 1, consecutive lubs of order
// <= d.
inline connectivity_report connectivity_check(const lattice_set& M, long d)
{
    connectivity_report report;
    for (std::size_t i = 0; i < M.mins.size(); ++i) {
        if (ord(M.mins[i]) > d - 1)
            continue;
        for (std::size_t j = i + 1; j < M.mins.size(); ++j) {
            if (ord(M.mins[j]) > d - 1)
                continue;
            pair_connectivity pc;
            pc.from = M.mins[i];
            pc.to = M.mins[j];
            pc.connected = connected_within(M, pc.from, pc.to, d - 1, d);
            if (!pc.connected)
                report.all_connected = false;
            report.pairs.push_back(std::move(pc));
        }
    }
    return report;
}

// Disconnection predicates at a level h: some pair of generators of order <= h
// admits no chain with vertex cap h and edge cap h (respectively h + 1).
inline bool disconnected_at(const lattice_set& M, long h, long edge_cap)
{
    for (std::size_t i = 0; i < M.mins.size(); ++i) {
        if (ord(M.mins[i]) > h)
            continue;
        for (std::size_t j = i + 1; j < M.mins.size(); ++j) {
            if (ord(M.mins[j]) > h)
                continue;
            if (!connected_within(M, M.mins[i], M.mins[j], h, edge_cap))
                return true;
        }
    }
    return false;
}

inline bool dagger(const lattice_set& M, long h)
{
    return disconnected_at(M, h, h);
}

inline bool dagger_prime(const lattice_set& M, long h)
{
    return disconnected_at(M, h, h + 1);
}

} // namespace kolchin
