// mu.hpp -- the extremal staircase sequence mu_1, ..., mu_L in N^m starting
// from (r0, 0, ..., 0), its volume and prefix polynomials, and the
// concatenated multi-block version from which the typical-dimension bound
// M(r, m, n, tau) is read off.

#pragma once

#include "bigint.hpp"
#include "bounds.hpp"
#include "lattice.hpp"
#include "polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kolchin {

struct mu_sequence {
    long long r0 = 0;
    int m = 0;
    std::vector<multidegree> elems; // mu_1, ..., mu_L in construction order
};

// Construct the sequence.  mu_1 = (r0, 0, ..., 0); mu_2 = (r0-1, 1, 0, ..., 0)
// is seeded explicitly (it shares mu_1's order; the successor rules produce
// mu_3 onward); from there each element follows from its predecessor by the
// staircase step of bounds.hpp: with j the last nonzero position among the
// first m-1 coordinates,
//
//   (u_1, ..., u_j, 0, ..., 0, u_m)  |->  (u_1, ..., u_j - 1, u_m + 2, 0, ..., 0)   (j < m-1)
//   (u_1, ..., u_{m-1}, u_m)         |->  (u_1, ..., u_{m-1} - 1, u_m + 2),
//
// stopping at the first element whose leading m-1 coordinates all vanish.
// Degenerate cases: r0 = 0 gives the single element (0, ..., 0); m = 1 gives
// the single element (r0).  The sequence length is step-capped: starting
// orders whose sequence could not be stored are refused.
inline mu_sequence build_mu(long long r0, int m, const cap_settings& caps = default_caps())
{
    if (r0 < 0)
        throw std::invalid_argument("build_mu: r0 must be >= 0");
    if (m < 1)
        throw std::invalid_argument("build_mu: m must be >= 1");
    mu_sequence seq;
    seq.r0 = r0;
    seq.m = m;
    const std::string expr = "mu-sequence(" + std::to_string(r0) + "," + std::to_string(m) + ")";
    if (r0 > static_cast<long long>(caps.max_steps))
        throw cap_error(expr, expr + ": sequence longer than " + std::to_string(caps.max_steps));

    multidegree first(static_cast<std::size_t>(m), 0);
    first[0] = static_cast<int>(r0);
    seq.elems.push_back(first);
    if (r0 == 0 || m == 1)
        return seq;

    std::vector<long long> u(static_cast<std::size_t>(m), 0);
    u[0] = r0 - 1;
    u[1] = 1;
    auto snapshot = [&]() {
        multidegree p(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            p[static_cast<std::size_t>(i)] = static_cast<int>(u[static_cast<std::size_t>(i)]);
        seq.elems.push_back(std::move(p));
    };
    snapshot();
    while (!detail::leading_zeros(u, m - 1)) {
        if (seq.elems.size() > caps.max_steps)
            throw cap_error(expr, expr + ": sequence longer than " + std::to_string(caps.max_steps));
        detail::staircase_step(u);
        snapshot();
    }
    return seq;
}

// Volume of the staircase: the number of points of N^m below the antichain,
// which the construction makes equal to the sum of last coordinates.
inline bigint vol_mu(const mu_sequence& seq)
{
    if (seq.m == 1)
        return seq.r0; // complement of {(r0)} in N^1
    bigint total = 0;
    for (const auto& e : seq.elems)
        total += e.back();
    return total;
}

inline lattice_set as_lattice_set(const mu_sequence& seq)
{
    return minimal_elements(seq.m, seq.elems);
}

// Kolchin polynomial of the prefix mu_1, ..., mu_ell, in closed form.  Each
// element past the first claims a "wedge" of points sitting above it and
// above no earlier element: for mu_j with last nonzero coordinate at
// (1-based) position q, that wedge is a translated copy of N^{m-q+1} based at
// order ord(mu_j).  Subtracting the wedge counts from the count below mu_1
// alone gives
//
//   omega(t) = sum_{u=0}^{r0-1} C(t - u + m - 1, m - 1)
//            - sum_{j=2}^{ell}  C(t - ord(mu_j) + k_j, k_j),   k_j = m - q_j + 1,
//
// expressed below through shift_back powers of the basis polynomials.  This
// is a different algorithm from the splitting recursion in lattice.hpp, and
// the two are required to agree coefficientwise (see the consistency suite).
inline numerical_polynomial omega_mu_prefix(const mu_sequence& seq, std::size_t ell)
{
    if (ell < 1 || ell > seq.elems.size())
        throw std::invalid_argument("omega_mu_prefix: ell out of range");
    numerical_polynomial poly;
    if (seq.r0 == 0)
        return poly; // zero polynomial: the staircase starts at the origin
    numerical_polynomial wedge = numerical_polynomial::basis(seq.m - 1);
    for (long long u = 0; u < seq.r0; ++u) {
        poly += wedge;
        wedge = shift_back(wedge);
    }
    for (std::size_t j = 1; j < ell; ++j) {
        const multidegree& e = seq.elems[j];
        int q = 0;
        for (int i = seq.m - 1; i >= 0; --i)
            if (e[static_cast<std::size_t>(i)] > 0) {
                q = i + 1;
                break;
            }
        // q >= 1: every element past the first has a nonzero coordinate
        poly -= shift_back(numerical_polynomial::basis(seq.m - q + 1), static_cast<unsigned long>(ord(e)));
    }
    return poly;
}

// ---------------------------------------------------------------------------
// Concatenated staircases: block j lives in the copy of N^m tagged with
// variable n - j + 1 and starts at order C(r, m, j-1), so consecutive blocks
// hand over exactly where the previous one's order bound ends.
// ---------------------------------------------------------------------------
struct concatenated_mu {
    long r = 0;
    int m = 0;
    int n = 0;
    std::vector<mu_sequence> blocks;    // blocks[j-1] is block j
    std::vector<int> variable_of_block; // parallel: n - j + 1
};

inline concatenated_mu build_concatenated(long r, int m, int n, const cap_settings& caps = default_caps())
{
    if (r < 0)
        throw std::invalid_argument("build_concatenated: r must be >= 0");
    if (n < 1)
        throw std::invalid_argument("build_concatenated: n must be >= 1");
    concatenated_mu out;
    out.r = r;
    out.m = m;
    out.n = n;
    for (int j = 1; j <= n; ++j) {
        bigint start = C(r, m, j - 1, caps); // cap-checked
        if (start > caps.max_steps)
            throw cap_error("mu-sequence(C(" + std::to_string(r) + "," + std::to_string(m) + "," +
                                std::to_string(j - 1) + ")," + std::to_string(m) + ")",
                            "block " + std::to_string(j) + " starts at order " + start.str() +
                                ", beyond the step cap");
        out.blocks.push_back(build_mu(start.convert_to<long long>(), m, caps));
        out.variable_of_block.push_back(n - j + 1);
    }
    return out;
}

// The bound read off the last block: the first element of block n whose
// leading m - tau - 1 coordinates vanish is of the form
// (0, ..., 0, u_{m-tau}, 0, ..., 0) possibly followed by tail entries, and
// u_{m-tau} is the type-tau bound.  index is the element's 1-based position.
struct m_frak_result {
    bigint value;
    std::size_t index = 0;
};

inline m_frak_result m_frak(long r, int m, int n, int tau, const cap_settings& caps = default_caps())
{
    if (tau < 0 || tau > m - 1)
        throw std::invalid_argument("m_frak: need 0 <= tau <= m-1");
    bigint start = C(r, m, n - 1, caps);
    if (start > caps.max_steps)
        throw cap_error("mu-sequence(C(" + std::to_string(r) + "," + std::to_string(m) + "," +
                            std::to_string(n - 1) + ")," + std::to_string(m) + ")",
                        "final block starts at order " + start.str() + ", beyond the step cap");
    mu_sequence block = build_mu(start.convert_to<long long>(), m, caps);
    for (std::size_t idx = 0; idx < block.elems.size(); ++idx) {
        const multidegree& e = block.elems[idx];
        bool zeros = true;
        for (int i = 0; i < m - tau - 1; ++i)
            if (e[static_cast<std::size_t>(i)] != 0) {
                zeros = false;
                break;
            }
        if (zeros) {
            m_frak_result res;
            res.value = e[static_cast<std::size_t>(m - tau - 1)];
            res.index = idx + 1;
            return res;
        }
    }
    throw std::logic_error("m_frak: no qualifying element (construction broken)");
}

} // namespace kolchin
