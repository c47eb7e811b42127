// binomial.hpp -- binomial coefficients, the greedy d-th binomial
// representation of a positive integer, and the Macaulay bracket a^<d>.

#pragma once

#include "bigint.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace kolchin {

// C(n, k) by the multiplicative formula with exact division at every step.
// Returns 0 when k > n; both arguments must be nonnegative.
inline bigint binomial(const bigint& n, const bigint& k)
{
    if (n < 0 || k < 0)
        throw std::invalid_argument("binomial: negative argument");
    if (k > n)
        return 0;
    bigint kk = k;
    if (n - k < kk)
        kk = n - k;
    bigint result = 1;
    for (bigint i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i; // exact: result is C(n-kk+i, i) after this step
    }
    return result;
}

// The d-th binomial representation of a >= 1:
//
//   a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_j, j),
//   k_d > k_{d-1} > ... > k_j >= j >= 1,
//
// produced greedily (largest k_d with C(k_d, d) <= a, then recurse on the
// remainder).  The greedy choice is the unique one; see the uniqueness test
// which compares against an exhaustive search over admissible sequences.
struct dbinom_rep {
    long d = 0;
    // (index i, top entry k_i), ordered from i = d downward.  Trailing indices
    // with an exhausted remainder are simply absent.
    std::vector<std::pair<long, bigint>> terms;

    bigint value() const
    {
        bigint sum = 0;
        for (const auto& [i, k] : terms)
            sum += binomial(k, i);
        return sum;
    }
};

inline dbinom_rep d_binomial_rep(const bigint& a, long d)
{
    if (a < 1)
        throw std::invalid_argument("d_binomial_rep: a must be >= 1");
    if (d < 1)
        throw std::invalid_argument("d_binomial_rep: d must be >= 1");
    dbinom_rep rep;
    rep.d = d;
    bigint remaining = a;
    for (long i = d; i >= 1 && remaining > 0; --i) {
        // Largest k with C(k, i) <= remaining.  C(i, i) = 1 <= remaining, so
        // start at k = i and grow by doubling the offset before bisecting;
        // a plain ascending scan would not terminate in any reasonable time
        // for large inputs.
        bigint lo = i;
        bigint hi = lo + 1;
        while (binomial(hi, i) <= remaining) {
            lo = hi;
            hi = 2 * hi;
        }
        // invariant: C(lo, i) <= remaining < C(hi, i)
        while (hi - lo > 1) {
            bigint mid = (lo + hi) / 2;
            if (binomial(mid, i) <= remaining)
                lo = mid;
            else
                hi = mid;
        }
        rep.terms.emplace_back(i, lo);
        remaining -= binomial(lo, i);
    }
    // The greedy construction always lands exactly on a (the last admissible
    // index is i = 1 where C(k, 1) = k can absorb any remainder).
    if (remaining != 0)
        throw std::logic_error("d_binomial_rep: greedy construction failed");
    return rep;
}

// Macaulay bracket: a^<d> = C(k_d + 1, d + 1) + ... + C(k_j + 1, j + 1) for
// the d-th binomial representation of a, and 0^<d> = 0.
inline bigint macaulay_bracket(const bigint& a, long d)
{
    if (a < 0)
        throw std::invalid_argument("macaulay_bracket: a must be >= 0");
    if (a == 0)
        return 0;
    dbinom_rep rep = d_binomial_rep(a, d);
    bigint sum = 0;
    for (const auto& [i, k] : rep.terms)
        sum += binomial(k + 1, i + 1);
    return sum;
}

} // namespace kolchin
