// suites.hpp -- the verification sweeps behind `kolpoly verify`.  Each suite
// walks a fixed deterministic grid of identities or inequalities, counts the
// instances it checked, and records the first counterexample verbatim.
// Observations that are interesting but not contractual go into `notes`.

#pragma once

#include "kolchin/binomial.hpp"
#include "kolchin/bounds.hpp"
#include "kolchin/lattice.hpp"
#include "kolchin/mu.hpp"
#include "kolchin/oracle.hpp"
#include "kolchin/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kolchin {

struct suite_report {
    std::string name;
    unsigned long long checked = 0;
    unsigned long long violations = 0;
    std::string first_violation;
    std::vector<std::string> notes;

    bool passed() const { return violations == 0; }

    void fail(const std::string& what)
    {
        ++violations;
        if (first_violation.empty())
            first_violation = what;
    }
};

namespace detail {

// Deterministic pool of test sets: the dimension cycles 1..4 with the index
// and the seed is offset per suite so no two suites share a stream.
inline lattice_set mixed_random_set(std::uint64_t index, int max_order, int max_points,
                                    std::uint64_t seed_base)
{
    int m = 1 + static_cast<int>((index - 1) % 4);
    return random_lattice_set(m, max_order, max_points, seed_base + index);
}

inline std::vector<bigint> count_table(const lattice_set& E, long d_max)
{
    std::vector<bigint> h;
    h.reserve(static_cast<std::size_t>(d_max) + 1);
    for (long d = 0; d <= d_max; ++d)
        h.push_back(hilbert_samuel(E, d));
    return h;
}

inline lattice_set sequence_prefix(const mu_sequence& seq, std::size_t ell)
{
    std::vector<multidegree> head(seq.elems.begin(),
                                  seq.elems.begin() + static_cast<std::ptrdiff_t>(ell));
    return minimal_elements(seq.m, std::move(head));
}

// The textbook double recursion, used as an independent oracle for the small
// arguments where it terminates quickly.
inline long long raw_ackermann(long long x, long long y)
{
    if (x == 0)
        return y + 1;
    if (y == 0)
        return raw_ackermann(x - 1, 1);
    return raw_ackermann(x - 1, raw_ackermann(x, y - 1));
}

} // namespace detail

// Growth of the counting function: the bracket of the level-d value bounds
// the level-(d+1) value, with equality on the staircase prefixes (compressed,
// all generator orders <= d).
inline suite_report verify_macaulay(std::uint64_t seed_offset = 0)
{
    suite_report report{"macaulay"};
    for (int m = 1; m <= 3; ++m)
        for (long long r0 = 1; r0 <= 6; ++r0) {
            mu_sequence seq = build_mu(r0, m);
            for (std::size_t ell = 1; ell <= seq.elems.size(); ++ell) {
                lattice_set P = detail::sequence_prefix(seq, ell);
                long d0 = ord(seq.elems[ell - 1]);
                if (d0 < 1)
                    continue;
                const std::string where = " on the staircase prefix m=" + std::to_string(m) +
                                          " r0=" + std::to_string(r0) +
                                          " ell=" + std::to_string(ell);
                bigint h0 = hilbert_samuel(P, d0);
                bigint h1 = hilbert_samuel(P, d0 + 1);
                bigint h2 = hilbert_samuel(P, d0 + 2);
                ++report.checked;
                if (h1 != macaulay_bracket(h0, d0))
                    report.fail("equality fails" + where + " at level " + std::to_string(d0));
                ++report.checked;
                if (h2 != macaulay_bracket(h1, d0 + 1))
                    report.fail("equality fails" + where + " at level " + std::to_string(d0 + 1));
            }
        }
    for (std::uint64_t k = 1; k <= 200; ++k) {
        lattice_set E = detail::mixed_random_set(k, 6, 5, 101 + seed_offset);
        auto h = detail::count_table(E, 11);
        for (long d = 1; d <= 10; ++d) {
            ++report.checked;
            if (h[static_cast<std::size_t>(d + 1)] >
                macaulay_bracket(h[static_cast<std::size_t>(d)], d))
                report.fail("growth bound fails on random set " + std::to_string(k) + " at level " +
                            std::to_string(d));
        }
    }
    return report;
}

// Persistence: equality at a level dominating every generator order locks the
// counting function to bracket growth from that level on.
inline suite_report verify_gotzmann(std::uint64_t seed_offset = 0)
{
    suite_report report{"gotzmann"};
    struct span {
        int m;
        long long r_hi;
    };
    for (span g : {span{2, 6}, span{3, 3}})
        for (long long r0 = 1; r0 <= g.r_hi; ++r0) {
            mu_sequence seq = build_mu(r0, g.m);
            for (std::size_t ell = 1; ell <= seq.elems.size(); ++ell) {
                lattice_set P = detail::sequence_prefix(seq, ell);
                long d0 = ord(seq.elems[ell - 1]);
                if (d0 < 1)
                    continue;
                auto h = detail::count_table(P, d0 + 11);
                for (long s = d0; s <= d0 + 10; ++s) {
                    ++report.checked;
                    if (h[static_cast<std::size_t>(s + 1)] !=
                        macaulay_bracket(h[static_cast<std::size_t>(s)], s))
                        report.fail("persistence breaks on the staircase prefix m=" +
                                    std::to_string(g.m) + " r0=" + std::to_string(r0) +
                                    " ell=" + std::to_string(ell) + " at level " + std::to_string(s));
                }
            }
        }
    unsigned long long fired = 0;
    for (std::uint64_t k = 1; k <= 200; ++k) {
        lattice_set E = detail::mixed_random_set(k, 6, 5, 211 + seed_offset);
        long top = 0;
        for (const auto& g : E.mins)
            top = std::max(top, ord(g));
        long d0 = std::max<long>(1, top);
        auto h = detail::count_table(E, d0 + 12);
        for (long d = d0; d <= d0 + 1; ++d) {
            if (h[static_cast<std::size_t>(d + 1)] !=
                macaulay_bracket(h[static_cast<std::size_t>(d)], d))
                continue;
            ++fired;
            for (long s = d; s <= d + 10; ++s) {
                ++report.checked;
                if (h[static_cast<std::size_t>(s + 1)] !=
                    macaulay_bracket(h[static_cast<std::size_t>(s)], s))
                    report.fail("persistence breaks on random set " + std::to_string(k) +
                                " from level " + std::to_string(d) + " at level " + std::to_string(s));
            }
        }
    }
    report.notes.push_back("equality hypothesis fired " + std::to_string(fired) +
                           " times across 200 random sets");
    return report;
}

// Bracket equality at a level forces chain-connection of the generator pairs
// below it; the pinned examples exercise both directions and the edge caps.
inline suite_report verify_hs_connectivity(std::uint64_t seed_offset = 0)
{
    suite_report report{"hs-connectivity"};
    {
        lattice_set square = minimal_elements(2, {{2, 0}, {0, 2}});
        ++report.checked;
        if (connectivity_check(square, 3).all_connected)
            report.fail("{(2,0),(0,2)} must not be chain-connected at level 3");
        ++report.checked;
        if (!(hilbert_samuel(square, 3) < macaulay_bracket(hilbert_samuel(square, 2), 2)))
            report.fail("disconnection at level 3 must come with a strict growth drop");
        ++report.checked;
        if (!dagger(square, 2) || !dagger_prime(square, 2))
            report.fail("{(2,0),(0,2)} is disconnected under both edge allowances at level 2");
        ++report.checked;
        if (dagger_prime(square, 3))
            report.fail("{(2,0),(0,2)} connects once the edge allowance reaches 4");
    }
    for (int r = 1; r <= 6; ++r) {
        lattice_set steps = minimal_elements(2, {{r, 0}, {r - 1, 1}});
        ++report.checked;
        if (!connectivity_check(steps, r + 1).all_connected)
            report.fail("{(r,0),(r-1,1)} must connect at level r+1, r=" + std::to_string(r));
        ++report.checked;
        if (!dagger(steps, r) || dagger_prime(steps, r))
            report.fail("edge allowance r vs r+1 must split the two-step pair, r=" + std::to_string(r));
    }
    {
        lattice_set lone = minimal_elements(2, {{2, 3}});
        ++report.checked;
        if (!connectivity_check(lone, 6).all_connected)
            report.fail("a singleton has no pairs and is vacuously connected");
    }
    for (int m = 2; m <= 3; ++m)
        for (long long r0 = 1; r0 <= 3; ++r0) {
            mu_sequence seq = build_mu(r0, m);
            for (std::size_t ell = 2; ell <= seq.elems.size(); ++ell) {
                lattice_set P = detail::sequence_prefix(seq, ell);
                long d = ord(seq.elems[ell - 1]) + 1;
                ++report.checked;
                if (!connectivity_check(P, d).all_connected)
                    report.fail("staircase prefix fails to connect, m=" + std::to_string(m) +
                                " r0=" + std::to_string(r0) + " ell=" + std::to_string(ell));
            }
        }
    unsigned long long fired = 0;
    for (std::uint64_t k = 1; k <= 200; ++k) {
        lattice_set E = detail::mixed_random_set(k, 6, 5, 307 + seed_offset);
        long d_max = stability_bound(E) + 3;
        auto h = detail::count_table(E, std::max<long>(d_max, 2));
        for (long d = 2; d <= d_max; ++d) {
            if (h[static_cast<std::size_t>(d)] !=
                macaulay_bracket(h[static_cast<std::size_t>(d - 1)], d - 1))
                continue;
            ++fired;
            ++report.checked;
            if (!connectivity_check(E, d).all_connected)
                report.fail("equality at level " + std::to_string(d) +
                            " without chain-connection on random set " + std::to_string(k));
        }
    }
    report.notes.push_back("equality hypothesis fired " + std::to_string(fired) +
                           " times across 200 random sets");
    return report;
}

// Superadditivity and rebalancing of the bracket, bracket monotonicity, and
// the two-term recurrence of the binomials.
inline suite_report verify_lemma_rep()
{
    suite_report report{"lemma-rep"};
    auto fold = [&report](const lemma_report& part, const std::string& label) {
        report.checked += part.checked;
        report.violations += part.violations;
        if (report.first_violation.empty() && !part.first_violation.empty())
            report.first_violation = part.first_violation;
        report.notes.push_back(label + ": " + std::to_string(part.checked) + " instances");
    };
    fold(exhaustive_lemma_check(lemma_id::bracket_superadditive), "superadditivity sweep");
    fold(exhaustive_lemma_check(lemma_id::bracket_balance), "rebalancing sweep");
    for (long d = 1; d <= 5; ++d) {
        auto br = detail::bracket_table(300, d);
        for (long a = 0; a < 300; ++a)
            for (long b = a + 1; b <= 300; ++b) {
                ++report.checked;
                if (br[static_cast<std::size_t>(a)] > br[static_cast<std::size_t>(b)])
                    report.fail("bracket not monotone at a=" + std::to_string(a) +
                                " b=" + std::to_string(b) + " d=" + std::to_string(d));
            }
    }
    for (long c = 1; c <= 50; ++c)
        for (long d = 1; d <= 50; ++d) {
            ++report.checked;
            if (binomial(c + d, d) != binomial(c - 1 + d, d) + binomial(c - 1 + d, d - 1))
                report.fail("binomial recurrence fails at c=" + std::to_string(c) +
                            " d=" + std::to_string(d));
        }
    return report;
}

// Capped nondecreasing sequences dominate in bracket sum.
inline suite_report verify_lemma_technical()
{
    suite_report report{"lemma-technical"};
    lemma_report part = exhaustive_lemma_check(lemma_id::bracket_chain);
    report.checked = part.checked;
    report.violations = part.violations;
    report.first_violation = part.first_violation;
    return report;
}

// Bracket-sum equality against a constant-capped sequence forces the
// sequences to be identical.
inline suite_report verify_techcon()
{
    suite_report report{"techcon"};
    lemma_report part = exhaustive_lemma_check(lemma_id::bracket_rigidity);
    report.checked = part.checked;
    report.violations = part.violations;
    report.first_violation = part.first_violation;
    return report;
}

// Tail sums of the polynomial's absolute coefficients against powers of the
// total generator order, with the independent count-fit oracle alongside.
inline suite_report verify_ontheco(std::uint64_t seed_offset = 0)
{
    suite_report report{"ontheco"};
    for (std::uint64_t k = 1; k <= 200; ++k) {
        lattice_set E = detail::mixed_random_set(k, 5, 5, 401 + seed_offset);
        numerical_polynomial p = kolchin_polynomial(E);
        bigint order_total = 0;
        for (const auto& g : E.mins)
            order_total += ord(g);
        auto sums = coefficient_sums(p, E.m);
        bigint power = 1;
        for (int j = 0; j <= E.m; ++j) {
            ++report.checked;
            if (sums[static_cast<std::size_t>(j)] > power)
                report.fail("tail coefficient sum exceeds the order power on random set " +
                            std::to_string(k) + " at j=" + std::to_string(j));
            power *= order_total;
        }
        fit_report fit = fit_from_volumes(E);
        ++report.checked;
        if (!fit.ok || !(fit.poly == p))
            report.fail("count-fit oracle disagrees with the recursion on random set " +
                        std::to_string(k));
    }
    return report;
}

// Structure of the staircase sequences: length and terminal-order laws,
// compressedness, volume identities under every independent counter, and the
// prefix polynomials against the recursion.
inline suite_report verify_mu_consistency()
{
    suite_report report{"mu-consistency"};
    std::string ord_law_break;
    struct span {
        int m;
        long long r_hi;
    };
    for (span g : {span{1, 8}, span{2, 8}, span{3, 6}, span{4, 1}})
        for (long long r0 = 0; r0 <= g.r_hi; ++r0) {
            const int m = g.m;
            mu_sequence seq = build_mu(r0, m);
            lattice_set E = as_lattice_set(seq);
            const std::size_t L = seq.elems.size();
            const std::string where =
                " (m=" + std::to_string(m) + ", r0=" + std::to_string(r0) + ")";

            ++report.checked;
            if (bigint(L) != chain_link(r0, m) - r0 + 1)
                report.fail("length law fails" + where);

            long terminal = ord(seq.elems.back());
            if (r0 >= 1) {
                if (bigint(terminal) + 1 != chain_link(r0, m) && ord_law_break.empty())
                    ord_law_break = "terminal order law deviates" + where;
                ++report.checked;
                if (hilbert_samuel(E, terminal) != 0)
                    report.fail("count at the terminal order is nonzero" + where);
            }

            ++report.checked;
            if (!is_compressed(E, terminal + m + 1))
                report.fail("sequence set is not compressed" + where);

            bigint vol = vol_mu(seq);
            ++report.checked;
            if (!(kolchin_polynomial(E) == numerical_polynomial::constant(vol)))
                report.fail("full-sequence polynomial is not the constant volume" + where);

            ++report.checked;
            if (upsilon_alg(r0, m) != vol)
                report.fail("walk-accumulated volume disagrees" + where);

            bigint nu_a = nu(m, r0, ext_convention::zero_at_one);
            bigint nu_b = nu(m, r0, ext_convention::zero_at_minus_one);
            ++report.checked;
            if (nu_a != vol)
                report.fail("recursive volume count disagrees" + where);
            ++report.checked;
            if (nu_b != nu_a)
                report.fail("extension conventions split on a volume count" + where);

            if (m == 2 && r0 >= 1) {
                bool pattern = seq.elems.front() == multidegree{static_cast<int>(r0), 0};
                for (std::size_t i = 1; i < L && pattern; ++i)
                    pattern = seq.elems[i] ==
                              multidegree{static_cast<int>(r0 - static_cast<long long>(i)),
                                          static_cast<int>(2 * i - 1)};
                ++report.checked;
                if (!pattern || vol != bigint(r0) * r0)
                    report.fail("two-coordinate staircase pattern breaks" + where);
            }

            for (std::size_t ell = 1; ell <= L; ++ell) {
                lattice_set P = detail::sequence_prefix(seq, ell);
                ++report.checked;
                if (P.mins.size() != ell)
                    report.fail("prefix is not an antichain" + where + " ell=" + std::to_string(ell));
                ++report.checked;
                if (!(omega_mu_prefix(seq, ell) == kolchin_polynomial(P)))
                    report.fail("prefix polynomial: closed form and recursion disagree" + where +
                                " ell=" + std::to_string(ell));
            }
        }

    report.notes.push_back(
        ord_law_break.empty()
            ? "terminal order + 1 equals the one-link chain value across the whole grid"
            : ord_law_break + " -- reported as a finding, not a failure");
    report.notes.push_back("volume counts evaluated under the zero-at-one extension convention "
                           "and re-checked under zero-at-minus-one; the two are observationally "
                           "identical on this grid");
    {
        mu_sequence seq = build_mu(2, 2);
        numerical_polynomial flat({0, 2}); // flat form r0 * C(t+1,1) for the first prefix
        numerical_polynomial actual = omega_mu_prefix(seq, 1);
        if (!(flat == actual))
            report.notes.push_back(
                "flat leading-coefficient shape is wrong for short prefixes: at m=2, r0=2, "
                "prefix 1 it reads " +
                to_expression_string(flat) + " but the polynomial is " +
                to_expression_string(actual));
    }
    return report;
}

// The chain values, the Ackermann levels, and the three independent answers
// for the extremal staircase entries all agree; cap discipline included.
inline suite_report verify_bounds_agreement()
{
    suite_report report{"bounds-agreement"};

    for (long r = 0; r <= 100; ++r)
        for (int n = 0; n <= 10; ++n) {
            ++report.checked;
            if (C(r, 1, n) != r)
                report.fail("one-coordinate chain must stay put, r=" + std::to_string(r) +
                            " n=" + std::to_string(n));
            ++report.checked;
            if (C(r, 2, n) != bigint(r) << n)
                report.fail("two-coordinate chain must double per link, r=" + std::to_string(r) +
                            " n=" + std::to_string(n));
        }
    for (long r = 0; r <= 20; ++r) {
        ++report.checked;
        if (chain_link(r, 3) != 3 * ((bigint(1) << r) - 1))
            report.fail("three-coordinate link closed form fails at r=" + std::to_string(r));
    }
    {
        ++report.checked;
        if (C(1, 4, 1) != 5)
            report.fail("C(1,4,1) must be 5");
        ++report.checked;
        if (C(2, 4, 1) != 253)
            report.fail("C(2,4,1) must be 253");
        ++report.checked;
        if (C(3, 4, 1) != (bigint(1) << 256) - 3)
            report.fail("C(3,4,1) must be 2^256 - 3");
        ++report.checked;
        try {
            C(4, 4, 1);
            report.fail("C(4,4,1) must be refused");
        } catch (const cap_error&) {
        }
    }

    for (unsigned long x = 0; x <= 2; ++x)
        for (long long y = 0; y <= 12; ++y) {
            ++report.checked;
            if (ackermann(x, y) != detail::raw_ackermann(static_cast<long long>(x), y))
                report.fail("closed form vs raw recursion at A(" + std::to_string(x) + "," +
                            std::to_string(y) + ")");
        }
    for (long long y = 0; y <= 7; ++y) {
        ++report.checked;
        if (ackermann(3, y) != detail::raw_ackermann(3, y))
            report.fail("closed form vs raw recursion at A(3," + std::to_string(y) + ")");
    }
    for (unsigned long x = 1; x <= 3; ++x)
        for (long long y = 1; y <= 12; ++y) {
            ++report.checked;
            if (ackermann(x, y) != ackermann(x - 1, ackermann(x, y - 1)))
                report.fail("defining recurrence fails at A(" + std::to_string(x) + "," +
                            std::to_string(y) + ")");
        }
    ++report.checked;
    if (ackermann(4, 0) != 13)
        report.fail("A(4,0) must be 13");
    ++report.checked;
    if (ackermann(4, 1) != 65533)
        report.fail("A(4,1) must be 65533");
    ++report.checked;
    try {
        ackermann(4, 2);
        report.fail("A(4,2) must be refused");
    } catch (const cap_error&) {
    }
    for (unsigned long x = 0; x <= 3; ++x)
        for (long long y = -1; y <= 8; ++y) {
            bigint a = ackermann_ext(x, y, ext_convention::zero_at_one);
            bigint b = ackermann_ext(x, y, ext_convention::zero_at_minus_one);
            ++report.checked;
            bool same = (a == b);
            bool split_point = (x == 0 && y == 1);
            if (same == split_point)
                report.fail("extension conventions must differ exactly at (0,1); they " +
                            std::string(same ? "agree" : "differ") + " at (" + std::to_string(x) +
                            "," + std::to_string(y) + ")");
        }

    for (int conv_i = 0; conv_i < 2; ++conv_i) {
        ext_convention conv =
            conv_i ? ext_convention::zero_at_minus_one : ext_convention::zero_at_one;
        for (long y = 0; y <= 12; ++y) {
            bigint raw1 = 0, raw2 = 0;
            for (long i = -1; i <= y - 2; ++i) {
                raw1 += F(0, ackermann_ext(1, i, conv) + 1, conv);
                raw2 += F(1, ackermann_ext(2, i, conv) + 1, conv);
            }
            ++report.checked;
            if (F(1, y, conv) != raw1 || raw1 != y)
                report.fail("first-level volume recursion vs closed form at y=" + std::to_string(y));
            ++report.checked;
            if (F(2, y, conv) != raw2 || raw2 != bigint(y) * (y + 1))
                report.fail("second-level volume recursion vs closed form at y=" +
                            std::to_string(y));
        }
    }

    struct cell {
        long r;
        int m;
        int n;
    };
    std::vector<cell> cells;
    for (long r = 1; r <= 5; ++r) {
        cells.push_back({r, 2, 1});
        cells.push_back({r, 2, 2});
        cells.push_back({r, 3, 1});
    }
    for (long r = 1; r <= 2; ++r)
        cells.push_back({r, 3, 2});
    cells.push_back({1, 4, 1});
    for (const cell& c : cells)
        for (int tau = 0; tau <= c.m - 1; ++tau) {
            const std::string where = " at r=" + std::to_string(c.r) + " m=" + std::to_string(c.m) +
                                      " n=" + std::to_string(c.n) + " tau=" + std::to_string(tau);
            bigint direct = m_frak(c.r, c.m, c.n, tau).value;
            ++report.checked;
            if (omega_alg(c.r, c.m, c.n, tau) != direct)
                report.fail("walk answer differs from the stored sequence" + where);
            ++report.checked;
            if (B(c.r, c.m, c.n, c.m - tau) != direct)
                report.fail("closed-chain answer differs from the stored sequence" + where);
        }

    for (long r = 1; r <= 20; ++r)
        for (int n = 1; n <= 6; ++n) {
            bound_result b0 = typical_dim_bound(r, 2, n, 0);
            bigint blocks = 0;
            for (int i = 1; i <= n; ++i)
                blocks += vol_mu(build_mu(C(r, 2, i - 1).convert_to<long long>(), 2));
            ++report.checked;
            if (!b0.value || *b0.value != blocks)
                report.fail("dimension bound vs block volumes at r=" + std::to_string(r) +
                            " n=" + std::to_string(n));
            ++report.checked;
            if (!b0.value || *b0.value != ((bigint(1) << (2 * n)) - 1) / 3 * bigint(r) * r)
                report.fail("dimension bound vs geometric closed form at r=" + std::to_string(r) +
                            " n=" + std::to_string(n));
        }
    for (long r = 1; r <= 5; ++r) {
        bound_result b0 = typical_dim_bound(r, 3, 1, 0);
        ++report.checked;
        if (!b0.value || *b0.value != vol_mu(build_mu(r, 3)))
            report.fail("three-coordinate bound vs sequence volume at r=" + std::to_string(r));
    }
    for (long r = 1; r <= 2; ++r) {
        bound_result b0 = typical_dim_bound(r, 3, 2, 0);
        bigint two = vol_mu(build_mu(r, 3)) +
                     vol_mu(build_mu(chain_link(r, 3).convert_to<long long>(), 3));
        ++report.checked;
        if (!b0.value || *b0.value != two)
            report.fail("two-block bound vs sequence volumes at r=" + std::to_string(r));
    }

    for (long r = 1; r <= 6; ++r) {
        bound_result b1 = typical_dim_bound(r, 3, 1, 1);
        ++report.checked;
        if (!b1.value || *b1.value != 3 * (bigint(1) << (r - 1)) - 2)
            report.fail("level-one bound closed form fails at r=" + std::to_string(r));
        bound_result b0 = typical_dim_bound(r, 3, 1, 0);
        bigint series = 0;
        for (long i = 0; i < r; ++i)
            series += 9 * ((bigint(1) << (2 * i)) - (bigint(1) << i)) + 2;
        ++report.checked;
        if (!b0.value || *b0.value != series)
            report.fail("level-zero bound series form fails at r=" + std::to_string(r));
    }

    for (int m = 1; m <= 4; ++m)
        for (long r = 0; r <= 5; ++r)
            for (int n = 1; n <= 3; ++n) {
                ++report.checked;
                auto top = typical_dim_bound(r, m, n, m);
                if (!top.value || *top.value != n)
                    report.fail("type-m bound must be the variable count, m=" + std::to_string(m));
                ++report.checked;
                auto next = typical_dim_bound(r, m, n, m - 1);
                if (!next.value || *next.value != bigint(n) * r)
                    report.fail("type-(m-1) bound must be n*r, m=" + std::to_string(m) +
                                " r=" + std::to_string(r));
            }

    for (long r = 0; r <= 20; ++r) {
        coefficient_bound_result cb = coefficient_bound(r, 2, 1);
        ++report.checked;
        if (cb.sums[2] != 4 * bigint(r) * r * (2 * r + 1) * (2 * r + 1))
            report.fail("tail-sum bound closed form fails at r=" + std::to_string(r));
        ++report.checked;
        if (type_zero_alt_bound(r, 2, 1) > cb.sums[2])
            report.fail("sharper constant bound exceeds the tail-sum bound at r=" +
                        std::to_string(r));
    }

    {
        bound_result astronomically = typical_dim_bound(2, 4, 3, 1);
        ++report.checked;
        if (!astronomically.exceeds_cap() || astronomically.cap_expression.empty())
            report.fail("the infeasible case must report its cap expression");
        ++report.checked;
        try {
            B(2, 4, 3, 3);
            report.fail("the underlying chain value must be refused");
        } catch (const cap_error&) {
        }
    }

    {
        std::string inversion;
        for (int m = 2; m <= 3 && inversion.empty(); ++m)
            for (long r = 1; r <= 3 && inversion.empty(); ++r)
                for (int n = 1; n <= 2 && inversion.empty(); ++n) {
                    bigint prev;
                    bool have_prev = false;
                    for (int tau = 0; tau <= m; ++tau) {
                        auto b = typical_dim_bound(r, m, n, tau);
                        if (!b.value)
                            continue;
                        if (have_prev && *b.value > prev)
                            inversion = "bound grows from type " + std::to_string(tau - 1) +
                                        " to " + std::to_string(tau) + " at r=" + std::to_string(r) +
                                        ", m=" + std::to_string(m) + ", n=" + std::to_string(n);
                        prev = *b.value;
                        have_prev = true;
                    }
                }
        report.notes.push_back(inversion.empty()
                                   ? "bound is nonincreasing in the type across the sampled grid"
                                   : inversion + " -- observation, not a failure");
    }
    return report;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{
        "macaulay", "gotzmann",        "hs-connectivity", "lemma-rep",        "lemma-technical",
        "techcon",  "ontheco",         "mu-consistency",  "bounds-agreement",
    };
    return names;
}

inline suite_report run_suite(const std::string& name, std::uint64_t seed_offset = 0)
{
    if (name == "macaulay")
        return verify_macaulay(seed_offset);
    if (name == "gotzmann")
        return verify_gotzmann(seed_offset);
    if (name == "hs-connectivity")
        return verify_hs_connectivity(seed_offset);
    if (name == "lemma-rep")
        return verify_lemma_rep();
    if (name == "lemma-technical")
        return verify_lemma_technical();
    if (name == "techcon")
        return verify_techcon();
    if (name == "ontheco")
        return verify_ontheco(seed_offset);
    if (name == "mu-consistency")
        return verify_mu_consistency();
    if (name == "bounds-agreement")
        return verify_bounds_agreement();
    throw std::invalid_argument("unknown verification suite: " + name);
}

} // namespace kolchin
