// oracle.hpp -- independent cross-checks for the Kolchin recursion: seeded
// random lattice sets, and reconstruction of the counting polynomial from raw
// volume samples by finite differences.  Nothing here shares code with the
// splitting recursion, which is the point.

#pragma once

#include "bigint.hpp"
#include "lattice.hpp"
#include "polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kolchin {

// xorshift64* -- tiny, deterministic, and identical on every platform, which
// is what frozen test seeds need.  The zero seed (a fixed point of xorshift)
// is remapped to a nonzero constant.
class xorshift64s {
public:
    explicit xorshift64s(std::uint64_t seed)
        : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ull)
    {
    }

    std::uint64_t next()
    {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1Dull;
    }

    // uniform-ish draw in [0, bound]; bound + 1 never overflows for the small
    // bounds used here
    std::uint64_t below(std::uint64_t bound) { return next() % (bound + 1); }

private:
    std::uint64_t state_;
};

// A random generating family: between 1 and max_points points, each with a
// random order <= max_order distributed left to right across the coordinates
// (the last coordinate takes the remainder).  The result is reduced to its
// antichain, so fewer than the drawn number of generators may survive; it is
// never empty.
inline lattice_set random_lattice_set(int m, int max_order, int max_points, std::uint64_t seed)
{
    if (m < 1 || max_order < 0 || max_points < 1)
        throw std::invalid_argument("random_lattice_set: bad parameters");
    xorshift64s rng(seed);
    int count = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_points));
    std::vector<multidegree> points;
    for (int i = 0; i < count; ++i) {
        int order = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_order)));
        multidegree p(static_cast<std::size_t>(m), 0);
        int remaining = order;
        for (int k = 0; k + 1 < m; ++k) {
            int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(remaining)));
            p[static_cast<std::size_t>(k)] = u;
            remaining -= u;
        }
        p[static_cast<std::size_t>(m - 1)] = remaining;
        points.push_back(std::move(p));
    }
    return minimal_elements(m, std::move(points));
}

// Result of a polynomial fit from consecutive samples (s, v(s)).
struct fit_report {
    bool ok = false;
    std::string error;
    numerical_polynomial poly;
    long stabilization_level = 0; // earliest s from which poly matches every sample
    std::vector<std::pair<long, bigint>> samples;
};

// Reconstruct the eventual polynomial of a counting function from samples at
// consecutive levels s = s_begin, s_begin+1, ...: take the last degree_cap+1
// samples, build the Newton forward-difference table at the window start w,
// and assemble  p(t) = sum_i  Delta^i v(w) * C(t - w, i)  in the binomial
// basis via shift_back.  The fit is accepted only if it reproduces at least
// the last degree_cap + 2 samples (the window plus one extra level), i.e. the
// samples genuinely stabilized before the window began.
inline fit_report fit_numerical_polynomial(const std::vector<std::pair<long, bigint>>& samples, int degree_cap)
{
    fit_report report;
    report.samples = samples;
    if (degree_cap < 0) {
        report.error = "degree cap must be >= 0";
        return report;
    }
    const std::size_t window = static_cast<std::size_t>(degree_cap) + 1;
    if (samples.size() < window + 1) {
        report.error = "need at least degree_cap + 2 samples";
        return report;
    }
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
        if (samples[i + 1].first != samples[i].first + 1) {
            report.error = "samples must cover consecutive levels";
            return report;
        }

    const std::size_t w_index = samples.size() - window;
    const long w = samples[w_index].first;
    if (w < 0) {
        report.error = "window start must be at a nonnegative level";
        return report;
    }

    // forward differences of the window values
    std::vector<bigint> diff;
    diff.reserve(window);
    for (std::size_t i = 0; i < window; ++i)
        diff.push_back(samples[w_index + i].second);
    std::vector<bigint> newton; // Delta^i v(w)
    newton.reserve(window);
    for (std::size_t level = 0; level < window; ++level) {
        newton.push_back(diff.front());
        for (std::size_t i = 0; i + 1 < diff.size(); ++i)
            diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
    }

    numerical_polynomial poly;
    for (std::size_t i = 0; i < window; ++i) {
        if (newton[i] == 0)
            continue;
        // C(t - w, i) = shift_back^{w + i} of the basis polynomial C(t+i, i)
        numerical_polynomial term =
            shift_back(numerical_polynomial::basis(static_cast<int>(i)),
                       static_cast<unsigned long>(w) + static_cast<unsigned long>(i));
        std::vector<bigint> scaled;
        for (const bigint& c : term.coefficients())
            scaled.push_back(c * newton[i]);
        poly += numerical_polynomial(std::move(scaled));
    }

    // walk back from the end while the fit reproduces the samples
    std::size_t matching = 0;
    for (std::size_t i = samples.size(); i-- > 0;) {
        if (samples[i].first >= 0 && poly(samples[i].first) == samples[i].second)
            ++matching;
        else
            break;
    }
    if (matching < window + 1) {
        report.error = "no stabilization within the sample";
        return report;
    }
    report.ok = true;
    report.poly = std::move(poly);
    report.stabilization_level = samples[samples.size() - matching].first;
    return report;
}

// Convenience: sample volumes of a lattice set through its stability range
// and fit.  Samples run from 0 to stability_bound + m + 3, so the fit window
// sits strictly past the level where counting provably matches the
// polynomial.
inline fit_report fit_from_volumes(const lattice_set& E)
{
    long last = stability_bound(E) + E.m + 3;
    std::vector<std::pair<long, bigint>> samples;
    samples.reserve(static_cast<std::size_t>(last) + 1);
    bigint running = 0;
    for (long s = 0; s <= last; ++s) {
        running += hilbert_samuel(E, s);
        samples.emplace_back(s, running);
    }
    return fit_numerical_polynomial(samples, E.m);
}

// ---------------------------------------------------------------------------
// Exhaustive checkers for the bracket inequalities.  Each grid is small
// enough to sweep completely; reports carry the number of instances checked
// and the first counterexample (violations are data for the caller, never
// exceptions).
// ---------------------------------------------------------------------------

enum class lemma_id {
    bracket_superadditive, // a^<d> + b^<d> <= (a+b)^<d>
    bracket_balance,       // pushing mass to C(m-1+d,d) + remainder only raises the bracket sum
    bracket_chain,         // capped nondecreasing sequences dominate in bracket sum
    bracket_rigidity,      // bracket-sum equality against a constant-C sequence forces equality
};

struct lemma_report {
    unsigned long long checked = 0;
    unsigned long long violations = 0;
    std::string first_violation;
};

struct lemma_ranges {
    long max_scalar = 200; // a, b sweep bound for the scalar inequalities
    int max_d = 4;
    int max_m = 5;         // bracket_balance dimension sweep
    int max_len = 4;       // t and s for the sequence inequalities
};

namespace detail {

// brackets v^<d> for v = 0..limit
inline std::vector<bigint> bracket_table(long limit, long d)
{
    std::vector<bigint> table;
    table.reserve(static_cast<std::size_t>(limit) + 1);
    for (long v = 0; v <= limit; ++v)
        table.push_back(macaulay_bracket(v, d));
    return table;
}

inline void record(lemma_report& report, const std::string& detail_text)
{
    ++report.violations;
    if (report.first_violation.empty())
        report.first_violation = detail_text;
}

// all nondecreasing sequences of the given length with entries in [lo, hi]
template <typename Fn>
void for_each_nondecreasing(int length, long lo, long hi, std::vector<long>& seq, const Fn& fn)
{
    if (static_cast<int>(seq.size()) == length) {
        fn(seq);
        return;
    }
    long start = seq.empty() ? lo : seq.back();
    for (long v = start; v <= hi; ++v) {
        seq.push_back(v);
        for_each_nondecreasing(length, lo, hi, seq, fn);
        seq.pop_back();
    }
}

} // namespace detail

inline lemma_report exhaustive_lemma_check(lemma_id id, const lemma_ranges& ranges = lemma_ranges{})
{
    lemma_report report;
    switch (id) {
    case lemma_id::bracket_superadditive: {
        for (long d = 1; d <= ranges.max_d; ++d) {
            auto br = detail::bracket_table(2 * ranges.max_scalar, d);
            for (long a = 0; a <= ranges.max_scalar; ++a)
                for (long b = a; b <= ranges.max_scalar; ++b) {
                    ++report.checked;
                    if (br[a] + br[b] > br[a + b])
                        detail::record(report, "superadditivity fails at a=" + std::to_string(a) +
                                                   " b=" + std::to_string(b) + " d=" + std::to_string(d));
                }
        }
        break;
    }
    case lemma_id::bracket_balance: {
        for (int m = 1; m <= ranges.max_m; ++m)
            for (long d = 1; d <= ranges.max_d; ++d) {
                bigint cmd_big = binomial(m - 1 + d, d);
                long cmd = cmd_big.convert_to<long>();
                long lim = std::min(ranges.max_scalar, cmd);
                auto br = detail::bracket_table(std::max(2 * lim, cmd) + 1, d);
                for (long a = 0; a <= lim; ++a)
                    for (long b = a; b <= lim; ++b) {
                        ++report.checked;
                        long c = std::max(0L, a + b - cmd);
                        if (br[a] + br[b] > br[cmd] + br[c])
                            detail::record(report, "balance fails at m=" + std::to_string(m) +
                                                       " d=" + std::to_string(d) + " a=" + std::to_string(a) +
                                                       " b=" + std::to_string(b));
                        if (a > 0 && b > 0 && c == 0 && br[a] + br[b] >= br[cmd])
                            detail::record(report, "strict clause fails at m=" + std::to_string(m) +
                                                       " d=" + std::to_string(d) + " a=" + std::to_string(a) +
                                                       " b=" + std::to_string(b));
                    }
            }
        break;
    }
    case lemma_id::bracket_chain:
    case lemma_id::bracket_rigidity: {
        const bool rigidity = (id == lemma_id::bracket_rigidity);
        for (int m = 1; m <= std::min(ranges.max_m, 3); ++m)
            for (long d = 1; d <= std::min(ranges.max_d, 3); ++d) {
                bigint cmd_big = binomial(m - 1 + d, d);
                long cmd = cmd_big.convert_to<long>();
                auto br = detail::bracket_table(cmd, d);
                for (int t = 1; t <= ranges.max_len; ++t) {
                    std::vector<long> a_seq;
                    detail::for_each_nondecreasing(t, rigidity ? 1 : 0, cmd, a_seq, [&](const std::vector<long>& a) {
                        for (int s = 1; s <= ranges.max_len; ++s) {
                            long b1_hi = cmd;
                            for (long b1 = rigidity ? cmd : 0; b1 <= b1_hi; ++b1) {
                                // b-sequence: b1 followed by s-1 copies of cmd
                                long b_last = (s >= 2) ? cmd : b1;
                                bool hyp = true;
                                bigint a_sum = 0;
                                for (long ai : a) {
                                    if (ai > b_last)
                                        hyp = false;
                                    a_sum += ai;
                                }
                                bigint b_sum = bigint(b1) + bigint(cmd) * (s - 1);
                                if (!hyp || a_sum > b_sum)
                                    continue;
                                ++report.checked;
                                bigint a_br = 0;
                                for (long ai : a)
                                    a_br += br[ai];
                                bigint b_br = br[b1] + br[cmd] * (s - 1);
                                if (!rigidity) {
                                    if (a_br > b_br)
                                        detail::record(report,
                                                       "chain comparison fails at m=" + std::to_string(m) +
                                                           " d=" + std::to_string(d) + " t=" + std::to_string(t) +
                                                           " s=" + std::to_string(s) + " b1=" + std::to_string(b1));
                                } else if (a_br == b_br) {
                                    bool identical = (t == s);
                                    if (identical)
                                        for (long ai : a)
                                            if (ai != cmd)
                                                identical = false;
                                    if (!identical)
                                        detail::record(report,
                                                       "rigidity fails at m=" + std::to_string(m) +
                                                           " d=" + std::to_string(d) + " t=" + std::to_string(t) +
                                                           " s=" + std::to_string(s));
                                }
                            }
                        }
                    });
                }
            }
        break;
    }
    }
    return report;
}

} // namespace kolchin
