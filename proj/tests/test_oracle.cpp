#include "kolchin/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <utility>
#include <vector>

using kolchin::bigint;
using kolchin::lattice_set;
using kolchin::numerical_polynomial;

TEST_CASE("random sets are reproducible from their seed")
{
    lattice_set a = kolchin::random_lattice_set(3, 5, 5, 42);
    lattice_set b = kolchin::random_lattice_set(3, 5, 5, 42);
    REQUIRE(a == b);
    REQUIRE(!a.mins.empty());

    // the zero seed is remapped, not a fixed point producing degenerate output
    lattice_set z = kolchin::random_lattice_set(3, 5, 5, 0);
    REQUIRE(!z.mins.empty());

    // different seeds eventually differ
    bool saw_difference = false;
    for (std::uint64_t s = 1; s <= 20 && !saw_difference; ++s)
        saw_difference = !(kolchin::random_lattice_set(3, 5, 5, s) == a);
    REQUIRE(saw_difference);
}

TEST_CASE("random sets respect their parameter budget")
{
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        lattice_set E = kolchin::random_lattice_set(4, 5, 5, seed);
        REQUIRE(E.m == 4);
        REQUIRE(E.mins.size() >= 1);
        REQUIRE(E.mins.size() <= 5);
        for (const auto& p : E.mins)
            REQUIRE(kolchin::ord(p) <= 5);
    }
    // order budget zero leaves only the origin
    lattice_set origin = kolchin::random_lattice_set(3, 0, 4, 7);
    REQUIRE(origin.mins == std::vector<kolchin::multidegree>{{0, 0, 0}});
}

TEST_CASE("fit recovers pinned polynomials from samples")
{
    std::vector<std::pair<long, bigint>> flat;
    for (long s = 0; s <= 8; ++s)
        flat.emplace_back(s, 16);
    kolchin::fit_report f1 = kolchin::fit_numerical_polynomial(flat, 2);
    REQUIRE(f1.ok);
    REQUIRE(f1.poly == numerical_polynomial::constant(16));
    REQUIRE(f1.stabilization_level == 0);

    std::vector<std::pair<long, bigint>> quad;
    for (long s = 0; s <= 8; ++s)
        quad.emplace_back(s, kolchin::binomial(s + 2, 2));
    kolchin::fit_report f2 = kolchin::fit_numerical_polynomial(quad, 2);
    REQUIRE(f2.ok);
    REQUIRE(f2.poly == numerical_polynomial::basis(2));

    std::vector<std::pair<long, bigint>> line;
    for (long s = 0; s <= 8; ++s)
        line.emplace_back(s, s + 1);
    kolchin::fit_report f3 = kolchin::fit_numerical_polynomial(line, 3);
    REQUIRE(f3.ok);
    REQUIRE(f3.poly == numerical_polynomial::basis(1));
}

TEST_CASE("fit reports failures instead of guessing")
{
    std::vector<std::pair<long, bigint>> short_run = {{0, 1}, {1, 2}};
    REQUIRE(!kolchin::fit_numerical_polynomial(short_run, 2).ok);

    std::vector<std::pair<long, bigint>> gap = {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
    kolchin::fit_report g = kolchin::fit_numerical_polynomial(gap, 2);
    REQUIRE(!g.ok);
    REQUIRE(g.error == "samples must cover consecutive levels");

    // 2^s never stabilizes to a degree-2 polynomial
    std::vector<std::pair<long, bigint>> expo;
    for (long s = 0; s <= 8; ++s)
        expo.emplace_back(s, bigint(1) << s);
    kolchin::fit_report e = kolchin::fit_numerical_polynomial(expo, 2);
    REQUIRE(!e.ok);
    REQUIRE(e.error == "no stabilization within the sample");
}

TEST_CASE("volume samples fit the polynomial from the splitting recursion")
{
    std::vector<lattice_set> sets = {
        kolchin::minimal_elements(2, {{4, 0}, {0, 4}}),
        kolchin::minimal_elements(2, {{2, 0}}),
        kolchin::minimal_elements(2, {}),
        kolchin::minimal_elements(3, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}),
        kolchin::minimal_elements(3, {{2, 1, 0}, {0, 0, 2}}),
    };
    for (const auto& E : sets) {
        kolchin::fit_report fit = kolchin::fit_from_volumes(E);
        REQUIRE(fit.ok);
        REQUIRE(fit.poly == kolchin::kolchin_polynomial(E));
    }
}

TEST_CASE("bracket inequality sweeps find no counterexamples on reduced grids")
{
    kolchin::lemma_ranges small;
    small.max_scalar = 40;
    small.max_d = 3;
    small.max_m = 3;
    small.max_len = 3;

    kolchin::lemma_report sup =
        kolchin::exhaustive_lemma_check(kolchin::lemma_id::bracket_superadditive, small);
    REQUIRE(sup.checked > 0);
    REQUIRE(sup.violations == 0);

    kolchin::lemma_report bal =
        kolchin::exhaustive_lemma_check(kolchin::lemma_id::bracket_balance, small);
    REQUIRE(bal.checked > 0);
    REQUIRE(bal.violations == 0);

    kolchin::lemma_report chain =
        kolchin::exhaustive_lemma_check(kolchin::lemma_id::bracket_chain, small);
    REQUIRE(chain.checked > 0);
    REQUIRE(chain.violations == 0);

    kolchin::lemma_report rigid =
        kolchin::exhaustive_lemma_check(kolchin::lemma_id::bracket_rigidity, small);
    REQUIRE(rigid.checked > 0);
    REQUIRE(rigid.violations == 0);
}
