#include "kolchin/mu.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <utility>
#include <vector>

using kolchin::bigint;
using kolchin::multidegree;
using kolchin::mu_sequence;
using kolchin::numerical_polynomial;

TEST_CASE("pinned staircase listings")
{
    mu_sequence a = kolchin::build_mu(3, 2);
    REQUIRE(a.elems == std::vector<multidegree>{{3, 0}, {2, 1}, {1, 3}, {0, 5}});
    REQUIRE(kolchin::vol_mu(a) == 9);

    mu_sequence b = kolchin::build_mu(1, 3);
    REQUIRE(b.elems == std::vector<multidegree>{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    REQUIRE(kolchin::vol_mu(b) == 2);

    mu_sequence c = kolchin::build_mu(2, 3);
    REQUIRE(c.elems == std::vector<multidegree>{{2, 0, 0},
                                                {1, 1, 0},
                                                {1, 0, 2},
                                                {0, 4, 0},
                                                {0, 3, 2},
                                                {0, 2, 4},
                                                {0, 1, 6},
                                                {0, 0, 8}});
    REQUIRE(kolchin::vol_mu(c) == 22);

    mu_sequence d = kolchin::build_mu(1, 4);
    REQUIRE(d.elems == std::vector<multidegree>{{1, 0, 0, 0},
                                                {0, 1, 0, 0},
                                                {0, 0, 2, 0},
                                                {0, 0, 1, 2},
                                                {0, 0, 0, 4}});
    REQUIRE(kolchin::vol_mu(d) == 6);
}

TEST_CASE("second element is the explicit seed, not a step result")
{
    // lengths explode with m: keep r0 small where the sequence would not fit
    std::vector<std::pair<int, long long>> grid = {
        {2, 4}, {3, 4}, {4, 2}, {5, 1}};
    for (const auto& [m, r_max] : grid)
        for (long long r0 = 1; r0 <= r_max; ++r0) {
            mu_sequence seq = kolchin::build_mu(r0, m);
            REQUIRE(seq.elems.size() >= 2);
            multidegree expected(static_cast<std::size_t>(m), 0);
            expected[0] = static_cast<int>(r0 - 1);
            expected[1] = 1;
            REQUIRE(seq.elems[1] == expected);
            REQUIRE(kolchin::ord(seq.elems[1]) == kolchin::ord(seq.elems[0]));
        }
}

TEST_CASE("two-coordinate staircase in closed form")
{
    for (long long r0 = 1; r0 <= 12; ++r0) {
        mu_sequence seq = kolchin::build_mu(r0, 2);
        REQUIRE(seq.elems.size() == static_cast<std::size_t>(r0) + 1);
        REQUIRE(seq.elems[0] == multidegree{static_cast<int>(r0), 0});
        for (std::size_t i = 1; i < seq.elems.size(); ++i)
            REQUIRE(seq.elems[i] == multidegree{static_cast<int>(r0 - i),
                                                static_cast<int>(2 * i - 1)});
        REQUIRE(kolchin::vol_mu(seq) == bigint(r0) * r0);
    }
}

TEST_CASE("degenerate staircases")
{
    mu_sequence origin = kolchin::build_mu(0, 3);
    REQUIRE(origin.elems == std::vector<multidegree>{{0, 0, 0}});
    REQUIRE(kolchin::vol_mu(origin) == 0);

    mu_sequence line = kolchin::build_mu(7, 1);
    REQUIRE(line.elems == std::vector<multidegree>{{7}});
    REQUIRE(kolchin::vol_mu(line) == 7);
}

TEST_CASE("orders climb by one after the seeded pair")
{
    std::vector<std::pair<int, long long>> grid = {
        {2, 5}, {3, 5}, {4, 2}};
    for (const auto& [m, r_max] : grid)
        for (long long r0 = 1; r0 <= r_max; ++r0) {
            mu_sequence seq = kolchin::build_mu(r0, m);
            REQUIRE(kolchin::ord(seq.elems[0]) == r0);
            for (std::size_t i = 2; i < seq.elems.size(); ++i)
                REQUIRE(kolchin::ord(seq.elems[i]) == kolchin::ord(seq.elems[i - 1]) + 1);
        }
}

TEST_CASE("staircase elements form an antichain and a compressed set")
{
    for (int m = 2; m <= 3; ++m)
        for (long long r0 = 1; r0 <= 4; ++r0) {
            mu_sequence seq = kolchin::build_mu(r0, m);
            kolchin::lattice_set E = kolchin::as_lattice_set(seq);
            REQUIRE(E.mins.size() == seq.elems.size());
            long top = kolchin::ord(seq.elems.back());
            REQUIRE(kolchin::is_compressed(E, top + m + 1));
            // the level just past the last element is exhausted
            REQUIRE(kolchin::hilbert_samuel(E, top) == 0);
        }
}

TEST_CASE("volume equals the constant of the full polynomial")
{
    for (int m = 2; m <= 3; ++m)
        for (long long r0 = 1; r0 <= 4; ++r0) {
            mu_sequence seq = kolchin::build_mu(r0, m);
            numerical_polynomial p = kolchin::kolchin_polynomial(kolchin::as_lattice_set(seq));
            REQUIRE(p == numerical_polynomial::constant(kolchin::vol_mu(seq)));
        }
}

TEST_CASE("prefix polynomials in closed form match the splitting recursion")
{
    for (int m = 2; m <= 3; ++m)
        for (long long r0 = 1; r0 <= 4; ++r0) {
            mu_sequence seq = kolchin::build_mu(r0, m);
            for (std::size_t ell = 1; ell <= seq.elems.size(); ++ell) {
                kolchin::lattice_set prefix = kolchin::minimal_elements(
                    m, std::vector<multidegree>(seq.elems.begin(),
                                                seq.elems.begin() + static_cast<long>(ell)));
                REQUIRE(kolchin::omega_mu_prefix(seq, ell) ==
                        kolchin::kolchin_polynomial(prefix));
            }
        }

    // the one-element prefix of the r0 = 3, m = 2 staircase counts 3t points
    REQUIRE(kolchin::omega_mu_prefix(kolchin::build_mu(3, 2), 1) ==
            numerical_polynomial(std::vector<bigint>{-3, 3}));

    REQUIRE_THROWS_AS(kolchin::omega_mu_prefix(kolchin::build_mu(2, 2), 0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(kolchin::omega_mu_prefix(kolchin::build_mu(2, 2), 9),
                      std::invalid_argument);
}

TEST_CASE("overlong staircases are refused, not truncated")
{
    kolchin::cap_settings tight = kolchin::default_caps();
    tight.max_steps = 100;
    // the r0 = 3, m = 4 sequence would run past 10^70 elements
    REQUIRE_THROWS_AS(kolchin::build_mu(3, 4, tight), kolchin::cap_error);
    try {
        kolchin::build_mu(3, 4, tight);
    } catch (const kolchin::cap_error& e) {
        REQUIRE(e.expression() == "mu-sequence(3,4)");
    }
}

TEST_CASE("concatenated blocks start where the previous bound ends")
{
    kolchin::concatenated_mu con = kolchin::build_concatenated(1, 2, 2);
    REQUIRE(con.blocks.size() == 2);
    REQUIRE(con.variable_of_block == std::vector<int>{2, 1});
    REQUIRE(con.blocks[0].elems == std::vector<multidegree>{{1, 0}, {0, 1}});
    REQUIRE(con.blocks[1].elems == std::vector<multidegree>{{2, 0}, {1, 1}, {0, 3}});
    REQUIRE(kolchin::vol_mu(con.blocks[0]) + kolchin::vol_mu(con.blocks[1]) == 5);

    kolchin::concatenated_mu deep = kolchin::build_concatenated(2, 2, 3);
    REQUIRE(deep.blocks[0].r0 == 2);
    REQUIRE(deep.blocks[1].r0 == 4);  // 2*2
    REQUIRE(deep.blocks[2].r0 == 8);  // 2*4
}

TEST_CASE("extremal entries of the final block")
{
    // r = 3, m = 2, one block: (3,0),(2,1),(1,3),(0,5)
    kolchin::m_frak_result top = kolchin::m_frak(3, 2, 1, 1);
    REQUIRE(top.value == 3);
    REQUIRE(top.index == 1);
    kolchin::m_frak_result bottom = kolchin::m_frak(3, 2, 1, 0);
    REQUIRE(bottom.value == 5);
    REQUIRE(bottom.index == 4);

    // two blocks: the final block starts at 2*3 = 6
    kolchin::m_frak_result two = kolchin::m_frak(3, 2, 2, 1);
    REQUIRE(two.value == 6);
    REQUIRE(two.index == 1);

    // r = 2, m = 3: block (2,0,0),(1,1,0),(1,0,2),(0,4,0),...,(0,0,8)
    REQUIRE(kolchin::m_frak(2, 3, 1, 2).value == 2);
    REQUIRE(kolchin::m_frak(2, 3, 1, 1).value == 4);
    REQUIRE(kolchin::m_frak(2, 3, 1, 1).index == 4);
    REQUIRE(kolchin::m_frak(2, 3, 1, 0).value == 8);
    REQUIRE(kolchin::m_frak(2, 3, 1, 0).index == 8);

    REQUIRE_THROWS_AS(kolchin::m_frak(3, 2, 1, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(kolchin::m_frak(3, 2, 1, -1), std::invalid_argument);
}
