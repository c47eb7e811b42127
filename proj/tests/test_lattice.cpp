#include "kolchin/lattice.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using kolchin::bigint;
using kolchin::lattice_set;
using kolchin::multidegree;
using kolchin::numerical_polynomial;

namespace {

lattice_set make(int m, std::vector<multidegree> pts)
{
    return kolchin::minimal_elements(m, std::move(pts));
}

// Count V_E(s) the slow way: walk every point of every level.
bigint brute_volume(const lattice_set& E, long s)
{
    bigint total = 0;
    for (long d = 0; d <= s; ++d)
        kolchin::for_each_point_of_order(E.m, d, [&](const multidegree& p) {
            if (!E.covers(p))
                ++total;
        });
    return total;
}

} // namespace

TEST_CASE("multidegree primitives")
{
    REQUIRE(kolchin::ord({3, 0, 2}) == 5);
    REQUIRE(kolchin::dominates({3, 1}, {2, 1}));
    REQUIRE(!kolchin::dominates({3, 0}, {2, 1}));
    REQUIRE(kolchin::lub({3, 0}, {1, 2}) == multidegree{3, 2});
    // strict product order: dominated and distinct
    REQUIRE(kolchin::strictly_below({1, 1}, {2, 2}));
    REQUIRE(kolchin::strictly_below({2, 1}, {2, 2}));
    REQUIRE(!kolchin::strictly_below({2, 2}, {2, 2}));
    REQUIRE(!kolchin::strictly_below({3, 0}, {2, 2}));

    // orderly: first by coordinate sum, ties broken lexicographically
    REQUIRE(kolchin::orderly_less({0, 2}, {1, 2}));
    REQUIRE(kolchin::orderly_less({0, 3}, {1, 2}));
    REQUIRE(!kolchin::orderly_less({1, 2}, {0, 3}));
}

TEST_CASE("minimal_elements drops duplicates and dominated points")
{
    lattice_set E = make(2, {{2, 2}, {1, 0}, {2, 2}, {0, 3}, {5, 5}});
    REQUIRE(E.mins == std::vector<multidegree>{{1, 0}, {0, 3}});
    REQUIRE(E.covers({7, 0}));
    REQUIRE(E.covers({0, 3}));
    REQUIRE(!E.covers({0, 2}));
    REQUIRE(!E.contains_zero());

    lattice_set Z = make(3, {{0, 0, 0}, {1, 2, 3}});
    REQUIRE(Z.contains_zero());
    REQUIRE(Z.mins.size() == 1);

    REQUIRE_THROWS_AS(make(2, {{1, 2, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(make(2, {{1, -1}}), std::invalid_argument);
}

TEST_CASE("counting functions agree with direct enumeration")
{
    std::vector<lattice_set> sets = {
        make(1, {{4}}),
        make(2, {{4, 0}, {0, 4}}),
        make(2, {{2, 0}}),
        make(3, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}),
        make(3, {}),
        make(2, {{0, 0}}),
    };
    for (const auto& E : sets)
        for (long s = 0; s <= 8; ++s)
            REQUIRE(kolchin::volume(E, s) == brute_volume(E, s));
}

TEST_CASE("polynomial of the empty generating set is the free count")
{
    for (int m = 0; m <= 4; ++m) {
        numerical_polynomial p = kolchin::kolchin_polynomial(make(m, {}));
        REQUIRE(p == numerical_polynomial::basis(m));
        REQUIRE(kolchin::lattice_type(p) == m);
        REQUIRE(kolchin::typical_dimension(p) == 1);
    }
}

TEST_CASE("polynomial vanishes exactly when the set contains the origin")
{
    numerical_polynomial p = kolchin::kolchin_polynomial(make(2, {{0, 0}}));
    REQUIRE(p.is_zero());
    REQUIRE(kolchin::lattice_type(p) == -1);
}

TEST_CASE("pinned polynomials of small sets")
{
    // {(r,0),(0,r)}: r^2 surviving points in total
    for (int r = 1; r <= 6; ++r) {
        numerical_polynomial p =
            kolchin::kolchin_polynomial(make(2, {{r, 0}, {0, r}}));
        REQUIRE(p == numerical_polynomial::constant(bigint(r) * r));
    }

    // {(1,0),(0,1)}: only the origin survives
    REQUIRE(kolchin::kolchin_polynomial(make(2, {{1, 0}, {0, 1}})) ==
            numerical_polynomial::constant(1));

    // {(2,0)} in two coordinates: 2s+1 points up to order s, i.e. 2*C(t+1,1)-1
    REQUIRE(kolchin::kolchin_polynomial(make(2, {{2, 0}})) ==
            numerical_polynomial(std::vector<bigint>{-1, 2}));

    // one variable: {(r)} leaves the constant r
    for (int r = 1; r <= 5; ++r)
        REQUIRE(kolchin::kolchin_polynomial(make(1, {{r}})) ==
                numerical_polynomial::constant(r));
}

TEST_CASE("polynomial matches the counting function at and beyond the stability bound")
{
    std::vector<lattice_set> sets = {
        make(2, {{3, 0}, {1, 2}}),
        make(3, {{2, 0, 0}, {0, 1, 1}}),
        make(3, {{1, 1, 0}, {0, 0, 4}, {2, 0, 1}}),
        make(4, {{1, 0, 0, 0}, {0, 1, 1, 0}}),
    };
    for (const auto& E : sets) {
        numerical_polynomial p = kolchin::kolchin_polynomial(E);
        long b = kolchin::stability_bound(E);
        for (long s = b; s <= b + 5; ++s)
            REQUIRE(p(s) == kolchin::volume(E, s));
    }
}

TEST_CASE("degree dichotomy: full degree only for the empty generating set")
{
    std::vector<lattice_set> nonempty = {
        make(2, {{5, 0}}),
        make(3, {{0, 0, 1}}),
        make(3, {{4, 4, 4}}),
        make(4, {{2, 1, 0, 3}}),
    };
    for (const auto& E : nonempty) {
        numerical_polynomial p = kolchin::kolchin_polynomial(E);
        REQUIRE(p.degree() < E.m);
    }
}

TEST_CASE("family polynomial adds componentwise")
{
    kolchin::indexed_family fam = kolchin::make_family({
        make(2, {{1, 0}, {0, 1}}),
        make(2, {}),
    });
    REQUIRE(fam.n == 2);
    numerical_polynomial p = kolchin::family_polynomial(fam);
    REQUIRE(p == numerical_polynomial::basis(2) + numerical_polynomial::constant(1));
}

TEST_CASE("coefficient sums accumulate from the leading coefficient down")
{
    numerical_polynomial p(std::vector<bigint>{4, -7, 2});
    std::vector<bigint> sums = kolchin::coefficient_sums(p, 2);
    REQUIRE(sums.size() == 3);
    REQUIRE(sums[0] == 2);
    REQUIRE(sums[1] == 9);
    REQUIRE(sums[2] == 13);

    // padding: a lower-degree polynomial in a larger ambient arity
    std::vector<bigint> padded = kolchin::coefficient_sums(p, 4);
    REQUIRE(padded.size() == 5);
    REQUIRE(padded[0] == 0);
    REQUIRE(padded[1] == 0);
    REQUIRE(padded[2] == 2);
    REQUIRE(padded[4] == 13);
}

TEST_CASE("compressed sets are initial segments level by level")
{
    // {(1,0)}: level d retains only (0,d), the descending-orderly tail -- and
    // the set occupies the head of each level
    REQUIRE(kolchin::is_compressed(make(2, {{1, 0}}), 6));
    // {(2,0),(1,1)}: levels >= 2 keep exactly (1,...)? no: kept are (0,d) only
    REQUIRE(kolchin::is_compressed(make(2, {{2, 0}, {1, 1}}), 8));
    // {(0,2)}: at level 2 the scan sees (2,0),(1,1) outside, then (0,2) inside
    REQUIRE(!kolchin::is_compressed(make(2, {{0, 2}}), 8));
    // the square {(2,0),(0,2)} keeps the middle (1,1) but not the flanks
    REQUIRE(!kolchin::is_compressed(make(2, {{2, 0}, {0, 2}}), 8));
}

TEST_CASE("connectivity on pinned examples")
{
    lattice_set square = make(2, {{2, 0}, {0, 2}});
    // chains through (1,1) would need a third generator; the direct edge has
    // lub order 4
    REQUIRE(!kolchin::connected_within(square, {2, 0}, {0, 2}, 3, 3));
    REQUIRE(kolchin::connected_within(square, {2, 0}, {0, 2}, 3, 4));
    REQUIRE(kolchin::dagger(square, 2));
    REQUIRE(kolchin::dagger_prime(square, 2));
    REQUIRE(!kolchin::dagger_prime(square, 3));

    for (int r = 1; r <= 6; ++r) {
        lattice_set steps = make(2, {{r, 0}, {r - 1, 1}});
        // lub = (r,1) of order r+1: the single edge needs edge cap r+1
        kolchin::connectivity_report rep = kolchin::connectivity_check(steps, r + 1);
        REQUIRE(rep.all_connected);
        REQUIRE(rep.pairs.size() == 1);
        REQUIRE(kolchin::dagger(steps, r));
        REQUIRE(!kolchin::dagger_prime(steps, r));
    }

    lattice_set singleton = make(2, {{1, 1}});
    kolchin::connectivity_report rep = kolchin::connectivity_check(singleton, 5);
    REQUIRE(rep.all_connected);
    REQUIRE(rep.pairs.empty());
}

TEST_CASE("stability bound is the order of the generator envelope")
{
    REQUIRE(kolchin::stability_bound(make(2, {})) == 0);
    REQUIRE(kolchin::stability_bound(make(2, {{3, 0}, {0, 2}})) == 5);
    REQUIRE(kolchin::stability_bound(make(3, {{1, 0, 2}, {0, 4, 0}})) == 7);
}
