#include "doctest.h"

#include "permfact/brute.hpp"
#include "permfact/maps.hpp"

using namespace permfact;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// An 18-symbol embedding with 6 vertices, 9 edges and 3 faces, drawn once by
// hand on a torus. The product convention makes eps*nu trace the faces.
const char* torus_nu = "(1 8 5 15)(2 12 10 14 16 11)(3 18 17 7)(4 9 13)(5)(6)";
const char* torus_eps = "(1 14)(2 17)(3 7)(4 10)(5 13)(6 8)(9 18)(11 15)(12 16)";
const char* torus_phi = "(1 6 8 13 10)(2 16 15 14 12 4 18)(3 9 5 11 17)(7)";

}  // namespace

TEST_SUITE("maps") {

TEST_CASE("torus triple validates with genus one") {
    maps::MapTriple t{parse_perm("(1 8 5 15)(2 12 10 14 16 11)(3 18 17 7)(4 9 13)(6)"),
                      parse_perm(torus_eps), parse_perm(torus_phi)};
    auto report = maps::validate_triple(t);
    CHECK(report.ok());
    auto genus = maps::map_genus(t);
    CHECK(genus.ok);
    CHECK(genus.genus == 1);
    CHECK(cycle_type(t.nu) == P({6, 4, 4, 3, 1}));
    CHECK(cycle_type(t.eps) == Partition(std::vector<int>(9, 2)));
    CHECK(cycle_type(t.phi) == P({7, 5, 5, 1}));
}

TEST_CASE("a symbol in two cycles is rejected by the parser") {
    // same data with 5 written both as a fixed point and inside a 4-cycle
    CHECK_THROWS_WITH_AS(parse_perm(torus_nu), "symbol 5 appears in two cycles",
                         std::invalid_argument);
}

TEST_CASE("fault reporting") {
    // wrong product
    maps::MapTriple bad{parse_perm("(1 2 3)"), parse_perm("(1 2)", 3), parse_perm("(1 3 2)")};
    CHECK(maps::validate_triple(bad, true).fault == maps::TripleFault::product);

    // plain maps need a fixed-point-free involution
    maps::MapTriple fp{parse_perm("(1 2 3)"), parse_perm("(1 2)", 3),
                       parse_perm("(1 2)", 3) * parse_perm("(1 2 3)")};
    CHECK(maps::validate_triple(fp).fault == maps::TripleFault::eps_fixed_point);
    CHECK(maps::validate_triple(fp, true).fault == maps::TripleFault::none);

    maps::MapTriple notinv{parse_perm("(1 2 3)(4)"), parse_perm("(1 2 3 4)"),
                           parse_perm("(1 2 3 4)") * parse_perm("(1 2 3)(4)")};
    CHECK(maps::validate_triple(notinv).fault == maps::TripleFault::eps_not_involution);

    // two components
    maps::MapTriple split{Perm(4), parse_perm("(1 2)(3 4)"), parse_perm("(1 2)(3 4)")};
    CHECK(maps::validate_triple(split).fault == maps::TripleFault::not_transitive);

    maps::MapTriple degrees{parse_perm("(1 2)"), parse_perm("(1 2)", 3), parse_perm("(1 2)", 3)};
    CHECK(maps::validate_triple(degrees, true).fault == maps::TripleFault::degree_mismatch);
}

TEST_CASE("hand-counted hypermap numbers") {
    // one edge joining two vertices: nu = id, eps = phi = (1 2)
    CHECK(maps::count_rooted_hypermaps(P({1, 1}), P({2}), P({2})) == 1);
    // one loop on one vertex: nu = (1 2), eps = (1 2), phi = id
    CHECK(maps::count_rooted_hypermaps(P({2}), P({1, 1}), P({2})) == 1);
    CHECK(maps::count_rooted_maps(P({2}), P({1, 1})) == 1);
    // the torus family is closed under swapping vertex and face roles
    CHECK(maps::count_rooted_hypermaps(P({2}), P({2}), P({2})) == 0);
}

TEST_CASE("counts agree with decorated pair enumeration") {
    for (int n = 1; n <= 3; ++n) {
        auto all = partitions_of(2 * n);
        Partition tau(std::vector<int>(n, 2));
        Int denom = factorial(2 * n - 1);
        for (const auto& lambda : all) {
            for (const auto& mu : all) {
                Int pairs = brute::enumerate_decorated_maps(lambda, mu, tau);
                REQUIRE(pairs % denom == 0);
                CHECK(maps::count_rooted_maps(lambda, mu) == pairs / denom);
            }
        }
    }
    // a non-plain hyperedge type
    for (const auto& lambda : partitions_of(4)) {
        for (const auto& mu : partitions_of(4)) {
            Partition tau({3, 1});
            Int pairs = brute::enumerate_decorated_maps(lambda, mu, tau);
            REQUIRE(pairs % factorial(3) == 0);
            CHECK(maps::count_rooted_hypermaps(lambda, mu, tau) == pairs / factorial(3));
        }
    }
}

TEST_CASE("total rooted maps on n edges") {
    // summing over vertex and face types counts all rooted maps: 2 with one
    // edge (a loop and a link)
    Int total = 0;
    for (const auto& lambda : partitions_of(2))
        for (const auto& mu : partitions_of(2)) total += maps::count_rooted_maps(lambda, mu);
    CHECK(total == 2);
}

}  // TEST_SUITE
