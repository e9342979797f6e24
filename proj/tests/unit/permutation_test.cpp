#include "doctest.h"

#include <set>

#include "permfact/permutation.hpp"

using namespace permfact;

TEST_SUITE("permutation") {

TEST_CASE("composition applies the right factor first") {
    Perm a = parse_perm("(1 2)", 3);
    Perm b = parse_perm("(2 3)", 3);
    // (a*b)(1) = a(b(1)) = a(1) = 2, then 2 -> a(3) = 3, 3 -> a(2) = 1
    CHECK(format_perm(a * b) == "(1 2 3)");
    CHECK(format_perm(b * a) == "(1 3 2)");
    CHECK(a * a.inverse() == Perm(3));
}

TEST_CASE("parse cycle notation and image tables") {
    CHECK(parse_perm("[2,1,3]") == parse_perm("(1 2)", 3));
    CHECK(parse_perm("(1 2)(3 4)").degree() == 4);
    CHECK(parse_perm("(1,2)(3,4)") == parse_perm("(1 2)(3 4)"));
    // widening adds fixed points
    CHECK(parse_perm("(1 2)", 5).degree() == 5);
    CHECK(parse_perm("(1 2)", 5)(4) == 4);
    CHECK(parse_perm("()", 1) == Perm(1));
    CHECK_THROWS_AS(parse_perm("(1 2)(2 3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm("[2,2,3]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm("(0 1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm("(1 2", 0), std::invalid_argument);
}

TEST_CASE("format lists fixed points and starts cycles at their minimum") {
    Perm p = parse_perm("(5 3 4)", 5);
    CHECK(format_perm(p) == "(1)(2)(3 4 5)");
    CHECK(format_perm(Perm(2)) == "(1)(2)");
}

TEST_CASE("cycle type") {
    CHECK(cycle_type(parse_perm("(1 2 3)(4 5)(6)")) == Partition({3, 2, 1}));
    CHECK(cycle_type(Perm(4)) == Partition({1, 1, 1, 1}));
    CHECK(cycle_count(parse_perm("(1 2 3)(4 5)(6)")) == 3);
}

TEST_CASE("class_elements visits each class member once") {
    for (const char* text : {"[2,1]", "[2,2]", "[3,1]", "[2,1,1,1]", "[5]"}) {
        Partition beta = parse_partition(text);
        std::set<std::vector<int>> seen;
        class_elements(beta, [&](const Perm& p) {
            CHECK(cycle_type(p) == beta);
            CHECK(seen.insert(p.images()).second);
            return true;
        });
        CHECK(Int(static_cast<int>(seen.size())) == class_size(beta));
    }
}

TEST_CASE("strided enumeration partitions the class") {
    Partition beta({3, 2});
    std::set<std::vector<int>> full;
    class_elements(beta, [&](const Perm& p) {
        full.insert(p.images());
        return true;
    });
    std::set<std::vector<int>> sharded;
    for (int offset = 0; offset < 3; ++offset) {
        class_elements_strided(beta, offset, 3, [&](const Perm& p) {
            CHECK(sharded.insert(p.images()).second);  // shards are disjoint
            return true;
        });
    }
    CHECK(sharded == full);
}

TEST_CASE("early stop") {
    int visits = 0;
    bool completed = class_elements(Partition({2, 1, 1}), [&](const Perm&) {
        ++visits;
        return visits < 3;
    });
    CHECK_FALSE(completed);
    CHECK(visits == 3);
}

}  // TEST_SUITE
