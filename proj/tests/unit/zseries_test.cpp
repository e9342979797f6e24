#include "doctest.h"

#include "permfact/zseries.hpp"

using namespace permfact;


namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_SUITE("zseries") {

TEST_CASE("arithmetic basics") {
    PSeries a(2);
    a.add_term(1, P({1}), Rat(2));
    a.add_term(2, P({2}), Rat(3));
    PSeries b(2);
    b.add_term(1, P({1}), Rat(-2));
    auto sum = a + b;
    CHECK(sum.coefficient(1, P({1})) == Rat(0));
    CHECK(sum.coefficient(2, P({2})) == Rat(3));
    auto prod = a * a;
    CHECK(prod.coefficient(2, P({1, 1})) == Rat(4));
    CHECK((a - a).is_zero());
    CHECK(scale(a, Rat(1, 3)).coefficient(2, P({2})) == Rat(1));
}

TEST_CASE("degree counting operator") {
    PSeries a(3);
    a.add_term(1, P({1}), Rat(5));
    a.add_term(3, P({2, 1}), Rat(7));
    auto e = euler(a);
    CHECK(e.coefficient(1, P({1})) == Rat(5));
    CHECK(e.coefficient(3, P({2, 1})) == Rat(21));
}

TEST_CASE("p-variable derivative and multiplication") {
    PSeries a(3);
    a.add_term(3, P({2, 1}), Rat(1));
    // d/dp_2 removes one part 2
    auto d2 = p_derivative(a, 2);
    CHECK(d2.coefficient(3, P({1})) == Rat(1));
    // d/dp_1 of p_2 p_1
    auto d1 = p_derivative(a, 1);
    CHECK(d1.coefficient(3, P({2})) == Rat(1));
    auto up = times_power_sum(d2, 3);
    CHECK(up.coefficient(3, P({3, 1})) == Rat(1));
    // multiplicity matters: d/dp_1 of p_1^2
    PSeries sq(2);
    sq.add_term(2, P({1, 1}), Rat(1));
    CHECK(p_derivative(sq, 1).coefficient(2, P({1})) == Rat(2));
}

TEST_CASE("exponential of a constant-free series") {
    PSeries u(4);
    for (int d = 1; d <= 4; ++d) u.add_term(d, Partition(std::vector<int>(d, 1)), Rat(0));
    u.add_term(1, P({1}), Rat(1));
    auto e = exp_of(u);
    CHECK(e.coefficient(0, Partition{}) == Rat(1));
    for (int d = 1; d <= 4; ++d)
        CHECK(e.coefficient(d, Partition(std::vector<int>(d, 1))) == Rat(1, factorial(d)));
    // exp(u) exp(-u) = 1
    auto inv = exp_of(scale(u, Rat(-1)));
    auto prod = e * inv;
    CHECK(prod.coefficient(0, Partition{}) == Rat(1));
    bool rest_zero = true;
    for (int d = 1; d <= 4; ++d)
        if (!prod.slices[d].empty())
            for (const auto& [key, c] : prod.slices[d])
                if (c != 0) rest_zero = false;
    CHECK(rest_zero);

    PSeries bad(1);
    bad.add_term(0, Partition{}, Rat(1));
    CHECK_THROWS_AS(exp_of(bad), std::invalid_argument);
}

TEST_CASE("terms beyond the truncation are dropped") {
    PSeries a(1);
    a.add_term(2, P({1, 1}), Rat(1));
    CHECK(a.is_zero());
    CHECK(a.coefficient(5, P({1})) == Rat(0));
    // adding an exact cancellation removes the stored key
    a.add_term(1, P({1}), Rat(3));
    a.add_term(1, P({1}), Rat(-3));
    CHECK(a.is_zero());
}

}  // TEST_SUITE
