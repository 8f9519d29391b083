#include "knotconc/abelian.hpp"
#include "knotconc/errors.hpp"
#include "reference_values.hpp"
#include <doctest.h>
#include <numeric>
#include <random>

using namespace knotconc;

TEST_SUITE("abelian") {

TEST_CASE("construction and validation") {
    FiniteAbelianGroup t;
    CHECK(t.is_trivial());
    CHECK(t.order() == 1);
    CHECK(t.exponent() == 1);
    CHECK(t.str() == "trivial");

    FiniteAbelianGroup g({3, 15});
    CHECK(g.order() == 45);
    CHECK(g.exponent() == 15);
    CHECK(g.str() == "Z3+Z15");

    CHECK_THROWS_AS(FiniteAbelianGroup({1}), Error);
    CHECK_THROWS_AS(FiniteAbelianGroup({4, 6}), Error);  // 4 does not divide 6
}

TEST_CASE("element arithmetic in Z3+Z15") {
    FiniteAbelianGroup g({3, 15});
    GroupElement a = g.element({2, 11});
    GroupElement b = g.element({2, 7});
    CHECK((a + b) == g.element({1, 3}));
    CHECK((-a) == g.element({1, 4}));
    CHECK((a + (-a)).is_identity());
    CHECK(a.times(15).is_identity());
    CHECK(a.times(-1) == -a);
    CHECK(g.element({5, 26}) == g.element({2, 11}));  // reduced mod factors

    CHECK(a.str() == "(2,11)");
    CHECK_THROWS_AS(g.element({1}), Error);
}

TEST_CASE("element_at and index_of invert each other") {
    FiniteAbelianGroup g({3, 9});
    for (long long i = 0; i < g.order(); ++i)
        CHECK(g.index_of(g.element_at(i)) == i);
    CHECK(g.element_at(0).is_identity());
    CHECK_THROWS_AS(g.element_at(27), BadIndex);
    CHECK_THROWS_AS(g.element_at(-1), BadIndex);

    FiniteAbelianGroup other({27});
    CHECK_THROWS_AS(g.index_of(other.element({1})), GroupMismatch);
}

TEST_CASE("element orders satisfy Lagrange") {
    FiniteAbelianGroup g({3, 15});
    std::map<long long, int> orders;
    for (long long i = 0; i < g.order(); ++i) {
        long long o = element_order(g.element_at(i));
        CHECK(45 % o == 0);
        CHECK(g.element_at(i).times(o).is_identity());
        ++orders[o];
    }
    CHECK(orders[1] == 1);
    CHECK(orders[3] == 8);
    CHECK(orders[5] == 4);
    CHECK(orders[15] == 32);
    long long total = 0;
    for (auto& [o, c] : orders) total += c;
    CHECK(total == 45);
}

TEST_CASE("cokernel of a 1x1 matrix keeps residues") {
    Cokernel c(IntMatrix{{-3}});
    CHECK(c.group().factors() == std::vector<long long>{3});
    for (long long k = -7; k <= 7; ++k) {
        GroupElement x = c.class_of({Int(k)});
        long long want = ((k % 3) + 3) % 3;
        CHECK(x == c.group().element({want}));
    }
}

TEST_CASE("cokernel of the A2 chain is Z3") {
    Cokernel c(IntMatrix{{-2, 1}, {1, -2}});
    CHECK(c.group().order() == 3);
    CHECK(c.group().factors() == std::vector<long long>{3});
}

TEST_CASE("goeritz fixture cokernels") {
    Cokernel a(refval::goeritz_8_17());
    CHECK(a.group().factors() == std::vector<long long>{37});
    Cokernel b(refval::goeritz_10_158());
    CHECK(b.group().factors() == std::vector<long long>{45});
    CHECK_THROWS_AS(Cokernel(IntMatrix{{2, 4}, {1, 2}}), SingularMatrix);
}

TEST_CASE("class_of kills the image and lift sections class_of") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-6, 6);
    int checked = 0;
    while (checked < 40) {
        IntMatrix m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = d(rng);
        if (m.det().is_zero()) continue;
        ++checked;
        Cokernel c(m);
        // columns of m are relations
        for (int j = 0; j < 3; ++j) {
            std::vector<Int> col{m.at(0, j), m.at(1, j), m.at(2, j)};
            CHECK(c.class_of(col).is_identity());
        }
        // class_of is additive and lift is a section
        std::vector<Int> u{d(rng), d(rng), d(rng)}, v{d(rng), d(rng), d(rng)};
        std::vector<Int> sum{u[0] + v[0], u[1] + v[1], u[2] + v[2]};
        CHECK(c.class_of(sum) == c.class_of(u) + c.class_of(v));
        for (long long i = 0; i < std::min<long long>(c.group().order(), 20); ++i) {
            GroupElement x = c.group().element_at(i);
            CHECK(c.class_of(c.lift(x)) == x);
        }
    }
}

} // TEST_SUITE
