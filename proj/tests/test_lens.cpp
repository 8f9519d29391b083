#include "knotconc/lens.hpp"
#include "knotconc/errors.hpp"
#include "reference_values.hpp"
#include <doctest.h>
#include <numeric>
#include <random>

using namespace knotconc;

TEST_SUITE("lens") {

TEST_CASE("base cases of the recursion") {
    CHECK(d_lens(1, 0, 0) == Rational(0));
    CHECK(d_lens(3, 1, 0) == Rational(Int(-1), Int(2)));
    CHECK(d_lens(3, 1, 1) == Rational(Int(1), Int(6)));
    CHECK(d_lens(3, 1, 2) == Rational(Int(1), Int(6)));
    // index may run through p+q-1
    CHECK_NOTHROW(d_lens(3, 1, 3));
    CHECK_THROWS_AS(d_lens(3, 1, 4), BadIndex);
    CHECK_THROWS_AS(d_lens(3, 1, -1), BadIndex);
    CHECK_THROWS_AS(d_lens(6, 3, 0), NotCoprime);
}

TEST_CASE("lens space argument validation") {
    CHECK_NOTHROW(LensSpace(1, 0));
    CHECK_THROWS_AS(LensSpace(4, 2), NotCoprime);
    CHECK_THROWS_AS(LensSpace(29, 29), Error);
    CHECK_THROWS_AS(LensSpace(29, 0), Error);
    CHECK_THROWS_AS(LensSpace(0, 1), Error);
    CHECK_THROWS_AS(LensSpace(29, 11, 2), Error);
}

TEST_CASE("trivial and small tables") {
    DTable t1 = d_table_lens(LensSpace(1, 0));
    CHECK(t1.group().is_trivial());
    CHECK(t1.value_at(0) == Rational(0));
    CHECK(t1.origin_is_spin());

    DTable t3 = d_table_lens(LensSpace(3, 1));
    CHECK(t3.group().factors() == std::vector<long long>{3});
    CHECK(t3.value_at(0) == Rational(Int(-1), Int(2)));
    CHECK(t3.value_at(1) == Rational(Int(1), Int(6)));
    CHECK(t3.value_at(2) == Rational(Int(1), Int(6)));

    DTable t5 = d_table_lens(LensSpace(5, 1));
    CHECK(t5.value_at(0) == Rational(-1));
    CHECK(t5.value_at(1) == Rational(Int(-1), Int(5)));
    CHECK(t5.value_at(2) == Rational(Int(1), Int(5)));
    CHECK(t5.value_at(3) == Rational(Int(1), Int(5)));
    CHECK(t5.value_at(4) == Rational(Int(-1), Int(5)));
}

TEST_CASE("published table for the cover of 8_13") {
    std::vector<Rational> printed = refval::table_8_13();
    DTable t = d_table_lens(LensSpace(29, 11));
    REQUIRE(t.group().order() == 29);
    CHECK(t.origin_is_spin());
    // the published list is the canonical one read off from index 15 onward
    for (long long j = 0; j < 29; ++j)
        CHECK(t.value_at(j) == printed[size_t((j + 14) % 29)]);
    CHECK(refval::counted(t.values()) == refval::counted(printed));
}

TEST_CASE("reversed orientation negates the table") {
    DTable plus = d_table_lens(LensSpace(29, 11));
    DTable minus = d_table_lens(LensSpace(29, 11, -1));
    REQUIRE(plus.group() == minus.group());
    for (long long j = 0; j < 29; ++j)
        CHECK(minus.value_at(j) == -plus.value_at(j));
}

TEST_CASE("L(p, p-q) carries the negated values") {
    for (auto [p, q] : {std::pair<long long, long long>{29, 11}, {37, 14}, {45, 17}, {41, 16}}) {
        DTable a = d_table_lens(LensSpace(p, q));
        DTable b = d_table_lens(LensSpace(p, p - q));
        std::vector<Rational> neg;
        for (const auto& v : a.values()) neg.push_back(-v);
        CHECK(refval::counted(b.values()) == refval::counted(neg));
    }
}

TEST_CASE("every table centers and is negation symmetric") {
    for (long long p = 3; p <= 199; p += 14) {
        for (long long q : {1LL, 2LL, p / 2, p - 1}) {
            if (q < 1 || q >= p || std::gcd(p, q) != 1) continue;
            DTable t = d_table_lens(LensSpace(p, q));
            CHECK(t.origin_is_spin());
            const auto& g = t.group();
            for (long long i = 0; i < p; ++i)
                CHECK(t.value_at(i) == t.value(-g.element_at(i)));
        }
    }
}

TEST_CASE("memoized and plain recursion agree") {
    std::mt19937 rng(118);
    int done = 0;
    while (done < 50) {
        long long p = 2 + rng() % 499;
        long long q = 1 + rng() % (p - 1);
        if (std::gcd(p, q) != 1) continue;
        long long i = rng() % (p + q);
        CHECK(d_lens(p, q, i) == detail::d_lens_nomemo(p, q, i));
        ++done;
    }
}

} // TEST_SUITE
