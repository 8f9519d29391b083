#include "knotconc/goeritz.hpp"
#include "knotconc/errors.hpp"
#include "knotconc/lens.hpp"
#include "brute_force.hpp"
#include "reference_values.hpp"
#include <doctest.h>
#include <random>

using namespace knotconc;

TEST_SUITE("goeritz") {

TEST_CASE("negative definiteness by leading minors") {
    CHECK(is_negative_definite(IntMatrix{{-3}}));
    CHECK(is_negative_definite(IntMatrix{{-2, 1}, {1, -2}}));
    CHECK_FALSE(is_negative_definite(IntMatrix{{2}}));
    CHECK_FALSE(is_negative_definite(IntMatrix{{-1, 2}, {2, -1}}));  // second minor -3
    CHECK_FALSE(is_negative_definite(IntMatrix{{-1, 1}, {1, -1}}));  // degenerate
    CHECK_FALSE(is_negative_definite(IntMatrix(2, 2)));
    CHECK(is_negative_definite(refval::goeritz_8_17()));
    CHECK(is_negative_definite(refval::goeritz_10_158_tilde()));
    CHECK(is_negative_definite(refval::goeritz_10_158()));
    CHECK_THROWS_AS(is_negative_definite(IntMatrix{{-1, 1}, {0, -1}}), NotSymmetric);
}

TEST_CASE("twisted extension reproduces the bordered matrix") {
    IntMatrix got = extend_twisted(refval::goeritz_10_158_tilde(), 3);
    CHECK(got == refval::goeritz_10_158());
    CHECK(extend_twisted(IntMatrix(0, 0), 3) == IntMatrix{{-3}});
    CHECK_THROWS_AS(extend_twisted(refval::goeritz_10_158_tilde(), 0), BadTwistCount);
    CHECK_THROWS_AS(extend_twisted(refval::goeritz_10_158_tilde(), -2), BadTwistCount);
}

TEST_CASE("form construction and guards") {
    GoeritzForm f(refval::goeritz_8_17());
    CHECK(f.rank() == 4);
    CHECK(f.det_abs() == 37);
    CHECK(f.disc_group().factors() == std::vector<long long>{37});

    GoeritzForm g(refval::goeritz_10_158());
    CHECK(g.det_abs() == 45);
    CHECK(g.disc_group().factors() == std::vector<long long>{45});

    CHECK_THROWS_AS(GoeritzForm(IntMatrix{{-1, 1}, {0, -1}}), NotSymmetric);
    CHECK_THROWS_AS(GoeritzForm(IntMatrix{{1}}), NotNegativeDefinite);
    CHECK_THROWS_AS(GoeritzForm(IntMatrix{{-1, 2}, {2, -1}}), NotNegativeDefinite);
}

TEST_CASE("white graph to goeritz matrix") {
    // checkerboard graph of the standard 8_17 projection: regions I..IV kept,
    // the circled fifth region dropped
    WhiteGraph w;
    w.vertex_count = 5;
    w.dropped = 4;
    w.edges = {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {2, 4}, {3, 4}, {3, 4}};
    GoeritzForm f = graph_to_goeritz(w);
    CHECK(f.matrix() == refval::goeritz_8_17());

    // reordering the kept vertices permutes rows and columns together
    GoeritzForm swapped = graph_to_goeritz(w, {1, 0, 2, 3});
    IntMatrix ref = refval::goeritz_8_17();
    std::vector<int> ord{1, 0, 2, 3};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(swapped.matrix().at(i, j) == ref.at(ord[size_t(i)], ord[size_t(j)]));
}

TEST_CASE("white graph validation") {
    WhiteGraph ok;
    ok.vertex_count = 3;
    ok.dropped = 2;
    ok.edges = {{0, 1}, {1, 2}, {0, 2}, {0, 2}};
    CHECK_NOTHROW(graph_to_goeritz(ok));

    WhiteGraph loop = ok;
    loop.edges.push_back({1, 1});
    CHECK_THROWS_AS(graph_to_goeritz(loop), Error);

    WhiteGraph range = ok;
    range.edges.push_back({0, 3});
    CHECK_THROWS_AS(graph_to_goeritz(range), Error);

    WhiteGraph split;  // kept component not attached to the rest
    split.vertex_count = 4;
    split.dropped = 3;
    split.edges = {{0, 1}, {2, 3}};
    CHECK_THROWS_AS(graph_to_goeritz(split), Error);

    CHECK_THROWS_AS(graph_to_goeritz(ok, {0, 0}), Error);  // not a permutation
    CHECK_THROWS_AS(graph_to_goeritz(ok, {0, 2}), Error);  // 2 was dropped
}

TEST_CASE("characteristic classes cover the discriminant group") {
    for (const IntMatrix& m : {refval::goeritz_8_17(), refval::goeritz_10_158()}) {
        GoeritzForm f(m);
        auto classes = characteristic_classes(f);
        REQUIRE(classes.size() == size_t(f.disc_group().order()));
        for (size_t k = 0; k < classes.size(); ++k) {
            CHECK(classes[k].label == f.disc_group().element_at(static_cast<long long>(k)));
            CHECK(f.coker().class_of(classes[k].representative) == classes[k].label);
            // characteristic: v(e_i) = G(e_i, e_i) mod 2
            for (int i = 0; i < f.rank(); ++i) {
                Int diff = classes[k].representative[size_t(i)] - m.at(i, i);
                CHECK(diff % 2 == 0);
            }
        }
    }
}

TEST_CASE("class maxima for the rank one forms") {
    GoeritzForm f3(IntMatrix{{-3}});
    auto cl = characteristic_classes(f3);
    REQUIRE(cl.size() == 3);
    // spin class holds -1/2, the two others 1/6
    CHECK(max_square_in_class(cl[0]) == Rational(Int(-1), Int(2)));
    CHECK(max_square_in_class(cl[1]) == Rational(Int(1), Int(6)));
    CHECK(max_square_in_class(cl[2]) == Rational(Int(1), Int(6)));

    GoeritzForm f1(IntMatrix{{-1}});
    auto cl1 = characteristic_classes(f1);
    REQUIRE(cl1.size() == 1);
    CHECK(max_square_in_class(cl1[0]) == Rational(0));
}

TEST_CASE("published table for the cover of 8_17") {
    DTable t = d_table_from_goeritz(GoeritzForm(refval::goeritz_8_17()));
    REQUIRE(t.group().order() == 37);
    CHECK(t.origin_is_spin());
    CHECK(t.value_at(0) == Rational(0));
    CHECK(refval::counted(t.values()) == refval::counted(refval::table_8_17()));
}

TEST_CASE("published table for the cover of 10_158") {
    GoeritzForm f(extend_twisted(refval::goeritz_10_158_tilde(), 3));
    DTable t = d_table_from_goeritz(f);
    REQUIRE(t.group().order() == 45);
    CHECK(t.origin_is_spin());
    CHECK(t.value_at(0) == Rational(0));
    CHECK(refval::counted(t.values()) == refval::counted(refval::table_10_158()));
}

TEST_CASE("threaded table equals the serial one") {
    GoeritzForm f(refval::goeritz_8_17());
    DTable serial = d_table_from_goeritz(f);
    DTable threaded = d_table_from_goeritz(f, 3);
    CHECK(serial.values() == threaded.values());
}

TEST_CASE("rank one goeritz table matches the lens recursion") {
    DTable a = d_table_from_goeritz(GoeritzForm(IntMatrix{{-3}}));
    DTable b = d_table_lens(LensSpace(3, 1));
    REQUIRE(a.group() == b.group());
    CHECK(a.values() == b.values());
}

TEST_CASE("denominators divide four times the determinant") {
    GoeritzForm f(refval::goeritz_10_158());
    DTable t = d_table_from_goeritz(f);
    for (const auto& v : t.values()) {
        Int four_det = 4 * f.det_abs();
        CHECK(four_det % v.den() == 0);
    }
}

TEST_CASE("minus continued fractions") {
    CHECK(minus_continued_fraction(3, 1) == std::vector<long long>{3});
    CHECK(minus_continued_fraction(29, 11) == std::vector<long long>{3, 3, 4});
    CHECK(minus_continued_fraction(5, 3) == std::vector<long long>{2, 3});
    CHECK(minus_continued_fraction(1, 0).empty());
    CHECK_THROWS_AS(minus_continued_fraction(11, 11), BadIndex);
    CHECK_THROWS_AS(minus_continued_fraction(9, 3), NotCoprime);

    // expansion folds back to p/q
    for (auto [p, q] : {std::pair<long long, long long>{45, 17}, {61, 17}, {99, 98}}) {
        auto a = minus_continued_fraction(p, q);
        Rational x(a.back());
        for (size_t i = a.size() - 1; i-- > 0;)
            x = Rational(a[i]) - Rational(1) / x;
        CHECK(x == Rational(Int(p), Int(q)));
    }
}

TEST_CASE("chain matrices realize the right lens tables") {
    IntMatrix chain = two_bridge_chain_matrix(29, 11);
    CHECK(chain == IntMatrix{{-3, 1, 0}, {1, -3, 1}, {0, 1, -4}});
    for (auto [p, q] : {std::pair<long long, long long>{3, 1}, {5, 2}, {29, 11}, {45, 17}}) {
        DTable viaChain = d_table_from_goeritz(GoeritzForm(two_bridge_chain_matrix(p, q)));
        DTable viaLens = d_table_lens(LensSpace(p, q));
        CHECK(viaChain.group() == viaLens.group());
        CHECK(refval::counted(viaChain.values()) == refval::counted(viaLens.values()));
    }
}

TEST_CASE("certified maxima agree with a boxed sweep") {
    std::mt19937 rng(40520);
    for (int trial = 0; trial < 24; ++trial) {
        int n = 1 + int(rng() % 3);
        IntMatrix m = brute::random_negdef(rng, n, trial % 2 == 0);
        GoeritzForm f(m);
        auto classes = characteristic_classes(f);
        for (const auto& c : classes)
            CHECK(max_square_in_class(c) == brute::boxed_class_max(f, c.representative));
    }
}

} // TEST_SUITE
