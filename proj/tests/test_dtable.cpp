#include "knotconc/dtable.hpp"
#include "knotconc/errors.hpp"
#include <doctest.h>

using namespace knotconc;

namespace {

// symmetric under negation, with a unique value at the origin, so the
// relabel center is forced
std::vector<Rational> symmetric_values(const FiniteAbelianGroup& g) {
    std::vector<Rational> v(g.order());
    for (long long i = 0; i < g.order(); ++i) {
        GroupElement x = g.element_at(i);
        v[i] = Rational(i + g.index_of(-x));
    }
    v[0] = Rational(Int(-1), Int(2));
    return v;
}

std::vector<Rational> shifted(const FiniteAbelianGroup& g, const std::vector<Rational>& v,
                              const GroupElement& s) {
    std::vector<Rational> w(v.size());
    for (long long i = 0; i < g.order(); ++i)
        w[i] = v[g.index_of(s + g.element_at(i))];
    return w;
}

} // namespace

TEST_SUITE("dtable") {

TEST_CASE("one value per element, exactly") {
    FiniteAbelianGroup g({5});
    CHECK_THROWS_AS(DTable(g, {Rational(0)}), Error);
    DTable t(g, {Rational(0), Rational(1), Rational(2), Rational(1), Rational(2)});
    CHECK(t.value_at(3) == Rational(1));
    CHECK(t.value(g.element({3})) == Rational(1));
    CHECK_FALSE(t.origin_is_spin());
}

TEST_CASE("negation flips every value") {
    FiniteAbelianGroup g({3});
    DTable t(g, {Rational(Int(-1), Int(2)), Rational(Int(1), Int(6)), Rational(Int(1), Int(6))});
    DTable n = t.negated();
    for (long long i = 0; i < 3; ++i) CHECK(n.value_at(i) == -t.value_at(i));
}

TEST_CASE("constant table relabels to itself") {
    FiniteAbelianGroup g({9});
    DTable t(g, std::vector<Rational>(9, Rational(Int(1), Int(4))));
    DTable r = canonical_relabel(t);
    CHECK(r.origin_is_spin());
    CHECK(r.values() == t.values());
}

TEST_CASE("a shifted symmetric table is pulled back to center") {
    FiniteAbelianGroup g({3, 15});
    std::vector<Rational> v = symmetric_values(g);
    for (long long si : {0LL, 7LL, 23LL, 44LL}) {
        DTable t(g, shifted(g, v, g.element_at(si)));
        DTable r = canonical_relabel(t);
        CHECK(r.origin_is_spin());
        CHECK(r.values() == v);
        // negation symmetry through the origin
        for (long long i = 0; i < g.order(); ++i)
            CHECK(r.value_at(i) == r.value(-g.element_at(i)));
    }
}

TEST_CASE("relabel is idempotent") {
    FiniteAbelianGroup g({45});
    std::vector<Rational> v = symmetric_values(g);
    DTable once = canonical_relabel(DTable(g, shifted(g, v, g.element_at(31))));
    DTable twice = canonical_relabel(once);
    CHECK(twice.values() == once.values());
}

TEST_CASE("asymmetric tables are rejected") {
    FiniteAbelianGroup g({5});
    DTable t(g, {Rational(0), Rational(1), Rational(2), Rational(3), Rational(4)});
    CHECK_THROWS_AS(canonical_relabel(t), NoSymmetricLabeling);
}

TEST_CASE("even order groups cannot be centered") {
    FiniteAbelianGroup g({2});
    DTable t(g, {Rational(0), Rational(0)});
    CHECK_THROWS_AS(canonical_relabel(t), Error);
}

} // TEST_SUITE
