#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rht/grading.hpp"

using namespace rht;

namespace {

Element gen(const Algebra& a, int i) { return a.generator_element(i); }

Element monomial_elem(const Algebra& a, std::initializer_list<Factor> fs) {
    return Element().add_term(a.monomial(fs), Rational(1));
}

}  // namespace

TEST_CASE("degree-0 basis is the unit monomial") {
    Algebra a({{"a", 2}, {"b", 3}});
    auto basis = a.basis(0);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].is_unit());
    CHECK_THROWS_AS(a.basis(-1), ArgumentError);
}

TEST_CASE("degree-4 slice of (a2, b3, e3, x4)") {
    Algebra a({{"a", 2}, {"b", 3}, {"e", 3}, {"x", 4}});
    auto basis = a.basis(4);
    REQUIRE(basis.size() == 2);
    CHECK(a.format(basis[0]) == "a*a");
    CHECK(a.format(basis[1]) == "x");
}

TEST_CASE("odd generator squares vanish from slices") {
    Algebra a({{"b", 3}});
    CHECK(a.basis(6).empty());
}

TEST_CASE("basis agrees with the exponent-vector oracle") {
    Algebra a({{"a", 2}, {"b", 3}, {"e", 3}, {"x", 4}, {"y", 5}});
    const std::vector<int> degrees = {2, 3, 3, 4, 5};
    for (int d = 0; d <= 12; ++d) {
        auto basis = a.basis(d);
        auto expected = oracle::exponent_vectors(degrees, d);
        CHECK(basis.size() == expected.size());
        // no duplicates, correct degrees
        for (size_t i = 0; i < basis.size(); ++i) {
            CHECK(basis[i].degree() == d);
            if (i) CHECK(basis[i - 1] < basis[i]);
        }
    }
}

TEST_CASE("products follow the sign rule") {
    SUBCASE("odd square is zero") {
        Algebra a({{"a", 3}});
        CHECK(a.multiply(gen(a, 0), gen(a, 0)).is_zero());
    }
    SUBCASE("even times odd commutes plainly") {
        Algebra alg({{"a", 3}, {"b", 4}});
        Element ba = alg.multiply(gen(alg, 1), gen(alg, 0));
        CHECK(ba == monomial_elem(alg, {Factor{0, 1}, Factor{1, 1}}));
    }
    SUBCASE("degree-1 model of the first cone") {
        Algebra alg({{"a", 1}, {"b", 2}, {"e", 2}});
        Element ea = alg.multiply(gen(alg, 2), gen(alg, 0));
        CHECK(ea == monomial_elem(alg, {Factor{0, 1}, Factor{2, 1}}));
        Element aea = alg.multiply(gen(alg, 0), ea);
        CHECK(aea.is_zero());
    }
    SUBCASE("odd-odd anticommute") {
        Algebra alg({{"a", 3}, {"b", 5}});
        Element ab = alg.multiply(gen(alg, 0), gen(alg, 1));
        Element ba = alg.multiply(gen(alg, 1), gen(alg, 0));
        CHECK(ba == -ab);
    }
}

TEST_CASE("monomial products match the flat-list sign oracle") {
    Algebra alg({{"a", 1}, {"b", 2}, {"c", 3}, {"d", 3}, {"e", 4}});
    const std::vector<int> degrees = {1, 2, 3, 3, 4};
    oracle::Rng rng(991);
    for (int trial = 0; trial < 200; ++trial) {
        const int d1 = rng.pick(1, 7), d2 = rng.pick(1, 7);
        auto b1 = alg.basis(d1);
        auto b2 = alg.basis(d2);
        if (b1.empty() || b2.empty()) continue;
        const Monomial& m1 = b1[static_cast<size_t>(rng.pick(0, static_cast<int>(b1.size()) - 1))];
        const Monomial& m2 = b2[static_cast<size_t>(rng.pick(0, static_cast<int>(b2.size()) - 1))];
        auto got = alg.multiply(m1, m2);

        std::vector<int> joined = oracle::to_flat(m1);
        auto flat2 = oracle::to_flat(m2);
        joined.insert(joined.end(), flat2.begin(), flat2.end());
        auto expected = oracle::canon_flat(joined, degrees);
        if (!expected) {
            CHECK(!got.has_value());
        } else {
            REQUIRE(got.has_value());
            CHECK(got->second == expected->first);
            CHECK(oracle::to_flat(got->first) == expected->second);
        }
    }
}

TEST_CASE("graded commutativity and associativity on random elements") {
    Algebra alg({{"a", 1}, {"b", 2}, {"c", 3}, {"e", 4}});
    Cdga model(alg, {Element{}, Element{}, Element{}, Element{}});
    oracle::Rng rng(7321);
    for (int trial = 0; trial < 150; ++trial) {
        Element x = rng.homogeneous(model, 12);
        Element y = rng.homogeneous(model, 12);
        Element z = rng.homogeneous(model, 6);
        const int dx = x.homogeneous_degree().value_or(0);
        const int dy = y.homogeneous_degree().value_or(0);
        Element xy = alg.multiply(x, y);
        Element yx = alg.multiply(y, x);
        CHECK(xy == ((dx * dy) % 2 ? -yx : yx));
        CHECK(alg.multiply(xy, z) == alg.multiply(x, alg.multiply(y, z)));
    }
}

TEST_CASE("products of basis slices land in the sum slice") {
    Algebra alg({{"a", 2}, {"b", 3}, {"c", 5}});
    auto b2 = alg.basis(2);
    auto b5 = alg.basis(5);
    auto b7 = alg.basis(7);
    for (const Monomial& m1 : b2) {
        for (const Monomial& m2 : b5) {
            auto prod = alg.multiply(m1, m2);
            if (!prod) continue;
            CHECK(std::binary_search(b7.begin(), b7.end(), prod->first));
        }
    }
}

TEST_CASE("permuted factor products reproduce the canonical monomial up to sign") {
    Algebra alg({{"a", 1}, {"b", 2}, {"c", 3}, {"e", 4}});
    const std::vector<int> degrees = {1, 2, 3, 4};
    oracle::Rng rng(5150);
    for (int trial = 0; trial < 100; ++trial) {
        auto basis = alg.basis(rng.pick(2, 10));
        if (basis.empty()) continue;
        const Monomial& m = basis[static_cast<size_t>(rng.pick(0, static_cast<int>(basis.size()) - 1))];
        std::vector<int> flat = oracle::to_flat(m);
        for (size_t i = flat.size(); i > 1; --i)
            std::swap(flat[i - 1], flat[static_cast<size_t>(rng.pick(0, static_cast<int>(i) - 1))]);

        Element prod = Algebra::unit_element();
        for (int g : flat) prod = alg.multiply(prod, alg.generator_element(g));
        auto expected = oracle::canon_flat(flat, degrees);
        if (!expected) {
            CHECK(prod.is_zero());  // a shuffle cannot create odd repeats unless m had none
            continue;
        }
        Element canonical = Element().add_term(m, Rational(expected->first));
        CHECK(prod == canonical);
    }
}

TEST_CASE("element formatting") {
    Algebra alg({{"a", 2}, {"b", 3}});
    Element x = alg.multiply(gen(alg, 0), gen(alg, 1)).scaled(Rational(3, 2)) - gen(alg, 1);
    CHECK(alg.format(x) == "3/2*a*b - b");
    CHECK(alg.format(Element{}) == "0");
    CHECK(alg.format(Algebra::unit_element()) == "1");
}
