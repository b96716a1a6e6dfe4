#include <doctest.h>

#include "oracles.hpp"
#include "rht/linalg.hpp"

using namespace rht;

namespace {

RMatrix make(std::initializer_list<std::initializer_list<int>> rows) {
    RMatrix m;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (int v : r) row.push_back(Rational(v));
        m.append_row(row);
    }
    return m;
}

}  // namespace

TEST_CASE("rref pivots and canonical form") {
    RMatrix m = make({{0, 2, 4}, {1, 1, 1}});
    auto pivots = rref(m);
    CHECK(pivots == std::vector<int>{0, 1});
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 0);
    CHECK(m.at(1, 1) == 1);
    CHECK(m.at(1, 2) == 2);
    CHECK(m.at(0, 2) == -1);
}

TEST_CASE("null space annihilates and has the right dimension") {
    RMatrix m = make({{1, 2, 3}, {2, 4, 6}});
    RMatrix ns = null_space(m);
    CHECK(ns.rows() == 2);
    for (int r = 0; r < ns.rows(); ++r) {
        for (int i = 0; i < m.rows(); ++i) {
            Rational dot = 0;
            for (int c = 0; c < m.cols(); ++c) dot += m.at(i, c) * ns.at(r, c);
            CHECK(dot == 0);
        }
    }
}

TEST_CASE("solve finds the echelon particular solution") {
    RMatrix m = make({{1, 1}, {0, 1}});
    auto x = solve(m, {Rational(3), Rational(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);

    RMatrix inconsistent = make({{1, 0}, {1, 0}});
    CHECK(!solve(inconsistent, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("coordinates_in round-trips row-space members") {
    RMatrix rows = row_space(make({{1, 0, 2}, {0, 1, 1}}));
    std::vector<Rational> v = {Rational(2), Rational(-1), Rational(3)};
    auto coords = coordinates_in(rows, v);
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == 2);
    CHECK((*coords)[1] == -1);
    CHECK(!coordinates_in(rows, {Rational(0), Rational(0), Rational(1)}).has_value());
    CHECK(in_row_space(rows, v));
}

TEST_CASE("rank agrees with the elimination oracle on random matrices") {
    oracle::Rng rng(20240517);
    for (int trial = 0; trial < 50; ++trial) {
        const int rows = rng.pick(1, 6), cols = rng.pick(1, 6);
        RMatrix m(rows, cols);
        std::vector<std::vector<Rational>> copy(rows, std::vector<Rational>(cols));
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                Rational v = rng.pick(0, 2) ? rng.coefficient() : Rational(0);
                m.at(r, c) = v;
                copy[r][c] = v;
            }
        }
        CHECK(rank(m) == oracle::bareiss_rank(copy));
    }
}
