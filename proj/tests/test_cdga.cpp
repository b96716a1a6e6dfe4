#include <doctest.h>

#include "oracles.hpp"
#include "rht/cdga.hpp"
#include "rht/topology.hpp"

using namespace rht;

namespace {

Cdga sphere_model() {
    Algebra alg({{"x", 2}, {"y", 3}});
    return Cdga(alg, {Element{}, alg.multiply(alg.generator_element(0), alg.generator_element(0))});
}

Element gen(const Cdga& m, int i) { return m.algebra().generator_element(i); }

}  // namespace

TEST_CASE("differential examples on the cone models") {
    Fixture c3 = build_ck(3);
    // a*e is closed: d(a*e) = -a*(a*b) = 0
    Element ae = c3.model.multiply(gen(c3.model, 0), gen(c3.model, 2));
    CHECK(c3.model.apply_d(ae).is_zero());

    CHECK(c3.model.apply_d(Algebra::unit_element()).is_zero());

    Fixture c2 = build_ck(2);
    Element be = c2.model.multiply(gen(c2.model, 1), gen(c2.model, 2));
    Element expected = c2.model.multiply(c2.model.multiply(gen(c2.model, 0), gen(c2.model, 0)),
                                         gen(c2.model, 1));
    CHECK(c2.model.apply_d(be) == expected);
}

TEST_CASE("apply_d matches the flat Leibniz oracle") {
    for (int k : {1, 2, 3}) {
        Fixture fx = build_ck(k);
        const auto degrees = oracle::generator_degrees(fx.model);
        std::vector<oracle::FlatElement> diffs;
        for (int g = 0; g < fx.model.algebra().generator_count(); ++g)
            diffs.push_back(oracle::to_flat(fx.model.diff(g)));
        oracle::Rng rng(42 + k);
        for (int trial = 0; trial < 60; ++trial) {
            Element x = rng.homogeneous(fx.model, 3 * k + 1);
            CHECK(oracle::to_flat(fx.model.apply_d(x)) == oracle::apply_d(oracle::to_flat(x), diffs, degrees));
        }
    }
}

TEST_CASE("validation flags the right defects") {
    SUBCASE("first cone model is valid and minimal") {
        Fixture c1 = build_ck(1);
        ValidationReport r = c1.model.validate(true);
        CHECK(r.valid_strict());
    }
    SUBCASE("d squared violation") {
        Algebra alg({{"a", 1}, {"b", 2}, {"e", 2}, {"x", 1}});
        // d x = e, d e = a*b gives d(d x) = a*b != 0
        Cdga bad(alg, {Element{}, Element{}, alg.multiply(alg.generator_element(0), alg.generator_element(1)),
                       alg.generator_element(2)});
        ValidationReport r = bad.validate(false);
        CHECK(!r.valid());
        bool found = false;
        for (const auto& issue : r.issues)
            found = found || (issue.kind == ValidationIssue::Kind::DSquared && issue.generator == "x");
        CHECK(found);
    }
    SUBCASE("linear differential breaks minimality only") {
        Algebra alg({{"a", 2}, {"e", 1}});
        Cdga model(alg, {Element{}, alg.generator_element(0)});
        ValidationReport r = model.validate(true);
        CHECK(r.valid());
        CHECK(!r.valid_strict());
        REQUIRE(r.issues.size() == 1);
        CHECK(r.issues[0].kind == ValidationIssue::Kind::NonMinimal);
        CHECK(r.issues[0].generator == "e");
    }
    SUBCASE("inhomogeneous differential") {
        Algebra alg({{"a", 2}, {"b", 3}, {"e", 2}});
        Cdga model(alg, {Element{}, Element{}, alg.generator_element(0) + alg.generator_element(1)});
        ValidationReport r = model.validate(false);
        CHECK(!r.valid());
    }
}

TEST_CASE("cohomology of the odd cone model through degree 9") {
    Fixture c3 = build_ck(3);
    CohomologyBasis basis(c3.model, 9);
    const std::vector<int> expected = {1, 0, 0, 1, 1, 0, 0, 0, 0, 1};
    for (int d = 0; d <= 9; ++d) {
        CHECK(basis.betti(d) == expected[static_cast<size_t>(d)]);
        CHECK(basis.betti(d) == oracle::betti(c3.model, d));
    }
    Element ae = c3.model.multiply(gen(c3.model, 0), gen(c3.model, 2));
    CHECK(basis.rep_element(9, 0) == ae);
}

TEST_CASE("cohomology of the even-sphere model") {
    Cdga model = sphere_model();
    CohomologyBasis basis(model, 4);
    CHECK(basis.betti(2) == 1);
    CHECK(basis.betti(3) == 0);
    CHECK(basis.betti(4) == 0);
    for (int d = 0; d <= 4; ++d) CHECK(basis.betti(d) == oracle::betti(model, d));
}

TEST_CASE("zero differential gives betti = slice dimension") {
    Algebra alg({{"a", 2}, {"b", 3}});
    Cdga model(alg, {Element{}, Element{}});
    CohomologyBasis basis(model, 8);
    for (int d = 0; d <= 8; ++d) CHECK(basis.betti(d) == static_cast<int>(model.basis(d).size()));
}

TEST_CASE("cup products on the cone fixtures") {
    Fixture c1 = build_ck(1);
    CohomologyBasis b1(c1.model, 3);
    CohomologyClass ca = b1.class_of(c1.model, gen(c1.model, 0));
    CohomologyClass cb = b1.class_of(c1.model, gen(c1.model, 1));
    CHECK(cup(c1.model, b1, ca, cb).is_zero());

    CohomologyClass unit = b1.class_of(c1.model, Algebra::unit_element());
    CohomologyClass u = cup(c1.model, b1, unit, cb);
    CHECK(u.class_coords == cb.class_coords);

    Fixture c3 = build_ck(3);
    CohomologyBasis b3(c3.model, 9);
    CohomologyClass beta = b3.class_of(c3.model, gen(c3.model, 1));
    CHECK(cup(c3.model, b3, beta, beta).is_zero());

    CHECK_THROWS_AS(cup(c3.model, b3, b3.class_of(c3.model, gen(c3.model, 2)),
                        b3.class_of(c3.model, gen(c3.model, 2))),
                    ArgumentError);  // e is not closed
}

TEST_CASE("exactness witnesses are the echelon solutions") {
    Fixture c3 = build_ck(3);
    Element b2 = c3.model.multiply(gen(c3.model, 1), gen(c3.model, 1));
    ExactnessResult r = is_exact(c3.model, b2);
    REQUIRE(r.exact);
    CHECK(r.witness == gen(c3.model, 3));  // d x = b*b

    ExactnessResult zero = is_exact(c3.model, Element{});
    CHECK(zero.exact);
    CHECK(zero.witness.is_zero());

    Element ae = c3.model.multiply(gen(c3.model, 0), gen(c3.model, 2));
    ExactnessResult non = is_exact(c3.model, ae);
    CHECK(!non.exact);
    CHECK(!is_zero_vector(non.class_coords));

    CHECK_THROWS_AS(is_exact(c3.model, gen(c3.model, 2)), ArgumentError);  // not closed
}

TEST_CASE("d squared and Leibniz on random elements") {
    for (int k : {1, 2, 3}) {
        Fixture fx = build_ck(k);
        oracle::Rng rng(100 + k);
        for (int trial = 0; trial < 120; ++trial) {
            Element x = rng.homogeneous(fx.model, 12);
            Element y = rng.homogeneous(fx.model, 12);
            CHECK(fx.model.apply_d(fx.model.apply_d(x)).is_zero());
            const int dx = x.homogeneous_degree().value_or(0);
            Element lhs = fx.model.apply_d(fx.model.multiply(x, y));
            Element rhs = fx.model.multiply(fx.model.apply_d(x), y) +
                          (dx % 2 ? -fx.model.multiply(x, fx.model.apply_d(y))
                                  : fx.model.multiply(x, fx.model.apply_d(y)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("rank identities hold in every degree") {
    Fixture c2 = build_ck(2);
    CohomologyBasis basis(c2.model, 7);
    for (int d = 0; d <= 7; ++d) {
        CHECK(basis.cocycles(d).rows() == basis.betti(d) + basis.coboundaries(d).rows());
        // coboundaries sit inside cocycles
        for (int r = 0; r < basis.coboundaries(d).rows(); ++r)
            CHECK(in_row_space(basis.cocycles(d), basis.coboundaries(d).row(r)));
    }
}

TEST_CASE("cup is independent of the representative") {
    Fixture c2 = build_ck(2);
    CohomologyBasis basis(c2.model, 6);
    oracle::Rng rng(314);
    CohomologyClass ca = basis.class_of(c2.model, gen(c2.model, 0));
    CohomologyClass cb = basis.class_of(c2.model, gen(c2.model, 1));
    for (int trial = 0; trial < 40; ++trial) {
        Element w = rng.homogeneous_of_degree(c2.model, ca.degree - 1);
        CohomologyClass shifted = ca;
        shifted.representative = ca.representative + c2.model.apply_d(w);
        CHECK(cup(c2.model, basis, shifted, cb).class_coords == cup(c2.model, basis, ca, cb).class_coords);
    }
}
