#include "test_main.hpp"

#include "eqob/cohomology.hpp"
#include "eqob/errors.hpp"

using namespace eqob;

namespace {

SparseMatrix sparse(const IntMatrix& m) { return SparseMatrix::from_dense(m); }

}  // namespace

TEST_CASE("normal form strings") {
    CHECK(AbGroupNF::zero().to_string() == "0");
    CHECK(AbGroupNF::free(1).to_string() == "Z");
    CHECK(AbGroupNF{2, {2, 6}}.to_string() == "Z^2 + Z/2 + Z/6");
    CHECK(AbGroupNF::cyclic(0) == AbGroupNF::free(1));
    CHECK(AbGroupNF::cyclic(1).is_zero());
    CHECK_FALSE((AbGroupNF{0, {4, 6}}).is_valid());
    CHECK(AbPresentation{2, IntMatrix{{2, 0}, {0, 3}}}.normal_form() == AbGroupNF{0, {6}});
}

TEST_CASE("free cochain complex Z -2-> Z") {
    auto r = cohomology_from_cochains({IntMatrix{{2}}}, 0, 3);
    CHECK(r.at(0).is_zero());
    CHECK(r.at(1) == AbGroupNF{0, {2}});
    CHECK(r.at(2).is_zero());
    CHECK_THROWS_AS(r.at(7), InvalidArgument);
}

TEST_CASE("nonzero composite is rejected") {
    CHECK_THROWS_AS(cohomology_from_cochains({IntMatrix{{1}}, IntMatrix{{1}}}, 0, 2), ConsistencyError);
}

TEST_CASE("presented complex Z/6 -2-> Z/6") {
    PresentedCochainComplex c;
    c.groups = {AbPresentation::cyclic(6), AbPresentation::cyclic(6)};
    c.deltas = {IntMatrix{{2}}};
    auto r = cohomology(c, 0, 2);
    CHECK(r.at(0) == AbGroupNF{0, {2}});
    CHECK(r.at(1) == AbGroupNF{0, {2}});
    CHECK(r.at(2).is_zero());
}

TEST_CASE("presented complex rejects maps that do not respect relations") {
    PresentedCochainComplex c;
    c.groups = {AbPresentation::free(1), AbPresentation::cyclic(6), AbPresentation::cyclic(4)};
    c.deltas = {IntMatrix{{3}}, IntMatrix{{1}}};
    CHECK_THROWS_AS(cohomology(c, 0, 2), ConsistencyError);
}

TEST_CASE("free complexes agree with the presented computation") {
    // Z^2 -> Z^3 -> Z^1 with delta1 * delta0 = 0.
    IntMatrix d0{{1, 1}, {2, 2}, {0, 4}};
    IntMatrix d1{{2, -1, 0}};
    FreeCochainComplex f{{2, 3, 1}, {sparse(d0), sparse(d1)}};
    PresentedCochainComplex p{{AbPresentation::free(2), AbPresentation::free(3), AbPresentation::free(1)}, {d0, d1}};
    auto a = cohomology(f, 0, 3);
    auto b = cohomology(p, 0, 3);
    for (int j = 0; j <= 3; ++j) CHECK(a.at(j) == b.at(j));
    CHECK(a.at(1) == AbGroupNF{0, {4}});
}

TEST_CASE("lattice quotients") {
    CHECK(lattice_quotient(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{2, 0}, {0, 3}}) == AbGroupNF{0, {6}});
    CHECK(lattice_quotient(IntMatrix{{2}, {0}}, IntMatrix{{4}, {0}}) == AbGroupNF{0, {2}});
    CHECK_THROWS_AS(lattice_quotient(IntMatrix{{2}}, IntMatrix{{3}}), ConsistencyError);
    CHECK(columns_in_span(IntMatrix{{2, 0}, {0, 3}}, IntMatrix{{4}, {3}}));
    CHECK_FALSE(columns_in_span(IntMatrix{{2, 0}, {0, 3}}, IntMatrix{{1}, {3}}));
}

TEST_CASE("cellular homology of the projective plane") {
    ChainComplexZ c;
    c.counts = {1, 1, 1};
    c.boundaries = {SparseMatrix(0, 1), sparse(IntMatrix{{0}}), sparse(IntMatrix{{2}})};
    auto h = homology(c);
    CHECK(h[0] == AbGroupNF::free(1));
    CHECK(h[1] == AbGroupNF{0, {2}});
    CHECK(h[2].is_zero());
    auto rh = reduced_homology(c);
    CHECK(rh[0].is_zero());
    CHECK(rh[1].is_zero());
    CHECK(rh[2] == AbGroupNF{0, {2}});
}

TEST_CASE("reduced homology of two points") {
    ChainComplexZ c{{2}, {SparseMatrix(0, 2)}};
    auto rh = reduced_homology(c);
    CHECK(rh[0].is_zero());
    CHECK(rh[1] == AbGroupNF::free(1));
}
