#include "test_main.hpp"

#include "eqob/errors.hpp"
#include "eqob/group.hpp"

#include <set>

using namespace eqob;

namespace {

// Every subset closed under the product: exhaustive oracle for tiny groups.
std::size_t brute_force_subgroup_count(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::size_t count = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (!(mask & 1)) continue;
        bool closed = true;
        for (std::uint32_t a = 0; a < n && closed; ++a) {
            if (!((mask >> a) & 1)) continue;
            for (std::uint32_t b = 0; b < n; ++b)
                if (((mask >> b) & 1) && !((mask >> g.mul(a, b)) & 1)) {
                    closed = false;
                    break;
                }
        }
        if (closed) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("group tables satisfy the axioms") {
    for (const char* lit : {"C1", "C2", "C6", "C12", "D1", "D3", "D6", "D15", "L2", "L12", "L30", "L8"}) {
        auto g = parse_group(lit);
        CHECK(g->verify_axioms());
        CHECK(g->name() == lit);
    }
    CHECK(parse_group("C7")->order() == 7);
    CHECK(parse_group("D5")->order() == 10);
    CHECK(parse_group("L12")->order() == 12);
    CHECK(parse_group("L12")->exponent() == 6);
    CHECK(parse_group("L8")->exponent() == 2);
    CHECK_FALSE(parse_group("D3")->is_abelian());
    CHECK(parse_group("D2")->is_abelian());
}

TEST_CASE("bad group literals") {
    for (const char* lit : {"", "C", "X3", "C0", "D-1", "Cx", "L1", "C3.5"})
        CHECK_THROWS_AS(parse_group(lit), InvalidArgument);
}

TEST_CASE("dihedral relations") {
    auto g = dihedral_group(5);
    const auto x = g->parse_element("x"), y = g->parse_element("y");
    CHECK(g->element_order(x) == 5);
    CHECK(g->element_order(y) == 2);
    CHECK(g->mul(g->mul(y, x), y) == g->inv(x));
    CHECK(g->parse_element("x^2y") == g->mul(g->power(x, 2), y));
    CHECK(g->parse_element("x^-1") == g->inv(x));
    CHECK(g->parse_element("e") == g->identity());
    for (std::uint32_t a = 0; a < g->order(); ++a) CHECK(g->parse_element(g->element_label(a)) == a);
    CHECK_THROWS_AS(g->parse_element("z"), InvalidArgument);
}

TEST_CASE("element labels round-trip") {
    for (const char* lit : {"C9", "L30", "L12", "D4"}) {
        auto g = parse_group(lit);
        for (std::uint32_t a = 0; a < g->order(); ++a) CHECK(g->parse_element(g->element_label(a)) == a);
    }
}

TEST_CASE("subgroup enumeration matches the exhaustive oracle") {
    for (const char* lit : {"C1", "C6", "C8", "C12", "D3", "D4", "D5", "D6", "L4", "L8", "L12", "L18"}) {
        auto g = parse_group(lit);
        auto lat = subgroups(g);
        CAPTURE(lit);
        CHECK(lat->subgroups().size() == brute_force_subgroup_count(*g));
        for (const auto& s : lat->subgroups()) CHECK(s.is_closed());
    }
}

TEST_CASE("subgroup counts of cyclic and dihedral groups") {
    // C_n has one subgroup per divisor; D_n has tau(n) + sigma(n) subgroups.
    CHECK(subgroups(cyclic_group(12))->subgroups().size() == 6);
    CHECK(subgroups(cyclic_group(12))->class_count() == 6);
    CHECK(subgroups(dihedral_group(6))->subgroups().size() == 4 + 12);
    CHECK(subgroups(dihedral_group(15))->subgroups().size() == 4 + 24);
    // D_n, n odd: classes are C_d and D_d for each d | n.
    CHECK(subgroups(dihedral_group(15))->class_count() == 8);
    // D_4: 1, C2 center, two classes of reflections, C4, two Klein fours, D4.
    CHECK(subgroups(dihedral_group(4))->class_count() == 8);
    // L_4 = C2 x C2 has 5 subgroups.
    CHECK(subgroups(elem_ab_product(4))->subgroups().size() == 5);
}

TEST_CASE("conjugacy classes and conjugators") {
    auto g = dihedral_group(3);
    auto lat = subgroups(g);
    CHECK(lat->class_count() == 4);
    for (std::size_t c = 0; c < lat->class_count(); ++c) {
        const auto& rep = lat->representative(static_cast<int>(c));
        for (const auto& s : lat->conjugacy_class(static_cast<int>(c))) {
            auto loc = lat->locate(s);
            CHECK(loc.class_id == static_cast<int>(c));
            CHECK(rep.conjugate(loc.conjugator) == s);
        }
    }
    CHECK(lat->representative(0).order() == 1);
    CHECK(lat->representative(static_cast<int>(lat->class_count()) - 1).order() == 6);
}

TEST_CASE("subgroup bound is enforced") {
    CHECK_THROWS_AS(subgroups(cyclic_group(241)), BudgetExceeded);
    CHECK_NOTHROW(subgroups(cyclic_group(241), 300));
}

TEST_CASE("subconjugacy") {
    auto g = dihedral_group(3);
    const std::uint32_t y[1] = {g->parse_element("y")};
    const std::uint32_t xy[1] = {g->parse_element("xy")};
    auto a = Subgroup::generated_by(g, y);
    auto b = Subgroup::generated_by(g, xy);
    CHECK_FALSE(a == b);
    CHECK(is_subconjugate(a, b));
    CHECK(is_subconjugate(Subgroup::trivial(g), a));
    CHECK_FALSE(is_subconjugate(Subgroup::whole(g), a));
}

TEST_CASE("G-sets") {
    auto g = dihedral_group(3);
    auto lat = subgroups(g);
    auto reg = left_regular_gset(g);
    CHECK(reg.verify());
    CHECK(reg.is_free());
    CHECK(reg.is_transitive());
    const std::uint32_t y[1] = {g->parse_element("y")};
    const std::uint32_t xy[1] = {g->parse_element("xy")};
    auto c1 = coset_gset(g, Subgroup::generated_by(g, y));
    auto c2 = coset_gset(g, Subgroup::generated_by(g, xy));
    CHECK(c1.size() == 3);
    CHECK(c1.verify());
    CHECK_FALSE(c1.is_free());
    CHECK(gsets_isomorphic(c1, c2, *lat));
    CHECK_FALSE(gsets_isomorphic(c1, coset_gset(g, Subgroup::generated_by(g, std::vector<std::uint32_t>{1})), *lat));
    CHECK(c1.stabilizer(0) == Subgroup::generated_by(g, y));
}
