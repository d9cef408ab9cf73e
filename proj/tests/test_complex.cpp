#include "test_main.hpp"

#include "eqob/complex.hpp"
#include "eqob/errors.hpp"

#include <cmath>
#include <limits>
#include <numeric>

using namespace eqob;

namespace {

GSet points(std::size_t m) {
    // m points with trivial C_1 action.
    return GSet(cyclic_group(1), m, [&] {
        std::vector<std::uint32_t> a(m);
        std::iota(a.begin(), a.end(), 0u);
        return a;
    }());
}

BigInt binomial(std::size_t n, std::size_t k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Subgroup gen(const GroupPtr& g, const char* w) {
    const std::uint32_t e[1] = {g->parse_element(w)};
    return Subgroup::generated_by(g, e);
}

}  // namespace

TEST_CASE("join cell counts") {
    auto x = orbit_join(points(3), 2);
    CHECK(x.underlying().count(0) == 6);
    CHECK(x.underlying().count(1) == 9);
    CHECK(x.underlying().count(2) == 0);
    for (std::size_t m : {1, 2, 3, 6})
        for (std::size_t k : {1, 2, 3, 4}) {
            auto y = orbit_join(points(m), k);
            for (std::size_t j = 0; j < k; ++j)
                CHECK(BigInt(static_cast<unsigned long>(y.underlying().count(static_cast<int>(j)))) ==
                      binomial(k, j + 1) * BigInt(static_cast<unsigned long>(std::pow(m, j + 1))));
            CHECK(y.underlying().total_cells() == join_cell_count(m, k));
        }
}

TEST_CASE("budget guard names the offending size") {
    auto reg = left_regular_gset(cyclic_group(6));
    try {
        orbit_join(reg, 8, 1000);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(std::string(e.what()).find("|X|=6, k=8") != std::string::npos);
    }
    CHECK_THROWS_AS(orbit_join(reg, 0), InvalidArgument);
    CHECK(join_cell_count(1000, 100) == std::numeric_limits<std::size_t>::max());
}

TEST_CASE("free joins have trivial isotropy") {
    auto x = orbit_join(left_regular_gset(cyclic_group(6)), 3);
    for (int d = 0; d <= x.dimension(); ++d)
        for (std::size_t o = 0; o < x.orbits(d).size(); ++o) {
            CHECK(x.isotropy(d, o).order() == 1);
            CHECK(x.orbits(d)[o].size == 6);
        }
    auto e2 = orbit_join(left_regular_gset(cyclic_group(6)), 2);
    CHECK(e2.orbits(1).size() == 6);
}

TEST_CASE("vertex isotropy of D_3/<y>") {
    auto g = dihedral_group(3);
    auto x = orbit_join(coset_gset(g, gen(g, "y")), 1);
    CHECK(x.underlying().count(0) == 3);
    CHECK(x.orbits(0).size() == 1);
    std::vector<Subgroup> stabs;
    for (std::uint32_t v = 0; v < 3; ++v) stabs.push_back(x.vertices().stabilizer(v));
    CHECK(stabs[0] == gen(g, "y"));
    CHECK(stabs[1] != stabs[0]);
    CHECK(stabs[2] != stabs[0]);
    CHECK(stabs[1] != stabs[2]);
    for (const auto& s : stabs) CHECK(s.order() == 2);
    auto x2 = orbit_join(coset_gset(g, gen(g, "y")), 2);
    CHECK(x2.orbits(0).size() == 2);
    for (const auto& o : x2.orbits(0)) CHECK(o.size == 3);
}

TEST_CASE("one-point G-set") {
    auto g = dihedral_group(3);
    auto x = orbit_join(coset_gset(g, Subgroup::whole(g)), 1);
    REQUIRE(x.orbits(0).size() == 1);
    CHECK(x.isotropy(0, 0).order() == 6);
}

TEST_CASE("fixed subcomplexes") {
    auto c6 = cyclic_group(6);
    auto free2 = orbit_join(left_regular_gset(c6), 2);
    CHECK(fixed_subcomplex(free2, gen(c6, "g^3")).empty());
    CHECK(fixed_subcomplex(free2, Subgroup::trivial(c6)).total_cells() == free2.underlying().total_cells());
    auto d3 = dihedral_group(3);
    auto x = orbit_join(coset_gset(d3, gen(d3, "y")), 3);
    auto f = fixed_subcomplex(x, gen(d3, "y"));
    CHECK(f.dimension() == 2);
    CHECK(f.count(0) == 3);
    CHECK(f.count(2) == 1);
}

TEST_CASE("simplicial homology") {
    SimplicialComplex tri({{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}}});
    auto h = homology(chain_complex(tri));
    CHECK(h[0] == AbGroupNF::free(1));
    CHECK(h[1].is_zero());
    CHECK(h[2].is_zero());
    auto k33 = orbit_join(points(3), 2);
    CHECK(homology(chain_complex(k33.underlying()))[1] == AbGroupNF::free(4));
    auto square = orbit_join(points(2), 2);
    CHECK(homology(chain_complex(square.underlying()))[1] == AbGroupNF::free(1));
    CHECK_THROWS_AS(SimplicialComplex({{{0}}, {{0, 1}}}), InvalidArgument);
}

TEST_CASE("boundary of boundary vanishes") {
    auto d3 = dihedral_group(3);
    for (std::size_t k : {2, 3, 4}) {
        auto c = chain_complex(orbit_join(coset_gset(d3, gen(d3, "y")), k).underlying());
        for (std::size_t j = 2; j < c.boundaries.size(); ++j) CHECK(c.boundaries[j - 1].multiply(c.boundaries[j]).is_zero());
    }
}

TEST_CASE("regular joins: connectivity and Euler characteristic") {
    for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {3, 3}, {4, 2}, {6, 2}}) {
        auto x = orbit_join(left_regular_gset(cyclic_group(n)), k);
        auto rh = reduced_homology(chain_complex(x.underlying()));
        // rh[j + 1] = reduced H_j
        for (std::size_t j = 0; j + 1 < k; ++j) CHECK(rh[j + 1].is_zero());
        CHECK(rh[k] == AbGroupNF::free(static_cast<std::size_t>(std::pow(n - 1, k))));
        BigInt chi = 0;
        for (std::size_t j = 0; j < k; ++j)
            chi += (j % 2 ? -1 : 1) * binomial(k, j + 1) * BigInt(static_cast<unsigned long>(std::pow(n, j + 1)));
        const BigInt expected = 1 + ((k - 1) % 2 ? -1 : 1) * BigInt(static_cast<unsigned long>(std::pow(n - 1, k)));
        CHECK(chi == expected);
    }
}

TEST_CASE("join action preserves orientation") {
    auto d3 = dihedral_group(3);
    auto x = orbit_join(coset_gset(d3, gen(d3, "y")), 3);
    for (int d = 0; d <= x.dimension(); ++d)
        for (std::size_t i = 0; i < x.underlying().count(d); ++i)
            for (std::uint32_t a = 0; a < d3->order(); ++a) CHECK(x.act(a, d, i).second == 1);
}

TEST_CASE("orbit chain data reassembles the boundary matrices") {
    auto check = [](const GSimplicialComplex& x) {
        const auto data = orbit_chain_data(x);
        const auto c = chain_complex(x.underlying());
        const auto& g = *x.group();
        for (int d = 1; d <= x.dimension(); ++d) {
            SparseMatrix rebuilt(x.underlying().count(d - 1), x.underlying().count(d));
            for (std::size_t s = 0; s < x.underlying().count(d); ++s) {
                const auto& cell = data[d][x.orbit_of(d, s)];
                const auto t = x.transporter(d, s);
                const auto [img, sgn_s] = x.act(t, d, cell.representative);
                REQUIRE(img == s);
                for (const auto& f : cell.faces) {
                    const auto [fi, sgn_f] =
                        x.act(g.mul(t, f.element), d - 1, x.orbits(d - 1)[f.orbit].representative);
                    rebuilt.add(fi, s, sgn_s * sgn_f * f.sign);
                }
            }
            rebuilt.finalize();
            CHECK(rebuilt.to_dense() == c.boundaries[d].to_dense());
        }
    };
    check(orbit_join(left_regular_gset(cyclic_group(6)), 3));
    auto d3 = dihedral_group(3);
    check(orbit_join(coset_gset(d3, gen(d3, "y")), 3));
    check(orbit_join(left_regular_gset(d3), 2));
}
