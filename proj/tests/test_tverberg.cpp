#include "test_main.hpp"

#include "eqob/errors.hpp"
#include "eqob/tverberg.hpp"

#include <functional>

using namespace eqob;

namespace {

using Tag = DichotomyVerdict::Tag;

RealRep c(std::size_t n, const char* s) { return parse_rep(RepFamily::C, n, s); }
RealRep dn(std::size_t n, const char* s) { return parse_rep(RepFamily::D, n, s); }

// Every fixed point free representation of dimension <= max_dim.
void sweep(RepFamily f, std::size_t n, std::size_t max_dim, const std::function<void(const RealRep&)>& visit) {
    std::vector<IrredLabel> labels;
    for (const auto& l : irreducibles(f, n))
        if (l.kind != IrredLabel::Kind::Triv) labels.push_back(l);
    RealRep v(f, n);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t dim) {
        if (i == labels.size()) {
            if (dim > 0) visit(v);
            return;
        }
        rec(i + 1, dim);
        RealRep saved = v;
        std::size_t added = 0;
        while (dim + (added + 1) * static_cast<std::size_t>(labels[i].dim) <= max_dim) {
            v.add(labels[i]);
            ++added;
            rec(i + 1, dim + added * static_cast<std::size_t>(labels[i].dim));
        }
        v = saved;
    };
    rec(0, 0);
}

}  // namespace

TEST_CASE("prime powers dividing n") {
    CHECK(prime_powers_dividing(12) == std::vector<std::size_t>{2, 3, 4});
    CHECK(prime_powers_dividing(9) == std::vector<std::size_t>{3, 9});
    CHECK(prime_powers_dividing(30) == std::vector<std::size_t>{2, 3, 5});
    CHECK(prime_powers_dividing(1).empty());
}

TEST_CASE("cyclic classification examples") {
    auto a = classify_cn(c(6, "xi^1 + xi^2"));
    CHECK(a.tag == Tag::BorsukUlam);
    REQUIRE(a.euler);
    CHECK(a.euler->value == 2);

    auto b = classify_cn(c(6, "2*sigma + xi^2"));
    CHECK(b.tag == Tag::AntiBorsukUlam);
    CHECK(b.euler->is_zero());
    CHECK(b.euler->sigma_pairs_folded);

    auto s = classify_cn(c(9, "2*xi^3"));
    CHECK(s.tag == Tag::SullivanObstructed);
    CHECK(s.obstructing_prime_power == 9);
    CHECK(sullivan_flag(c(9, "2*xi^3")) == std::optional<std::size_t>(9));

    auto t = classify_cn(c(12, "xi^4 + 2*sigma"));
    CHECK(t.tag == Tag::AntiBorsukUlam);
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(t.prime_power_fixed_dims == std::vector<P>{{2, 4}, {3, 2}, {4, 2}});

    CHECK_THROWS_AS(classify_cn(c(6, "triv + xi^1")), InvalidArgument);
    CHECK_THROWS_AS(classify_cn(dn(3, "xihat^1")), InvalidArgument);
}

TEST_CASE("dihedral classification examples") {
    CHECK(classify_dn(dn(15, "xihat^3 + xihat^5")).tag == Tag::AntiBorsukUlam);
    auto b = classify_dn(dn(15, "xihat^1"));
    CHECK(b.tag == Tag::BorsukUlam);
    CHECK(b.euler->value == 1);
    CHECK(classify_dn(dn(15, "sigma + xihat^3")).tag == Tag::OutOfPaperScope);
    auto p = classify_dn(dn(3, "xihat^1"));
    CHECK(p.tag == Tag::BorsukUlam);
    CHECK(p.theorem == "dihedral-prime-restriction");
    // 9 is not square free: 2 xihat^3 has no C_9 fixed vectors.
    auto s = classify_dn(dn(9, "2*xihat^3"));
    CHECK(s.tag == Tag::SullivanObstructed);
    CHECK(s.obstructing_prime_power == 9);
    CHECK_THROWS_AS(classify_dn(dn(5, "triv + xihat^1")), InvalidArgument);
    CHECK_THROWS_AS(classify(parse_rep(RepFamily::L, 6, "chi(1,1)")), InvalidArgument);
}

TEST_CASE("sullivan flags") {
    CHECK_FALSE(sullivan_flag(c(6, "xi^2 + xi^3")));
    CHECK_FALSE(sullivan_flag(reduced_regular(RepFamily::C, 6)));
    CHECK(sullivan_flag(c(12, "xi^1")) == std::optional<std::size_t>(2));
    CHECK(sullivan_flag(c(8, "xi^2")) == std::optional<std::size_t>(4));
}

TEST_CASE("square free dichotomy sweep") {
    for (std::size_t n : {6, 10, 15, 30}) {
        std::size_t count = 0;
        sweep(RepFamily::C, n, 8, [&](const RealRep& v) {
            ++count;
            const auto verdict = classify_cn(v);
            CHECK(verdict.tag != Tag::SullivanObstructed);
            CHECK((verdict.tag == Tag::BorsukUlam) == !euler_class(v).is_zero());
            if (verdict.tag == Tag::AntiBorsukUlam)
                for (const auto& [q, dim] : verdict.prime_power_fixed_dims) CHECK(dim > 0);
        });
        CHECK(count > 0);
    }
}

TEST_CASE("non square free sweeps") {
    for (std::size_t n : {4, 8, 9, 12}) {
        bool seen_sullivan = false;
        sweep(RepFamily::C, n, 6, [&](const RealRep& v) {
            const auto verdict = classify_cn(v);
            CHECK((verdict.tag == Tag::BorsukUlam) == !euler_class(v).is_zero());
            if (verdict.tag == Tag::SullivanObstructed) {
                seen_sullivan = true;
                CHECK(sullivan_flag(v) == std::optional<std::size_t>(verdict.obstructing_prime_power));
            }
        });
        CHECK(seen_sullivan);
    }
}

TEST_CASE("dihedral agrees with its restriction when the restriction is Borsuk-Ulam") {
    for (std::size_t n : {3, 9, 15}) {
        sweep(RepFamily::D, n, 8, [&](const RealRep& v) {
            const auto d = classify_dn(v);
            if (v.multiplicity(IrredLabel::sign()) > 0) {
                CHECK(d.tag == Tag::OutOfPaperScope);
                return;
            }
            if (classify_cn(restrict_to_cyclic(v)).tag == Tag::BorsukUlam) CHECK(d.tag == Tag::BorsukUlam);
            if (is_square_free(n)) CHECK(d.tag != Tag::SullivanObstructed);
        });
    }
}

TEST_CASE("tverberg reports") {
    auto a = tverberg_report(RepFamily::C, 6, 10, 1);
    CHECK(a.verdict == TverbergReport::Verdict::MapExists);
    CHECK(a.citation == "cyclic-join-maps");
    auto b = tverberg_report(RepFamily::D, 15, 100, 3);
    CHECK(b.verdict == TverbergReport::Verdict::MapExists);
    CHECK(b.citation == "dihedral-join-maps");
    auto p = tverberg_report(RepFamily::C, 8, 7, 1);
    CHECK(p.verdict == TverbergReport::Verdict::PrimePowerRegime);
    CHECK(p.threshold == 14);
    CHECK(tverberg_report(RepFamily::L, 12, 3, 2).verdict == TverbergReport::Verdict::MapExists);
    CHECK_THROWS_AS(tverberg_report(RepFamily::D, 6, 3, 2), InvalidArgument);
    CHECK_THROWS_AS(tverberg_report(RepFamily::C, 1, 3, 2), InvalidArgument);

    for (std::size_t n = 2; n <= 40; ++n)
        for (auto f : {RepFamily::C, RepFamily::D, RepFamily::L}) {
            if (f == RepFamily::D && n % 2 == 0) continue;
            const auto first = tverberg_report(f, n, 1, 1).verdict;
            for (std::size_t big_n : {1, 5, 50})
                for (std::size_t d : {1, 2, 7}) {
                    const auto r = tverberg_report(f, n, big_n, d);
                    CHECK(r.verdict == first);
                    CHECK(r.threshold == (d + 1) * (n - 1));
                    CHECK((r.verdict == TverbergReport::Verdict::MapExists) == !is_prime_power(n));
                }
        }
}
