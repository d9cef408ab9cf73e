#include "eqob/tverberg.hpp"

#include "eqob/errors.hpp"

#include <algorithm>

namespace eqob {

namespace {

Subgroup cyclic_of_order(const RealRep& v, std::size_t q) {
    const auto g = family_group(v.family(), v.n());
    const std::uint32_t gen[1] = {g->power(g->generators().front().second, static_cast<long>(v.n() / q))};
    return Subgroup::generated_by(g, gen);
}

std::vector<std::pair<std::size_t, std::size_t>> fixed_dims(const RealRep& v) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto q : prime_powers_dividing(v.n())) out.emplace_back(q, fixed_dim(v, cyclic_of_order(v, q)));
    return out;
}

void require_fixed_point_free(const RealRep& v) {
    if (!is_fixed_point_free(v))
        throw InvalidArgument("representation " + v.to_string() + " has a trivial summand; classification needs V^G = 0");
}

// Shared tail of both classifications once the Euler class vanishes.
DichotomyVerdict after_euler(const RealRep& v, DichotomyVerdict out, const char* anti_theorem,
                             const char* sqfree_theorem) {
    out.prime_power_fixed_dims = fixed_dims(v);
    for (const auto& [q, dim] : out.prime_power_fixed_dims)
        if (dim == 0) {
            out.tag = DichotomyVerdict::Tag::SullivanObstructed;
            out.obstructing_prime_power = q;
            out.theorem = "sullivan-homotopy-fixed-points";
            out.reason = "V^{C_" + std::to_string(q) +
                         "} = 0, so no equivariant map from the universal space exists; the Borsuk-Ulam question "
                         "stays open for V";
            return out;
        }
    out.tag = DichotomyVerdict::Tag::AntiBorsukUlam;
    out.theorem = is_square_free(v.n()) ? sqfree_theorem : anti_theorem;
    out.reason = "Euler class vanishes and every prime power fixed space is nonzero";
    return out;
}

}  // namespace

std::string verdict_name(DichotomyVerdict::Tag t) {
    switch (t) {
        case DichotomyVerdict::Tag::BorsukUlam: return "BorsukUlam";
        case DichotomyVerdict::Tag::AntiBorsukUlam: return "AntiBorsukUlam";
        case DichotomyVerdict::Tag::SullivanObstructed: return "SullivanObstructed";
        case DichotomyVerdict::Tag::OutOfPaperScope: return "OutOfPaperScope";
    }
    return "?";
}

std::string verdict_name(TverbergReport::Verdict v) {
    switch (v) {
        case TverbergReport::Verdict::MapExists: return "MapExists";
        case TverbergReport::Verdict::PrimePowerRegime: return "PrimePowerRegime";
        case TverbergReport::Verdict::Unsupported: return "Unsupported";
    }
    return "?";
}

std::vector<std::size_t> prime_powers_dividing(std::size_t n) {
    std::vector<std::size_t> out;
    auto primes = prime_factors(n);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (auto p : primes)
        for (std::size_t q = p; n % q == 0; q *= p) out.push_back(q);
    std::sort(out.begin(), out.end());
    return out;
}

DichotomyVerdict classify_cn(const RealRep& v) {
    if (v.family() != RepFamily::C) throw InvalidArgument("classify_cn expects a C_n representation");
    require_fixed_point_free(v);
    DichotomyVerdict out;
    const auto e = euler_class(v);
    out.euler = e;
    if (!e.is_zero()) {
        out.tag = DichotomyVerdict::Tag::BorsukUlam;
        out.theorem = "cyclic-square-free-dichotomy";
        out.reason = "Euler class " + e.to_string() + " is nonzero";
        return out;
    }
    return after_euler(v, out, "cyclic-anti-borsuk-ulam", "cyclic-square-free-dichotomy");
}

DichotomyVerdict classify_dn(const RealRep& v) {
    if (v.family() != RepFamily::D) throw InvalidArgument("classify_dn expects a D_n representation");
    require_fixed_point_free(v);
    DichotomyVerdict out;
    if (v.multiplicity(IrredLabel::sign()) > 0) {
        out.tag = DichotomyVerdict::Tag::OutOfPaperScope;
        out.reason = "V contains sigma; the dihedral theorems assume it does not";
        return out;
    }
    const auto e = euler_class(restrict_to_cyclic(v));
    out.euler = e;
    if (!e.is_zero()) {
        out.tag = DichotomyVerdict::Tag::BorsukUlam;
        out.theorem = prime_factors(v.n()).size() == 1 ? "dihedral-prime-restriction" : "dihedral-restriction";
        out.reason = "restriction to C_n has nonzero Euler class " + e.to_string();
        return out;
    }
    return after_euler(v, out, "dihedral-anti-borsuk-ulam", "dihedral-square-free-dichotomy");
}

DichotomyVerdict classify(const RealRep& v) {
    switch (v.family()) {
        case RepFamily::C: return classify_cn(v);
        case RepFamily::D: return classify_dn(v);
        case RepFamily::L: break;
    }
    throw InvalidArgument("classification is available for the families C and D only");
}

std::optional<std::size_t> sullivan_flag(const RealRep& v) {
    if (v.family() == RepFamily::L) throw InvalidArgument("sullivan_flag is available for the families C and D only");
    for (const auto& [q, dim] : fixed_dims(v))
        if (dim == 0) return q;
    return std::nullopt;
}

TverbergReport tverberg_report(RepFamily f, std::size_t n, std::size_t big_n, std::size_t d) {
    if (n < 2) throw InvalidArgument("--n must be at least 2");
    if (big_n < 1) throw InvalidArgument("--N must be at least 1");
    if (d < 1) throw InvalidArgument("--d must be at least 1");
    if (f == RepFamily::D && n % 2 == 0) throw InvalidArgument("family D needs odd n, got " + std::to_string(n));
    TverbergReport r;
    r.family = f;
    r.n = n;
    r.big_n = big_n;
    r.d = d;
    r.threshold = (d + 1) * (n - 1);
    const std::string dd = d == 1 ? "" : "^" + std::to_string(d);
    switch (f) {
        case RepFamily::C:
            r.source = "C_" + std::to_string(n) + "^{*" + std::to_string(big_n) + "}";
            r.target = "S(rhobar" + dd + ")";
            r.citation = "cyclic-join-maps";
            break;
        case RepFamily::L:
            r.source = "L_" + std::to_string(n) + "^{*" + std::to_string(big_n) + "}";
            r.target = "S(rhobar" + dd + ")";
            r.citation = "elementary-abelian-join-maps";
            break;
        case RepFamily::D:
            r.source = "(D_" + std::to_string(n) + "/<y>)^{*" + std::to_string(big_n) + "}";
            r.target = "S(rhohat" + dd + ")";
            r.citation = "dihedral-join-maps";
            break;
    }
    if (!is_prime_power(n)) {
        r.verdict = TverbergReport::Verdict::MapExists;
        r.note = "equivariant maps exist for every N and d";
    } else {
        r.verdict = TverbergReport::Verdict::PrimePowerRegime;
        r.citation = "prime-power-tverberg";
        r.note = "n is a prime power: the constructions do not apply; the known positive answer for prime powers "
                 "excludes maps at N = " + std::to_string(r.threshold);
    }
    return r;
}

}  // namespace eqob
