#pragma once

#include "eqob/rep.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eqob {

struct DichotomyVerdict {
    enum class Tag { BorsukUlam, AntiBorsukUlam, SullivanObstructed, OutOfPaperScope };
    Tag tag = Tag::OutOfPaperScope;
    /// BorsukUlam: the nonzero Euler class (of the restriction to C_n for D_n).
    std::optional<EulerClassValue> euler;
    /// Theorem invoked, as a descriptive key.
    std::string theorem;
    /// (p^k, dim V^{C_{p^k}}) for every prime power dividing n.
    std::vector<std::pair<std::size_t, std::size_t>> prime_power_fixed_dims;
    /// SullivanObstructed: the prime power with V^{C_{p^k}} = 0.
    std::size_t obstructing_prime_power = 0;
    std::string reason;
};

std::string verdict_name(DichotomyVerdict::Tag t);

/// V must be a fixed point free C_n representation.
DichotomyVerdict classify_cn(const RealRep& v);
/// V must be a fixed point free D_n representation (n odd).
DichotomyVerdict classify_dn(const RealRep& v);
/// Dispatches on the family; L_n is rejected.
DichotomyVerdict classify(const RealRep& v);

/// Smallest prime power p^k dividing n with V^{C_{p^k}} = 0, where C_{p^k}
/// is the cyclic subgroup of C_n (inside D_n for family D).
std::optional<std::size_t> sullivan_flag(const RealRep& v);

/// Prime powers dividing n in increasing order (2, 3, 4 for n = 12).
std::vector<std::size_t> prime_powers_dividing(std::size_t n);

struct TverbergReport {
    enum class Verdict { MapExists, PrimePowerRegime, Unsupported };
    RepFamily family = RepFamily::C;
    std::size_t n = 0, big_n = 0, d = 0;
    std::size_t threshold = 0;  // (d + 1)(n - 1)
    Verdict verdict = Verdict::Unsupported;
    std::string citation;
    std::string source;  // the join
    std::string target;  // the representation sphere
    std::string note;
};

std::string verdict_name(TverbergReport::Verdict v);

TverbergReport tverberg_report(RepFamily f, std::size_t n, std::size_t big_n, std::size_t d);

}  // namespace eqob
