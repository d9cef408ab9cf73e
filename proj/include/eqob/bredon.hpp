#pragma once

#include "eqob/cohomology.hpp"
#include "eqob/complex.hpp"
#include "eqob/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqob {

/// Bredon cochains: C^j is the direct sum over j-cell orbits of M(G/H_orbit).
struct BredonCochains {
    std::vector<std::vector<AbPresentation>> summands;  // per degree, one per orbit
    std::vector<std::size_t> ranks;                     // generators in each degree
    std::vector<SparseMatrix> deltas;                // deltas[j]: C^j -> C^{j+1}
    std::vector<std::vector<std::size_t>> offsets;  // first generator of each orbit's summand

    /// Direct sum of the summands in degree d.
    AbPresentation group(int d) const;
    bool is_free() const;
    FreeCochainComplex as_free() const;
    PresentedCochainComplex as_presented() const;
    /// m when every group is (Z/m)^g (relations m*I), else nullopt.
    std::optional<BigInt> uniform_modulus() const;
};

/// Throws InvalidArgument when an isotropy type of X is outside M's scope.
BredonCochains bredon_cochains(const GSimplicialComplex& x, const CoefficientSystem& m);

/// H^i_G(X; M) for lo <= i <= hi. As a skeleton of the infinite join the
/// model is trusted up to dim(X) - 1.
CohomologyResult bredon_cohomology(const GSimplicialComplex& x, const CoefficientSystem& m, int lo, int hi);

enum class GroupCohomologyMethod { Milnor, Periodic, Resolution };

std::string method_name(GroupCohomologyMethod m);
GroupCohomologyMethod method_from_name(const std::string& s);

/// H^i(G; M) for lo <= i <= hi.
///   Milnor:     Bredon cohomology of orbit_join(regular, hi + 2), free orbit only.
///   Periodic:   the 2-periodic complex of a cyclic group, alternating g - 1 and the norm.
///   Resolution: Ext^i(Z, M) from lattice_resolution.
CohomologyResult group_cohomology(const GModule& m, int lo, int hi, GroupCohomologyMethod method,
                                  std::size_t max_cells = kDefaultCellBudget, std::size_t max_depth = 6);

inline constexpr std::size_t kDefaultResolutionRank = 4000;

/// Free resolution ... -> F_1 -> F_0 -> L -> 0 with F_j = Z[G]^{r_j}.
/// Coordinates of F_j: index b * |G| + g stands for g * (generator b).
struct FreeResolution {
    GroupPtr group;
    std::vector<std::size_t> ranks;     // r_0 .. r_d
    IntMatrix augmentation;             // rank(L) x |G| r_0
    std::vector<IntMatrix> boundaries;  // boundaries[j] : F_j -> F_{j-1} for j >= 1; boundaries[0] is empty
    bool finite = false;                // kernel reached zero: F_j = 0 beyond the last stage

    std::size_t stages() const { return ranks.size(); }
};

/// Resolves a torsion-free module to F_0 .. F_depth. Generators of each
/// kernel are taken from its lattice basis, skipping vectors already in the
/// Z-span of the G-translates of earlier choices. Throws InvalidArgument on
/// torsion, BudgetExceeded if some Z-rank exceeds max_rank.
FreeResolution lattice_resolution(const GModule& l, std::size_t depth,
                                  std::size_t max_rank = kDefaultResolutionRank);

/// Ext^i_{Z[G]}(L, M) from a resolution; requires i < stages() unless the
/// resolution is finite.
AbGroupNF ext_group_ring(const FreeResolution& res, const GModule& m, std::size_t i);
/// Builds a resolution of depth i + 1; BudgetExceeded when i + 1 > max_depth.
AbGroupNF ext_group_ring(const GModule& l, const GModule& m, std::size_t i, std::size_t max_depth = 6);

struct CohehdnRow {
    int degree = 0;
    AbGroupNF bredon;           // H^i_{D_n}(E_H D_n skeleton; M)
    AbGroupNF ext;              // Ext^{i-1}_{D_n}(K, M^e)
    bool isomorphic = false;
    AbGroupNF group_dn;         // H^i(D_n; M^e)
    AbGroupNF group_h_prev;     // H^{i-1}(H; M^e)
    bool vanishing_forced = false;
    bool vanishes = false;
};

struct CohehdnReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::string coefficients;
    std::vector<CohehdnRow> rows;

    bool all_isomorphic() const;
    /// Every forced vanishing actually vanishes.
    bool vanishing_holds() const;
};

/// Compares Bredon cohomology of orbit_join(D_n/<y>, max_i + 2) with
/// Ext^{i-1}(K, M^e) for 2 <= i <= max_i (and i = 1 when M^e = 0).
CohehdnReport cohehdn_verify(std::size_t n, const CoefficientSystem& m, int max_i,
                             std::size_t max_cells = kDefaultCellBudget, std::size_t max_depth = 6);

}  // namespace eqob
