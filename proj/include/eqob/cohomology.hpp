#pragma once

#include "eqob/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eqob {

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k with
/// t_1 | t_2 | ... | t_k and every t_i >= 2.
struct AbGroupNF {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;

    static AbGroupNF zero() { return {}; }
    static AbGroupNF free(std::size_t rank) { return {rank, {}}; }
    static AbGroupNF cyclic(const BigInt& order);

    /// Group Z^generators / (relations with the given nonzero invariant
    /// factors).
    static AbGroupNF from_factors(std::size_t generators, const std::vector<BigInt>& factors);
    /// Direct sum of cyclic groups Z/d (d = 0 gives Z, d = 1 is dropped).
    static AbGroupNF from_cyclic_orders(const std::vector<BigInt>& orders);

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool is_valid() const;
    /// Product of the torsion coefficients (1 for torsion-free groups).
    BigInt torsion_order() const;
    std::string to_string() const;

    friend bool operator==(const AbGroupNF&, const AbGroupNF&) = default;
};

/// Abelian group given by generators and relations: Z^generators modulo the
/// column span of `relations` (generators x #relations).
struct AbPresentation {
    std::size_t generators = 0;
    IntMatrix relations;

    static AbPresentation free(std::size_t rank);
    /// Z/order; order 0 gives Z, order 1 gives the zero group (no generators).
    static AbPresentation cyclic(long order);
    static AbPresentation zero() { return free(0); }

    bool is_free() const { return relations.cols() == 0 || relations.is_zero(); }
    AbGroupNF normal_form() const;
    friend AbPresentation direct_sum(const AbPresentation& a, const AbPresentation& b);
};

/// Cohomology groups of a cochain complex indexed by degree.
struct CohomologyResult {
    std::map<int, AbGroupNF> groups;
    /// Inclusive range of degrees whose values are known to be correct.
    int trusted_lo = 0;
    int trusted_hi = -1;
    std::string provenance;

    bool trusted(int degree) const { return degree >= trusted_lo && degree <= trusted_hi; }
    const AbGroupNF& at(int degree) const;
};

/// Free cochain complex Z^{c_0} -> Z^{c_1} -> ... with sparse coboundaries.
struct FreeCochainComplex {
    std::vector<std::size_t> ranks;
    std::vector<SparseMatrix> deltas;  // deltas[j]: C^j -> C^{j+1}, ranks[j+1] x ranks[j]
};

/// Cochain complex of finitely presented groups. Each coboundary is an
/// integer matrix on generators mapping relations into relations.
struct PresentedCochainComplex {
    std::vector<AbPresentation> groups;
    std::vector<IntMatrix> deltas;  // deltas[j]: generators(j+1) x generators(j)
};

/// H^j for lo <= j <= hi of a complex given only by its coboundaries;
/// ranks are read off the matrix shapes. Throws ConsistencyError when a
/// composite delta^{j+1} delta^j is nonzero.
CohomologyResult cohomology_from_cochains(const std::vector<IntMatrix>& deltas, int lo, int hi);

CohomologyResult cohomology(const FreeCochainComplex& c, int lo, int hi);
CohomologyResult cohomology(const PresentedCochainComplex& c, int lo, int hi);

/// Cohomology of C (x) Z/m for a free complex C, via universal
/// coefficients: H^j(C) (x) Z/m + Tor(H^{j+1}(C), Z/m).
CohomologyResult cohomology_mod(const FreeCochainComplex& c, const BigInt& m, int lo, int hi);

/// Throws ConsistencyError unless every consecutive composite vanishes.
void check_cochain_complex(const FreeCochainComplex& c);
void check_cochain_complex(const PresentedCochainComplex& c);

/// L / S for lattices given by generating columns, S contained in L.
AbGroupNF lattice_quotient(const IntMatrix& lattice, const IntMatrix& sub);

/// True iff every column of `m` lies in the column span of `generators`.
bool columns_in_span(const IntMatrix& generators, const IntMatrix& m);

/// Chain complex over Z with boundaries d_j: C_j -> C_{j-1}
/// (boundaries[j] has shape counts[j-1] x counts[j]; boundaries[0] is 0 x c_0).
struct ChainComplexZ {
    std::vector<std::size_t> counts;
    std::vector<SparseMatrix> boundaries;
};

/// Homology H_j for 0 <= j < counts.size().
std::vector<AbGroupNF> homology(const ChainComplexZ& c);
/// Reduced homology for -1 <= j < counts.size(); index 0 holds H_{-1}.
std::vector<AbGroupNF> reduced_homology(const ChainComplexZ& c);

}  // namespace eqob
