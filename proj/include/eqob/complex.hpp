#pragma once

#include "eqob/cohomology.hpp"
#include "eqob/group.hpp"

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace eqob {

using Simplex = std::vector<std::uint32_t>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

/// Finite abstract simplicial complex. Simplices are sorted vertex tuples,
/// stored per dimension in lexicographic order.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Takes simplices grouped by dimension; sorts and deduplicates them.
    /// Throws InvalidArgument when the set is not closed under faces.
    explicit SimplicialComplex(std::vector<std::vector<Simplex>> by_dim);

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }
    std::size_t count(int dim) const;
    const std::vector<Simplex>& simplices(int dim) const { return by_dim_.at(dim); }
    /// Index of a sorted simplex within its dimension, or -1.
    long index_of(const Simplex& s) const;
    std::size_t total_cells() const;

private:
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::unordered_map<Simplex, std::uint32_t, SimplexHash>> index_;
};

/// Simplicial chain complex with the alternating-sign boundary on sorted
/// tuples: d[v_0..v_j] = sum_i (-1)^i [v_0..^v_i..v_j].
ChainComplexZ chain_complex(const SimplicialComplex& x);

/// Simplicial complex with a simplicial G-action on its vertices, decomposed
/// into orbits. Each orbit representative is chosen so that its isotropy is
/// the lattice representative of its conjugacy class.
class GSimplicialComplex {
public:
    struct Orbit {
        std::size_t representative;  // simplex index within the dimension
        int class_id;                // conjugacy class of the isotropy
        std::size_t size;
    };

    /// Throws InvalidArgument unless the simplices are closed under faces
    /// and under the action, and ConsistencyError if some simplex has a
    /// setwise stabilizer larger than its pointwise stabilizer.
    GSimplicialComplex(GSet vertices, std::vector<std::vector<Simplex>> by_dim, LatticePtr lattice = nullptr);

    const GroupPtr& group() const { return vertices_.group(); }
    const GSet& vertices() const { return vertices_; }
    const LatticePtr& lattice() const { return lattice_; }
    const SimplicialComplex& underlying() const { return complex_; }
    int dimension() const { return complex_.dimension(); }

    const std::vector<Orbit>& orbits(int dim) const { return orbits_.at(dim); }
    /// Orbit id of a simplex.
    std::size_t orbit_of(int dim, std::size_t index) const { return orbit_of_[dim][index]; }
    /// Element t with t * representative = simplex.
    std::uint32_t transporter(int dim, std::size_t index) const { return transporter_[dim][index]; }
    const Subgroup& isotropy(int dim, std::size_t orbit) const;

    /// Image of a simplex under g, with the sign of the sorting permutation.
    std::pair<std::size_t, int> act(std::uint32_t g, int dim, std::size_t index) const;

private:
    GSet vertices_;
    LatticePtr lattice_;
    SimplicialComplex complex_;
    std::vector<std::vector<Orbit>> orbits_;
    std::vector<std::vector<std::size_t>> orbit_of_;
    std::vector<std::vector<std::uint32_t>> transporter_;
};

inline constexpr std::size_t kDefaultCellBudget = 1000000;

/// Number of simplices of the k-fold join of an m-point set, (m+1)^k - 1,
/// saturating at SIZE_MAX.
std::size_t join_cell_count(std::size_t m, std::size_t k);

/// The k-fold join X * ... * X with the diagonal action. Vertex
/// copy * |X| + p is point p in copy `copy`. Throws BudgetExceeded when the
/// simplex count exceeds max_cells.
GSimplicialComplex orbit_join(const GSet& x, std::size_t k, std::size_t max_cells = kDefaultCellBudget,
                              LatticePtr lattice = nullptr);

/// Simplices all of whose vertices are fixed by K.
SimplicialComplex fixed_subcomplex(const GSimplicialComplex& x, const Subgroup& k);

/// One boundary face of an orbit representative: face = element * rep(orbit).
struct OrbitFace {
    std::size_t orbit;
    std::uint32_t element;
    int sign;
};

struct OrbitCell {
    std::size_t representative;
    int class_id;
    std::vector<OrbitFace> faces;  // faces[i] drops vertex i
};

/// Per dimension, per orbit: the representative and its faces expressed
/// through orbit representatives of the dimension below.
std::vector<std::vector<OrbitCell>> orbit_chain_data(const GSimplicialComplex& x);

}  // namespace eqob
