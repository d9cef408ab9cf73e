#pragma once

#include "eqob/matrix.hpp"

#include <optional>
#include <vector>

namespace eqob {

/// Result of a Smith normal form computation.
///
/// `factors` holds the nonzero diagonal entries d_1 | d_2 | ... | d_r, all
/// positive, including leading 1s; r is the rank. When transforms were
/// requested, `left` (m x m) and `right` (n x n) are unimodular and satisfy
/// left * A * right == diag(factors) padded with zeros.
struct SmithForm {
    std::vector<BigInt> factors;
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;

    std::size_t rank() const { return factors.size(); }
    IntMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

SmithForm smith_normal_form(const IntMatrix& a, bool with_transforms = false);

/// Invariant factors of a sparse matrix. Eliminates unit pivots in place with
/// a Markowitz-style ordering, then runs the dense algorithm on the remaining
/// core. Word-size arithmetic is tried first and the computation restarts with
/// arbitrary precision on overflow.
std::vector<BigInt> invariant_factors(const SparseMatrix& a);

/// Rank over Q.
std::size_t rank(const SparseMatrix& a);

/// Basis of the integer kernel {x : A x = 0}, as columns.
IntMatrix kernel_basis(const IntMatrix& a);

/// True iff v lies in the Z-span of the columns of `generators`.
bool in_lattice(const IntMatrix& generators, const std::vector<BigInt>& v);

}  // namespace eqob
