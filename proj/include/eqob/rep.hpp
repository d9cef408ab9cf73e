#pragma once

#include "eqob/group.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace eqob {

/// C: cyclic C_n, D: dihedral D_n (n odd), L: elementary-abelian product L_n.
enum class RepFamily { C, D, L };

char family_letter(RepFamily f);
RepFamily family_from_letter(char c);
/// The group a representation of (family, n) lives on.
GroupPtr family_group(RepFamily f, std::size_t n);

/// Label of a real irreducible representation.
///
///   Triv       trivial line
///   Sign       sigma: C_n acts by (-1)^t (n even), D_n by the sign of D_n/C_n
///   Rot(r)     xi^r on C_n, generator rotates the plane by 2 pi r / n
///   RotHat(r)  xihat^r on D_n, restricts to xi^r; reflections act as reflections
///   ExtChar    L_n character with exponents `chars` over the prime list,
///              paired with its conjugate (dimension 1 when real, else 2)
struct IrredLabel {
    enum class Kind { Triv, Sign, Rot, RotHat, ExtChar };

    Kind kind = Kind::Triv;
    long r = 0;
    std::vector<std::size_t> chars;
    int dim = 1;

    static IrredLabel triv() { return {}; }
    static IrredLabel sign() { return {Kind::Sign, 0, {}, 1}; }
    static IrredLabel rot(long r) { return {Kind::Rot, r, {}, 2}; }
    static IrredLabel rot_hat(long r) { return {Kind::RotHat, r, {}, 2}; }
    /// Canonical member of {chi, conj(chi)}; the trivial character gives Triv.
    static IrredLabel ext_char(std::vector<std::size_t> chars, const std::vector<std::size_t>& primes);

    /// Complex type (endomorphism ring C) rather than real type.
    bool complex_type() const { return kind == Kind::Rot || (kind == Kind::ExtChar && dim == 2); }
    std::string to_string() const;

    auto operator<=>(const IrredLabel&) const = default;
};

/// A real representation as a multiset of irreducibles.
class RealRep {
public:
    RealRep(RepFamily family, std::size_t n);

    RepFamily family() const { return family_; }
    std::size_t n() const { return n_; }
    const std::map<IrredLabel, std::size_t>& terms() const { return terms_; }
    std::size_t multiplicity(const IrredLabel& l) const;
    std::size_t dim() const;

    /// Adds mult copies of an irreducible; throws InvalidArgument when the
    /// label is not an irreducible of this family and n.
    void add(const IrredLabel& l, std::size_t mult = 1);
    bool is_valid_label(const IrredLabel& l) const;

    std::string to_string() const;

    friend RealRep operator+(const RealRep& a, const RealRep& b);
    friend bool operator==(const RealRep&, const RealRep&) = default;

private:
    RepFamily family_;
    std::size_t n_;
    std::vector<std::size_t> primes_;
    std::map<IrredLabel, std::size_t> terms_;
};

/// Real irreducibles of C_n, D_n (n odd) or L_n.
std::vector<IrredLabel> irreducibles(RepFamily f, std::size_t n);
/// Sum of the nontrivial irreducibles (C, L) or of all xihat^r (D).
RealRep reduced_regular(RepFamily f, std::size_t n);

std::size_t fixed_dim(const IrredLabel& l, RepFamily f, std::size_t n, const Subgroup& k);
/// dim V^K; K must be a subgroup of family_group(V.family(), V.n()).
std::size_t fixed_dim(const RealRep& v, const Subgroup& k);
bool is_fixed_point_free(const RealRep& v);

struct EulerClassValue {
    enum class Tag { ModN, ZeroByParity, NonZeroByParity };

    Tag tag = Tag::ModN;
    /// Product of r^{m_r} times (n/2)^{floor(a/2)}, reduced mod n.
    std::size_t value = 0;
    /// True when two or more sigma summands were folded into rotation planes.
    bool sigma_pairs_folded = false;

    bool is_zero() const { return tag == Tag::ModN ? value == 0 : tag == Tag::ZeroByParity; }
    std::string to_string() const;
};

/// Euler class of a fixed point free representation of C_n.
EulerClassValue euler_class(const RealRep& v);

/// Restriction of a D_n representation to C_n.
RealRep restrict_to_cyclic(const RealRep& v);

/// Restriction of the standard (n-1)-dimensional representation of the
/// symmetric group along the regular embedding (C, L) or the action on
/// D_n/<y> (D), decomposed from the permutation module.
RealRep std_rep_restriction(RepFamily f, std::size_t n);

/// Parses "2*xi^3 + sigma", "triv", "xihat^2", "chi(1,0,2)", or "0".
/// xi^r is normalized: r mod n, then min(r, n-r); xi^0 = 2 triv and
/// xi^{n/2} = 2 sigma.
RealRep parse_rep(RepFamily f, std::size_t n, const std::string& text);

}  // namespace eqob
