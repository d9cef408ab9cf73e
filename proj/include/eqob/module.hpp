#pragma once

#include "eqob/cohomology.hpp"
#include "eqob/group.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace eqob {

/// Finitely generated abelian group with a left G-action, given by one
/// integer matrix per group element acting on generator coordinates.
class GModule {
public:
    /// Validates that the matrices respect the relations and form a
    /// homomorphism modulo the relations.
    GModule(GroupPtr group, AbPresentation underlying, std::vector<IntMatrix> action);

    /// Extends images of group->generators() homomorphically.
    static GModule from_generators(GroupPtr group, AbPresentation underlying, const std::vector<IntMatrix>& images);
    static GModule trivial(GroupPtr group, AbPresentation underlying);
    /// Z{X} with basis the points of X.
    static GModule permutation(const GSet& x);
    /// Kernel of the augmentation Z{X} -> Z, basis e_p - e_0 for p >= 1.
    static GModule augmentation_kernel(const GSet& x);
    static GModule group_ring(GroupPtr group);

    const GroupPtr& group() const { return group_; }
    const AbPresentation& underlying() const { return underlying_; }
    std::size_t generators() const { return underlying_.generators; }
    const IntMatrix& rho(std::uint32_t g) const { return action_[g]; }
    bool torsion_free() const { return underlying_.is_free(); }
    bool is_zero() const { return underlying_.normal_form().is_zero(); }

    /// The module restricted to a cyclic subgroup, as a module over
    /// cyclic_group(|K|) with generator g^1 acting as a generator of K.
    GModule restrict_to_cyclic(const Subgroup& k) const;

private:
    GroupPtr group_;
    AbPresentation underlying_;
    std::vector<IntMatrix> action_;
};

/// Contravariant functor on the orbit category restricted to a set of
/// conjugacy classes of isotropy. Orbits are identified with G/H_c for the
/// lattice representative H_c of class c; the morphism G/H_c -> G/K_d,
/// aH_c -> a g K_d (defined when g^{-1} H_c g is in K_d) is keyed by
/// (c, d, least element of g K_d). Its value is a matrix M(G/K_d) -> M(G/H_c)
/// on generator coordinates.
class CoefficientSystem {
public:
    enum class Rule { Explicit, Constant, ZH, FreeModule };

    explicit CoefficientSystem(LatticePtr lattice);

    /// M(G/H) = A for every H, every morphism the identity.
    static CoefficientSystem constant(LatticePtr lattice, AbPresentation a);
    static CoefficientSystem zero(LatticePtr lattice);
    /// Z at classes subconjugate to H (including e), 0 elsewhere.
    static CoefficientSystem z_h(LatticePtr lattice, const Subgroup& h);
    /// Defined on the free orbit only: M(G/e) = M, M(a -> ag) = rho(g).
    static CoefficientSystem from_module(LatticePtr lattice, const GModule& m);

    const LatticePtr& lattice() const { return lattice_; }
    Rule rule() const { return rule_; }

    void set_group(int class_id, AbPresentation a);
    /// Records M(G/H_c -> G/K_d via g). Throws InvalidArgument if no such
    /// morphism exists or shapes do not match.
    void set_morphism(int class_h, int class_k, std::uint32_t g, IntMatrix m);

    bool in_scope(int class_id) const;
    const AbPresentation& value(int class_id) const;
    IntMatrix morphism(int class_h, int class_k, std::uint32_t g) const;
    /// Least element of g K_d, after checking that the morphism exists.
    std::uint32_t canonical_element(int class_h, int class_k, std::uint32_t g) const;

    /// Checks well-definedness on relations and functoriality on every
    /// composable pair of explicit morphisms. Throws InvalidArgument.
    void validate() const;

    /// M^e = M(G/e) as a G-module via the automorphisms a -> ag of G/e.
    GModule module_at_free_orbit() const;

    std::string describe() const { return description_; }
    void set_description(std::string d) { description_ = std::move(d); }

private:
    LatticePtr lattice_;
    Rule rule_ = Rule::Explicit;
    std::map<int, AbPresentation> groups_;
    std::map<std::tuple<int, int, std::uint32_t>, IntMatrix> morphisms_;
    std::vector<IntMatrix> module_action_;
    std::string description_;
};

}  // namespace eqob
