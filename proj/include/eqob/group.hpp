#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace eqob {

enum class GroupFamily { Cyclic, Dihedral, ElemAbProduct, Generic };

/// Finite group stored as a dense multiplication table over element indices
/// 0..order-1. Element 0 is always the identity.
///
/// Element layout per family:
///   Cyclic(n):        index t is g^t.
///   Dihedral(n):      index a + n*b is x^a y^b (0 <= a < n, b in {0,1}).
///   ElemAbProduct(n): mixed-radix digits over the prime list (ascending,
///                     with multiplicity), first prime least significant.
class FiniteGroup {
public:
    /// Generic group from a table; `generators` are (label, element) pairs.
    static std::shared_ptr<const FiniteGroup> from_table(std::vector<std::uint32_t> table, std::size_t order,
                                                         std::vector<std::pair<std::string, std::uint32_t>> generators,
                                                         std::string name = "G");

    std::size_t order() const { return order_; }
    std::uint32_t identity() const { return 0; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
    std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
    std::uint32_t conj(std::uint32_t x, std::uint32_t g) const { return mul(mul(x, g), inverse_[x]); }
    std::uint32_t power(std::uint32_t a, long k) const;
    std::size_t element_order(std::uint32_t a) const;

    GroupFamily family() const { return family_; }
    /// Family parameter: n for Cyclic(n), Dihedral(n), ElemAbProduct(n); order for Generic.
    std::size_t parameter() const { return parameter_; }
    /// Prime factors with multiplicity (ElemAbProduct only).
    const std::vector<std::size_t>& primes() const { return primes_; }
    const std::vector<std::pair<std::string, std::uint32_t>>& generators() const { return generators_; }
    const std::string& name() const { return name_; }

    bool is_abelian() const;
    std::size_t exponent() const;
    /// Exhaustive identity/inverse/associativity check.
    bool verify_axioms() const;

    /// Readable word for an element, e.g. "e", "g^3", "x^2y", "a1a3^2".
    std::string element_label(std::uint32_t a) const;
    /// Parses a word over the generator labels ("x^2y", "g3" is not valid;
    /// exponents use '^'). "e" and "" denote the identity.
    std::uint32_t parse_element(const std::string& word) const;

    /// Exponent t with a = g^t (Cyclic only).
    std::size_t cyclic_exponent(std::uint32_t a) const;
    /// (a, b) with element = x^a y^b (Dihedral only).
    std::pair<std::size_t, std::size_t> dihedral_parts(std::uint32_t a) const;
    /// Digits over primes() (ElemAbProduct only).
    std::vector<std::size_t> elem_ab_digits(std::uint32_t a) const;

    FiniteGroup(std::size_t order, std::vector<std::uint32_t> table, GroupFamily family, std::size_t parameter,
                std::vector<std::pair<std::string, std::uint32_t>> generators, std::string name,
                std::vector<std::size_t> primes = {});

private:
    std::size_t order_;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_;
    GroupFamily family_;
    std::size_t parameter_;
    std::vector<std::pair<std::string, std::uint32_t>> generators_;
    std::string name_;
    std::vector<std::size_t> primes_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr cyclic_group(std::size_t n);
GroupPtr dihedral_group(std::size_t n);
/// (C_{p_1})^{a_1} x ... x (C_{p_k})^{a_k} for n = p_1^{a_1} ... p_k^{a_k}.
GroupPtr elem_ab_product(std::size_t n);
/// Parses a group literal: letter in {C, D, L} followed by a decimal n.
GroupPtr parse_group(const std::string& literal);

/// Prime factorization by trial division, ascending primes with multiplicity.
std::vector<std::size_t> prime_factors(std::size_t n);
bool is_prime_power(std::size_t n);
bool is_square_free(std::size_t n);

/// A subgroup of a finite group, with the id of its conjugacy class inside
/// the parent's subgroup lattice (-1 if not attached to a lattice).
class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<std::uint32_t> elements, int class_id = -1);

    /// Subgroup generated by the given elements.
    static Subgroup generated_by(GroupPtr parent, std::span<const std::uint32_t> generators);
    static Subgroup trivial(GroupPtr parent);
    static Subgroup whole(GroupPtr parent);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<std::uint32_t>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    int class_id() const { return class_id_; }
    bool contains(std::uint32_t g) const;
    bool is_subset_of(const Subgroup& other) const;
    /// x K x^{-1}.
    Subgroup conjugate(std::uint32_t x) const;
    /// Closed under multiplication and inverses and contains the identity.
    bool is_closed() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

private:
    GroupPtr parent_;
    std::vector<std::uint32_t> elements_;
    int class_id_;
};

/// True iff some conjugate of k is contained in h.
bool is_subconjugate(const Subgroup& k, const Subgroup& h);

inline constexpr std::size_t kDefaultSubgroupBound = 240;

/// All subgroups of a group, grouped by conjugacy class. Classes are ordered
/// by subgroup order, then by element list; the first member of each class
/// is its representative.
class SubgroupLattice {
public:
    struct Location {
        std::size_t index;       // position in subgroups()
        int class_id;
        std::uint32_t conjugator;  // x with S = x * rep * x^{-1}, smallest such index
    };

    const GroupPtr& group() const { return group_; }
    const std::vector<Subgroup>& subgroups() const { return subgroups_; }
    std::size_t class_count() const { return class_start_.size(); }
    const Subgroup& representative(int class_id) const { return subgroups_[class_start_.at(class_id)]; }
    std::span<const Subgroup> conjugacy_class(int class_id) const;

    /// Locates a subgroup given by its sorted element list.
    Location locate(const std::vector<std::uint32_t>& elements) const;
    Location locate(const Subgroup& s) const { return locate(s.elements()); }
    /// The lattice member equal to s (carries its class id).
    const Subgroup& canonical(const Subgroup& s) const { return subgroups_[locate(s).index]; }

    SubgroupLattice(GroupPtr group, std::vector<Subgroup> subgroups, std::vector<std::size_t> class_start,
                    std::vector<std::uint32_t> conjugators);

private:
    GroupPtr group_;
    std::vector<Subgroup> subgroups_;
    std::vector<std::size_t> class_start_;
    std::vector<std::uint32_t> conjugators_;
    std::map<std::vector<std::uint32_t>, std::size_t> index_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

/// Enumerates every subgroup. Throws BudgetExceeded when |G| > bound.
LatticePtr subgroups(const GroupPtr& g, std::size_t bound = kDefaultSubgroupBound);

/// Finite set with a left G-action, stored as an order x size table.
class GSet {
public:
    GSet(GroupPtr group, std::size_t size, std::vector<std::uint32_t> action);

    const GroupPtr& group() const { return group_; }
    std::size_t size() const { return size_; }
    std::uint32_t act(std::uint32_t g, std::uint32_t p) const { return action_[g * size_ + p]; }
    Subgroup stabilizer(std::uint32_t p) const;
    /// Orbits as sorted point lists, ordered by least point.
    std::vector<std::vector<std::uint32_t>> orbits() const;
    /// Identity acts trivially, every g permutes, and act(gh, p) = act(g, act(h, p)).
    bool verify() const;
    bool is_free() const;
    bool is_transitive() const { return orbits().size() == 1; }

private:
    GroupPtr group_;
    std::size_t size_;
    std::vector<std::uint32_t> action_;
};

GSet left_regular_gset(const GroupPtr& g);
/// Left cosets gH, numbered in order of their least element.
GSet coset_gset(const GroupPtr& g, const Subgroup& h);

/// True iff there is a G-equivariant bijection between the two G-sets.
bool gsets_isomorphic(const GSet& a, const GSet& b, const SubgroupLattice& lattice);

}  // namespace eqob
