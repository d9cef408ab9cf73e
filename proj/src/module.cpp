#include "eqob/module.hpp"

#include "eqob/errors.hpp"
#include "eqob/smith.hpp"

#include <algorithm>

namespace eqob {

namespace {

// Membership test for the column span of a fixed relation matrix:
// with U R V = D, v is in the span iff (U v)_i is divisible by d_i for
// i < rank and vanishes beyond.
class RelationSpan {
public:
    explicit RelationSpan(const AbPresentation& p) : gens_(p.generators) {
        if (p.relations.cols() == 0 || p.relations.is_zero()) return;
        auto s = smith_normal_form(p.relations, true);
        factors_ = std::move(s.factors);
        u_ = std::move(*s.left);
        has_relations_ = true;
    }

    bool contains(const std::vector<BigInt>& v) const {
        if (!has_relations_) return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) == 0; });
        for (std::size_t i = 0; i < gens_; ++i) {
            BigInt w = 0;
            for (std::size_t j = 0; j < gens_; ++j) w += u_(i, j) * v[j];
            if (i < factors_.size()) {
                if (!mpz_divisible_p(w.get_mpz_t(), factors_[i].get_mpz_t())) return false;
            } else if (sgn(w) != 0) {
                return false;
            }
        }
        return true;
    }

    bool columns_contained(const IntMatrix& m) const {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!contains(m.column(c))) return false;
        return true;
    }

    bool equal_mod(const IntMatrix& a, const IntMatrix& b) const { return columns_contained(a - b); }

private:
    std::size_t gens_;
    bool has_relations_ = false;
    std::vector<BigInt> factors_;
    IntMatrix u_;
};

}  // namespace

GModule::GModule(GroupPtr group, AbPresentation underlying, std::vector<IntMatrix> action)
    : group_(std::move(group)), underlying_(std::move(underlying)), action_(std::move(action)) {
    const auto& g = *group_;
    const std::size_t r = underlying_.generators;
    if (underlying_.relations.rows() != r) throw InvalidArgument("GModule: relation matrix has wrong row count");
    if (action_.size() != g.order()) throw InvalidArgument("GModule: need one action matrix per group element");
    for (const auto& m : action_)
        if (m.rows() != r || m.cols() != r) throw InvalidArgument("GModule: action matrix has wrong shape");
    RelationSpan span(underlying_);
    for (const auto& m : action_)
        if (underlying_.relations.cols() > 0 && !span.columns_contained(m * underlying_.relations))
            throw InvalidArgument("GModule: action does not preserve the relations");
    if (!span.equal_mod(action_[g.identity()], IntMatrix::identity(r)))
        throw InvalidArgument("GModule: identity does not act trivially");
    for (const auto& [label, s] : g.generators())
        for (std::uint32_t b = 0; b < g.order(); ++b)
            if (!span.equal_mod(action_[s] * action_[b], action_[g.mul(s, b)]))
                throw InvalidArgument("GModule: action is not a homomorphism (generator " + label + ")");
}

GModule GModule::from_generators(GroupPtr group, AbPresentation underlying, const std::vector<IntMatrix>& images) {
    const auto& g = *group;
    const auto& gens = g.generators();
    if (images.size() != gens.size())
        throw InvalidArgument("GModule: expected " + std::to_string(gens.size()) + " generator images");
    const std::size_t r = underlying.generators;
    for (const auto& m : images)
        if (m.rows() != r || m.cols() != r) throw InvalidArgument("GModule: generator image has wrong shape");
    RelationSpan span(underlying);
    std::vector<IntMatrix> action(g.order());
    std::vector<char> seen(g.order(), 0);
    action[g.identity()] = IntMatrix::identity(r);
    seen[g.identity()] = 1;
    std::vector<std::uint32_t> queue{g.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const auto y = g.mul(queue[i], gens[j].second);
            IntMatrix m = action[queue[i]] * images[j];
            if (!seen[y]) {
                seen[y] = 1;
                action[y] = std::move(m);
                queue.push_back(y);
            } else if (!span.equal_mod(action[y], m)) {
                throw InvalidArgument("GModule: generator images violate the group relations");
            }
        }
    if (queue.size() != g.order()) throw InvalidArgument("GModule: generators do not generate the group");
    return GModule(std::move(group), std::move(underlying), std::move(action));
}

GModule GModule::trivial(GroupPtr group, AbPresentation underlying) {
    std::vector<IntMatrix> action(group->order(), IntMatrix::identity(underlying.generators));
    return GModule(std::move(group), std::move(underlying), std::move(action));
}

GModule GModule::permutation(const GSet& x) {
    const auto& g = *x.group();
    std::vector<IntMatrix> action;
    action.reserve(g.order());
    for (std::uint32_t a = 0; a < g.order(); ++a) {
        IntMatrix m(x.size(), x.size());
        for (std::uint32_t p = 0; p < x.size(); ++p) m(x.act(a, p), p) = 1;
        action.push_back(std::move(m));
    }
    return GModule(x.group(), AbPresentation::free(x.size()), std::move(action));
}

GModule GModule::augmentation_kernel(const GSet& x) {
    const auto& g = *x.group();
    const std::size_t r = x.size() - 1;
    std::vector<IntMatrix> action;
    action.reserve(g.order());
    for (std::uint32_t a = 0; a < g.order(); ++a) {
        IntMatrix m(r, r);
        const auto base = x.act(a, 0);
        for (std::uint32_t p = 1; p < x.size(); ++p) {
            // a(e_p - e_0) = (e_{ap} - e_0) - (e_{a0} - e_0)
            const auto q = x.act(a, p);
            if (q != 0) m(q - 1, p - 1) += 1;
            if (base != 0) m(base - 1, p - 1) -= 1;
        }
        action.push_back(std::move(m));
    }
    return GModule(x.group(), AbPresentation::free(r), std::move(action));
}

GModule GModule::group_ring(GroupPtr group) { return permutation(left_regular_gset(group)); }

GModule GModule::restrict_to_cyclic(const Subgroup& k) const {
    const auto& g = *group_;
    std::uint32_t gen = g.identity();
    bool found = k.order() == 1;
    for (auto e : k.elements())
        if (g.element_order(e) == k.order()) {
            gen = e;
            found = true;
            break;
        }
    if (!found) throw InvalidArgument("restrict_to_cyclic: subgroup is not cyclic");
    auto c = cyclic_group(k.order());
    return from_generators(c, underlying_, {action_[gen]});
}

// ---- CoefficientSystem ------------------------------------------------------

CoefficientSystem::CoefficientSystem(LatticePtr lattice) : lattice_(std::move(lattice)) {
    if (!lattice_) throw InvalidArgument("CoefficientSystem: missing subgroup lattice");
}

CoefficientSystem CoefficientSystem::constant(LatticePtr lattice, AbPresentation a) {
    CoefficientSystem m(std::move(lattice));
    m.rule_ = Rule::Constant;
    for (std::size_t c = 0; c < m.lattice_->class_count(); ++c) m.groups_[static_cast<int>(c)] = a;
    m.description_ = "constant " + a.normal_form().to_string();
    return m;
}

CoefficientSystem CoefficientSystem::zero(LatticePtr lattice) {
    auto m = constant(std::move(lattice), AbPresentation::zero());
    m.description_ = "zero";
    return m;
}

CoefficientSystem CoefficientSystem::z_h(LatticePtr lattice, const Subgroup& h) {
    CoefficientSystem m(std::move(lattice));
    m.rule_ = Rule::ZH;
    for (std::size_t c = 0; c < m.lattice_->class_count(); ++c) {
        const bool sub = is_subconjugate(m.lattice_->representative(static_cast<int>(c)), h);
        m.groups_[static_cast<int>(c)] = sub ? AbPresentation::free(1) : AbPresentation::zero();
    }
    m.description_ = "Z_H";
    return m;
}

CoefficientSystem CoefficientSystem::from_module(LatticePtr lattice, const GModule& mod) {
    CoefficientSystem m(std::move(lattice));
    if (mod.group()->order() != m.lattice_->group()->order())
        throw InvalidArgument("from_module: module over a different group");
    m.rule_ = Rule::FreeModule;
    m.groups_[0] = mod.underlying();
    for (std::uint32_t g = 0; g < mod.group()->order(); ++g) m.module_action_.push_back(mod.rho(g));
    m.description_ = "module " + mod.underlying().normal_form().to_string() + " on the free orbit";
    return m;
}

void CoefficientSystem::set_group(int class_id, AbPresentation a) {
    if (class_id < 0 || static_cast<std::size_t>(class_id) >= lattice_->class_count())
        throw InvalidArgument("coefficient system: unknown subgroup class " + std::to_string(class_id));
    if (a.relations.rows() != a.generators) throw InvalidArgument("coefficient system: malformed presentation");
    groups_[class_id] = std::move(a);
}

bool CoefficientSystem::in_scope(int class_id) const { return groups_.count(class_id) > 0; }

const AbPresentation& CoefficientSystem::value(int class_id) const {
    auto it = groups_.find(class_id);
    if (it == groups_.end()) {
        const auto& rep = lattice_->representative(class_id);
        throw InvalidArgument("coefficient system has no value at the orbit type of a subgroup of order " +
                              std::to_string(rep.order()) + " (class " + std::to_string(class_id) + ")");
    }
    return it->second;
}

std::uint32_t CoefficientSystem::canonical_element(int class_h, int class_k, std::uint32_t g) const {
    const auto& grp = *lattice_->group();
    const auto& h = lattice_->representative(class_h);
    const auto& k = lattice_->representative(class_k);
    const auto ginv = grp.inv(g);
    for (auto x : h.elements())
        if (!k.contains(grp.conj(ginv, x)))
            throw InvalidArgument("no orbit map G/H -> G/K through " + grp.element_label(g) + " (class " +
                                  std::to_string(class_h) + " -> class " + std::to_string(class_k) + ")");
    std::uint32_t best = grp.mul(g, k.elements().front());
    for (auto x : k.elements()) best = std::min(best, grp.mul(g, x));
    return best;
}

void CoefficientSystem::set_morphism(int class_h, int class_k, std::uint32_t g, IntMatrix m) {
    const auto c = canonical_element(class_h, class_k, g);
    const auto& a = value(class_h);
    const auto& b = value(class_k);
    if (m.rows() != a.generators || m.cols() != b.generators)
        throw InvalidArgument("structure matrix must be " + std::to_string(a.generators) + "x" +
                              std::to_string(b.generators));
    morphisms_[{class_h, class_k, c}] = std::move(m);
}

IntMatrix CoefficientSystem::morphism(int class_h, int class_k, std::uint32_t g) const {
    const auto& a = value(class_h);
    const auto& b = value(class_k);
    const auto c = canonical_element(class_h, class_k, g);
    auto it = morphisms_.find({class_h, class_k, c});
    if (it != morphisms_.end()) return it->second;
    switch (rule_) {
        case Rule::Constant:
            return IntMatrix::identity(a.generators);
        case Rule::ZH: {
            IntMatrix m(a.generators, b.generators);
            if (a.generators == 1 && b.generators == 1) m(0, 0) = 1;
            return m;
        }
        case Rule::FreeModule:
            return module_action_.at(c);
        case Rule::Explicit:
            break;
    }
    if (class_h == class_k && lattice_->representative(class_k).contains(c)) return IntMatrix::identity(a.generators);
    throw InvalidArgument("coefficient system is missing the structure matrix for class " + std::to_string(class_h) +
                          " -> class " + std::to_string(class_k) + " via " +
                          lattice_->group()->element_label(c));
}

void CoefficientSystem::validate() const {
    const auto& grp = *lattice_->group();
    std::map<int, RelationSpan> spans;
    for (const auto& [c, p] : groups_) spans.emplace(c, RelationSpan(p));
    for (const auto& [key, m] : morphisms_) {
        const auto [h, k, g] = key;
        const auto& rk = value(k).relations;
        if (rk.cols() > 0 && !spans.at(h).columns_contained(m * rk))
            throw InvalidArgument("structure matrix for class " + std::to_string(h) + " -> " + std::to_string(k) +
                                  " via " + grp.element_label(g) + " does not respect relations");
    }
    for (const auto& [k1, m1] : morphisms_)
        for (const auto& [k2, m2] : morphisms_) {
            const auto [h, k, g1] = k1;
            const auto [k_, l, g2] = k2;
            if (k != k_) continue;
            const auto c = canonical_element(h, l, grp.mul(g1, g2));
            const bool identity = h == l && lattice_->representative(l).contains(c);
            auto it = morphisms_.find({h, l, c});
            if (it == morphisms_.end() && !identity) continue;
            const IntMatrix composite = it != morphisms_.end() ? it->second : IntMatrix::identity(value(h).generators);
            if (!spans.at(h).equal_mod(composite, m1 * m2))
                throw InvalidArgument("coefficient system is not functorial on class " + std::to_string(h) + " -> " +
                                      std::to_string(k) + " -> " + std::to_string(l));
        }
}

GModule CoefficientSystem::module_at_free_orbit() const {
    const auto& a = value(0);
    std::vector<IntMatrix> action;
    for (std::uint32_t g = 0; g < lattice_->group()->order(); ++g) action.push_back(morphism(0, 0, g));
    return GModule(lattice_->group(), a, std::move(action));
}

}  // namespace eqob
