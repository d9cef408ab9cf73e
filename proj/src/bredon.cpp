#include "eqob/bredon.hpp"

#include "eqob/errors.hpp"
#include "eqob/smith.hpp"

#include <algorithm>
#include <map>

namespace eqob {

namespace {

void check_same_lattice(const SubgroupLattice& a, const SubgroupLattice& b) {
    if (&a == &b) return;
    bool same = a.group()->order() == b.group()->order() && a.class_count() == b.class_count();
    for (std::size_t c = 0; same && c < a.class_count(); ++c)
        same = a.representative(static_cast<int>(c)) == b.representative(static_cast<int>(c));
    if (!same) throw InvalidArgument("complex and coefficient system use different subgroup lattices");
}

bool relations_zero(const AbPresentation& p) { return p.relations.cols() == 0 || p.relations.is_zero(); }

}  // namespace

AbPresentation BredonCochains::group(int d) const {
    const auto& parts = summands.at(d);
    std::size_t gens = 0, rels = 0;
    for (const auto& p : parts) {
        gens += p.generators;
        rels += p.relations.cols();
    }
    AbPresentation out{gens, IntMatrix(gens, rels)};
    std::size_t r0 = 0, c0 = 0;
    for (const auto& p : parts) {
        out.relations.set_block(r0, c0, p.relations);
        r0 += p.generators;
        c0 += p.relations.cols();
    }
    return out;
}

bool BredonCochains::is_free() const {
    for (const auto& parts : summands)
        if (!std::all_of(parts.begin(), parts.end(), relations_zero)) return false;
    return true;
}

FreeCochainComplex BredonCochains::as_free() const {
    FreeCochainComplex c;
    c.ranks = ranks;
    c.deltas = deltas;
    return c;
}

PresentedCochainComplex BredonCochains::as_presented() const {
    PresentedCochainComplex c;
    for (std::size_t d = 0; d < summands.size(); ++d) c.groups.push_back(group(static_cast<int>(d)));
    for (const auto& d : deltas) c.deltas.push_back(d.to_dense());
    return c;
}

std::optional<BigInt> BredonCochains::uniform_modulus() const {
    std::optional<BigInt> m;
    for (const auto& parts : summands)
        for (const auto& g : parts) {
            if (g.generators == 0) continue;
            const auto& r = g.relations;
            if (r.rows() != r.cols()) return std::nullopt;
            const BigInt d = r(0, 0);
            if (d < 2) return std::nullopt;
            for (std::size_t i = 0; i < r.rows(); ++i)
                for (std::size_t j = 0; j < r.cols(); ++j)
                    if (r(i, j) != (i == j ? d : BigInt(0))) return std::nullopt;
            if (m && *m != d) return std::nullopt;
            m = d;
        }
    return m;
}

BredonCochains bredon_cochains(const GSimplicialComplex& x, const CoefficientSystem& m) {
    check_same_lattice(*x.lattice(), *m.lattice());
    const auto data = orbit_chain_data(x);
    const int top = x.dimension();
    BredonCochains out;
    out.offsets.resize(top + 1);
    out.summands.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        std::size_t total = 0;
        for (const auto& orb : x.orbits(d)) {
            out.offsets[d].push_back(total);
            out.summands[d].push_back(m.value(orb.class_id));
            total += out.summands[d].back().generators;
        }
        out.ranks.push_back(total);
    }
    std::map<std::tuple<int, int, std::uint32_t>, SparseMatrix> cache;
    for (int d = 0; d < top; ++d) {
        SparseMatrix delta(out.ranks[d + 1], out.ranks[d]);
        for (std::size_t o = 0; o < data[d + 1].size(); ++o) {
            const auto& cell = data[d + 1][o];
            const std::size_t row0 = out.offsets[d + 1][o];
            for (const auto& face : cell.faces) {
                const int kc = x.orbits(d)[face.orbit].class_id;
                const auto key = std::make_tuple(cell.class_id, kc, m.canonical_element(cell.class_id, kc, face.element));
                auto it = cache.find(key);
                if (it == cache.end())
                    it = cache.emplace(key, SparseMatrix::from_dense(m.morphism(cell.class_id, kc, face.element))).first;
                const auto& blk = it->second;
                const std::size_t col0 = out.offsets[d][face.orbit];
                for (std::size_t i = 0; i < blk.rows(); ++i)
                    for (const auto& e : blk.row(i)) delta.add(row0 + i, col0 + e.col, face.sign * e.value);
            }
        }
        delta.finalize();
        out.deltas.push_back(std::move(delta));
    }
    return out;
}

CohomologyResult bredon_cohomology(const GSimplicialComplex& x, const CoefficientSystem& m, int lo, int hi) {
    const auto cochains = bredon_cochains(x, m);
    CohomologyResult r;
    std::string path;
    if (cochains.is_free()) {
        r = cohomology(cochains.as_free(), lo, hi);
        path = "free";
    } else {
        const auto mod = cochains.uniform_modulus();
        bool lifted = false;
        if (mod) {
            lifted = true;
            for (std::size_t j = 1; j < cochains.deltas.size() && lifted; ++j)
                lifted = cochains.deltas[j].multiply(cochains.deltas[j - 1]).is_zero();
        }
        if (lifted) {
            r = cohomology_mod(cochains.as_free(), *mod, lo, hi);
            path = "universal coefficients mod " + mod->get_str();
        } else {
            r = cohomology(cochains.as_presented(), lo, hi);
            path = "presented";
        }
    }
    r.trusted_lo = lo;
    r.trusted_hi = std::min(hi, x.dimension() - 1);
    std::size_t cells = 0, orbits = 0;
    for (int d = 0; d <= x.dimension(); ++d) {
        cells += x.underlying().count(d);
        orbits += x.orbits(d).size();
    }
    r.provenance = "bredon: " + std::to_string(cells) + " simplices in " + std::to_string(orbits) +
                   " orbits, dimension " + std::to_string(x.dimension()) + ", coefficients " + m.describe() +
                   ", " + path + " cochains; trusted through degree " + std::to_string(x.dimension() - 1);
    return r;
}

std::string method_name(GroupCohomologyMethod m) {
    switch (m) {
        case GroupCohomologyMethod::Milnor: return "milnor";
        case GroupCohomologyMethod::Periodic: return "periodic";
        case GroupCohomologyMethod::Resolution: return "resolution";
    }
    return "?";
}

GroupCohomologyMethod method_from_name(const std::string& s) {
    if (s == "milnor") return GroupCohomologyMethod::Milnor;
    if (s == "periodic") return GroupCohomologyMethod::Periodic;
    if (s == "resolution") return GroupCohomologyMethod::Resolution;
    throw InvalidArgument("unknown group cohomology method '" + s + "' (expected milnor, periodic or resolution)");
}

namespace {

CohomologyResult cohomology_any(const PresentedCochainComplex& c, int lo, int hi) {
    if (std::all_of(c.groups.begin(), c.groups.end(), relations_zero)) {
        FreeCochainComplex f;
        for (const auto& g : c.groups) f.ranks.push_back(g.generators);
        for (const auto& d : c.deltas) f.deltas.push_back(SparseMatrix::from_dense(d));
        return cohomology(f, lo, hi);
    }
    return cohomology(c, lo, hi);
}

std::uint32_t cyclic_generator(const FiniteGroup& g) {
    for (std::uint32_t a = 0; a < g.order(); ++a)
        if (g.element_order(a) == g.order()) return a;
    throw InvalidArgument("the periodic method requires a cyclic group, " + g.name() + " is not cyclic");
}

// Hom_G(F_j, M) = M^{r_j}; delta^j has blocks sum_g c_{(g,a),b} rho_M(g).
PresentedCochainComplex hom_complex(const FreeResolution& res, const GModule& m, std::size_t top) {
    const std::size_t n = res.group->order();
    const std::size_t mg = m.generators();
    PresentedCochainComplex c;
    auto rank = [&](std::size_t j) -> std::size_t { return j < res.ranks.size() ? res.ranks[j] : 0; };
    for (std::size_t j = 0; j <= top; ++j) {
        AbPresentation p = AbPresentation::zero();
        for (std::size_t b = 0; b < rank(j); ++b) p = direct_sum(p, m.underlying());
        c.groups.push_back(std::move(p));
    }
    for (std::size_t j = 0; j < top; ++j) {
        IntMatrix delta(rank(j + 1) * mg, rank(j) * mg);
        if (rank(j + 1) > 0) {
            const auto& d = res.boundaries[j + 1];
            for (std::size_t b = 0; b < rank(j + 1); ++b)
                for (std::size_t a = 0; a < rank(j); ++a)
                    for (std::size_t g = 0; g < n; ++g) {
                        const BigInt& coef = d(a * n + g, b * n);
                        if (sgn(coef) == 0) continue;
                        IntMatrix blk = m.rho(static_cast<std::uint32_t>(g));
                        for (std::size_t r = 0; r < mg; ++r)
                            for (std::size_t s = 0; s < mg; ++s) delta(b * mg + r, a * mg + s) += coef * blk(r, s);
                    }
        }
        c.deltas.push_back(std::move(delta));
    }
    return c;
}

}  // namespace

CohomologyResult group_cohomology(const GModule& m, int lo, int hi, GroupCohomologyMethod method,
                                  std::size_t max_cells, std::size_t max_depth) {
    if (lo < 0 || hi < lo) throw InvalidArgument("group_cohomology: empty or negative degree range");
    const auto& group = m.group();
    CohomologyResult r;
    switch (method) {
        case GroupCohomologyMethod::Milnor: {
            const std::size_t k = static_cast<std::size_t>(hi) + 2;
            auto lattice = subgroups(group);
            auto x = orbit_join(left_regular_gset(group), k, max_cells, lattice);
            r = bredon_cohomology(x, CoefficientSystem::from_module(lattice, m), lo, hi);
            r.trusted_hi = std::min(hi, static_cast<int>(k) - 2);
            r.provenance = "milnor: orbit_join(regular " + group->name() + "-set, k=" + std::to_string(k) +
                           "); trusted through degree " + std::to_string(k - 2);
            break;
        }
        case GroupCohomologyMethod::Periodic: {
            const auto t = cyclic_generator(*group);
            const std::size_t r0 = m.generators();
            IntMatrix minus = m.rho(t) - IntMatrix::identity(r0);
            IntMatrix norm(r0, r0);
            for (std::uint32_t a = 0; a < group->order(); ++a) norm = norm + m.rho(a);
            PresentedCochainComplex c;
            for (int j = 0; j <= hi + 1; ++j) c.groups.push_back(m.underlying());
            for (int j = 0; j <= hi; ++j) c.deltas.push_back(j % 2 == 0 ? minus : norm);
            r = cohomology_any(c, lo, hi);
            r.provenance = "periodic: cyclic resolution of " + group->name();
            break;
        }
        case GroupCohomologyMethod::Resolution: {
            const std::size_t depth = static_cast<std::size_t>(hi) + 1;
            if (depth > max_depth)
                throw BudgetExceeded("resolution depth " + std::to_string(depth) + " exceeds max depth " +
                                     std::to_string(max_depth));
            const auto res = lattice_resolution(GModule::trivial(group, AbPresentation::free(1)), depth);
            r = cohomology_any(hom_complex(res, m, depth), lo, hi);
            r.provenance = "resolution: Ext over Z[" + group->name() + "] of the trivial module, depth " +
                           std::to_string(depth);
            break;
        }
    }
    r.trusted_lo = lo;
    if (method != GroupCohomologyMethod::Milnor) r.trusted_hi = hi;
    return r;
}

namespace {

// Greedy choice of module generators for a G-stable lattice spanned by the
// columns of `basis`; act(g, v) gives the action on ambient coordinates.
template <class Act>
std::vector<std::vector<BigInt>> choose_generators(const IntMatrix& basis, std::size_t order, Act act) {
    std::vector<std::vector<BigInt>> chosen;
    std::vector<std::vector<BigInt>> span;
    auto span_matrix = [&] {
        IntMatrix s(basis.rows(), span.size());
        for (std::size_t j = 0; j < span.size(); ++j)
            for (std::size_t i = 0; i < basis.rows(); ++i) s(i, j) = span[j][i];
        return s;
    };
    IntMatrix s(basis.rows(), 0);
    for (std::size_t c = 0; c < basis.cols(); ++c) {
        auto v = basis.column(c);
        if (!span.empty() && in_lattice(s, v)) continue;
        chosen.push_back(v);
        for (std::uint32_t g = 0; g < order; ++g) span.push_back(act(g, v));
        s = span_matrix();
    }
    return chosen;
}

}  // namespace

FreeResolution lattice_resolution(const GModule& l, std::size_t depth, std::size_t max_rank) {
    if (!relations_zero(l.underlying())) {
        if (!l.underlying().normal_form().torsion.empty())
            throw InvalidArgument("lattice_resolution: module has torsion");
        throw InvalidArgument("lattice_resolution: module must be given without relations");
    }
    const auto& grp = *l.group();
    const std::size_t n = grp.order();
    FreeResolution res;
    res.group = l.group();
    res.boundaries.emplace_back();

    auto build_map = [&](const std::vector<std::vector<BigInt>>& gens, std::size_t rows, auto act) {
        IntMatrix d(rows, gens.size() * n);
        for (std::size_t b = 0; b < gens.size(); ++b)
            for (std::uint32_t g = 0; g < n; ++g) {
                const auto v = act(g, gens[b]);
                for (std::size_t i = 0; i < rows; ++i) d(i, b * n + g) = v[i];
            }
        return d;
    };

    // Stage 0: generators of L itself.
    auto act_l = [&](std::uint32_t g, const std::vector<BigInt>& v) {
        const auto& m = l.rho(g);
        std::vector<BigInt> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) out[i] += m(i, j) * v[j];
        return out;
    };
    const std::size_t r = l.generators();
    if (r == 0) {
        res.ranks.push_back(0);
        res.augmentation = IntMatrix(0, 0);
        res.finite = true;
        return res;
    }
    auto gens0 = choose_generators(IntMatrix::identity(r), n, act_l);
    res.ranks.push_back(gens0.size());
    res.augmentation = build_map(gens0, r, act_l);

    IntMatrix current = res.augmentation;
    for (std::size_t j = 0; j < depth; ++j) {
        const std::size_t ambient = res.ranks.back();
        auto act_f = [&](std::uint32_t g, const std::vector<BigInt>& v) {
            std::vector<BigInt> out(v.size());
            for (std::size_t b = 0; b < ambient; ++b)
                for (std::uint32_t h = 0; h < n; ++h) out[b * n + grp.mul(g, h)] = v[b * n + h];
            return out;
        };
        const IntMatrix kernel = kernel_basis(current);
        if (kernel.cols() == 0) {
            res.finite = true;
            break;
        }
        auto gens = choose_generators(kernel, n, act_f);
        if (gens.size() * n > max_rank)
            throw BudgetExceeded("resolution stage " + std::to_string(j + 1) + " needs Z-rank " +
                                 std::to_string(gens.size() * n) + " > " + std::to_string(max_rank));
        IntMatrix d = build_map(gens, ambient * n, act_f);
        if (!(current * d).is_zero()) throw ConsistencyError("resolution: consecutive maps do not compose to zero");
        const auto f = invariant_factors(SparseMatrix::from_dense(d));
        if (f.size() != kernel.cols() || (!f.empty() && f.back() != 1))
            throw ConsistencyError("resolution: image does not fill the kernel");
        res.ranks.push_back(gens.size());
        res.boundaries.push_back(d);
        current = std::move(d);
    }
    if (!res.finite && kernel_basis(current).cols() == 0) res.finite = true;
    return res;
}

AbGroupNF ext_group_ring(const FreeResolution& res, const GModule& m, std::size_t i) {
    if (m.group()->order() != res.group->order()) throw InvalidArgument("ext_group_ring: modules over different groups");
    if (!res.finite && i + 1 >= res.stages())
        throw InvalidArgument("ext_group_ring: Ext^" + std::to_string(i) + " needs resolution depth " +
                              std::to_string(i + 1) + ", have " + std::to_string(res.stages() - 1));
    const auto c = hom_complex(res, m, i + 1);
    return cohomology_any(c, static_cast<int>(i), static_cast<int>(i)).at(static_cast<int>(i));
}

AbGroupNF ext_group_ring(const GModule& l, const GModule& m, std::size_t i, std::size_t max_depth) {
    if (i + 1 > max_depth)
        throw BudgetExceeded("Ext^" + std::to_string(i) + " needs resolution depth " + std::to_string(i + 1) +
                             " > max depth " + std::to_string(max_depth));
    return ext_group_ring(lattice_resolution(l, i + 1), m, i);
}

bool CohehdnReport::all_isomorphic() const {
    return std::all_of(rows.begin(), rows.end(), [](const CohehdnRow& r) { return r.isomorphic; });
}

bool CohehdnReport::vanishing_holds() const {
    return std::all_of(rows.begin(), rows.end(), [](const CohehdnRow& r) { return !r.vanishing_forced || r.vanishes; });
}

CohehdnReport cohehdn_verify(std::size_t n, const CoefficientSystem& m, int max_i, std::size_t max_cells,
                             std::size_t max_depth) {
    if (n % 2 == 0) throw InvalidArgument("cohehdn_verify: n must be odd");
    if (max_i < 1) throw InvalidArgument("cohehdn_verify: max-i must be at least 1");
    const auto& lattice = m.lattice();
    const auto& grp = lattice->group();
    if (grp->family() != GroupFamily::Dihedral || grp->parameter() != n)
        throw InvalidArgument("cohehdn_verify: coefficient system must live on D" + std::to_string(n));
    if (static_cast<std::size_t>(max_i) + 1 > max_depth)
        throw BudgetExceeded("cohehdn_verify: max-i " + std::to_string(max_i) + " needs resolution depth " +
                             std::to_string(max_i + 1) + " > max depth " + std::to_string(max_depth));
    const std::uint32_t y[1] = {grp->parse_element("y")};
    const auto h = Subgroup::generated_by(grp, y);
    const auto cosets = coset_gset(grp, h);

    CohehdnReport report;
    report.n = n;
    report.k = static_cast<std::size_t>(max_i) + 2;
    report.coefficients = m.describe();
    const auto x = orbit_join(cosets, report.k, max_cells, lattice);
    const auto bredon = bredon_cohomology(x, m, 1, max_i);

    const GModule me = m.module_at_free_orbit();
    const auto kernel = GModule::augmentation_kernel(cosets);
    const auto res = lattice_resolution(kernel, static_cast<std::size_t>(max_i));
    const auto h_dn = group_cohomology(me, 0, max_i, GroupCohomologyMethod::Resolution, max_cells, max_depth);
    const auto h_h = group_cohomology(me.restrict_to_cyclic(h), 0, max_i, GroupCohomologyMethod::Periodic);

    if (me.is_zero()) {
        CohehdnRow row;
        row.degree = 1;
        row.bredon = bredon.at(1);
        row.ext = AbGroupNF::zero();
        row.isomorphic = row.bredon == row.ext;
        row.vanishing_forced = true;
        row.vanishes = row.bredon.is_zero();
        report.rows.push_back(row);
    }
    for (int i = 2; i <= max_i; ++i) {
        CohehdnRow row;
        row.degree = i;
        row.bredon = bredon.at(i);
        row.ext = ext_group_ring(res, me, static_cast<std::size_t>(i - 1));
        row.isomorphic = row.bredon == row.ext;
        row.group_dn = h_dn.at(i);
        row.group_h_prev = h_h.at(i - 1);
        row.vanishing_forced = row.group_dn.is_zero() && row.group_h_prev.is_zero();
        row.vanishes = row.bredon.is_zero();
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace eqob
