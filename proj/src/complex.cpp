#include "eqob/complex.hpp"

#include "eqob/errors.hpp"

#include <algorithm>
#include <limits>

namespace eqob {

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : s) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

SimplicialComplex::SimplicialComplex(std::vector<std::vector<Simplex>> by_dim) : by_dim_(std::move(by_dim)) {
    while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
    index_.resize(by_dim_.size());
    for (std::size_t d = 0; d < by_dim_.size(); ++d) {
        auto& list = by_dim_[d];
        for (const auto& s : list) {
            if (s.size() != d + 1)
                throw InvalidArgument("simplex of size " + std::to_string(s.size()) + " listed in dimension " +
                                      std::to_string(d));
            for (std::size_t i = 1; i < s.size(); ++i)
                if (s[i - 1] >= s[i]) throw InvalidArgument("simplex vertices must be strictly increasing");
        }
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        index_[d].reserve(list.size());
        for (std::size_t i = 0; i < list.size(); ++i) index_[d].emplace(list[i], static_cast<std::uint32_t>(i));
    }
    for (std::size_t d = 1; d < by_dim_.size(); ++d)
        for (const auto& s : by_dim_[d])
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex f;
                f.reserve(d);
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) f.push_back(s[j]);
                if (!index_[d - 1].count(f)) throw InvalidArgument("simplicial complex is not closed under faces");
            }
}

std::size_t SimplicialComplex::count(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return 0;
    return by_dim_[dim].size();
}

long SimplicialComplex::index_of(const Simplex& s) const {
    if (s.empty() || s.size() > by_dim_.size()) return -1;
    const auto& idx = index_[s.size() - 1];
    auto it = idx.find(s);
    return it == idx.end() ? -1 : static_cast<long>(it->second);
}

std::size_t SimplicialComplex::total_cells() const {
    std::size_t t = 0;
    for (const auto& l : by_dim_) t += l.size();
    return t;
}

ChainComplexZ chain_complex(const SimplicialComplex& x) {
    ChainComplexZ c;
    const int top = x.dimension();
    for (int d = 0; d <= top; ++d) c.counts.push_back(x.count(d));
    if (top < 0) return c;
    c.boundaries.emplace_back(0, x.count(0));
    for (int d = 1; d <= top; ++d) {
        SparseMatrix b(x.count(d - 1), x.count(d));
        const auto& list = x.simplices(d);
        Simplex f;
        for (std::size_t col = 0; col < list.size(); ++col) {
            const auto& s = list[col];
            for (std::size_t i = 0; i < s.size(); ++i) {
                f.clear();
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) f.push_back(s[j]);
                b.add(static_cast<std::size_t>(x.index_of(f)), col, i % 2 == 0 ? 1 : -1);
            }
        }
        b.finalize();
        c.boundaries.push_back(std::move(b));
    }
    return c;
}

namespace {

// Sorts in place and returns the sign of the sorting permutation.
int sort_with_sign(Simplex& s) {
    int sign = 1;
    for (std::size_t i = 1; i < s.size(); ++i)
        for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
            std::swap(s[j - 1], s[j]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

GSimplicialComplex::GSimplicialComplex(GSet vertices, std::vector<std::vector<Simplex>> by_dim, LatticePtr lattice)
    : vertices_(std::move(vertices)), lattice_(std::move(lattice)), complex_(std::move(by_dim)) {
    const auto& g = *vertices_.group();
    if (!lattice_) lattice_ = subgroups(vertices_.group());
    if (lattice_->group()->order() != g.order()) throw InvalidArgument("lattice belongs to a different group");
    const int top = complex_.dimension();
    orbits_.resize(top + 1);
    orbit_of_.resize(top + 1);
    transporter_.resize(top + 1);
    std::vector<long> image(g.order());
    Simplex s;
    for (int d = 0; d <= top; ++d) {
        const auto& list = complex_.simplices(d);
        for (const auto& simplex : list)
            for (auto v : simplex)
                if (v >= vertices_.size()) throw InvalidArgument("simplex vertex outside the vertex G-set");
        constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
        orbit_of_[d].assign(list.size(), unset);
        transporter_[d].assign(list.size(), 0);
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (orbit_of_[d][i] != unset) continue;
            std::vector<std::uint32_t> setwise, pointwise;
            for (std::uint32_t a = 0; a < g.order(); ++a) {
                s = list[i];
                bool fixes_all = true;
                for (auto& v : s) {
                    const auto w = vertices_.act(a, v);
                    fixes_all &= (w == v);
                    v = w;
                }
                sort_with_sign(s);
                image[a] = complex_.index_of(s);
                if (image[a] < 0) throw InvalidArgument("simplicial complex is not closed under the group action");
                if (static_cast<std::size_t>(image[a]) == i) setwise.push_back(a);
                if (fixes_all) pointwise.push_back(a);
            }
            if (setwise != pointwise)
                throw ConsistencyError("a simplex is mapped to itself by a nontrivial vertex permutation");
            const auto loc = lattice_->locate(setwise);
            // stab = x rep x^{-1}, so x^{-1} * simplex has isotropy rep.
            const std::uint32_t xinv = g.inv(loc.conjugator);
            const std::size_t rep = static_cast<std::size_t>(image[xinv]);
            const std::size_t orbit_id = orbits_[d].size();
            orbits_[d].push_back({rep, loc.class_id, g.order() / setwise.size()});
            for (std::uint32_t a = 0; a < g.order(); ++a) {
                // a * rep = (a x^{-1}) * simplex
                const auto target = static_cast<std::size_t>(image[g.mul(a, xinv)]);
                if (orbit_of_[d][target] == unset) {
                    orbit_of_[d][target] = orbit_id;
                    transporter_[d][target] = a;
                }
            }
        }
    }
}

const Subgroup& GSimplicialComplex::isotropy(int dim, std::size_t orbit) const {
    return lattice_->representative(orbits_.at(dim).at(orbit).class_id);
}

std::pair<std::size_t, int> GSimplicialComplex::act(std::uint32_t g, int dim, std::size_t index) const {
    Simplex s = complex_.simplices(dim)[index];
    for (auto& v : s) v = vertices_.act(g, v);
    const int sign = sort_with_sign(s);
    return {static_cast<std::size_t>(complex_.index_of(s)), sign};
}

std::size_t join_cell_count(std::size_t m, std::size_t k) {
    constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
    std::size_t p = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (p > cap / (m + 1)) return cap;
        p *= m + 1;
    }
    return p - 1;
}

GSimplicialComplex orbit_join(const GSet& x, std::size_t k, std::size_t max_cells, LatticePtr lattice) {
    if (k == 0) throw InvalidArgument("orbit_join: k must be positive");
    const std::size_t m = x.size();
    const std::size_t cells = join_cell_count(m, k);
    if (cells > max_cells)
        throw BudgetExceeded("orbit_join(|X|=" + std::to_string(m) + ", k=" + std::to_string(k) + ") has " +
                             (cells == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                                : std::to_string(cells)) +
                             " simplices, budget is " + std::to_string(max_cells));
    const auto& g = *x.group();
    std::vector<std::uint32_t> act(g.order() * k * m);
    for (std::uint32_t a = 0; a < g.order(); ++a)
        for (std::size_t c = 0; c < k; ++c)
            for (std::uint32_t p = 0; p < m; ++p)
                act[a * k * m + c * m + p] = static_cast<std::uint32_t>(c * m + x.act(a, p));
    GSet verts(x.group(), k * m, std::move(act));

    std::vector<std::vector<Simplex>> by_dim(k);
    // Digit c of the code is 0 (copy c unused) or 1 + point.
    Simplex s;
    for (std::size_t code = 1; code <= cells; ++code) {
        s.clear();
        std::size_t rest = code;
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t digit = rest % (m + 1);
            rest /= m + 1;
            if (digit) s.push_back(static_cast<std::uint32_t>(c * m + digit - 1));
        }
        by_dim[s.size() - 1].push_back(s);
    }
    return GSimplicialComplex(std::move(verts), std::move(by_dim), std::move(lattice));
}

SimplicialComplex fixed_subcomplex(const GSimplicialComplex& x, const Subgroup& k) {
    const auto& verts = x.vertices();
    std::vector<char> fixed(verts.size(), 1);
    for (std::uint32_t v = 0; v < verts.size(); ++v)
        for (auto a : k.elements())
            if (verts.act(a, v) != v) {
                fixed[v] = 0;
                break;
            }
    std::vector<std::vector<Simplex>> by_dim;
    const auto& cx = x.underlying();
    for (int d = 0; d <= cx.dimension(); ++d) {
        std::vector<Simplex> keep;
        for (const auto& s : cx.simplices(d))
            if (std::all_of(s.begin(), s.end(), [&](std::uint32_t v) { return fixed[v] != 0; })) keep.push_back(s);
        if (keep.empty()) break;
        by_dim.push_back(std::move(keep));
    }
    return SimplicialComplex(std::move(by_dim));
}

std::vector<std::vector<OrbitCell>> orbit_chain_data(const GSimplicialComplex& x) {
    const auto& cx = x.underlying();
    std::vector<std::vector<OrbitCell>> out(cx.dimension() + 1);
    Simplex f;
    for (int d = 0; d <= cx.dimension(); ++d) {
        for (const auto& orb : x.orbits(d)) {
            OrbitCell cell{orb.representative, orb.class_id, {}};
            if (d > 0) {
                const auto& s = cx.simplices(d)[orb.representative];
                for (std::size_t i = 0; i < s.size(); ++i) {
                    f.clear();
                    for (std::size_t j = 0; j < s.size(); ++j)
                        if (j != i) f.push_back(s[j]);
                    const auto idx = static_cast<std::size_t>(cx.index_of(f));
                    const std::size_t o = x.orbit_of(d - 1, idx);
                    const std::uint32_t t = x.transporter(d - 1, idx);
                    const auto [img, perm_sign] = x.act(t, d - 1, x.orbits(d - 1)[o].representative);
                    if (img != idx) throw ConsistencyError("orbit transporter does not reach its simplex");
                    cell.faces.push_back({o, t, (i % 2 == 0 ? 1 : -1) * perm_sign});
                }
            }
            out[d].push_back(std::move(cell));
        }
    }
    return out;
}

}  // namespace eqob
