#include "eqob/cohomology.hpp"

#include "eqob/errors.hpp"
#include "eqob/smith.hpp"

#include <sstream>

namespace eqob {

AbGroupNF AbGroupNF::cyclic(const BigInt& order) {
    if (sgn(order) == 0) return free(1);
    BigInt a = abs(order);
    if (a == 1) return zero();
    return {0, {a}};
}

AbGroupNF AbGroupNF::from_factors(std::size_t generators, const std::vector<BigInt>& factors) {
    if (factors.size() > generators) throw ConsistencyError("AbGroupNF: more factors than generators");
    AbGroupNF g;
    g.free_rank = generators - factors.size();
    for (const auto& f : factors)
        if (f > 1) g.torsion.push_back(f);
    return g;
}

AbGroupNF AbGroupNF::from_cyclic_orders(const std::vector<BigInt>& orders) {
    IntMatrix d(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = abs(orders[i]);
    return from_factors(orders.size(), smith_normal_form(d).factors);
}

bool AbGroupNF::is_valid() const {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) return false;
        if (i > 0 && !mpz_divisible_p(torsion[i].get_mpz_t(), torsion[i - 1].get_mpz_t())) return false;
    }
    return true;
}

BigInt AbGroupNF::torsion_order() const {
    BigInt p = 1;
    for (const auto& t : torsion) p *= t;
    return p;
}

std::string AbGroupNF::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        os << (first ? "" : " + ") << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

AbPresentation AbPresentation::free(std::size_t rank) { return {rank, IntMatrix(rank, 0)}; }

AbPresentation AbPresentation::cyclic(long order) {
    if (order < 0) order = -order;
    if (order == 1) return zero();
    AbPresentation p{1, IntMatrix(1, order == 0 ? 0 : 1)};
    if (order != 0) p.relations(0, 0) = order;
    return p;
}

AbGroupNF AbPresentation::normal_form() const {
    if (relations.cols() == 0) return AbGroupNF::free(generators);
    return AbGroupNF::from_factors(generators, smith_normal_form(relations).factors);
}

AbPresentation direct_sum(const AbPresentation& a, const AbPresentation& b) {
    return {a.generators + b.generators, direct_sum(a.relations, b.relations)};
}

const AbGroupNF& CohomologyResult::at(int degree) const {
    auto it = groups.find(degree);
    if (it == groups.end()) throw InvalidArgument("cohomology degree " + std::to_string(degree) + " was not computed");
    return it->second;
}

AbGroupNF lattice_quotient(const IntMatrix& lattice, const IntMatrix& sub) {
    if (lattice.rows() != sub.rows()) throw InvalidArgument("lattice_quotient: ambient dimension mismatch");
    const auto snf = smith_normal_form(lattice, true);
    const std::size_t r = snf.rank();
    const IntMatrix us = *snf.left * sub;
    IntMatrix coords(r, sub.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < sub.cols(); ++j) {
            if (!mpz_divisible_p(us(i, j).get_mpz_t(), snf.factors[i].get_mpz_t()))
                throw ConsistencyError("lattice_quotient: subgroup not contained in lattice");
            mpz_divexact(coords(i, j).get_mpz_t(), us(i, j).get_mpz_t(), snf.factors[i].get_mpz_t());
        }
    for (std::size_t i = r; i < us.rows(); ++i)
        for (std::size_t j = 0; j < sub.cols(); ++j)
            if (sgn(us(i, j)) != 0) throw ConsistencyError("lattice_quotient: subgroup not contained in lattice");
    return AbGroupNF::from_factors(r, smith_normal_form(coords).factors);
}

bool columns_in_span(const IntMatrix& generators, const IntMatrix& m) {
    if (m.cols() == 0) return true;
    if (generators.rows() != m.rows()) throw InvalidArgument("columns_in_span: dimension mismatch");
    const auto snf = smith_normal_form(generators, true);
    const IntMatrix um = *snf.left * m;
    for (std::size_t i = 0; i < um.rows(); ++i)
        for (std::size_t j = 0; j < um.cols(); ++j) {
            if (i < snf.rank()) {
                if (!mpz_divisible_p(um(i, j).get_mpz_t(), snf.factors[i].get_mpz_t())) return false;
            } else if (sgn(um(i, j)) != 0) {
                return false;
            }
        }
    return true;
}

namespace {

void check_range(int lo, int hi) {
    if (lo < 0 || hi < lo) throw InvalidArgument("cohomology: empty or negative degree range");
}

}  // namespace

void check_cochain_complex(const FreeCochainComplex& c) {
    for (std::size_t j = 0; j + 1 < c.deltas.size(); ++j)
        if (!c.deltas[j + 1].multiply(c.deltas[j]).is_zero())
            throw ConsistencyError("coboundary composite nonzero in degree " + std::to_string(j));
}

void check_cochain_complex(const PresentedCochainComplex& c) {
    for (std::size_t j = 0; j + 1 < c.deltas.size(); ++j) {
        const IntMatrix comp = c.deltas[j + 1] * c.deltas[j];
        if (comp.is_zero()) continue;
        if (!columns_in_span(c.groups[j + 2].relations, comp))
            throw ConsistencyError("coboundary composite nonzero in degree " + std::to_string(j));
    }
}

CohomologyResult cohomology(const FreeCochainComplex& c, int lo, int hi) {
    check_range(lo, hi);
    const int top = static_cast<int>(c.ranks.size()) - 1;
    if (c.deltas.size() + 1 < c.ranks.size()) throw InvalidArgument("cohomology: missing coboundaries");
    check_cochain_complex(c);
    CohomologyResult out;
    out.trusted_lo = lo;
    out.trusted_hi = hi;
    std::map<int, std::vector<BigInt>> factors;
    auto factors_of = [&](int j) -> const std::vector<BigInt>& {
        auto it = factors.find(j);
        if (it == factors.end()) it = factors.emplace(j, invariant_factors(c.deltas[j])).first;
        return it->second;
    };
    for (int j = lo; j <= hi; ++j) {
        if (j > top) {
            out.groups[j] = AbGroupNF::zero();
            continue;
        }
        const std::size_t rank_out = j < static_cast<int>(c.deltas.size()) && j < top ? factors_of(j).size() : 0;
        AbGroupNF g;
        std::size_t rank_in = 0;
        if (j > 0) {
            const auto& f = factors_of(j - 1);
            rank_in = f.size();
            for (const auto& x : f)
                if (x > 1) g.torsion.push_back(x);
        }
        g.free_rank = c.ranks[j] - rank_out - rank_in;
        out.groups[j] = std::move(g);
    }
    return out;
}

CohomologyResult cohomology(const PresentedCochainComplex& c, int lo, int hi) {
    check_range(lo, hi);
    const int top = static_cast<int>(c.groups.size()) - 1;
    if (c.deltas.size() + 1 < c.groups.size()) throw InvalidArgument("cohomology: missing coboundaries");
    check_cochain_complex(c);
    CohomologyResult out;
    out.trusted_lo = lo;
    out.trusted_hi = hi;
    for (int j = lo; j <= hi; ++j) {
        if (j > top) {
            out.groups[j] = AbGroupNF::zero();
            continue;
        }
        const std::size_t g = c.groups[j].generators;
        if (g == 0) {
            out.groups[j] = AbGroupNF::zero();
            continue;
        }
        // Cocycles: x with delta x in the relation span of C^{j+1}.
        IntMatrix cocycles;
        if (j < top) {
            const auto& next = c.groups[j + 1];
            const IntMatrix stacked = hstack(c.deltas[j], next.relations);
            const IntMatrix k = kernel_basis(stacked);
            cocycles = k.block(0, 0, g, k.cols());
        } else {
            cocycles = IntMatrix::identity(g);
        }
        IntMatrix boundaries = c.groups[j].relations;
        if (j > 0) boundaries = hstack(c.deltas[j - 1], boundaries);
        out.groups[j] = lattice_quotient(cocycles, boundaries);
    }
    return out;
}

CohomologyResult cohomology_from_cochains(const std::vector<IntMatrix>& deltas, int lo, int hi) {
    FreeCochainComplex c;
    if (deltas.empty()) throw InvalidArgument("cohomology_from_cochains: no coboundaries given");
    for (std::size_t j = 0; j < deltas.size(); ++j) {
        if (j > 0 && deltas[j].cols() != deltas[j - 1].rows())
            throw InvalidArgument("cohomology_from_cochains: shape mismatch at degree " + std::to_string(j));
        c.ranks.push_back(deltas[j].cols());
        c.deltas.push_back(SparseMatrix::from_dense(deltas[j]));
    }
    c.ranks.push_back(deltas.back().rows());
    return cohomology(c, lo, hi);
}

CohomologyResult cohomology_mod(const FreeCochainComplex& c, const BigInt& m, int lo, int hi) {
    check_range(lo, hi);
    if (m < 0) throw InvalidArgument("cohomology_mod: modulus must be non-negative");
    const auto integral = cohomology(c, lo, hi + 1);
    CohomologyResult out;
    out.trusted_lo = lo;
    out.trusted_hi = hi;
    auto g = [](const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    };
    for (int j = lo; j <= hi; ++j) {
        const auto& h = integral.at(j);
        const auto& next = integral.at(j + 1);
        std::vector<BigInt> orders(h.free_rank, m);
        for (const auto& t : h.torsion) orders.push_back(g(t, m));
        for (const auto& t : next.torsion) orders.push_back(g(t, m));
        out.groups[j] = AbGroupNF::from_cyclic_orders(orders);
    }
    return out;
}

std::vector<AbGroupNF> homology(const ChainComplexZ& c) {
    const std::size_t n = c.counts.size();
    std::vector<std::vector<BigInt>> f(n + 1);
    for (std::size_t j = 1; j < n; ++j) f[j] = invariant_factors(c.boundaries[j]);
    std::vector<AbGroupNF> h(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t rank_out = j >= 1 ? f[j].size() : 0;
        const std::size_t rank_in = j + 1 < n ? f[j + 1].size() : 0;
        h[j].free_rank = c.counts[j] - rank_out - rank_in;
        if (j + 1 < n)
            for (const auto& x : f[j + 1])
                if (x > 1) h[j].torsion.push_back(x);
    }
    return h;
}

std::vector<AbGroupNF> reduced_homology(const ChainComplexZ& c) {
    ChainComplexZ aug;
    aug.counts.push_back(1);
    aug.boundaries.emplace_back(0, 1);
    const std::size_t c0 = c.counts.empty() ? 0 : c.counts[0];
    SparseMatrix eps(1, c0);
    for (std::size_t v = 0; v < c0; ++v) eps.add(0, v, 1);
    eps.finalize();
    aug.counts.push_back(c0);
    aug.boundaries.push_back(std::move(eps));
    for (std::size_t j = 1; j < c.counts.size(); ++j) {
        aug.counts.push_back(c.counts[j]);
        aug.boundaries.push_back(c.boundaries[j]);
    }
    return homology(aug);
}

}  // namespace eqob
