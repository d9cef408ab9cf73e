#pragma once

#include "eqob/complex.hpp"
#include "eqob/cohomology.hpp"

namespace eqob::testing {

// Quotient complex X/G of a free complex, built by scanning the action table
// simplex by simplex. Returns the transposed boundaries as coboundaries.
inline std::vector<IntMatrix> quotient_coboundaries(const GSimplicialComplex& x) {
    const auto& cx = x.underlying();
    const auto& grp = *x.group();
    const int top = x.dimension();
    std::vector<std::vector<long>> orbit(top + 1), sign(top + 1);
    std::vector<std::vector<std::size_t>> reps(top + 1);
    for (int d = 0; d <= top; ++d) {
        orbit[d].assign(cx.count(d), -1);
        sign[d].assign(cx.count(d), 0);
        for (std::size_t i = 0; i < cx.count(d); ++i) {
            if (orbit[d][i] >= 0) continue;
            const long o = static_cast<long>(reps[d].size());
            reps[d].push_back(i);
            for (std::uint32_t g = 0; g < grp.order(); ++g) {
                auto [j, s] = x.act(g, d, i);
                if (orbit[d][j] < 0) {
                    orbit[d][j] = o;
                    sign[d][j] = s;
                }
            }
        }
    }
    std::vector<IntMatrix> deltas;
    for (int d = 1; d <= top; ++d) {
        IntMatrix q(reps[d].size(), reps[d - 1].size());
        for (std::size_t o = 0; o < reps[d].size(); ++o) {
            const auto& s = cx.simplices(d)[reps[d][o]];
            for (std::size_t k = 0; k < s.size(); ++k) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<long>(k));
                const auto fi = static_cast<std::size_t>(cx.index_of(f));
                q(o, orbit[d - 1][fi]) += (k % 2 == 0 ? 1 : -1) * sign[d - 1][fi];
            }
        }
        deltas.push_back(q);
    }
    return deltas;
}

inline CohomologyResult quotient_cohomology(const GSimplicialComplex& x, long m, int hi) {
    const auto deltas = quotient_coboundaries(x);
    PresentedCochainComplex c;
    const auto cell = m == 0 ? AbPresentation::free(1) : AbPresentation::cyclic(m);
    auto power = [&](std::size_t r) {
        AbPresentation p = AbPresentation::zero();
        for (std::size_t i = 0; i < r; ++i) p = direct_sum(p, cell);
        return p;
    };
    c.groups.push_back(power(deltas.empty() ? x.orbits(0).size() : deltas[0].cols()));
    for (const auto& d : deltas) {
        c.groups.push_back(power(d.rows()));
        c.deltas.push_back(d);
    }
    return cohomology(c, 0, hi);
}

}  // namespace eqob::testing
