#include "eqob/smith.hpp"

#include "eqob/errors.hpp"

#include <algorithm>
#include <numeric>

namespace eqob {

namespace {

inline int cmp_abs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
inline bool is_unit(const BigInt& v) { return mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0; }

// Row i -= q * row r, restricted to columns [from, cols).
void row_submul(IntMatrix& m, std::size_t i, std::size_t r, const BigInt& q, std::size_t from = 0) {
    BigInt* dst = m.row_data(i);
    const BigInt* src = m.row_data(r);
    for (std::size_t j = from; j < m.cols(); ++j)
        if (sgn(src[j]) != 0) mpz_submul(dst[j].get_mpz_t(), q.get_mpz_t(), src[j].get_mpz_t());
}

// Column j -= q * column c, restricted to rows [from, rows).
void col_submul(IntMatrix& m, std::size_t j, std::size_t c, const BigInt& q, std::size_t from = 0) {
    for (std::size_t i = from; i < m.rows(); ++i)
        if (sgn(m(i, c)) != 0) mpz_submul(m(i, j).get_mpz_t(), q.get_mpz_t(), m(i, c).get_mpz_t());
}

class SmithWorker {
public:
    SmithWorker(const IntMatrix& a, bool transforms)
        : a_(a), transforms_(transforms) {
        if (transforms_) {
            u_ = IntMatrix::identity(a.rows());
            v_ = IntMatrix::identity(a.cols());
        }
    }

    SmithForm run() {
        const std::size_t m = a_.rows();
        const std::size_t n = a_.cols();
        std::size_t r = 0;
        while (r < std::min(m, n)) {
            if (!bring_min_to(r, r, m, r, n)) break;
            clear_cross(r);
            ++r;
        }
        std::vector<BigInt> diag(r);
        for (std::size_t i = 0; i < r; ++i) diag[i] = a_(i, i);
        fix_divisibility(diag);
        for (std::size_t i = 0; i < r; ++i) {
            if (sgn(diag[i]) < 0) {
                diag[i] = -diag[i];
                if (transforms_)
                    for (std::size_t j = 0; j < m; ++j) u_(i, j) = -u_(i, j);
            }
        }
        SmithForm out;
        out.factors = std::move(diag);
        if (transforms_) {
            out.left = std::move(u_);
            out.right = std::move(v_);
        }
        return out;
    }

private:
    void swap_rows(std::size_t i, std::size_t j) {
        a_.swap_rows(i, j);
        if (transforms_) u_.swap_rows(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        a_.swap_cols(i, j);
        if (transforms_) v_.swap_cols(i, j);
    }

    // Moves the least-absolute-value nonzero entry of the given window to
    // (t, t). Returns false when the window is zero.
    bool bring_min_to(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
        std::size_t bi = r1, bj = c1;
        for (std::size_t i = r0; i < r1; ++i) {
            const BigInt* row = a_.row_data(i);
            for (std::size_t j = c0; j < c1; ++j) {
                if (sgn(row[j]) == 0) continue;
                if (bi == r1 || cmp_abs(row[j], a_(bi, bj)) < 0) {
                    bi = i;
                    bj = j;
                }
            }
            if (bi != r1 && is_unit(a_(bi, bj))) break;
        }
        if (bi == r1) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    // Zeroes row t and column t outside the pivot.
    void clear_cross(std::size_t t) {
        const std::size_t m = a_.rows();
        const std::size_t n = a_.cols();
        BigInt q;
        for (;;) {
            bool residue = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(a_(i, t)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                if (sgn(q) != 0) {
                    row_submul(a_, i, t, q, t);
                    if (transforms_) row_submul(u_, i, t, q);
                }
                if (sgn(a_(i, t)) != 0) residue = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(a_(t, j)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                if (sgn(q) != 0) {
                    col_submul(a_, j, t, q, t);
                    if (transforms_) col_submul(v_, j, t, q);
                }
                if (sgn(a_(t, j)) != 0) residue = true;
            }
            if (!residue) return;
            // A remainder smaller than the pivot survived; make it the pivot.
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < m; ++i)
                if (sgn(a_(i, t)) != 0 && cmp_abs(a_(i, t), a_(bi, bj)) < 0) { bi = i; bj = t; }
            for (std::size_t j = t + 1; j < n; ++j)
                if (sgn(a_(t, j)) != 0 && cmp_abs(a_(t, j), a_(bi, bj)) < 0) { bi = t; bj = j; }
            swap_rows(t, bi);
            swap_cols(t, bj);
        }
    }

    // Turns a diagonal into a divisibility chain with 2x2 unimodular moves:
    // diag(a, b) -> diag(gcd, lcm).
    void fix_divisibility(std::vector<BigInt>& d) {
        const std::size_t r = d.size();
        BigInt g, s, t, ag, bg, tmp1, tmp2;
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = i + 1; j < r; ++j) {
                if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
                const BigInt a = d[i];
                const BigInt b = d[j];
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                ag = a / g;
                bg = b / g;
                d[i] = g;
                d[j] = a * bg;
                if (!transforms_) continue;
                // U' = [[s, t], [-b/g, a/g]] on rows i, j.
                for (std::size_t c = 0; c < u_.cols(); ++c) {
                    tmp1 = s * u_(i, c) + t * u_(j, c);
                    tmp2 = ag * u_(j, c) - bg * u_(i, c);
                    u_(i, c) = tmp1;
                    u_(j, c) = tmp2;
                }
                // V' = [[1, -t b/g], [1, s a/g]] on columns i, j.
                const BigInt x = -t * bg;
                const BigInt y = s * ag;
                for (std::size_t rr = 0; rr < v_.rows(); ++rr) {
                    tmp1 = v_(rr, i) + v_(rr, j);
                    tmp2 = x * v_(rr, i) + y * v_(rr, j);
                    v_(rr, i) = tmp1;
                    v_(rr, j) = tmp2;
                }
            }
        }
    }

    IntMatrix a_;
    bool transforms_;
    IntMatrix u_;
    IntMatrix v_;
};

// ---- sparse elimination ----------------------------------------------------

struct OverflowSignal {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }
inline BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }
inline BigInt to_big(const BigInt& v) { return v; }

template <class T>
class SparseEliminator {
public:
    struct Entry {
        std::uint32_t col;
        T value;
    };

    explicit SparseEliminator(const SparseMatrix& a)
        : rows_(a.rows()), col_rows_(a.cols()), col_count_(a.cols(), 0), active_(a.rows(), 1) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (const auto& e : a.row(i)) {
                rows_[i].push_back({e.col, T(static_cast<long>(e.value))});
                col_rows_[e.col].push_back(static_cast<std::uint32_t>(i));
                ++col_count_[e.col];
            }
            if (rows_[i].empty()) active_[i] = 0;
        }
    }

    std::vector<BigInt> run() {
        std::size_t units = 0;
        std::vector<std::uint32_t> order;
        bool progress = true;
        while (progress) {
            progress = false;
            order.clear();
            for (std::size_t i = 0; i < rows_.size(); ++i)
                if (active_[i]) order.push_back(static_cast<std::uint32_t>(i));
            std::stable_sort(order.begin(), order.end(),
                             [&](auto x, auto y) { return rows_[x].size() < rows_[y].size(); });
            for (auto r : order) {
                if (!active_[r]) continue;
                long best_col = -1;
                std::uint32_t best_count = 0;
                for (const auto& e : rows_[r]) {
                    if (!is_unit(e.value)) continue;
                    if (best_col < 0 || col_count_[e.col] < best_count) {
                        best_col = e.col;
                        best_count = col_count_[e.col];
                    }
                }
                if (best_col < 0) continue;
                eliminate(r, static_cast<std::uint32_t>(best_col));
                ++units;
                progress = true;
            }
        }
        // Dense core.
        std::vector<std::uint32_t> core_rows;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (active_[i] && !rows_[i].empty()) core_rows.push_back(static_cast<std::uint32_t>(i));
        std::vector<long> col_map(col_count_.size(), -1);
        std::size_t ncols = 0;
        for (auto r : core_rows)
            for (const auto& e : rows_[r])
                if (col_map[e.col] < 0) col_map[e.col] = static_cast<long>(ncols++);
        IntMatrix core(core_rows.size(), ncols);
        for (std::size_t k = 0; k < core_rows.size(); ++k)
            for (const auto& e : rows_[core_rows[k]]) core(k, col_map[e.col]) = to_big(e.value);
        std::vector<BigInt> factors(units, BigInt(1));
        auto rest = smith_normal_form(core).factors;
        factors.insert(factors.end(), rest.begin(), rest.end());
        return factors;
    }

private:
    void eliminate(std::uint32_t p, std::uint32_t c) {
        const T pivot = value_at(p, c);
        auto& candidates = col_rows_[c];
        std::vector<std::uint32_t> targets;
        for (auto r : candidates) {
            if (r == p || !active_[r]) continue;
            if (has_col(r, c)) targets.push_back(r);
        }
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (auto r : targets) {
            // row_r -= (a_rc * pivot) * row_p, valid because pivot^2 == 1.
            const T factor = checked_mul(value_at(r, c), pivot);
            combine(r, p, factor);
        }
        for (const auto& e : rows_[p]) --col_count_[e.col];
        rows_[p].clear();
        rows_[p].shrink_to_fit();
        active_[p] = 0;
        candidates.clear();
    }

    bool has_col(std::uint32_t r, std::uint32_t c) const {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::uint32_t v) { return e.col < v; });
        return it != row.end() && it->col == c;
    }

    T value_at(std::uint32_t r, std::uint32_t c) const {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::uint32_t v) { return e.col < v; });
        return it->value;
    }

    void combine(std::uint32_t r, std::uint32_t p, const T& factor) {
        const auto& a = rows_[r];
        const auto& b = rows_[p];
        std::vector<Entry> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].col < a[i].col) {
                T v = checked_sub(T(0), checked_mul(factor, b[j].value));
                out.push_back({b[j].col, v});
                ++col_count_[b[j].col];
                col_rows_[b[j].col].push_back(r);
                ++j;
            } else {
                T v = checked_sub(a[i].value, checked_mul(factor, b[j].value));
                if (is_zero(v))
                    --col_count_[a[i].col];
                else
                    out.push_back({a[i].col, v});
                ++i;
                ++j;
            }
        }
        rows_[r] = std::move(out);
        if (rows_[r].empty()) active_[r] = 0;
    }

    std::vector<std::vector<Entry>> rows_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::vector<std::uint32_t> col_count_;
    std::vector<char> active_;
};

}  // namespace

IntMatrix SmithForm::diagonal(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < factors.size(); ++i) d(i, i) = factors[i];
    return d;
}

SmithForm smith_normal_form(const IntMatrix& a, bool with_transforms) {
    return SmithWorker(a, with_transforms).run();
}

std::vector<BigInt> invariant_factors(const SparseMatrix& a) {
    try {
        return SparseEliminator<std::int64_t>(a).run();
    } catch (const OverflowSignal&) {
        return SparseEliminator<BigInt>(a).run();
    }
}

std::size_t rank(const SparseMatrix& a) { return invariant_factors(a).size(); }

IntMatrix kernel_basis(const IntMatrix& a) {
    const auto snf = smith_normal_form(a, true);
    const std::size_t r = snf.rank();
    const IntMatrix& v = *snf.right;
    return v.block(0, r, v.rows(), v.cols() - r);
}

bool in_lattice(const IntMatrix& generators, const std::vector<BigInt>& v) {
    if (v.size() != generators.rows()) throw InvalidArgument("in_lattice: dimension mismatch");
    const auto snf = smith_normal_form(generators, true);
    const IntMatrix& u = *snf.left;
    for (std::size_t i = 0; i < u.rows(); ++i) {
        BigInt y = 0;
        for (std::size_t j = 0; j < u.cols(); ++j) y += u(i, j) * v[j];
        if (i < snf.rank()) {
            if (!mpz_divisible_p(y.get_mpz_t(), snf.factors[i].get_mpz_t())) return false;
        } else if (sgn(y) != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace eqob
