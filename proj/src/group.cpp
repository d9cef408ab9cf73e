#include "eqob/group.hpp"

#include "eqob/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace eqob {

namespace {

std::vector<std::uint32_t> compute_inverses(std::size_t order, const std::vector<std::uint32_t>& table) {
    std::vector<std::uint32_t> inv(order, 0);
    for (std::size_t a = 0; a < order; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < order; ++b)
            if (table[a * order + b] == 0) {
                inv[a] = static_cast<std::uint32_t>(b);
                found = true;
                break;
            }
        if (!found) throw InvalidArgument("group table: element " + std::to_string(a) + " has no inverse");
    }
    return inv;
}

std::string power_label(const std::string& gen, std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return gen;
    return gen + "^" + std::to_string(k);
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::uint32_t> table, GroupFamily family, std::size_t parameter,
                         std::vector<std::pair<std::string, std::uint32_t>> generators, std::string name,
                         std::vector<std::size_t> primes)
    : order_(order),
      table_(std::move(table)),
      family_(family),
      parameter_(parameter),
      generators_(std::move(generators)),
      name_(std::move(name)),
      primes_(std::move(primes)) {
    if (order_ == 0 || table_.size() != order_ * order_) throw InvalidArgument("group table has wrong size");
    for (auto v : table_)
        if (v >= order_) throw InvalidArgument("group table entry out of range");
    for (std::size_t a = 0; a < order_; ++a)
        if (table_[a] != a || table_[a * order_] != a) throw InvalidArgument("element 0 must be the identity");
    inverse_ = compute_inverses(order_, table_);
}

GroupPtr FiniteGroup::from_table(std::vector<std::uint32_t> table, std::size_t order,
                                 std::vector<std::pair<std::string, std::uint32_t>> generators, std::string name) {
    return std::make_shared<const FiniteGroup>(order, std::move(table), GroupFamily::Generic, order,
                                               std::move(generators), std::move(name));
}

std::uint32_t FiniteGroup::power(std::uint32_t a, long k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    std::uint32_t r = identity();
    std::uint32_t base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

std::size_t FiniteGroup::element_order(std::uint32_t a) const {
    std::size_t k = 1;
    for (std::uint32_t x = a; x != identity(); x = mul(x, a)) ++k;
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = a + 1; b < order_; ++b)
            if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    return true;
}

std::size_t FiniteGroup::exponent() const {
    std::size_t e = 1;
    for (std::size_t a = 0; a < order_; ++a) e = std::lcm(e, element_order(static_cast<std::uint32_t>(a)));
    return e;
}

bool FiniteGroup::verify_axioms() const {
    for (std::size_t a = 0; a < order_; ++a) {
        if (mul(static_cast<std::uint32_t>(a), inverse_[a]) != 0 || mul(inverse_[a], static_cast<std::uint32_t>(a)) != 0)
            return false;
        if (mul(0, static_cast<std::uint32_t>(a)) != a || mul(static_cast<std::uint32_t>(a), 0) != a) return false;
    }
    for (std::uint32_t a = 0; a < order_; ++a)
        for (std::uint32_t b = 0; b < order_; ++b) {
            const std::uint32_t ab = mul(a, b);
            for (std::uint32_t c = 0; c < order_; ++c)
                if (mul(ab, c) != mul(a, mul(b, c))) return false;
        }
    return true;
}

std::string FiniteGroup::element_label(std::uint32_t a) const {
    if (a == identity()) return "e";
    switch (family_) {
        case GroupFamily::Cyclic:
            return power_label("g", a);
        case GroupFamily::Dihedral: {
            auto [r, s] = dihedral_parts(a);
            return power_label("x", r) + (s ? "y" : "");
        }
        case GroupFamily::ElemAbProduct: {
            std::string out;
            const auto d = elem_ab_digits(a);
            for (std::size_t i = 0; i < d.size(); ++i) out += power_label("a" + std::to_string(i + 1), d[i]);
            return out;
        }
        case GroupFamily::Generic:
            break;
    }
    return "#" + std::to_string(a);
}

std::uint32_t FiniteGroup::parse_element(const std::string& word) const {
    std::uint32_t result = identity();
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> std::uint32_t {
        throw InvalidArgument("cannot parse element '" + word + "' of " + name_ + ": " + why);
    };
    while (pos < word.size()) {
        if (std::isspace(static_cast<unsigned char>(word[pos])) || word[pos] == '*') {
            ++pos;
            continue;
        }
        if (word[pos] == 'e' && (pos + 1 == word.size() || !std::isdigit(static_cast<unsigned char>(word[pos + 1])))) {
            ++pos;
            continue;
        }
        if (word[pos] == '#') {
            std::size_t end = pos + 1;
            while (end < word.size() && std::isdigit(static_cast<unsigned char>(word[end]))) ++end;
            if (end == pos + 1) return fail("expected index after '#'");
            const auto idx = std::stoul(word.substr(pos + 1, end - pos - 1));
            if (idx >= order_) return fail("index out of range");
            result = mul(result, static_cast<std::uint32_t>(idx));
            pos = end;
            continue;
        }
        // Longest generator label matching at pos.
        std::size_t best = generators_.size();
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            const auto& lab = generators_[i].first;
            if (lab.size() > best_len && word.compare(pos, lab.size(), lab) == 0) {
                const std::size_t after = pos + lab.size();
                // "a1" must not match the prefix of "a12".
                if (after < word.size() && std::isdigit(static_cast<unsigned char>(word[after])) &&
                    std::isdigit(static_cast<unsigned char>(lab.back())))
                    continue;
                best = i;
                best_len = lab.size();
            }
        }
        if (best == generators_.size()) return fail("unknown generator at position " + std::to_string(pos));
        pos += best_len;
        long exp = 1;
        if (pos < word.size() && word[pos] == '^') {
            ++pos;
            bool neg = false;
            if (pos < word.size() && word[pos] == '-') {
                neg = true;
                ++pos;
            }
            std::size_t end = pos;
            while (end < word.size() && std::isdigit(static_cast<unsigned char>(word[end]))) ++end;
            if (end == pos) return fail("missing exponent");
            exp = std::stol(word.substr(pos, end - pos));
            if (neg) exp = -exp;
            pos = end;
        }
        result = mul(result, power(generators_[best].second, exp));
    }
    return result;
}

std::size_t FiniteGroup::cyclic_exponent(std::uint32_t a) const {
    if (family_ != GroupFamily::Cyclic) throw InvalidArgument(name_ + " is not a cyclic-family group");
    return a;
}

std::pair<std::size_t, std::size_t> FiniteGroup::dihedral_parts(std::uint32_t a) const {
    if (family_ != GroupFamily::Dihedral) throw InvalidArgument(name_ + " is not a dihedral-family group");
    return {a % parameter_, a / parameter_};
}

std::vector<std::size_t> FiniteGroup::elem_ab_digits(std::uint32_t a) const {
    if (family_ != GroupFamily::ElemAbProduct) throw InvalidArgument(name_ + " is not an elementary-abelian product");
    std::vector<std::size_t> d(primes_.size());
    std::size_t rest = a;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        d[i] = rest % primes_[i];
        rest /= primes_[i];
    }
    return d;
}

GroupPtr cyclic_group(std::size_t n) {
    if (n == 0) throw InvalidArgument("cyclic_group: n must be positive");
    std::vector<std::uint32_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
    std::vector<std::pair<std::string, std::uint32_t>> gens;
    gens.emplace_back("g", n > 1 ? 1u : 0u);
    return std::make_shared<const FiniteGroup>(n, std::move(t), GroupFamily::Cyclic, n, std::move(gens),
                                               "C" + std::to_string(n));
}

GroupPtr dihedral_group(std::size_t n) {
    if (n == 0) throw InvalidArgument("dihedral_group: n must be positive");
    const std::size_t order = 2 * n;
    std::vector<std::uint32_t> t(order * order);
    // (x^a y^b)(x^c y^d) = x^{a + (-1)^b c} y^{b+d}
    for (std::size_t p = 0; p < order; ++p)
        for (std::size_t q = 0; q < order; ++q) {
            const std::size_t a = p % n, b = p / n, c = q % n, d = q / n;
            const std::size_t r = b == 0 ? (a + c) % n : (a + n - c) % n;
            t[p * order + q] = static_cast<std::uint32_t>(r + n * ((b + d) % 2));
        }
    std::vector<std::pair<std::string, std::uint32_t>> gens;
    gens.emplace_back("x", n > 1 ? 1u : 0u);
    gens.emplace_back("y", static_cast<std::uint32_t>(n));
    return std::make_shared<const FiniteGroup>(order, std::move(t), GroupFamily::Dihedral, n, std::move(gens),
                                               "D" + std::to_string(n));
}

GroupPtr elem_ab_product(std::size_t n) {
    if (n < 2) throw InvalidArgument("elem_ab_product: n must be at least 2");
    const auto primes = prime_factors(n);
    const std::size_t m = primes.size();
    auto digits = [&](std::size_t a) {
        std::vector<std::size_t> d(m);
        for (std::size_t i = 0; i < m; ++i) {
            d[i] = a % primes[i];
            a /= primes[i];
        }
        return d;
    };
    std::vector<std::uint32_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto da = digits(a);
        for (std::size_t b = 0; b < n; ++b) {
            const auto db = digits(b);
            std::size_t idx = 0, radix = 1;
            for (std::size_t i = 0; i < m; ++i) {
                idx += ((da[i] + db[i]) % primes[i]) * radix;
                radix *= primes[i];
            }
            t[a * n + b] = static_cast<std::uint32_t>(idx);
        }
    }
    std::vector<std::pair<std::string, std::uint32_t>> gens;
    std::size_t radix = 1;
    for (std::size_t i = 0; i < m; ++i) {
        gens.emplace_back("a" + std::to_string(i + 1), static_cast<std::uint32_t>(radix));
        radix *= primes[i];
    }
    return std::make_shared<const FiniteGroup>(n, std::move(t), GroupFamily::ElemAbProduct, n, std::move(gens),
                                               "L" + std::to_string(n), primes);
}

GroupPtr parse_group(const std::string& literal) {
    if (literal.size() < 2) throw InvalidArgument("group literal '" + literal + "' must be C<n>, D<n> or L<n>");
    const char kind = literal[0];
    const std::string digits = literal.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InvalidArgument("group literal '" + literal + "' must be C<n>, D<n> or L<n>");
    if (digits.size() > 7) throw InvalidArgument("group literal '" + literal + "': n too large");
    const std::size_t n = std::stoul(digits);
    if (n == 0) throw InvalidArgument("group literal '" + literal + "': n must be positive");
    switch (kind) {
        case 'C': return cyclic_group(n);
        case 'D': return dihedral_group(n);
        case 'L': return elem_ab_product(n);
        default: throw InvalidArgument("group literal '" + literal + "' must start with C, D or L");
    }
}

std::vector<std::size_t> prime_factors(std::size_t n) {
    std::vector<std::size_t> f;
    for (std::size_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            f.push_back(p);
            n /= p;
        }
    if (n > 1) f.push_back(n);
    return f;
}

bool is_prime_power(std::size_t n) {
    if (n < 2) return false;
    const auto f = prime_factors(n);
    return f.front() == f.back();
}

bool is_square_free(std::size_t n) {
    const auto f = prime_factors(n);
    return std::adjacent_find(f.begin(), f.end()) == f.end();
}

// ---- Subgroup ---------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<std::uint32_t> elements, int class_id)
    : parent_(std::move(parent)), elements_(std::move(elements)), class_id_(class_id) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

Subgroup Subgroup::generated_by(GroupPtr parent, std::span<const std::uint32_t> generators) {
    std::vector<char> seen(parent->order(), 0);
    std::vector<std::uint32_t> elems{parent->identity()};
    seen[parent->identity()] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (auto s : generators) {
            const auto y = parent->mul(elems[i], s);
            if (!seen[y]) {
                seen[y] = 1;
                elems.push_back(y);
            }
        }
    return Subgroup(std::move(parent), std::move(elems));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
    const auto e = parent->identity();
    return Subgroup(std::move(parent), {e});
}

Subgroup Subgroup::whole(GroupPtr parent) {
    std::vector<std::uint32_t> all(parent->order());
    std::iota(all.begin(), all.end(), 0u);
    return Subgroup(std::move(parent), std::move(all));
}

bool Subgroup::contains(std::uint32_t g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

Subgroup Subgroup::conjugate(std::uint32_t x) const {
    std::vector<std::uint32_t> c;
    c.reserve(elements_.size());
    for (auto g : elements_) c.push_back(parent_->conj(x, g));
    return Subgroup(parent_, std::move(c));
}

bool Subgroup::is_closed() const {
    if (!contains(parent_->identity())) return false;
    for (auto a : elements_) {
        if (!contains(parent_->inv(a))) return false;
        for (auto b : elements_)
            if (!contains(parent_->mul(a, b))) return false;
    }
    return true;
}

bool is_subconjugate(const Subgroup& k, const Subgroup& h) {
    if (k.parent().get() != h.parent().get() && k.parent()->order() != h.parent()->order())
        throw InvalidArgument("is_subconjugate: subgroups of different groups");
    if (h.order() % k.order() != 0) return false;
    const auto& g = *k.parent();
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        bool inside = true;
        for (auto a : k.elements())
            if (!h.contains(g.conj(x, a))) {
                inside = false;
                break;
            }
        if (inside) return true;
    }
    return false;
}

// ---- SubgroupLattice --------------------------------------------------------

SubgroupLattice::SubgroupLattice(GroupPtr group, std::vector<Subgroup> subgroups, std::vector<std::size_t> class_start,
                                 std::vector<std::uint32_t> conjugators)
    : group_(std::move(group)),
      subgroups_(std::move(subgroups)),
      class_start_(std::move(class_start)),
      conjugators_(std::move(conjugators)) {
    for (std::size_t i = 0; i < subgroups_.size(); ++i) index_.emplace(subgroups_[i].elements(), i);
}

std::span<const Subgroup> SubgroupLattice::conjugacy_class(int class_id) const {
    const std::size_t begin = class_start_.at(class_id);
    const std::size_t end = static_cast<std::size_t>(class_id) + 1 < class_start_.size() ? class_start_[class_id + 1]
                                                                                          : subgroups_.size();
    return {subgroups_.data() + begin, end - begin};
}

SubgroupLattice::Location SubgroupLattice::locate(const std::vector<std::uint32_t>& elements) const {
    auto it = index_.find(elements);
    if (it == index_.end()) throw InvalidArgument("element set is not a subgroup of " + group_->name());
    return {it->second, subgroups_[it->second].class_id(), conjugators_[it->second]};
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const std::vector<std::uint32_t>& elems, std::size_t order) {
    Bits b((order + 63) / 64, 0);
    for (auto e : elems) b[e / 64] |= std::uint64_t{1} << (e % 64);
    return b;
}

bool bits_contain(const Bits& b, std::uint32_t e) { return (b[e / 64] >> (e % 64)) & 1u; }

std::vector<std::uint32_t> from_bits(const Bits& b, std::size_t order) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t e = 0; e < order; ++e)
        if (bits_contain(b, e)) out.push_back(e);
    return out;
}

struct Candidate {
    Bits bits;
    std::vector<std::uint32_t> gens;
};

}  // namespace

LatticePtr subgroups(const GroupPtr& g, std::size_t bound) {
    const std::size_t n = g->order();
    if (n > bound)
        throw BudgetExceeded("subgroup enumeration: |G| = " + std::to_string(n) + " exceeds bound " +
                             std::to_string(bound));
    std::set<Bits> known;
    std::vector<Candidate> found;
    std::vector<Candidate> cyclics;
    for (std::uint32_t a = 0; a < n; ++a) {
        const std::uint32_t gen[1] = {a};
        const auto s = Subgroup::generated_by(g, gen);
        Bits b = to_bits(s.elements(), n);
        if (known.insert(b).second) {
            cyclics.push_back({b, {a}});
            found.push_back({b, {a}});
        }
    }
    // Join-closure: every subgroup is a join of cyclic subgroups.
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (const auto& c : cyclics) {
            if (bits_contain(found[i].bits, c.gens[0])) continue;
            std::vector<std::uint32_t> gens = found[i].gens;
            gens.push_back(c.gens[0]);
            const auto s = Subgroup::generated_by(g, gens);
            Bits b = to_bits(s.elements(), n);
            if (known.insert(b).second) found.push_back({std::move(b), std::move(gens)});
        }
    }
    std::vector<std::vector<std::uint32_t>> all;
    all.reserve(found.size());
    for (const auto& c : found) all.push_back(from_bits(c.bits, n));
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::map<std::vector<std::uint32_t>, std::size_t> pos;
    for (std::size_t i = 0; i < all.size(); ++i) pos.emplace(all[i], i);

    std::vector<int> class_of(all.size(), -1);
    std::vector<std::uint32_t> conj_of(all.size(), 0);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (class_of[i] >= 0) continue;
        const int cid = static_cast<int>(classes.size());
        classes.emplace_back();
        for (std::uint32_t x = 0; x < n; ++x) {
            std::vector<std::uint32_t> c;
            c.reserve(all[i].size());
            for (auto a : all[i]) c.push_back(g->conj(x, a));
            std::sort(c.begin(), c.end());
            const std::size_t j = pos.at(c);
            if (class_of[j] < 0) {
                class_of[j] = cid;
                conj_of[j] = x;
                classes.back().push_back(j);
            }
        }
        std::sort(classes.back().begin(), classes.back().end());
    }
    std::vector<Subgroup> ordered;
    std::vector<std::size_t> starts;
    std::vector<std::uint32_t> conjugators;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        starts.push_back(ordered.size());
        for (auto j : classes[c]) {
            ordered.emplace_back(g, all[j], static_cast<int>(c));
            conjugators.push_back(conj_of[j]);
        }
    }
    return std::make_shared<const SubgroupLattice>(g, std::move(ordered), std::move(starts), std::move(conjugators));
}

// ---- GSet -------------------------------------------------------------------

GSet::GSet(GroupPtr group, std::size_t size, std::vector<std::uint32_t> action)
    : group_(std::move(group)), size_(size), action_(std::move(action)) {
    if (size_ == 0) throw InvalidArgument("GSet: size must be positive");
    if (action_.size() != group_->order() * size_) throw InvalidArgument("GSet: action table has wrong size");
    for (auto v : action_)
        if (v >= size_) throw InvalidArgument("GSet: action table entry out of range");
}

Subgroup GSet::stabilizer(std::uint32_t p) const {
    std::vector<std::uint32_t> s;
    for (std::uint32_t g = 0; g < group_->order(); ++g)
        if (act(g, p) == p) s.push_back(g);
    return Subgroup(group_, std::move(s));
}

std::vector<std::vector<std::uint32_t>> GSet::orbits() const {
    std::vector<char> seen(size_, 0);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t p = 0; p < size_; ++p) {
        if (seen[p]) continue;
        std::vector<std::uint32_t> orb;
        for (std::uint32_t g = 0; g < group_->order(); ++g) {
            const auto q = act(g, p);
            if (!seen[q]) {
                seen[q] = 1;
                orb.push_back(q);
            }
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

bool GSet::verify() const {
    const auto& g = *group_;
    for (std::uint32_t p = 0; p < size_; ++p)
        if (act(g.identity(), p) != p) return false;
    for (std::uint32_t a = 0; a < g.order(); ++a) {
        std::vector<char> hit(size_, 0);
        for (std::uint32_t p = 0; p < size_; ++p) {
            if (hit[act(a, p)]) return false;
            hit[act(a, p)] = 1;
        }
        for (std::uint32_t b = 0; b < g.order(); ++b)
            for (std::uint32_t p = 0; p < size_; ++p)
                if (act(g.mul(a, b), p) != act(a, act(b, p))) return false;
    }
    return true;
}

bool GSet::is_free() const {
    for (std::uint32_t p = 0; p < size_; ++p)
        for (std::uint32_t a = 1; a < group_->order(); ++a)
            if (act(a, p) == p) return false;
    return true;
}

GSet left_regular_gset(const GroupPtr& g) {
    const std::size_t n = g->order();
    std::vector<std::uint32_t> act(n * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t p = 0; p < n; ++p) act[a * n + p] = g->mul(a, p);
    return GSet(g, n, std::move(act));
}

GSet coset_gset(const GroupPtr& g, const Subgroup& h) {
    if (!h.is_closed() || h.parent()->order() != g->order()) throw InvalidArgument("coset_gset: H is not a subgroup");
    const std::size_t n = g->order();
    std::vector<long> coset_of(n, -1);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t a = 0; a < n; ++a) {
        if (coset_of[a] >= 0) continue;
        for (auto x : h.elements()) coset_of[g->mul(a, x)] = static_cast<long>(reps.size());
        reps.push_back(a);
    }
    const std::size_t m = reps.size();
    std::vector<std::uint32_t> act(n * m);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::size_t p = 0; p < m; ++p) act[a * m + p] = static_cast<std::uint32_t>(coset_of[g->mul(a, reps[p])]);
    return GSet(g, m, std::move(act));
}

bool gsets_isomorphic(const GSet& a, const GSet& b, const SubgroupLattice& lattice) {
    if (a.size() != b.size()) return false;
    auto census = [&](const GSet& s) {
        std::map<int, std::size_t> c;
        for (const auto& orb : s.orbits()) ++c[lattice.locate(s.stabilizer(orb.front())).class_id];
        return c;
    };
    return census(a) == census(b);
}

}  // namespace eqob
