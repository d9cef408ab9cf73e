#include "eqob/rep.hpp"

#include "eqob/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

namespace eqob {

char family_letter(RepFamily f) {
    switch (f) {
        case RepFamily::C: return 'C';
        case RepFamily::D: return 'D';
        case RepFamily::L: return 'L';
    }
    return '?';
}

RepFamily family_from_letter(char c) {
    switch (c) {
        case 'C': return RepFamily::C;
        case 'D': return RepFamily::D;
        case 'L': return RepFamily::L;
        default: throw InvalidArgument(std::string("unknown group family '") + c + "'");
    }
}

GroupPtr family_group(RepFamily f, std::size_t n) {
    switch (f) {
        case RepFamily::C: return cyclic_group(n);
        case RepFamily::D: return dihedral_group(n);
        case RepFamily::L: return elem_ab_product(n);
    }
    throw InvalidArgument("unknown group family");
}

namespace {

std::vector<std::size_t> negated(const std::vector<std::size_t>& c, const std::vector<std::size_t>& primes) {
    std::vector<std::size_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = (primes[i] - c[i] % primes[i]) % primes[i];
    return out;
}

void check_family_n(RepFamily f, std::size_t n) {
    if (n == 0) throw InvalidArgument("representation: n must be positive");
    if (f == RepFamily::D && n % 2 == 0)
        throw InvalidArgument("representations of D_n are supported only for odd n (got n=" + std::to_string(n) + ")");
    if (f == RepFamily::L && n < 2) throw InvalidArgument("L_n requires n >= 2");
}

}  // namespace

IrredLabel IrredLabel::ext_char(std::vector<std::size_t> chars, const std::vector<std::size_t>& primes) {
    if (chars.size() != primes.size())
        throw InvalidArgument("character needs one exponent per prime factor (" + std::to_string(primes.size()) + ")");
    for (std::size_t i = 0; i < chars.size(); ++i) chars[i] %= primes[i];
    if (std::all_of(chars.begin(), chars.end(), [](std::size_t c) { return c == 0; })) return triv();
    auto conj = negated(chars, primes);
    IrredLabel l;
    l.kind = Kind::ExtChar;
    l.dim = conj == chars ? 1 : 2;
    l.chars = std::min(chars, conj);
    return l;
}

std::string IrredLabel::to_string() const {
    switch (kind) {
        case Kind::Triv: return "triv";
        case Kind::Sign: return "sigma";
        case Kind::Rot: return "xi^" + std::to_string(r);
        case Kind::RotHat: return "xihat^" + std::to_string(r);
        case Kind::ExtChar: {
            std::string s = "chi(";
            for (std::size_t i = 0; i < chars.size(); ++i) s += (i ? "," : "") + std::to_string(chars[i]);
            return s + ")";
        }
    }
    return "?";
}

RealRep::RealRep(RepFamily family, std::size_t n) : family_(family), n_(n) {
    check_family_n(family, n);
    if (family == RepFamily::L) primes_ = prime_factors(n);
}

std::size_t RealRep::multiplicity(const IrredLabel& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? 0 : it->second;
}

std::size_t RealRep::dim() const {
    std::size_t d = 0;
    for (const auto& [l, m] : terms_) d += m * static_cast<std::size_t>(l.dim);
    return d;
}

bool RealRep::is_valid_label(const IrredLabel& l) const {
    using K = IrredLabel::Kind;
    switch (l.kind) {
        case K::Triv: return l.dim == 1;
        case K::Sign: return (family_ == RepFamily::C && n_ % 2 == 0) || family_ == RepFamily::D;
        case K::Rot: return family_ == RepFamily::C && l.r >= 1 && 2 * static_cast<std::size_t>(l.r) < n_;
        case K::RotHat: return family_ == RepFamily::D && l.r >= 1 && 2 * static_cast<std::size_t>(l.r) < n_;
        case K::ExtChar:
            if (family_ != RepFamily::L) return false;
            try {
                return IrredLabel::ext_char(l.chars, primes_) == l;
            } catch (const InvalidArgument&) {
                return false;
            }
    }
    return false;
}

void RealRep::add(const IrredLabel& l, std::size_t mult) {
    if (!is_valid_label(l))
        throw InvalidArgument("'" + l.to_string() + "' is not a real irreducible of " + family_letter(family_) +
                              std::to_string(n_));
    if (mult > 0) terms_[l] += mult;
}

std::string RealRep::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [l, m] : terms_) {
        if (!s.empty()) s += " + ";
        if (m != 1) s += std::to_string(m) + "*";
        s += l.to_string();
    }
    return s;
}

RealRep operator+(const RealRep& a, const RealRep& b) {
    if (a.family_ != b.family_ || a.n_ != b.n_) throw InvalidArgument("direct sum of representations of different groups");
    RealRep out = a;
    for (const auto& [l, m] : b.terms_) out.terms_[l] += m;
    return out;
}

std::vector<IrredLabel> irreducibles(RepFamily f, std::size_t n) {
    check_family_n(f, n);
    std::vector<IrredLabel> out{IrredLabel::triv()};
    switch (f) {
        case RepFamily::C:
            if (n % 2 == 0) out.push_back(IrredLabel::sign());
            for (long r = 1; 2 * static_cast<std::size_t>(r) < n; ++r) out.push_back(IrredLabel::rot(r));
            break;
        case RepFamily::D:
            out.push_back(IrredLabel::sign());
            for (long r = 1; 2 * static_cast<std::size_t>(r) < n; ++r) out.push_back(IrredLabel::rot_hat(r));
            break;
        case RepFamily::L: {
            const auto primes = prime_factors(n);
            std::vector<std::size_t> c(primes.size(), 0);
            std::vector<IrredLabel> found;
            for (std::size_t idx = 1; idx < n; ++idx) {
                std::size_t rest = idx;
                for (std::size_t i = 0; i < primes.size(); ++i) {
                    c[i] = rest % primes[i];
                    rest /= primes[i];
                }
                auto l = IrredLabel::ext_char(c, primes);
                if (l.chars == c) found.push_back(std::move(l));
            }
            std::sort(found.begin(), found.end());
            out.insert(out.end(), found.begin(), found.end());
            break;
        }
    }
    return out;
}

RealRep reduced_regular(RepFamily f, std::size_t n) {
    RealRep v(f, n);
    for (const auto& l : irreducibles(f, n)) {
        if (l.kind == IrredLabel::Kind::Triv) continue;
        if (f == RepFamily::D && l.kind == IrredLabel::Kind::Sign) continue;
        v.add(l);
    }
    return v;
}

namespace {

bool contains_reflection(const Subgroup& k) {
    const auto& g = *k.parent();
    return std::any_of(k.elements().begin(), k.elements().end(),
                       [&](std::uint32_t e) { return g.dihedral_parts(e).second == 1; });
}

void check_subgroup_of(const Subgroup& k, RepFamily f, std::size_t n) {
    const auto& g = *k.parent();
    const GroupFamily expected =
        f == RepFamily::C ? GroupFamily::Cyclic : f == RepFamily::D ? GroupFamily::Dihedral : GroupFamily::ElemAbProduct;
    if (g.family() != expected || g.parameter() != n)
        throw InvalidArgument("subgroup of " + g.name() + " used with a representation of " + family_letter(f) +
                              std::to_string(n));
}

}  // namespace

std::size_t fixed_dim(const IrredLabel& l, RepFamily f, std::size_t n, const Subgroup& k) {
    check_subgroup_of(k, f, n);
    using K = IrredLabel::Kind;
    if (l.kind == K::Triv) return 1;
    switch (f) {
        case RepFamily::C: {
            const std::size_t d = k.order();
            if (l.kind == K::Sign) return (n / d) % 2 == 0 ? 1 : 0;
            return static_cast<std::size_t>(l.r) % d == 0 ? 2 : 0;
        }
        case RepFamily::D: {
            const bool dihedral = contains_reflection(k);
            const std::size_t d = dihedral ? k.order() / 2 : k.order();
            if (l.kind == K::Sign) return dihedral ? 0 : 1;
            if (static_cast<std::size_t>(l.r) % d != 0) return 0;
            return dihedral ? 1 : 2;
        }
        case RepFamily::L: {
            const auto& g = *k.parent();
            const auto& primes = g.primes();
            std::size_t e = 1;
            for (auto p : primes) e = std::lcm(e, p);
            for (auto x : k.elements()) {
                const auto digits = g.elem_ab_digits(x);
                std::size_t phase = 0;
                for (std::size_t i = 0; i < primes.size(); ++i) phase += l.chars[i] * digits[i] * (e / primes[i]);
                if (phase % e != 0) return 0;
            }
            return static_cast<std::size_t>(l.dim);
        }
    }
    return 0;
}

std::size_t fixed_dim(const RealRep& v, const Subgroup& k) {
    std::size_t total = 0;
    for (const auto& [l, m] : v.terms()) total += m * fixed_dim(l, v.family(), v.n(), k);
    return total;
}

bool is_fixed_point_free(const RealRep& v) { return v.multiplicity(IrredLabel::triv()) == 0; }

std::string EulerClassValue::to_string() const {
    switch (tag) {
        case Tag::ModN: return std::to_string(value);
        case Tag::ZeroByParity: return "0 (parity)";
        case Tag::NonZeroByParity: return "nonzero (parity)";
    }
    return "?";
}

EulerClassValue euler_class(const RealRep& v) {
    if (v.family() != RepFamily::C) throw InvalidArgument("Euler classes are computed for cyclic groups only");
    if (!is_fixed_point_free(v)) throw InvalidArgument("Euler class requires a fixed point free representation");
    const std::size_t n = v.n();
    const std::size_t a = v.multiplicity(IrredLabel::sign());
    EulerClassValue out;
    out.sigma_pairs_folded = a >= 2;
    std::size_t value = 1 % n;
    bool even = false;
    auto fold = [&](std::size_t factor, std::size_t mult) {
        if (mult == 0) return;
        if (factor % 2 == 0) even = true;
        for (std::size_t i = 0; i < mult; ++i) value = static_cast<std::size_t>((static_cast<unsigned __int128>(value) * factor) % n);
    };
    for (const auto& [l, m] : v.terms())
        if (l.kind == IrredLabel::Kind::Rot) fold(static_cast<std::size_t>(l.r), m);
    if (a >= 2) fold(n / 2, a / 2);
    out.value = value;
    if (a % 2 == 1) out.tag = even ? EulerClassValue::Tag::ZeroByParity : EulerClassValue::Tag::NonZeroByParity;
    return out;
}

RealRep restrict_to_cyclic(const RealRep& v) {
    if (v.family() != RepFamily::D) throw InvalidArgument("restriction to C_n expects a D_n representation");
    RealRep out(RepFamily::C, v.n());
    for (const auto& [l, m] : v.terms()) {
        switch (l.kind) {
            case IrredLabel::Kind::RotHat: out.add(IrredLabel::rot(l.r), m); break;
            case IrredLabel::Kind::Triv:
            case IrredLabel::Kind::Sign: out.add(IrredLabel::triv(), m); break;
            default: throw ConsistencyError("unexpected label in a D_n representation");
        }
    }
    return out;
}

RealRep std_rep_restriction(RepFamily f, std::size_t n) {
    check_family_n(f, n);
    const auto g = family_group(f, n);
    std::optional<GSet> points;
    if (f == RepFamily::D) {
        const std::uint32_t y[1] = {g->parse_element("y")};
        points.emplace(coset_gset(g, Subgroup::generated_by(g, y)));
    } else {
        points.emplace(left_regular_gset(g));
    }
    // Frobenius reciprocity: an irreducible V occurs in R[G/H] with
    // multiplicity dim V^H / dim End(V).
    RealRep perm(f, n);
    for (const auto& orbit : points->orbits()) {
        const auto stab = points->stabilizer(orbit.front());
        for (const auto& l : irreducibles(f, n)) {
            const std::size_t fd = fixed_dim(l, f, n, stab);
            perm.add(l, fd / (l.complex_type() ? 2 : 1));
        }
    }
    if (perm.dim() != points->size() || perm.multiplicity(IrredLabel::triv()) == 0)
        throw ConsistencyError("permutation module decomposition has the wrong dimension");
    RealRep out(f, n);
    for (const auto& [l, m] : perm.terms()) {
        const std::size_t mm = l.kind == IrredLabel::Kind::Triv ? m - 1 : m;
        if (mm > 0) out.add(l, mm);
    }
    return out;
}

namespace {

class RepParser {
public:
    RepParser(RepFamily f, std::size_t n, const std::string& text) : out_(f, n), text_(text) {
        if (f == RepFamily::L) primes_ = prime_factors(n);
    }

    RealRep parse() {
        skip();
        if (at_end()) fail("empty representation");
        if (peek() == '0') {
            ++pos_;
            skip();
            if (!at_end()) fail("unexpected text after 0");
            return out_;
        }
        for (;;) {
            term();
            skip();
            if (at_end()) break;
            if (peek() != '+') fail("expected '+'");
            ++pos_;
        }
        return out_;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidArgument("cannot parse representation '" + text_ + "' at position " + std::to_string(pos_) + ": " +
                              why);
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }
    long number() {
        bool neg = false;
        if (!at_end() && peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!digit()) fail("expected a number");
        long v = 0;
        while (digit()) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000000L) fail("number too large");
            ++pos_;
        }
        return neg ? -v : v;
    }
    bool keyword(const std::string& w) {
        if (text_.compare(pos_, w.size(), w) != 0) return false;
        const std::size_t after = pos_ + w.size();
        if (after < text_.size() && std::isalpha(static_cast<unsigned char>(text_[after]))) return false;
        pos_ = after;
        return true;
    }
    long exponent() {
        skip();
        if (at_end() || peek() != '^') return 1;
        ++pos_;
        skip();
        return number();
    }

    void term() {
        skip();
        std::size_t mult = 1;
        if (digit()) {
            const long m = number();
            skip();
            if (!at_end() && peek() == '*') ++pos_;
            mult = static_cast<std::size_t>(m);
            skip();
        }
        const std::size_t n = out_.n();
        auto add = [&](const IrredLabel& l, std::size_t m) {
            if (!out_.is_valid_label(l)) fail("'" + l.to_string() + "' is not an irreducible of this group");
            out_.add(l, m);
        };
        if (keyword("triv")) {
            add(IrredLabel::triv(), mult);
        } else if (keyword("sigma")) {
            add(IrredLabel::sign(), mult);
        } else if (keyword("xihat")) {
            if (out_.family() != RepFamily::D) fail("xihat is defined for dihedral groups only");
            long r = exponent() % static_cast<long>(n);
            if (r < 0) r += static_cast<long>(n);
            if (r == 0) fail("xihat^0 is not irreducible");
            r = std::min<long>(r, static_cast<long>(n) - r);
            add(IrredLabel::rot_hat(r), mult);
        } else if (keyword("xi")) {
            if (out_.family() != RepFamily::C) fail("xi is defined for cyclic groups only");
            long r = exponent() % static_cast<long>(n);
            if (r < 0) r += static_cast<long>(n);
            r = std::min<long>(r, static_cast<long>(n) - r);
            if (r == 0)
                add(IrredLabel::triv(), 2 * mult);
            else if (2 * static_cast<std::size_t>(r) == n)
                add(IrredLabel::sign(), 2 * mult);
            else
                add(IrredLabel::rot(r), mult);
        } else if (keyword("chi")) {
            if (out_.family() != RepFamily::L) fail("chi(...) is defined for L_n only");
            skip();
            if (at_end() || peek() != '(') fail("expected '('");
            ++pos_;
            std::vector<std::size_t> c;
            for (;;) {
                skip();
                const long v = number();
                if (v < 0) fail("character exponents must be non-negative");
                c.push_back(static_cast<std::size_t>(v));
                skip();
                if (!at_end() && peek() == ',') {
                    ++pos_;
                    continue;
                }
                if (!at_end() && peek() == ')') {
                    ++pos_;
                    break;
                }
                fail("expected ',' or ')'");
            }
            if (c.size() != primes_.size()) fail("expected " + std::to_string(primes_.size()) + " character exponents");
            add(IrredLabel::ext_char(c, primes_), mult);
        } else {
            fail("unknown irreducible");
        }
    }

    RealRep out_;
    std::string text_;
    std::vector<std::size_t> primes_;
    std::size_t pos_ = 0;
};

}  // namespace

RealRep parse_rep(RepFamily f, std::size_t n, const std::string& text) { return RepParser(f, n, text).parse(); }

}  // namespace eqob
