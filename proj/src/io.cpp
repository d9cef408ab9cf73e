#include "eqob/io.hpp"

#include "eqob/errors.hpp"

#include <regex>
#include <sstream>

namespace eqob {

Json to_json(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Json to_json(const AbGroupNF& g) {
    Json t = Json::array();
    for (const auto& x : g.torsion) t.push_back(to_json(x));
    return {{"rank", g.free_rank}, {"torsion", t}};
}

Json to_json(const CohomologyResult& r) {
    Json groups = Json::array();
    for (const auto& [degree, g] : r.groups) {
        Json row = {{"degree", degree}};
        const Json body = to_json(g);
        row["rank"] = body["rank"];
        row["torsion"] = body["torsion"];
        row["trusted"] = r.trusted(degree);
        row["text"] = g.to_string();
        groups.push_back(row);
    }
    return {{"groups", groups}, {"trusted_range", {r.trusted_lo, r.trusted_hi}}, {"provenance", r.provenance}};
}

Json to_json(const RealRep& v) {
    Json terms = Json::array();
    for (const auto& [l, m] : v.terms())
        terms.push_back({{"irrep", l.to_string()}, {"dim", l.dim}, {"multiplicity", m}});
    return {{"family", std::string(1, family_letter(v.family()))},
            {"n", v.n()},
            {"dim", v.dim()},
            {"text", v.to_string()},
            {"terms", terms}};
}

Json to_json(const EulerClassValue& e) {
    switch (e.tag) {
        case EulerClassValue::Tag::ModN: return {{"mod_n", e.value}};
        case EulerClassValue::Tag::ZeroByParity: return {{"parity", "zero"}};
        case EulerClassValue::Tag::NonZeroByParity: return {{"parity", "nonzero"}};
    }
    return nullptr;
}

Json to_json(const DichotomyVerdict& v) {
    Json j = {{"verdict", verdict_name(v.tag)}};
    if (!v.theorem.empty()) j["theorem"] = v.theorem;
    if (v.euler) {
        j["euler"] = to_json(*v.euler);
        if (v.euler->sigma_pairs_folded) j["sigma_pairs_folded"] = true;
    }
    if (!v.prime_power_fixed_dims.empty()) {
        Json f = Json::array();
        for (const auto& [q, d] : v.prime_power_fixed_dims) f.push_back({{"prime_power", q}, {"fixed_dim", d}});
        j["prime_power_fixed_dims"] = f;
    }
    if (v.obstructing_prime_power) j["obstructing_prime_power"] = v.obstructing_prime_power;
    j["reason"] = v.reason;
    return j;
}

Json to_json(const TverbergReport& r) {
    return {{"family", std::string(1, family_letter(r.family))},
            {"n", r.n},
            {"N", r.big_n},
            {"d", r.d},
            {"verdict", verdict_name(r.verdict)},
            {"threshold", r.threshold},
            {"citation", r.citation},
            {"source", r.source},
            {"target", r.target},
            {"note", r.note}};
}

Json to_json(const CohehdnReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json j = {{"degree", row.degree},
                  {"bredon", row.bredon.to_string()},
                  {"ext", row.ext.to_string()},
                  {"isomorphic", row.isomorphic}};
        if (row.degree >= 2) {
            j["group_cohomology_dn"] = row.group_dn.to_string();
            j["group_cohomology_h_prev"] = row.group_h_prev.to_string();
        }
        j["vanishing_forced"] = row.vanishing_forced;
        j["vanishes"] = row.vanishes;
        rows.push_back(j);
    }
    return {{"n", r.n},
            {"skeleton", r.k},
            {"coefficients", r.coefficients},
            {"rows", rows},
            {"all_isomorphic", r.all_isomorphic()},
            {"vanishing_holds", r.vanishing_holds()}};
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(trim(part));
    return out;
}

std::size_t to_size(const std::string& digits, const std::string& context) {
    if (digits.empty() || digits.size() > 12 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidArgument("bad number '" + digits + "' in " + context);
    return std::stoul(digits);
}

IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!j.is_array() || j.size() != rows)
        throw InvalidArgument(what + ": expected " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw InvalidArgument(what + ": row " + std::to_string(i) + " needs " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& e = j[i][k];
            if (e.is_number_integer()) m(i, k) = static_cast<long>(e.get<std::int64_t>());
            else if (e.is_string()) m(i, k) = BigInt(e.get<std::string>());
            else throw InvalidArgument(what + ": entries must be integers");
        }
    }
    return m;
}

std::vector<std::string> words_from_json(const Json& j, const std::string& what) {
    if (j.is_string()) return split(j.get<std::string>(), ',');
    if (!j.is_array()) throw InvalidArgument(what + ": subgroup must be a list of generator words");
    std::vector<std::string> out;
    for (const auto& w : j) {
        if (!w.is_string()) throw InvalidArgument(what + ": generator words must be strings");
        out.push_back(w.get<std::string>());
    }
    return out;
}

}  // namespace

AbPresentation parse_abelian(const std::string& text) {
    const std::string t = trim(text);
    if (t == "0") return AbPresentation::zero();
    AbPresentation out = AbPresentation::zero();
    static const std::regex free_re(R"(Z(\^(\d+))?)");
    static const std::regex cyc_re(R"(Z/(\d+))");
    for (const auto& part : split(t, '+')) {
        std::smatch m;
        if (std::regex_match(part, m, cyc_re)) {
            const auto order = to_size(m[1], "'" + text + "'");
            if (order == 0) throw InvalidArgument("Z/0 is not allowed in '" + text + "'; write Z");
            out = direct_sum(out, AbPresentation::cyclic(static_cast<long>(order)));
        } else if (std::regex_match(part, m, free_re)) {
            out = direct_sum(out, AbPresentation::free(m[2].matched ? to_size(m[2], "'" + text + "'") : 1));
        } else {
            throw InvalidArgument("cannot parse abelian group '" + text + "' (expected e.g. Z, Z^2, Z/5, Z + Z/4)");
        }
    }
    return out;
}

AbPresentation abelian_from_json(const Json& j) {
    if (j.is_string()) return parse_abelian(j.get<std::string>());
    if (!j.is_object() || !j.contains("generators"))
        throw InvalidArgument("abelian group must be a string or {\"generators\", \"relations\"}");
    const auto g = j.at("generators").get<std::size_t>();
    if (!j.contains("relations")) return AbPresentation::free(g);
    const auto& rel = j.at("relations");
    const std::size_t cols = rel.empty() ? 0 : rel[0].size();
    return {g, matrix_from_json(rel, g, cols, "relations")};
}

Subgroup subgroup_from_words(const GroupPtr& g, const std::vector<std::string>& words) {
    std::vector<std::uint32_t> gens;
    for (const auto& w : words)
        if (!w.empty()) gens.push_back(g->parse_element(w));
    return Subgroup::generated_by(g, gens);
}

Subgroup parse_subgroup(const GroupPtr& g, const std::string& text) { return subgroup_from_words(g, split(text, ',')); }

CoefficientSystem parse_coefficients(const std::string& text, const LatticePtr& lattice) {
    const std::string t = trim(text);
    const auto& g = lattice->group();
    if (t == "zero") return CoefficientSystem::zero(lattice);
    if (t == "Z_H" || t.rfind("Z_H:", 0) == 0) {
        std::string words = t.size() > 4 ? t.substr(4) : "";
        if (words.empty()) {
            if (g->family() != GroupFamily::Dihedral) throw InvalidArgument("Z_H without a subgroup needs a dihedral group");
            words = "y";
        }
        auto m = CoefficientSystem::z_h(lattice, parse_subgroup(g, words));
        m.set_description("Z_H, H = <" + words + ">");
        return m;
    }
    return CoefficientSystem::constant(lattice, parse_abelian(t));
}

std::string coefficient_file_group(const Json& j) {
    if (!j.is_object() || !j.contains("group") || !j.at("group").is_string())
        throw InvalidArgument("coefficient file needs a \"group\" string such as \"D3\"");
    return j.at("group").get<std::string>();
}

CoefficientSystem coefficient_system_from_json(const Json& j, const LatticePtr& lattice) {
    const auto& g = lattice->group();
    if (parse_group(coefficient_file_group(j))->name() != g->name())
        throw InvalidArgument("coefficient file is for " + coefficient_file_group(j) + ", expected " + g->name());
    if (j.contains("constant")) {
        auto m = parse_coefficients(j.at("constant").get<std::string>(), lattice);
        if (j.contains("orbits") || j.contains("morphisms"))
            throw InvalidArgument("coefficient file: \"constant\" excludes \"orbits\" and \"morphisms\"");
        return m;
    }
    CoefficientSystem m(lattice);
    for (const auto& o : j.value("orbits", Json::array())) {
        const auto loc = lattice->locate(subgroup_from_words(g, words_from_json(o.at("subgroup"), "orbits")));
        if (m.in_scope(loc.class_id))
            throw InvalidArgument("coefficient file: two orbits share the conjugacy class " + std::to_string(loc.class_id));
        m.set_group(loc.class_id, abelian_from_json(o.at("value")));
    }
    for (const auto& f : j.value("morphisms", Json::array())) {
        const auto from = lattice->locate(subgroup_from_words(g, words_from_json(f.at("from"), "morphisms")));
        const auto to = lattice->locate(subgroup_from_words(g, words_from_json(f.at("to"), "morphisms")));
        const std::uint32_t elem = g->parse_element(f.value("element", std::string("e")));
        // Move the map G/H' -> G/K' to the class representatives.
        const auto rep_elem = g->mul(g->mul(g->inv(from.conjugator), elem), to.conjugator);
        const auto rows = m.value(from.class_id).generators;
        const auto cols = m.value(to.class_id).generators;
        m.set_morphism(from.class_id, to.class_id, rep_elem, matrix_from_json(f.at("matrix"), rows, cols, "morphism"));
    }
    m.validate();
    m.set_description(j.value("description", std::string("from file")));
    return m;
}

Budget parse_budget(const std::string& text, Budget defaults) {
    const std::string t = trim(text);
    if (t.empty()) return defaults;
    if (t.find('=') == std::string::npos) {
        defaults.cells = to_size(t, "EQOB_BUDGET");
        return defaults;
    }
    for (const auto& part : split(t, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw InvalidArgument("EQOB_BUDGET: expected key=value, got '" + part + "'");
        const auto key = trim(part.substr(0, eq));
        const auto value = to_size(trim(part.substr(eq + 1)), "EQOB_BUDGET");
        if (key == "cells") defaults.cells = value;
        else if (key == "depth") defaults.depth = value;
        else throw InvalidArgument("EQOB_BUDGET: unknown key '" + key + "' (expected cells or depth)");
    }
    return defaults;
}

}  // namespace eqob
