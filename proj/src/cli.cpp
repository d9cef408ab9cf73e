#include "eqob/cli.hpp"

#include "eqob/errors.hpp"
#include "eqob/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

namespace eqob {

namespace {

class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os) const {
        std::vector<std::size_t> width;
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (width.size() <= i) width.push_back(0);
                width[i] = std::max(width[i], r[i].size());
            }
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                line += r[i];
                if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
            }
            os << line << "\n";
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
    bool json = false;
    bool table = false;
    std::size_t max_cells = 0;
    std::size_t max_depth = 0;

    std::string group;
    std::string gset = "regular";
    std::size_t skeleton = 0;
    std::string coeff;
    std::string coeff_file;
    std::string module = "trivial";
    std::string method;
    std::string rep;
    std::string subgroup;
    std::string family;
    std::size_t n = 0;
    std::size_t big_n = 0;
    std::size_t d = 0;
    int max_i = -1;
    bool homology = false;
};

GSet make_gset(const GroupPtr& g, const std::string& spec) {
    if (spec == "regular") return left_regular_gset(g);
    if (spec == "point") return coset_gset(g, Subgroup::whole(g));
    if (spec.rfind("cosets:", 0) == 0) return coset_gset(g, parse_subgroup(g, spec.substr(7)));
    throw InvalidArgument("--gset must be regular, point or cosets:<words>, got '" + spec + "'");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("--coeff-file: cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidArgument("--coeff-file: " + std::string(e.what()));
    }
}

CoefficientSystem load_coefficients(const Options& o, const LatticePtr& lattice, const std::string& fallback) {
    if (!o.coeff_file.empty()) {
        if (!o.coeff.empty()) throw InvalidArgument("--coeff and --coeff-file are mutually exclusive");
        return coefficient_system_from_json(read_json_file(o.coeff_file), lattice);
    }
    return parse_coefficients(o.coeff.empty() ? fallback : o.coeff, lattice);
}

RepFamily rep_family(const GroupPtr& g) {
    switch (g->family()) {
        case GroupFamily::Cyclic: return RepFamily::C;
        case GroupFamily::Dihedral: return RepFamily::D;
        case GroupFamily::ElemAbProduct: return RepFamily::L;
        case GroupFamily::Generic: break;
    }
    throw InvalidArgument("--group: no representation family for " + g->name());
}

RealRep load_rep(const Options& o, GroupPtr& g) {
    if (o.group.empty()) throw InvalidArgument("--group is required");
    if (o.rep.empty()) throw InvalidArgument("--rep is required");
    g = parse_group(o.group);
    return parse_rep(rep_family(g), g->parameter(), o.rep);
}

Json header(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

void print_cohomology_table(std::ostream& out, const CohomologyResult& r) {
    Table t({"degree", "group", "trusted"});
    for (const auto& [deg, g] : r.groups) t.add({std::to_string(deg), g.to_string(), yes_no(r.trusted(deg))});
    t.print(out);
    out << r.provenance << "\n";
}

GModule make_module(const Options& o, const GroupPtr& g, const LatticePtr& lattice) {
    if (!o.coeff_file.empty()) {
        if (o.module != "trivial") throw InvalidArgument("--module cannot be combined with --coeff-file");
        return load_coefficients(o, lattice, "Z").module_at_free_orbit();
    }
    const auto a = parse_abelian(o.coeff.empty() ? "Z" : o.coeff);
    if (o.module == "trivial") return GModule::trivial(g, a);
    if (o.module == "sign") {
        std::vector<IntMatrix> images;
        const auto minus = IntMatrix::scalar(a.generators, -1);
        const auto one = IntMatrix::identity(a.generators);
        if (g->family() == GroupFamily::Dihedral) images = {one, minus};
        else if (g->family() == GroupFamily::Cyclic && g->order() % 2 == 0) images = {minus};
        else throw InvalidArgument("--module sign needs D<n> or C<n> with n even");
        return GModule::from_generators(g, a, images);
    }
    throw InvalidArgument("--module must be trivial or sign, got '" + o.module + "'");
}

int cmd_cohomology(const Options& o, const Budget& b, std::ostream& out) {
    if (o.skeleton == 0) throw InvalidArgument("--skeleton must be at least 1");
    const auto g = parse_group(o.group);
    const auto lattice = subgroups(g);
    const auto x = orbit_join(make_gset(g, o.gset), o.skeleton, b.cells, lattice);
    const auto coeff = load_coefficients(o, lattice, "Z");
    const int hi = o.max_i >= 0 ? o.max_i : std::max(0, x.dimension() - 1);
    const auto r = bredon_cohomology(x, coeff, 0, hi);
    if (o.table) {
        out << "H^*_" << g->name() << "(" << o.gset << " join, k=" << o.skeleton << "; " << coeff.describe() << ")\n";
        print_cohomology_table(out, r);
        return 0;
    }
    Json j = header("cohomology");
    j["group"] = g->name();
    j["gset"] = o.gset;
    j["skeleton"] = o.skeleton;
    j["coefficients"] = coeff.describe();
    j["cells"] = x.underlying().total_cells();
    j["cohomology"] = to_json(r);
    out << j.dump() << "\n";
    return 0;
}

int cmd_group_cohomology(const Options& o, const Budget& b, std::ostream& out) {
    const auto g = parse_group(o.group);
    const auto lattice = subgroups(g);
    const auto m = make_module(o, g, lattice);
    const int hi = o.max_i >= 0 ? o.max_i : 4;
    std::vector<GroupCohomologyMethod> methods;
    if (o.method == "all") {
        methods = {GroupCohomologyMethod::Milnor, GroupCohomologyMethod::Resolution};
        if (g->family() == GroupFamily::Cyclic) methods.push_back(GroupCohomologyMethod::Periodic);
    } else if (o.method.empty()) {
        methods = {g->family() == GroupFamily::Cyclic ? GroupCohomologyMethod::Periodic
                                                       : GroupCohomologyMethod::Resolution};
    } else {
        methods = {method_from_name(o.method)};
    }
    std::vector<std::pair<GroupCohomologyMethod, CohomologyResult>> results;
    for (auto meth : methods) results.emplace_back(meth, group_cohomology(m, 0, hi, meth, b.cells, b.depth));
    bool agree = true;
    for (const auto& [meth, r] : results) agree = agree && r.groups == results.front().second.groups;
    if (o.table) {
        for (const auto& [meth, r] : results) {
            out << "H^*(" << g->name() << "; " << m.underlying().normal_form().to_string() << ", " << o.module
                << ") by " << method_name(meth) << "\n";
            print_cohomology_table(out, r);
        }
        if (results.size() > 1) out << "methods agree: " << yes_no(agree) << "\n";
        return 0;
    }
    Json j = header("group-cohomology");
    j["group"] = g->name();
    j["module"] = {{"underlying", m.underlying().normal_form().to_string()},
                   {"action", o.coeff_file.empty() ? o.module : "from file"}};
    Json res = Json::object();
    for (const auto& [meth, r] : results) res[method_name(meth)] = to_json(r);
    j["results"] = res;
    if (results.size() > 1) j["methods_agree"] = agree;
    out << j.dump() << "\n";
    return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
    GroupPtr g;
    const auto v = load_rep(o, g);
    const auto verdict = classify(v);
    if (o.table) {
        Table t({"field", "value"});
        t.add({"group", g->name()});
        t.add({"rep", v.to_string()});
        t.add({"verdict", verdict_name(verdict.tag)});
        if (!verdict.theorem.empty()) t.add({"theorem", verdict.theorem});
        if (verdict.euler) t.add({"euler", verdict.euler->to_string()});
        for (const auto& [q, dim] : verdict.prime_power_fixed_dims)
            t.add({"dim V^C_" + std::to_string(q), std::to_string(dim)});
        t.add({"reason", verdict.reason});
        t.print(out);
        return 0;
    }
    Json j = header("classify");
    j["group"] = g->name();
    j["rep"] = to_json(v);
    j.update(to_json(verdict));
    out << j.dump() << "\n";
    return 0;
}

int cmd_tverberg(const Options& o, std::ostream& out) {
    RepFamily f;
    std::size_t n;
    if (!o.group.empty()) {
        if (!o.family.empty() || o.n) throw InvalidArgument("--group excludes --family and --n");
        const auto g = parse_group(o.group);
        f = family_from_letter(o.group[0]);
        n = g->parameter();
    } else {
        if (o.family.size() != 1 || !o.n) throw InvalidArgument("tverberg needs --group, or --family with --n");
        f = family_from_letter(o.family[0]);
        n = o.n;
    }
    if (!o.big_n) throw InvalidArgument("--N is required");
    if (!o.d) throw InvalidArgument("--d is required");
    const auto r = tverberg_report(f, n, o.big_n, o.d);
    if (o.table) {
        Table t({"field", "value"});
        const Json body = to_json(r);
        for (const auto& [k, v] : body.items()) t.add({k, v.is_string() ? v.get<std::string>() : v.dump()});
        t.print(out);
        return 0;
    }
    Json j = header("tverberg");
    j.update(to_json(r));
    out << j.dump() << "\n";
    return 0;
}

int cmd_fixed_points(const Options& o, std::ostream& out) {
    GroupPtr g;
    const auto v = load_rep(o, g);
    const auto lattice = subgroups(g);
    std::vector<Subgroup> list;
    if (!o.subgroup.empty()) list.push_back(parse_subgroup(g, o.subgroup));
    else
        for (std::size_t c = 0; c < lattice->class_count(); ++c) list.push_back(lattice->representative(static_cast<int>(c)));
    Json rows = Json::array();
    Table t({"class", "order", "generated by", "fixed dim"});
    for (const auto& s : list) {
        const auto loc = lattice->locate(s);
        std::string gens;
        for (auto e : s.elements())
            if (g->element_order(e) == s.order() || s.order() == 1) {
                gens = g->element_label(e);
                break;
            }
        if (gens.empty()) gens = "non-cyclic";
        const auto dim = fixed_dim(v, s);
        rows.push_back({{"class", loc.class_id}, {"order", s.order()}, {"generator", gens}, {"fixed_dim", dim}});
        t.add({std::to_string(loc.class_id), std::to_string(s.order()), gens, std::to_string(dim)});
    }
    if (o.table) {
        out << "V = " << v.to_string() << " on " << g->name() << ", dim " << v.dim() << "\n";
        t.print(out);
        return 0;
    }
    Json j = header("fixed-points");
    j["group"] = g->name();
    j["rep"] = to_json(v);
    j["fixed_point_free"] = is_fixed_point_free(v);
    j["subgroups"] = rows;
    if (v.family() != RepFamily::L) {
        const auto flag = sullivan_flag(v);
        j["sullivan_flag"] = flag ? Json(*flag) : Json(nullptr);
    }
    out << j.dump() << "\n";
    return 0;
}

int cmd_euler(const Options& o, std::ostream& out) {
    GroupPtr g;
    const auto v = load_rep(o, g);
    const auto e = euler_class(v);
    if (o.table) {
        Table t({"field", "value"});
        t.add({"rep", v.to_string()});
        t.add({"euler", e.to_string()});
        t.add({"nonzero", yes_no(!e.is_zero())});
        t.add({"sigma pairs folded", yes_no(e.sigma_pairs_folded)});
        t.print(out);
        return 0;
    }
    Json j = header("euler");
    j["group"] = g->name();
    j["rep"] = v.to_string();
    j["euler"] = to_json(e);
    j["nonzero"] = !e.is_zero();
    j["sigma_pairs_folded"] = e.sigma_pairs_folded;
    out << j.dump() << "\n";
    return 0;
}

int cmd_verify_cohehdn(const Options& o, const Budget& b, std::ostream& out) {
    if (!o.n) throw InvalidArgument("--n is required");
    if (o.n % 2 == 0) throw InvalidArgument("--n must be odd, got " + std::to_string(o.n));
    const auto g = dihedral_group(o.n);
    const auto lattice = subgroups(g);
    const auto m = load_coefficients(o, lattice, "Z");
    const auto r = cohehdn_verify(o.n, m, o.max_i >= 0 ? o.max_i : 4, b.cells, b.depth);
    if (o.table) {
        out << "D_" << o.n << ", coefficients " << r.coefficients << ", skeleton k=" << r.k << "\n";
        Table t({"i", "H^i_B", "Ext^{i-1}(K,M^e)", "iso", "H^i(D_n)", "H^{i-1}(H)", "forced", "vanishes"});
        for (const auto& row : r.rows)
            t.add({std::to_string(row.degree), row.bredon.to_string(), row.ext.to_string(), yes_no(row.isomorphic),
                   row.degree >= 2 ? row.group_dn.to_string() : "-", row.degree >= 2 ? row.group_h_prev.to_string() : "-",
                   yes_no(row.vanishing_forced), yes_no(row.vanishes)});
        t.print(out);
        out << "all isomorphic: " << yes_no(r.all_isomorphic()) << ", vanishing holds: " << yes_no(r.vanishing_holds())
            << "\n";
        return 0;
    }
    Json j = header("verify-cohehdn");
    j.update(to_json(r));
    out << j.dump() << "\n";
    return 0;
}

int cmd_join_info(const Options& o, const Budget& b, std::ostream& out) {
    if (o.skeleton == 0) throw InvalidArgument("--skeleton must be at least 1");
    const auto g = parse_group(o.group);
    const auto lattice = subgroups(g);
    const auto gs = make_gset(g, o.gset);
    const auto x = orbit_join(gs, o.skeleton, b.cells, lattice);
    Json dims = Json::array();
    Table t({"dim", "simplices", "orbits", "isotropy orders"});
    for (int d = 0; d <= x.dimension(); ++d) {
        std::map<std::size_t, std::size_t> census;
        for (const auto& orb : x.orbits(d)) ++census[lattice->representative(orb.class_id).order()];
        Json c = Json::object();
        std::string text;
        for (const auto& [ord, cnt] : census) {
            c[std::to_string(ord)] = cnt;
            text += (text.empty() ? "" : " ") + std::to_string(ord) + ":" + std::to_string(cnt);
        }
        dims.push_back({{"dim", d}, {"simplices", x.underlying().count(d)}, {"orbits", x.orbits(d).size()},
                        {"isotropy_orders", c}});
        t.add({std::to_string(d), std::to_string(x.underlying().count(d)), std::to_string(x.orbits(d).size()), text});
    }
    Json fixed = Json::array();
    for (std::size_t c = 0; c < lattice->class_count(); ++c) {
        const auto& k = lattice->representative(static_cast<int>(c));
        const auto f = fixed_subcomplex(x, k);
        fixed.push_back({{"class", c}, {"order", k.order()}, {"fixed_cells", f.total_cells()}});
    }
    std::vector<AbGroupNF> reduced;
    if (o.homology) reduced = reduced_homology(chain_complex(x.underlying()));
    if (o.table) {
        out << o.gset << " " << g->name() << "-set, " << gs.size() << " points, k=" << o.skeleton << ", "
            << x.underlying().total_cells() << " simplices\n";
        t.print(out);
        for (std::size_t i = 1; i < reduced.size(); ++i)
            out << "reduced H_" << i - 1 << " = " << reduced[i].to_string() << "\n";
        return 0;
    }
    Json j = header("join-info");
    j["group"] = g->name();
    j["gset"] = o.gset;
    j["points"] = gs.size();
    j["skeleton"] = o.skeleton;
    j["cells"] = x.underlying().total_cells();
    j["dimensions"] = dims;
    j["fixed_subcomplexes"] = fixed;
    if (o.homology) {
        // Degrees 0 .. dim; the degree -1 entry is dropped.
        Json h = Json::array();
        for (std::size_t i = 1; i < reduced.size(); ++i) h.push_back(to_json(reduced[i]));
        j["reduced_homology"] = h;
    }
    out << j.dump() << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* env_budget) {
    CLI::App app{"eqob: equivariant obstruction groups, Borsuk-Ulam dichotomies and Tverberg-type existence reports"};
    app.name("eqob");
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    auto* json_flag = app.add_flag("--json", o.json, "JSON output (default)");
    app.add_flag("--table", o.table, "aligned table output")->excludes(json_flag);
    auto* cells_opt = app.add_option("--max-cells", o.max_cells, "simplex budget for joins (default 1000000)");
    auto* depth_opt = app.add_option("--max-depth", o.max_depth, "resolution depth budget (default 6)");

    auto group = [&](CLI::App* s, bool required) {
        auto* opt = s->add_option("--group", o.group, "group literal C<n>, D<n> or L<n>");
        if (required) opt->required();
    };
    auto* coh = app.add_subcommand("cohomology", "Bredon cohomology of a join of a G-set");
    group(coh, true);
    coh->add_option("--gset", o.gset, "regular, point or cosets:<words> (default regular)");
    coh->add_option("--skeleton", o.skeleton, "number of join factors k")->required();
    coh->add_option("--coeff", o.coeff, "Z, Z/m, Z^r, zero, Z_H or Z_H:<words> (default Z)");
    coh->add_option("--coeff-file", o.coeff_file, "coefficient system as JSON");
    coh->add_option("--max-i", o.max_i, "highest degree (default k-1)");

    auto* gc = app.add_subcommand("group-cohomology", "cohomology of a finite group");
    group(gc, true);
    gc->add_option("--coeff", o.coeff, "underlying abelian group (default Z)");
    gc->add_option("--coeff-file", o.coeff_file, "coefficient system as JSON; its free orbit value is used");
    gc->add_option("--module", o.module, "trivial or sign action (default trivial)");
    gc->add_option("--method", o.method, "milnor, periodic, resolution or all");
    gc->add_option("--max-i", o.max_i, "highest degree (default 4)");

    auto* cl = app.add_subcommand("classify", "Borsuk-Ulam / anti-Borsuk-Ulam classification");
    group(cl, true);
    cl->add_option("--rep", o.rep, "representation, e.g. \"2*xi^3 + sigma\"")->required();

    auto* tv = app.add_subcommand("tverberg", "existence report for Tverberg-type equivariant maps");
    group(tv, false);
    tv->add_option("--family", o.family, "C, D or L (with --n)");
    tv->add_option("--n", o.n, "number of points");
    tv->add_option("--N", o.big_n, "join length parameter N")->required();
    tv->add_option("--d", o.d, "dimension d")->required();

    auto* fp = app.add_subcommand("fixed-points", "fixed dimensions of a representation");
    group(fp, true);
    fp->add_option("--rep", o.rep, "representation")->required();
    fp->add_option("--subgroup", o.subgroup, "comma separated generator words (default every class)");

    auto* eu = app.add_subcommand("euler", "Euler class of a C_n representation");
    group(eu, true);
    eu->add_option("--rep", o.rep, "representation")->required();

    auto* vc = app.add_subcommand("verify-cohehdn", "compare Bredon cohomology of E_H D_n skeleta with Ext");
    vc->add_option("--n", o.n, "odd n")->required();
    vc->add_option("--coeff", o.coeff, "constant coefficients, zero or Z_H (default Z)");
    vc->add_option("--coeff-file", o.coeff_file, "coefficient system as JSON");
    vc->add_option("--max-i", o.max_i, "highest degree (default 4)");

    auto* ji = app.add_subcommand("join-info", "cell, orbit and fixed point census of a join");
    group(ji, true);
    ji->add_option("--gset", o.gset, "regular, point or cosets:<words> (default regular)");
    ji->add_option("--skeleton", o.skeleton, "number of join factors k")->required();
    ji->add_flag("--homology", o.homology, "also compute reduced homology");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        Budget b = parse_budget(env_budget ? env_budget : "");
        if (cells_opt->count()) b.cells = o.max_cells;
        if (depth_opt->count()) b.depth = o.max_depth;
        if (coh->parsed()) return cmd_cohomology(o, b, out);
        if (gc->parsed()) return cmd_group_cohomology(o, b, out);
        if (cl->parsed()) return cmd_classify(o, out);
        if (tv->parsed()) return cmd_tverberg(o, out);
        if (fp->parsed()) return cmd_fixed_points(o, out);
        if (eu->parsed()) return cmd_euler(o, out);
        if (vc->parsed()) return cmd_verify_cohehdn(o, b, out);
        if (ji->parsed()) return cmd_join_info(o, b, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const ConsistencyError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    err << "error: no command given\n";
    return 2;
}

}  // namespace eqob
