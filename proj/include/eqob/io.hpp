#pragma once

#include "eqob/bredon.hpp"
#include "eqob/tverberg.hpp"

#include <json.hpp>

#include <string>

namespace eqob {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "eqob/1";

/// Integer when it fits in 64 bits, decimal string otherwise.
Json to_json(const BigInt& v);
/// {"rank": r, "torsion": [...]}
Json to_json(const AbGroupNF& g);
/// {"groups": [{"degree", "rank", "torsion", "trusted", "text"}], "trusted_range", "provenance"}
Json to_json(const CohomologyResult& r);
Json to_json(const RealRep& v);
Json to_json(const EulerClassValue& e);
Json to_json(const DichotomyVerdict& v);
Json to_json(const TverbergReport& r);
Json to_json(const CohehdnReport& r);

/// "0", "Z", "Z^3", "Z/5", "Z^2 + Z/4 + Z/4".
AbPresentation parse_abelian(const std::string& text);
/// A string as above or {"generators": g, "relations": [[row], ...]} with g rows.
AbPresentation abelian_from_json(const Json& j);

/// Subgroup generated by element words; the empty list gives the trivial group.
Subgroup subgroup_from_words(const GroupPtr& g, const std::vector<std::string>& words);
/// "e", "y", "x,y" (comma separated words).
Subgroup parse_subgroup(const GroupPtr& g, const std::string& text);

/// "zero", "Z_H" (H = <y> on D_n), "Z_H:<words>", or a constant group as in
/// parse_abelian.
CoefficientSystem parse_coefficients(const std::string& text, const LatticePtr& lattice);

/// {"group": "D3", "constant": "Z/5"} or
/// {"group": "D3", "orbits": [{"subgroup": ["y"], "value": "Z"}, ...],
///  "morphisms": [{"from": [], "to": ["y"], "element": "x", "matrix": [[1]]}, ...]}.
/// Subgroups may be any member of their conjugacy class. The result is
/// validated. The group must match the lattice's group.
CoefficientSystem coefficient_system_from_json(const Json& j, const LatticePtr& lattice);
/// The "group" literal of a coefficient file.
std::string coefficient_file_group(const Json& j);

struct Budget {
    std::size_t cells = kDefaultCellBudget;
    std::size_t depth = 6;
};

/// "cells=N,depth=M" (either part optional) or a plain integer for cells.
Budget parse_budget(const std::string& text, Budget defaults = {});

}  // namespace eqob
