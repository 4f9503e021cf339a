#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "e6/algebra.hpp"
#include "e6/jordan.hpp"
#include "e6/rootweight.hpp"
#include "e6/subalgebra.hpp"

namespace e6 {

using Json = nlohmann::json;  // std::map-backed: keys come out sorted

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const Octonion& x);
Octonion octonion_from_json(const Json& j);
Json to_json(const JordanElement& x);
JordanElement jordan_from_json(const Json& j);
Json to_json(const SparseVec& v);
Json to_json(const Signature& s);

// {"basis":[labels], "constants":[{"i","j","k","v"}]} over i < j.
Json to_json(const StructureTable& t);
StructureTable table_from_json(const Json& j);
void write_csv(std::ostream& os, const StructureTable& t);

// Reads the table from $E6KIT_CACHE when it exists, otherwise builds it and
// writes it there. Without the variable this is structure_constants().
StructureTable cached_structure_constants(int jobs = 0);

Json to_json(const SubalgebraReport& r);
Json to_json(const StabilizerReport& r);
Json to_json(const GellMannReport& r);

Json to_json(const WeightDiagram& w, const SliceResult* slices = nullptr);
void write_csv(std::ostream& os, const WeightDiagram& w);

}  // namespace e6
