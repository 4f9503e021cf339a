#include "e6/serialize.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace e6 {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

Json to_json(const Octonion& x) {
  Json a = Json::array();
  for (int k = 0; k < 8; ++k) a.push_back(to_json(x[k]));
  return a;
}

Octonion octonion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 8) throw std::invalid_argument("octonion needs 8 coefficients");
  Octonion x;
  for (int k = 0; k < 8; ++k) x[k] = rational_from_json(j[k]);
  return x;
}

Json to_json(const JordanElement& x) {
  return {{"p", to_json(x.p)}, {"m", to_json(x.m)}, {"n", to_json(x.n)},
          {"a", to_json(x.a)}, {"b", to_json(x.b)}, {"c", to_json(x.c)}};
}

JordanElement jordan_from_json(const Json& j) {
  JordanElement x;
  x.p = rational_from_json(j.at("p"));
  x.m = rational_from_json(j.at("m"));
  x.n = rational_from_json(j.at("n"));
  x.a = octonion_from_json(j.at("a"));
  x.b = octonion_from_json(j.at("b"));
  x.c = octonion_from_json(j.at("c"));
  return x;
}

Json to_json(const SparseVec& v) {
  Json o = Json::object();
  for (const auto& [k, q] : v) o[std::to_string(k)] = to_string(q);
  return o;
}

Json to_json(const Signature& s) { return {{"minus", s.minus}, {"plus", s.plus}, {"zero", s.zero}}; }

Json to_json(const StructureTable& t) {
  Json basis = Json::array();
  for (const auto& g : t.basis.labels) basis.push_back(to_string(g));
  Json constants = Json::array();
  const int n = t.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (const auto& [k, v] : t.upper[StructureTable::pair_index(i, j, n)])
        constants.push_back({{"i", i}, {"j", j}, {"k", k}, {"v", to_string(v)}});
  return {{"basis", basis}, {"constants", constants}};
}

StructureTable table_from_json(const Json& j) {
  StructureTable t;
  for (const auto& s : j.at("basis")) t.basis.labels.push_back(parse_label(s.get<std::string>()));
  const int n = t.dim();
  t.upper.assign(static_cast<std::size_t>(n) * (n - 1) / 2, {});
  for (const auto& c : j.at("constants")) {
    const int i = c.at("i"), jj = c.at("j"), k = c.at("k");
    if (i < 0 || jj <= i || jj >= n || k < 0 || k >= n) throw std::invalid_argument("constant index out of range");
    auto& row = t.upper[StructureTable::pair_index(i, jj, n)];
    row.emplace_back(k, rational_from_json(c.at("v")));
  }
  for (auto& row : t.upper)
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return t;
}

void write_csv(std::ostream& os, const StructureTable& t) {
  os << "i,j,k,bi,bj,bk,c\n";
  const int n = t.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (const auto& [k, v] : t.upper[StructureTable::pair_index(i, j, n)])
        os << i << ',' << j << ',' << k << ",\"" << to_string(t.basis.labels[i]) << "\",\""
           << to_string(t.basis.labels[j]) << "\",\"" << to_string(t.basis.labels[k]) << "\"," << to_string(v)
           << '\n';
}

StructureTable cached_structure_constants(int jobs) {
  const char* path = std::getenv("E6KIT_CACHE");
  if (!path || !*path) return structure_constants(preferred_basis(), jobs);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    StructureTable t = table_from_json(Json::parse(in));
    if (t.basis.labels == preferred_basis().labels) return t;
  }
  StructureTable t = structure_constants(preferred_basis(), jobs);
  std::ofstream out(path);
  out << to_json(t).dump() << '\n';
  return t;
}

Json to_json(const SubalgebraReport& r) {
  return {{"description", r.description}, {"indices", r.indices},   {"labels", r.labels},
          {"dim", r.dim},                 {"boosts", r.boosts},     {"signature", to_json(r.signature)},
          {"twisted", to_json(r.twisted)}, {"rank", r.rank},        {"names", r.names},
          {"notes", r.notes}};
}

Json to_json(const StabilizerReport& r) {
  auto part = [&](const std::vector<std::string>& names, const std::vector<bool>* nulls) {
    Json a = Json::array();
    for (std::size_t k = 0; k < names.size(); ++k) {
      Json e = {{"name", names[k]}};
      if (nulls) e["killing_null"] = bool((*nulls)[k]);
      a.push_back(e);
    }
    return a;
  };
  return {{"dim", r.kernel.size()},
          {"so81", part(r.so81_names, nullptr)},
          {"b2", part(r.b2_names, &r.b2_null)},
          {"b3", part(r.b3_names, &r.b3_null)},
          {"bl", part(r.bl_names, &r.bl_null)},
          {"spans", r.spans},
          {"abelian", r.abelian},
          {"ideal", r.ideal},
          {"so81_closed", r.so81_closed},
          {"so81_signature", to_json(r.so81_signature)}};
}

Json to_json(const GellMannReport& r) {
  Json labels = Json::array();
  for (const auto& g : r.labels) labels.push_back(to_string(g));
  Json mism = Json::array();
  for (const auto& m : r.mismatches)
    mism.push_back({{"a", m.a + 1}, {"b", m.b + 1}, {"ours", to_json(m.ours)}, {"oracle", to_json(m.oracle)}});
  return {{"labels", labels}, {"ok", r.ok()}, {"mismatches", mism}};
}

namespace {

Json root_strings(const RootCoords& r) {
  Json a = Json::array();
  for (const auto& q : r) a.push_back(to_string(q));
  return a;
}

}  // namespace

Json to_json(const WeightDiagram& w, const SliceResult* slices) {
  Json j;
  j["algebra"] = w.dynkin.name;
  j["rank"] = w.dynkin.rank;
  j["simple_roots"] = simple_roots(w.dynkin);
  j["highest"] = w.highest;
  Json weights = Json::array();
  for (const auto& wt : w.weights)
    weights.push_back({{"mark", wt.mark}, {"coords", wt.coords}, {"root_coords", root_strings(wt.root)}});
  j["weights"] = weights;
  Json edges = Json::array();
  for (const auto& e : w.edges)
    edges.push_back({{"from", w.weights[e.from].mark}, {"to", w.weights[e.to].mark}, {"root", w.positive_roots[e.root]}});
  j["edges"] = edges;
  if (slices) {
    Json s = Json::array();
    for (const auto& sl : slices->slices) {
      Json marks = Json::array();
      for (int v : sl.vertices) marks.push_back(w.weights[v].mark);
      s.push_back({{"level", to_string(sl.level)}, {"vertices", marks}, {"edges", sl.edges.size()}});
    }
    j["slices"] = {{"normal", root_strings(slices->normal)}, {"levels", s}, {"struts", slices->struts.size()}};
  }
  return j;
}

void write_csv(std::ostream& os, const WeightDiagram& w) {
  const int n = w.dynkin.rank;
  for (int i = 0; i < n; ++i) os << "m" << i + 1 << ',';
  for (int i = 0; i < n; ++i) os << "x" << i + 1 << (i + 1 < n ? "," : "\n");
  for (const auto& wt : w.weights) {
    for (int m : wt.mark) os << m << ',';
    for (int i = 0; i < n; ++i) {
      Json v = wt.coords[i];
      os << v.dump() << (i + 1 < n ? "," : "\n");
    }
  }
}

}  // namespace e6
