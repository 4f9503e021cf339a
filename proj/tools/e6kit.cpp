// e6kit: batch front end for the octonionic E6 toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "e6/algebra.hpp"
#include "e6/group.hpp"
#include "e6/rootweight.hpp"
#include "e6/serialize.hpp"
#include "e6/subalgebra.hpp"

using namespace e6;

namespace {

struct Globals {
  std::string out;
  std::uint64_t seed = 0;
  int jobs = 0;
  double tol = 1e-9;
  std::string format = "json";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sig_string(const Signature& s) {
  std::string r = "(" + std::to_string(s.minus) + "," + std::to_string(s.plus);
  if (s.zero) r += "," + std::to_string(s.zero);
  return r + ")";
}

void emit_text(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw UsageError("cannot write " + g.out);
  f << text;
}

void emit(const Globals& g, const Json& j) {
  if (g.format != "json") throw UsageError("this verb only writes json");
  emit_text(g, j.dump(2) + "\n");
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<InvolutionKind> parse_kinds(const std::string& s) {
  std::vector<InvolutionKind> out;
  for (const auto& part : split(s))
    if (part != "id") out.push_back(parse_involution_kind(part));
  return out;
}

// Collects PASS/FAIL lines; the first failure is kept for the exit message.
class Checker {
 public:
  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << "\n";
    if (!ok && first_failure_.empty()) first_failure_ = name + (detail.empty() ? "" : ": " + detail);
  }
  void info(const std::string& line) { std::cout << "     " << line << "\n"; }
  int finish() const {
    if (first_failure_.empty()) return 0;
    std::cerr << "first failing identity: " << first_failure_ << "\n";
    return 1;
  }

 private:
  std::string first_failure_;
};

void suite_dependencies(Checker& c) {
  const auto rep = check_dependencies();
  int sums = 0, rels = 0;
  for (const auto& id : rep.sums) {
    if (!id.holds) c.check(id.name, false);
    sums += id.holds;
  }
  for (const auto& id : rep.relations) {
    if (!id.holds) c.check(id.name, false);
    rels += id.holds;
  }
  c.check("type sums", sums == static_cast<int>(rep.sums.size()), std::to_string(sums) + " confirmed");
  c.check("linear relations", rels == static_cast<int>(rep.relations.size()), std::to_string(rels) + " confirmed");
  c.check(rep.type_independence.name, rep.type_independence.holds);
  c.check(rep.rank.name, rep.rank.holds);
  std::cout << "confirmed " << sums << "+" << rels << "+" << int(rep.type_independence.holds) << "+"
            << int(rep.rank.holds) << " identities\n";
  const auto red = reduce_basis();
  c.check("dependency certificates", red.certificates.size() == 57, std::to_string(red.certificates.size()));
}

void suite_identities(Checker& c, const StructureTable& t, const Globals& g) {
  auto describe = [](const IdentityCheck& r) {
    std::string s = std::to_string(r.checked) + " checked";
    if (!r.ok)
      s += ", counterexample (" + std::to_string(r.first_failure[0]) + "," + std::to_string(r.first_failure[1]) +
           (r.first_failure[2] >= 0 ? "," + std::to_string(r.first_failure[2]) : "") + ")";
    return s;
  };
  const auto a = check_antisymmetry(t, g.jobs);
  c.check("antisymmetry", a.ok, describe(a));
  const auto j = check_jacobi(t, g.jobs);
  c.check("jacobi", j.ok, describe(j));
}

void suite_killing(Checker& c, const StructureTable& t) {
  const SubalgebraContext ctx(t);
  const auto full = signature(ctx.killing);
  c.check("signature sl(3,O)", full == Signature{52, 26, 0}, sig_string(full));
  c.check("Cartan criterion", !is_zero(determinant(ctx.killing)));
  std::vector<int> rot, t1;
  for (int i = 0; i < t.dim(); ++i) {
    if (!ctx.flags.is_boost[i]) rot.push_back(i);
    if (ctx.flags.is_type1[i]) t1.push_back(i);
  }
  auto restricted = [&](const std::vector<int>& idx) {
    std::vector<SparseVec> rows;
    for (int i : idx) rows.push_back(unit_vector(i));
    return signature(restrict_form(ctx.killing, rows));
  };
  c.check("signature rotations", restricted(rot) == Signature{52, 0, 0}, sig_string(restricted(rot)));
  c.check("signature T1", restricted(t1) == Signature{36, 10, 0}, sig_string(restricted(t1)));
  std::vector<int> so91;
  for (int i : t1)
    if (t.basis.labels[i] != GeneratorLabel{Kind::Btz, Unit::one, 2}) so91.push_back(i);
  const auto r = report_for(ctx, so91, "so(9,1)");
  c.check("so(9,1) type-1 subspace", r.dim == 45 && r.signature == Signature{36, 9, 0}, sig_string(r.signature));
}

void suite_casimirs(Checker& c, const StructureTable& t, const Globals& g) {
  const auto idx = casimir_indices(t.basis);
  bool commute = true;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) commute = commute && t.bracket(idx[a], idx[b]).empty();
  c.check("Casimir sextet commutes", commute);
  std::vector<SparseVec> all;
  for (int i = 0; i < t.dim(); ++i) all.push_back(unit_vector(i));
  const int r = rank_estimate(t, all, g.seed);
  c.check("rank estimate", r == 6, std::to_string(r));
  const DenseMatrix K = killing(t);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (!is_zero(K(idx[a], idx[b])))
        c.info("not B-orthogonal: " + to_string(t.basis.labels[idx[a]]) + ", " + to_string(t.basis.labels[idx[b]]) +
               " -> " + to_string(K(idx[a], idx[b])));
}

void suite_det(Checker& c, const Globals& g) {
  const auto r = det_preservation(g.seed, 20, {-0.9, -0.3, 0.3, 0.9});
  std::ostringstream os;
  os << "worst " << r.worst << " at " << to_string(r.worst_label) << ", alpha " << r.worst_alpha << " over "
     << r.samples << " samples";
  c.check("determinant preserved", r.worst < g.tol, os.str());
}

void suite_automorphisms(Checker& c, const StructureTable& t) {
  const SubalgebraContext ctx(t);
  std::vector<int> all(t.dim());
  for (int i = 0; i < t.dim(); ++i) all[i] = i;
  for (const auto& row : known_involutions()) {
    Involution phi;
    try {
      phi = make_involution(t, ctx.flags, row.factors);
    } catch (const NotAutomorphism& e) {
      c.check("automorphism " + Involution{row.factors, {}}.name(), false, e.what());
      continue;
    }
    const auto fixed = fixed_subalgebra(ctx, phi);
    const auto pre = compact_preimage(ctx, phi);
    const auto img = image_signature(ctx.flags, phi.sign, all);
    const bool ok = preserves_form(ctx.killing, phi.sign) && img == row.image && fixed.dim == row.fixed_dim &&
                    fixed.signature == row.fixed && pre.signature == row.preimage;
    c.check("automorphism " + phi.name(), ok,
            "image " + sig_string(img) + ", fixed " + std::to_string(fixed.dim) + sig_string(fixed.signature) +
                ", preimage " + sig_string(pre.signature));
  }
}

void suite_gellmann(Checker& c, const StructureTable& t) {
  const auto r = gellmann_check(t);
  std::string detail;
  if (!r.ok()) detail = "first mismatch at (λ" + std::to_string(r.mismatches[0].a + 1) + ", λ" +
                        std::to_string(r.mismatches[0].b + 1) + ")";
  c.check("Gell-Mann structure constants", r.ok(), detail);
}

void suite_stabilizer(Checker& c, const StructureTable& t) {
  const auto r = stabilizer_of_l(t);
  c.check("Stab(l) dimension", r.kernel.size() == 52, std::to_string(r.kernel.size()));
  c.check("so(8,1) + b spans Stab(l)", r.spans);
  c.check("b abelian", r.abelian);
  c.check("b ideal", r.ideal);
  c.check("so(8,1) closed", r.so81_closed, sig_string(r.so81_signature));
  c.check("b2 Killing-null", std::all_of(r.b2_null.begin(), r.b2_null.end(), [](bool b) { return b; }));
}

void suite_roots(Checker& c) {
  const auto B3 = dynkin("B3");
  c.check("B3 Cartan", cartan_matrix(B3) == IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  const auto w = weights_from_highest(B3, {1, 0, 0});
  c.check("B3 [1,0,0] weights", w.weights.size() == 7, std::to_string(w.weights.size()));
  for (const auto& [name, count] : std::vector<std::pair<std::string, std::size_t>>{
           {"A2", 6}, {"B2", 8}, {"C2", 8}, {"G2", 12}, {"A3", 12}, {"D3", 12}, {"B3", 18}, {"C3", 18}, {"F4", 48},
           {"E6", 72}}) {
    const auto n = root_system(dynkin(name)).size();
    c.check(name + " nonzero roots", n == count, std::to_string(n));
  }
}

StructureTable load_table(const Globals& g) { return cached_structure_constants(g.jobs); }

int run_verify(const Globals& g, const std::string& suite) {
  static const std::vector<std::string> suites = {"dependencies", "identities", "killing", "casimirs", "det",
                                                  "automorphisms", "gellmann", "stabilizer", "roots"};
  std::vector<std::string> chosen;
  if (suite == "all") chosen = suites;
  else if (std::find(suites.begin(), suites.end(), suite) != suites.end()) chosen = {suite};
  else throw UsageError("unknown suite " + suite);

  Checker c;
  std::optional<StructureTable> table;
  auto t = [&]() -> const StructureTable& {
    if (!table) table = load_table(g);
    return *table;
  };
  for (const auto& s : chosen) {
    std::cout << "[" << s << "]\n";
    if (s == "dependencies") suite_dependencies(c);
    else if (s == "identities") suite_identities(c, t(), g);
    else if (s == "killing") suite_killing(c, t());
    else if (s == "casimirs") suite_casimirs(c, t(), g);
    else if (s == "det") suite_det(c, g);
    else if (s == "automorphisms") suite_automorphisms(c, t());
    else if (s == "gellmann") suite_gellmann(c, t());
    else if (s == "stabilizer") suite_stabilizer(c, t());
    else if (s == "roots") suite_roots(c);
  }
  return c.finish();
}

int run_table(const Globals& g) {
  const auto t = load_table(g);
  if (g.format == "csv") {
    std::ostringstream os;
    write_csv(os, t);
    emit_text(g, os.str());
  } else {
    emit_text(g, to_json(t).dump() + "\n");
  }
  std::cerr << t.dim() << " basis elements, " << t.nonzero_pairs() << " nonzero brackets\n";
  return 0;
}

int run_killing(const Globals& g, const std::string& subset) {
  const auto t = load_table(g);
  const SubalgebraContext ctx(t, g.seed);
  std::vector<int> idx;
  for (int i = 0; i < t.dim(); ++i) {
    const bool keep = subset == "full" || (subset == "rotations" && !ctx.flags.is_boost[i]) ||
                      (subset == "boosts" && ctx.flags.is_boost[i]) || (subset == "t1" && ctx.flags.is_type1[i]) ||
                      (subset == "h" && ctx.flags.is_H[i]);
    if (keep) idx.push_back(i);
  }
  if (idx.empty()) throw UsageError("unknown subset " + subset);
  std::vector<SparseVec> rows;
  for (int i : idx) rows.push_back(unit_vector(i));
  const auto s = signature(restrict_form(ctx.killing, rows));
  std::cout << sig_string(s) << "\n";
  if (!g.out.empty()) emit(g, {{"subset", subset}, {"dim", idx.size()}, {"signature", to_json(s)}});
  return 0;
}

int run_subalg(const Globals& g, const std::string& involution, const std::string& autopair,
               const std::string& cells) {
  const auto t = load_table(g);
  const SubalgebraContext ctx(t, g.seed);
  Json out = Json::object();
  if (!involution.empty()) {
    const auto phi = make_involution(t, ctx.flags, parse_kinds(involution));
    const auto fixed = fixed_subalgebra(ctx, phi);
    const auto pre = compact_preimage(ctx, phi);
    std::vector<int> all(t.dim());
    for (int i = 0; i < t.dim(); ++i) all[i] = i;
    const auto img = image_signature(ctx.flags, phi.sign, all);
    std::cout << phi.name() << ": image " << sig_string(img) << ", fixed " << fixed.dim
              << sig_string(fixed.signature) << " rank " << fixed.rank << ", preimage " << pre.dim
              << sig_string(pre.signature) << " rank " << pre.rank << "\n";
    out["involution"] = {{"name", phi.name()}, {"image", to_json(img)}, {"fixed", to_json(fixed)},
                         {"preimage", to_json(pre)}};
  }
  if (!autopair.empty()) {
    const auto kinds = split(autopair);
    if (kinds.size() != 2) throw UsageError("--auto takes two involutions, e.g. 23,hperp");
    const auto first = make_involution(t, ctx.flags, parse_kinds(kinds[0]));
    const auto second = make_involution(t, ctx.flags, parse_kinds(kinds[1]));
    const auto grid = refine_subspaces(ctx, first, second);
    Json jcells = Json::object();
    for (const auto& c : grid.cells) {
      std::cout << c.name << ": " << c.rotations << " rotations, " << c.boosts << " boosts\n";
      jcells[c.name] = {{"rotations", c.rotations}, {"boosts", c.boosts}, {"indices", c.indices}};
    }
    out["cells"] = jcells;
    std::vector<std::vector<std::string>> requests;
    if (!cells.empty()) requests.push_back(split(cells));
    else
      for (const auto& k : known_assemblies()) requests.push_back(k.cells);
    Json reports = Json::array();
    for (const auto& req : requests) {
      try {
        const auto r = assemble(ctx, grid, req);
        std::cout << r.description << ": dim " << r.dim << " " << sig_string(r.signature) << " twisted "
                  << sig_string(r.twisted) << " rank " << r.rank;
        for (const auto& n : r.names) std::cout << " [" << n << "]";
        std::cout << "\n";
        reports.push_back(to_json(r));
      } catch (const NotClosed& e) {
        std::cout << "not closed: " << e.what() << "\n";
        reports.push_back({{"cells", req}, {"closed", false}, {"witness", e.what()}});
      }
    }
    out["assemblies"] = reports;
  }
  if (involution.empty() && autopair.empty()) throw UsageError("subalg needs --involution or --auto");
  if (!g.out.empty()) emit(g, out);
  return 0;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  for (const auto& p : split(s)) v.push_back(std::stoi(p));
  return v;
}

int run_roots(const Globals& g, const std::string& algebra, const std::string& highest, const std::string& slice_by) {
  const auto d = dynkin(algebra);
  const auto w = highest.empty() ? root_diagram(d) : weights_from_highest(d, parse_ints(highest));
  std::optional<SliceResult> sl;
  if (!slice_by.empty()) {
    std::vector<int> nodes;
    for (int k : parse_ints(slice_by)) {
      if (k < 1 || k > d.rank) throw UsageError("--slice uses simple roots 1.." + std::to_string(d.rank));
      nodes.push_back(k - 1);
    }
    sl = slice(w, normal_orthogonal_to(d, nodes));
  }
  if (g.format == "csv") {
    std::ostringstream os;
    write_csv(os, w);
    emit_text(g, os.str());
  } else {
    emit_text(g, to_json(w, sl ? &*sl : nullptr).dump(2) + "\n");
  }
  std::cerr << w.weights.size() << " weights, " << w.edges.size() << " edges\n";
  return 0;
}

int run_stab(const Globals& g) {
  const auto t = load_table(g);
  const auto r = stabilizer_of_l(t);
  std::cout << "Stab(l): dim " << r.kernel.size() << ", so(8,1) " << r.so81.size() << sig_string(r.so81_signature)
            << ", b " << r.b2.size() << "+" << r.b3.size() << "+" << r.bl.size() << (r.abelian ? " abelian" : "")
            << (r.ideal ? " ideal" : "") << "\n";
  if (!g.out.empty()) emit(g, to_json(r));
  return r.spans && r.abelian && r.ideal ? 0 : 1;
}

int run_apply(const Globals& g, const std::string& label, double alpha, const std::string& input) {
  JordanElement x = JordanElement::identity();
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw UsageError("cannot read " + input);
    x = jordan_from_json(Json::parse(in));
  }
  const auto gl = parse_label(label);
  const auto y = apply(gl, alpha, to_float(x));
  const auto c = to_coords(y);
  Json j = {{"label", to_string(gl)},
            {"alpha", alpha},
            {"coords", std::vector<double>(c.begin(), c.end())},
            {"det_before", det(x).get_d()},
            {"det_after", det(y)}};
  emit(g, j);
  return 0;
}

int run_gellmann(const Globals& g) {
  const auto t = load_table(g);
  const auto r = gellmann_check(t);
  std::cout << (r.ok() ? "match" : "mismatch") << ": " << r.mismatches.size() << " differing pairs of 64\n";
  if (!g.out.empty()) emit(g, to_json(r));
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Octonionic E6 toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--out", g.out, "Output file");
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--jobs", g.jobs, "Worker threads (0 = OpenMP default)");
  app.add_option("--tol", g.tol, "Float tolerance");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::string suite = "all", subset = "full", involution, autopair, cells, algebra, highest, slice_by, label, input;
  double alpha = 0.3;
  std::function<int()> action;

  auto* table = app.add_subcommand("table", "Structure constants of the 78-element basis");
  table->callback([&] { action = [&] { return run_table(g); }; });

  auto* verify = app.add_subcommand("verify", "Run identity suites");
  verify->add_option("--suite", suite, "dependencies|identities|killing|casimirs|det|automorphisms|gellmann|"
                                       "stabilizer|roots|all");
  verify->callback([&] { action = [&] { return run_verify(g, suite); }; });

  auto* kill = app.add_subcommand("killing", "Killing form signature");
  kill->add_option("--subset", subset, "full|rotations|boosts|t1|h");
  kill->callback([&] { action = [&] { return run_killing(g, subset); }; });

  auto* sub = app.add_subcommand("subalg", "Involutions, fixed subalgebras and cell assemblies");
  sub->add_option("--involution", involution, "Composition such as 23,hperp,t");
  sub->add_option("--auto", autopair, "Pair of involutions refining the basis, e.g. 23,hperp");
  sub->add_option("--assemble", cells, "Cells to combine, e.g. R1H,B1H");
  sub->callback([&] { action = [&] { return run_subalg(g, involution, autopair, cells); }; });

  auto* roots = app.add_subcommand("roots", "Root and weight diagrams");
  roots->add_option("--algebra", algebra, "A2, B3, F4, E6, …")->required();
  roots->add_option("--highest", highest, "Highest mark, e.g. 1,0,0 (default: root diagram)");
  roots->add_option("--slice", slice_by, "Slice by the listed simple roots (1-based)");
  roots->callback([&] { action = [&] { return run_roots(g, algebra, highest, slice_by); }; });

  auto* stab = app.add_subcommand("stab-l", "Stabilizer of ℓ");
  stab->callback([&] { action = [&] { return run_stab(g); }; });

  auto* ap = app.add_subcommand("apply", "Apply a group generator to a Jordan element");
  ap->add_option("--label", label, "Generator label, e.g. A:i:1")->required();
  ap->add_option("--alpha", alpha, "Parameter");
  ap->add_option("--input", input, "Jordan element JSON (default identity)");
  ap->callback([&] { action = [&] { return run_apply(g, label, alpha, input); }; });

  auto* gm = app.add_subcommand("gellmann", "Compare with the Gell-Mann structure constants");
  gm->callback([&] { action = [&] { return run_gellmann(g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
