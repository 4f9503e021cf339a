#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "e6/algebra.hpp"

namespace e6 {

struct BasisFlags {
  std::vector<bool> is_boost;
  std::vector<bool> is_type1;  // type-1 span plus B²_tz (equivalently B²_tz − B³_tz)
  std::vector<bool> is_H;      // no label from {i, j, jℓ, iℓ}
};

BasisFlags basis_flags(const PreferredBasis& basis);

enum class InvolutionKind { t, two_three, h_perp };

InvolutionKind parse_involution_kind(std::string_view s);  // "t", "23", "hperp"
std::string to_string(InvolutionKind k);

struct Involution {
  std::vector<InvolutionKind> factors;
  std::vector<int> sign;  // ±1 per basis element

  std::string name() const;  // e.g. "23∘hperp∘t"; "id" for the empty composition
};

struct NotAutomorphism : std::runtime_error {
  NotAutomorphism(int i, int j);
  int i, j;
};

// Sign product of the listed factors, verified against every bracket of the table.
Involution make_involution(const StructureTable& t, const BasisFlags& flags,
                           const std::vector<InvolutionKind>& factors);
bool is_bracket_compatible(const StructureTable& t, const std::vector<int>& sign, int* bad_i = nullptr,
                           int* bad_j = nullptr);
// B(φx, φy) = B(x, y) on the basis.
bool preserves_form(const DenseMatrix& form, const std::vector<int>& sign);

struct SubalgebraReport {
  std::string description;
  std::vector<int> indices;  // basis elements spanning the subalgebra
  std::vector<std::string> labels;
  int dim = 0;
  int boosts = 0;
  Signature signature;         // Killing signature on the subalgebra
  Signature twisted;           // signature after the flag flip of the involution in play
  int rank = 0;
  std::vector<std::string> names;  // identification candidates, empty if unknown
  std::vector<std::string> notes;
};

// Killing form of the table; computed once and shared by the report builders.
struct SubalgebraContext {
  const StructureTable& table;
  DenseMatrix killing;
  BasisFlags flags;
  std::uint64_t seed = 0;

  explicit SubalgebraContext(const StructureTable& t, std::uint64_t seed = 0);
};

// Builds a report for a span of basis elements; throws NotClosed.
SubalgebraReport report_for(const SubalgebraContext& ctx, std::vector<int> indices, std::string description,
                            const std::vector<int>* twist = nullptr);

// Signature of the image algebra g′: rotations in P and boosts in N count as compact.
Signature image_signature(const BasisFlags& flags, const std::vector<int>& sign, const std::vector<int>& indices);

SubalgebraReport fixed_subalgebra(const SubalgebraContext& ctx, const Involution& phi);
SubalgebraReport compact_preimage(const SubalgebraContext& ctx, const Involution& phi);

struct GridCell {
  std::string name;  // R|B, then 1|23, then H|Hp for the (23, hperp) pair
  std::vector<int> indices;
  int rotations = 0, boosts = 0;
};

struct Grid {
  Involution first, second;
  std::vector<GridCell> cells;  // fixed order: R1H B1H R23Hp B23Hp R23H B23H R1Hp B1Hp
  const GridCell& cell(std::string_view name) const;
};

Grid refine_subspaces(const SubalgebraContext& ctx, const Involution& first, const Involution& second);
SubalgebraReport assemble(const SubalgebraContext& ctx, const Grid& grid, const std::vector<std::string>& cells);

// Lookup against the built-in table; all matching candidates are returned.
std::vector<std::string> identify(int dim, int rank, Signature sig);

struct KnownAssembly {
  std::vector<std::string> cells;
  std::string name;
  Signature signature;
  Signature twisted;
};
// Cell assemblies under φ_(2,3)∘φ_(H⊥) with their expected signatures.
const std::vector<KnownAssembly>& known_assemblies();

struct KnownInvolution {
  std::vector<InvolutionKind> factors;
  Signature image;
  int fixed_dim;
  Signature fixed;
  std::string fixed_name;
  Signature preimage;
  std::string preimage_name;
};
const std::vector<KnownInvolution>& known_involutions();

}  // namespace e6
