#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "e6/group.hpp"
#include "e6/linalg.hpp"

namespace e6 {

// Exact sparse 27x27 matrix acting on Coord27.
class Mat27 {
 public:
  const SparseVec& row(int r) const { return rows_[r]; }
  Rational at(int r, int c) const { return coefficient(rows_[r], c); }
  void set_row(int r, SparseVec v) { rows_[r] = std::move(v); }

  bool is_zero() const;
  std::size_t nonzeros() const;
  SparseVec flatten() const;  // index 27·row + col
  std::array<double, 27> apply(const std::array<double, 27>& x) const;

  friend Mat27 operator*(const Mat27& a, const Mat27& b);
  friend Mat27 operator+(const Mat27& a, const Mat27& b);
  friend Mat27 operator-(const Mat27& a, const Mat27& b);
  friend Mat27 operator*(const Rational& s, const Mat27& a);
  friend bool operator==(const Mat27&, const Mat27&) = default;

 private:
  std::array<SparseVec, 27> rows_;
};

struct AlgebraElement {
  Mat27 mat;
  std::optional<GeneratorLabel> provenance;
};

// Column k is the α-derivative at 0 of the action on the k-th coordinate vector.
AlgebraElement tangent(const GeneratorLabel& g);
// Cached tangents of all 135 generators, in enumerate_generators() order.
const std::vector<AlgebraElement>& all_tangents();
const AlgebraElement& cached_tangent(const GeneratorLabel& g);

Mat27 commutator(const Mat27& x, const Mat27& y);
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

struct RankMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInSpan : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotClosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StepTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreferredBasis {
  std::vector<GeneratorLabel> labels;

  int size() const { return static_cast<int>(labels.size()); }
  // Index of a label; A_q and G_q of any type map to the type-1 element.
  std::optional<int> index_of(const GeneratorLabel& g) const;
  int at(const GeneratorLabel& g) const;  // throws std::out_of_range
  int at(std::string_view label) const;
};

// Btz¹ Btz² Btx¹ Btx² Btx³, Btq¹..³ (×7 each), Rxq¹ (×7), Rxz¹ Rxz² Rxz³,
// Rzq¹..³ (×7 each), A (×7), G (×7), S¹ (×7).
const PreferredBasis& preferred_basis();

struct DependencyCertificate {
  GeneratorLabel label;
  SparseVec coeffs;  // tangent(label) = Σ coeffs_k · tangent(basis_k)
};

struct Reduction {
  PreferredBasis basis;
  int rank = 0;  // rank of all 135 tangents
  std::vector<DependencyCertificate> certificates;
};

Reduction reduce_basis();

struct NamedIdentity {
  std::string name;
  bool holds = false;
};

// The dependency families among the 135 tangents, each checked exactly.
struct DependencyReport {
  std::vector<NamedIdentity> sums;       // Σ_types Ṡ_q, Σ_types Ṙ_xq (7 each), Σ_types Ḃ_tz
  std::vector<NamedIdentity> relations;  // Ṙ²_xq and Ṡ²_q over type-1 elements (7 each)
  NamedIdentity type_independence;       // A_q, G_q identical across types
  NamedIdentity rank;                    // rank of the 135 tangents is 78
  bool ok() const;
  int confirmed() const;
};

DependencyReport check_dependencies();

// Named alternative to B²_tz in the preferred basis.
SparseVec btz_difference_combination();

struct StructureTable {
  PreferredBasis basis;
  std::vector<SparseVec> upper;  // [b_i, b_j] for i < j, packed row-major

  int dim() const { return basis.size(); }
  static std::size_t pair_index(int i, int j, int n);
  SparseVec bracket(int i, int j) const;
  Rational constant(int i, int j, int k) const;
  std::size_t nonzero_pairs() const;
};

// jobs <= 0 uses the OpenMP default; jobs == 1 runs the serial path.
StructureTable structure_constants(const PreferredBasis& basis, int jobs = 0);
StructureTable structure_constants_serial(const PreferredBasis& basis);

// [x, y] for coefficient vectors over the basis.
SparseVec bracket(const StructureTable& t, const SparseVec& x, const SparseVec& y);

struct IdentityCheck {
  bool ok = true;
  std::size_t checked = 0;
  std::array<int, 3> first_failure{-1, -1, -1};
};

// Recomputes every [b_j, b_i] from the tangents and compares with −[b_i, b_j].
IdentityCheck check_antisymmetry(const StructureTable& t, int jobs = 0);
IdentityCheck check_jacobi(const StructureTable& t, int jobs = 0);
IdentityCheck check_jacobi_serial(const StructureTable& t);

// (ad_i)_{k,m} = c^k_{i,m}, stored as sparse rows k.
using SparseMatrix = std::vector<SparseVec>;
std::vector<SparseMatrix> adjoint(const StructureTable& t);
DenseMatrix killing(const StructureTable& t);
DenseMatrix killing(const StructureTable& t, const std::vector<SparseMatrix>& ad);

// Smallest generic-centralizer dimension over `draws` random elements with
// integer coefficients in [−9, 9]. `rows` must span a subalgebra.
int rank_estimate(const StructureTable& t, const std::vector<SparseVec>& rows, std::uint64_t seed = 0,
                  int draws = 5);
// Throws NotClosed naming the first escaping pair.
void require_closed(const StructureTable& t, const std::vector<SparseVec>& rows);
bool is_closed(const StructureTable& t, const std::vector<SparseVec>& rows);

// B¹_tz, B²_tz, R¹_xℓ, A_ℓ, G_ℓ, S¹_ℓ.
std::array<int, 6> casimir_indices(const PreferredBasis& basis);

struct GellMannMismatch {
  int a, b;
  SparseVec ours, oracle;
};

struct GellMannReport {
  std::array<GeneratorLabel, 8> labels;  // matched to λ1..λ8
  std::vector<GellMannMismatch> mismatches;
  // Structure constants f[a][b] over λ indices from the matrix oracle.
  std::array<std::array<SparseVec, 8>, 8> oracle;
  bool ok() const { return mismatches.empty(); }
};

GellMannReport gellmann_check(const StructureTable& t);

struct StabilizerReport {
  std::vector<SparseVec> kernel;  // basis of Stab(ℓ) over the 78 coefficients
  std::vector<SparseVec> so81, b2, b3, bl;
  std::vector<std::string> so81_names, b2_names, b3_names, bl_names;
  bool spans = false;   // so81 ∪ b is a basis of the kernel
  bool abelian = false;
  bool ideal = false;   // [so81, b] ⊆ b
  bool so81_closed = false;
  Signature so81_signature;
  std::vector<bool> b2_null, b3_null, bl_null;
};

StabilizerReport stabilizer_of_l(const StructureTable& t);

// Second central difference of R2(−α/2)∘R1(−α/2)∘R2(α/2)∘R1(α/2)(χ) at α = 0.
std::array<double, 27> curve_commutator(const GeneratorLabel& r1, const GeneratorLabel& r2, double h,
                                        const BasicJordan<double>& x);
// [Ṙ2, Ṙ1] applied to χ in floating point.
std::array<double, 27> matrix_commutator_action(const GeneratorLabel& r1, const GeneratorLabel& r2,
                                                const BasicJordan<double>& x);
// κ with curve_commutator ≈ κ·[Ṙ2, Ṙ1]χ, fitted on (A_i, A_j).
double calibrate_curve_commutator(double h = 1e-3);
inline constexpr double kCurveCalibration = 0.5;
// Largest deviation after scaling by kCurveCalibration; throws StepTooLarge above tol.
double curve_commutator_check(const GeneratorLabel& r1, const GeneratorLabel& r2, double h,
                              const BasicJordan<double>& x, double tol);

}  // namespace e6
