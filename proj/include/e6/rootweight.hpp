#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "e6/linalg.hpp"

namespace e6 {

struct DynkinEdge {
  int i, j;           // 0-based nodes
  int multiplicity;   // 1..3
  int shorter = -1;   // node carrying the shorter root, −1 for a single bond
};

struct DynkinDiagram {
  std::string name;
  int rank = 0;
  std::vector<DynkinEdge> edges;
};

struct SingularCartan : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SearchBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "A2", "B3", "C4", "D4", "G2", "F4", "E6"; B_n ends in the short node, C_n in the long one.
// G2 has the short root second, F4 is long-long-short-short, E6 attaches node 2 to node 4.
DynkinDiagram dynkin(std::string_view name);

using IntMatrix = std::vector<std::vector<int>>;

// a_ij = 2 (r^i·r^j)/(r^i·r^i).
IntMatrix cartan_matrix(const DynkinDiagram& d);
DenseMatrix inverse_cartan(const DynkinDiagram& d);  // throws SingularCartan
// r^i·r^j with the longest roots of each component at squared length 2.
DenseMatrix gram_matrix(const DynkinDiagram& d);
// Lower-triangular Cholesky rows of the Gram matrix: r^i ∈ R^l.
std::vector<std::vector<double>> simple_roots(const DynkinDiagram& d);
// Fundamental weight i in root coordinates: (A⁻¹)_{ki} for k = 0..l−1.
std::vector<Rational> fundamental_weight(const DynkinDiagram& d, int i);

using RootCoords = std::vector<Rational>;  // coefficients over the simple roots

struct Weight {
  std::vector<int> mark;
  RootCoords root;            // exact position
  std::vector<double> coords; // Cartesian, via simple_roots
};

struct WeightEdge {
  int from, to;  // lower weight → higher weight
  int root;      // index into WeightDiagram::positive_roots
};

struct WeightDiagram {
  DynkinDiagram dynkin;
  std::vector<int> highest;
  std::vector<Weight> weights;  // vertex set, no multiplicities
  std::vector<std::vector<int>> positive_roots;
  std::vector<WeightEdge> edges;

  int find(const RootCoords& r) const;  // −1 if absent
};

// Nonzero roots in root coordinates, sorted, from the Weyl closure of the simple roots.
std::vector<std::vector<int>> root_system(const DynkinDiagram& d);
std::vector<std::vector<int>> positive_roots(const DynkinDiagram& d);

// Mark algorithm: from each weight subtract r^j along its full j-string
// (the string length uses the mark plus how far the string extends upward).
WeightDiagram weights_from_highest(const DynkinDiagram& d, const std::vector<int>& highest);
// Roots plus the origin, with edges.
WeightDiagram root_diagram(const DynkinDiagram& d);

struct Slice {
  Rational level;
  std::vector<int> vertices;
  std::vector<int> edges;  // indices into WeightDiagram::edges
};

struct SliceResult {
  RootCoords normal;
  std::vector<Slice> slices;  // ascending level
  std::vector<int> struts;    // edges joining different levels
};

// Levels are the exact inner products with `normal` (root coordinates).
SliceResult slice(const WeightDiagram& w, const RootCoords& normal);
// Normal orthogonal to the listed simple roots: Σ of the remaining fundamental weights.
RootCoords normal_orthogonal_to(const DynkinDiagram& d, const std::vector<int>& simple);

// A plain point configuration; vertices may repeat.
struct PointDiagram {
  int dim = 0;
  std::vector<std::vector<double>> vertices;
};

PointDiagram points(const WeightDiagram& w);
PointDiagram points(const WeightDiagram& w, const Slice& s);

struct ProjectOptions {
  // Shift p by 0.015 per coordinate when it lies in a coordinate hyperplane.
  bool perturb = true;
};

// Orthonormalizes (p, e¹, …, eˡ), drops the p component, keeps the remaining l−1 coordinates.
PointDiagram project(const PointDiagram& d, std::vector<double> p, ProjectOptions opt = {});
// Every slice flattened onto the hyperplane: same basis as project(…, normal, {false}).
PointDiagram collapse(const WeightDiagram& w, const SliceResult& s);
std::vector<double> to_cartesian(const DynkinDiagram& d, const RootCoords& r);

struct EmbedOptions {
  std::size_t budget = 1'000'000;  // partial assignments explored
  bool highest_weight_rule = true; // applies when both spans have the same dimension
  double tol = 1e-7;
  // false: any injective linear map of D1's span qualifies (no metric constraint, no shell rule)
  bool similarity = true;
};

// Searches similarities carrying a basis of D1's nonzero vertices onto nonzero
// vertices of D2 that map every vertex of D1 into D2.
bool embed_check(const PointDiagram& d1, const PointDiagram& d2, EmbedOptions opt = {});

// Sorted distinct vertices rounded to 1e−7.
std::vector<std::vector<double>> distinct_vertices(const PointDiagram& d, double tol = 1e-7);

}  // namespace e6
